"""Isotropic systems over K: Eulerian vectors, fundamental graphs, minors, connectivity."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Literal, Mapping

from vmcalc.gf2 import (
    NONZERO,
    KVector,
    Subspace,
    form_bits,
    form_k,
    invert,
    iter_bits,
    rank,
    rref,
    spread,
    support_mask,
    vertex_mask,
)
from vmcalc.graph import Graph, is_prime

log = logging.getLogger(__name__)


class IsotropicError(ValueError):
    pass


class NotEulerian(IsotropicError):
    pass


class WitnessNotFound(IsotropicError):
    """The constructive search found no witness vectors for the constraints."""


class NoEulerianVector(IsotropicError):
    """No Eulerian vector satisfies the constraints (proved by exhaustive search)."""


@dataclass(frozen=True)
class IsotropicSystem:
    ground: tuple[int, ...]
    L: Subspace

    def __post_init__(self) -> None:
        if self.L.ground != self.ground:
            raise IsotropicError("subspace lives on a different ground set")
        if self.L.dim != len(self.ground):
            raise IsotropicError(f"dimension {self.L.dim} != |V| = {len(self.ground)}")
        if not self.L.is_totally_isotropic():
            raise IsotropicError("subspace is not totally isotropic")

    @classmethod
    def from_vectors(cls, ground: Iterable[int], vectors: Iterable[KVector | int]) -> IsotropicSystem:
        ground = tuple(ground)
        return cls(ground, Subspace.span(ground, vectors))

    @property
    def n(self) -> int:
        return len(self.ground)

    @property
    def basis(self) -> tuple[int, ...]:
        return self.L.basis

    @cached_property
    def vmask(self) -> int:
        return vertex_mask(self.ground)

    def __contains__(self, vec: KVector | int) -> bool:
        return vec in self.L

    def dumps(self) -> str:
        """One line per basis vector, two bits per vertex in ground order."""
        head = "V " + " ".join(map(str, self.ground)) + "\n"
        lines = []
        for b in self.basis:
            lines.append(" ".join(format((b >> (2 * v)) & 3, "02b") for v in self.ground))
        return head + "".join(line + "\n" for line in lines)

    @classmethod
    def loads(cls, text: str) -> IsotropicSystem:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not lines or not lines[0].startswith("V"):
            raise IsotropicError("missing 'V ...' header line")
        ground = tuple(int(t) for t in lines[0].split()[1:])
        vectors = []
        for ln in lines[1:]:
            pairs = ln.split()
            if len(pairs) != len(ground) or any(len(p) != 2 or set(p) - {"0", "1"} for p in pairs):
                raise IsotropicError(f"bad vector line {ln!r}")
            bits = 0
            for v, p in zip(ground, pairs):
                bits |= int(p, 2) << (2 * v)
            vectors.append(bits)
        return cls.from_vectors(ground, vectors)


@dataclass(frozen=True)
class GraphicPresentation:
    graph: Graph
    a: KVector
    b: KVector

    def __post_init__(self) -> None:
        ground = self.graph.vertices
        if self.a.ground != ground or self.b.ground != ground:
            raise IsotropicError("presentation vectors must live on the graph's vertices")
        if not (self.a.is_complete() and self.b.is_complete() and (self.a + self.b).is_complete()):
            raise IsotropicError("a and b are not supplementary")

    def generators(self) -> list[int]:
        G, a, b = self.graph, self.a.bits, self.b.bits
        return [(a & spread(G.nbr_mask(v))) | (b & (3 << (2 * v))) for v in G.vertices]

    def system(self) -> IsotropicSystem:
        return IsotropicSystem.from_vectors(self.graph.vertices, self.generators())


def from_graphic_presentation(G: Graph, a: KVector, b: KVector) -> IsotropicSystem:
    return GraphicPresentation(G, a, b).system()


def graph_system(G: Graph, a: int = 1, b: int = 2) -> IsotropicSystem:
    """System of G with constant presentation vectors (alpha and beta by default)."""
    ground = G.vertices
    return from_graphic_presentation(G, KVector.constant(ground, a), KVector.constant(ground, b))


# ---------------------------------------------------------------------------
# Eulerian vectors and fundamental graphs
# ---------------------------------------------------------------------------


def _bits(a: KVector | int) -> int:
    return a.bits if isinstance(a, KVector) else a


def is_eulerian(S: IsotropicSystem, a: KVector | int) -> bool:
    """a is complete and no nonzero a[X] lies in L.

    The vectors a[{v}] span every a[X], so the second condition says that
    L and their span meet trivially, i.e. the combined rank is 2|V|.
    """
    bits = _bits(a)
    if support_mask(bits) != S.vmask:
        return False
    singles = [bits & (3 << (2 * v)) for v in S.ground]
    return rank(list(S.basis) + singles) == 2 * S.n


def eulerian_vectors(S: IsotropicSystem) -> Iterator[KVector]:
    """Every Eulerian vector, by brute force over the 3^n complete vectors."""
    for vals in product(NONZERO, repeat=S.n):
        a = KVector.from_values(S.ground, vals)
        if is_eulerian(S, a):
            yield a


def fundamental_basis(S: IsotropicSystem, a: KVector) -> dict[int, KVector]:
    """The unique b_v in L with <b_v(w), a(w)> = 1 exactly when w = v."""
    if not is_eulerian(S, a):
        raise NotEulerian(f"{a} is not an Eulerian vector")
    basis = S.basis
    n = S.n
    # F[j] bit i = <B_i(w_j), a(w_j)>; column j of F^-1 picks the combination for w_j
    F = []
    for w in S.ground:
        aw = (a.bits >> (2 * w)) & 3
        F.append(sum(form_k((B >> (2 * w)) & 3, aw) << i for i, B in enumerate(basis)))
    Finv = invert(F, n)
    if Finv is None:  # pragma: no cover - excluded by the Eulerian check
        raise NotEulerian("singular evaluation matrix")
    out = {}
    for j, v in enumerate(S.ground):
        vec = 0
        for i in range(n):
            if (Finv[i] >> j) & 1:
                vec ^= basis[i]
        out[v] = KVector(S.ground, vec)
    return out


def fundamental_presentation(S: IsotropicSystem, a: KVector) -> GraphicPresentation:
    fb = fundamental_basis(S, a)
    vmask = S.vmask
    rows = [0] * (max(S.ground) + 1 if S.ground else 0)
    bbits = 0
    for v, bv in fb.items():
        rows[v] = support_mask(bv.bits) & ~(1 << v) & vmask
        bbits |= bv.bits & (3 << (2 * v))
    G = Graph.from_rows(vmask, rows)
    return GraphicPresentation(G, a, KVector(S.ground, bbits))


def fundamental_graph(S: IsotropicSystem, a: KVector) -> Graph:
    return fundamental_presentation(S, a).graph


def eulerian_switch(S: IsotropicSystem, a: KVector, v: int) -> KVector:
    """The unique other Eulerian vector differing from a only at v."""
    if not is_eulerian(S, a):
        raise NotEulerian(f"{a} is not an Eulerian vector")
    av = a[v]
    hits = []
    for x in NONZERO:
        if x == av:
            continue
        cand = KVector(a.ground, (a.bits & ~(3 << (2 * v))) | (int(x) << (2 * v)))
        if is_eulerian(S, cand):
            hits.append(cand)
    if len(hits) != 1:
        raise IsotropicError(f"{len(hits)} Eulerian candidates at vertex {v}; system is corrupt")
    return hits[0]


def find_eulerian_vector(
    S: IsotropicSystem,
    constraints: Mapping[int, int] | None = None,
    method: Literal["auto", "construct", "brute"] = "auto",
) -> KVector:
    """An Eulerian vector c with c(w) = x for every constraint w -> x.

    ``construct`` descends through elementary minors, lifting one vertex at a
    time; it needs witness vectors for the constraints and raises
    WitnessNotFound otherwise.  ``brute`` scans complete vectors and raises
    NoEulerianVector if none qualifies.  ``auto`` tries the first and falls
    back to the second.
    """
    cons = {int(w): int(x) for w, x in (constraints or {}).items()}
    for w, x in cons.items():
        if w not in S.ground:
            raise IsotropicError(f"constraint on unknown vertex {w}")
        if x not in (1, 2, 3):
            raise IsotropicError(f"constraint value at {w} must be nonzero")
    if method in ("auto", "construct"):
        try:
            c = _construct(S, sorted(cons.items()))
        except WitnessNotFound:
            if method == "construct":
                raise
            log.debug("witness search failed for %s; falling back to brute force", cons)
        else:
            if not is_eulerian(S, c):  # pragma: no cover - guards the construction
                raise IsotropicError("constructed vector is not Eulerian")
            return c
    free = [v for v in S.ground if v not in cons]
    for vals in product(NONZERO, repeat=len(free)):
        c = KVector.from_values(S.ground, {**cons, **dict(zip(free, vals))})
        if is_eulerian(S, c):
            return c
    raise NoEulerianVector(f"no Eulerian vector satisfies {cons}")


def _functional(basis: tuple[int, ...], w: int, x: int) -> int:
    """Mask of basis indices i with <B_i(w), x> = 1."""
    return sum(form_k((B >> (2 * w)) & 3, x) << i for i, B in enumerate(basis))


def _solve_equations(eqs: list[tuple[int, int]]) -> int | None:
    """Solve parity(mask & c) = rhs for all (mask, rhs); any solution or None."""
    rows: list[tuple[int, int]] = []
    for mask, rhs in eqs:
        for pm, pr in rows:
            if mask & (pm & -pm):
                mask ^= pm
                rhs ^= pr
        if mask:
            rows.append((mask, rhs))
        elif rhs:
            return None
    c = 0
    # back substitution, free variables zero
    for pm, pr in reversed(rows):
        low = pm & -pm
        val = pr ^ (bin(pm & c & ~low).count("1") & 1)
        if val:
            c |= low
    return c


def _has_witnesses(S: IsotropicSystem, cons: list[tuple[int, int]]) -> bool:
    fns = [_functional(S.basis, w, x) for w, x in cons]
    for i in range(len(fns)):
        eqs = [(fns[j], 0) for j in range(i)] + [(fns[i], 1)]
        if _solve_equations(eqs) is None:
            return False
    return True


def _lift(c: KVector, v: int, x: int, ground: tuple[int, ...]) -> KVector:
    return KVector(ground, c.bits | (x << (2 * v)))


def _construct(S: IsotropicSystem, cons: list[tuple[int, int]]) -> KVector:
    if not _has_witnesses(S, cons):
        raise WitnessNotFound(f"no witness vectors for {cons}")
    if S.n == 0:
        return KVector((), 0)
    if cons:
        (v, x), rest = cons[0], cons[1:]
    else:
        v, rest = S.ground[0], []
        # any x with the vector x at v alone outside L; one exists since dim L = |V|
        x = next(x for x in NONZERO if (int(x) << (2 * v)) not in S.L)
        x = int(x)
    minor = elementary_minor(S, v, x)
    c = _construct(minor, rest)
    return _lift(c, v, x, S.ground)


# ---------------------------------------------------------------------------
# minors and connectivity
# ---------------------------------------------------------------------------


def elementary_minor(S: IsotropicSystem, v: int, x: int) -> IsotropicSystem:
    """Project {a in L : a(v) in {0, x}} onto V - {v}."""
    x = int(x)
    if x not in (1, 2, 3):
        raise IsotropicError("minor value must be nonzero")
    if v not in S.ground:
        raise IsotropicError(f"unknown vertex {v}")
    keep: list[int] = []
    pivot = None
    for B in S.basis:
        if form_k((B >> (2 * v)) & 3, x):
            if pivot is None:
                pivot = B
            else:
                keep.append(B ^ pivot)
        else:
            keep.append(B)
    drop = ~(3 << (2 * v))
    ground = tuple(u for u in S.ground if u != v)
    return IsotropicSystem(ground, Subspace(ground, tuple(rref(B & drop for B in keep))))


def connectivity(S: IsotropicSystem, X: Iterable[int]) -> int:
    """c(X) = |X| - dim(L restricted into X)."""
    xm = vertex_mask(X)
    if xm & ~S.vmask:
        raise IsotropicError("X is not a subset of the ground set")
    outside = spread(S.vmask & ~xm)
    # dim of the vectors supported in X is n - rank of the outside projection
    return bin(xm).count("1") - S.n + rank(B & outside for B in S.basis)


def is_k_connected(S: IsotropicSystem, k: int) -> bool:
    """No partition (X, V-X) with both sides >= k' and c(X) < k' for k' < k."""
    n = S.n
    ground = S.ground
    for sub in range(1, 1 << n):
        size = bin(sub).count("1")
        small = min(size, n - size)
        if small < 1:
            continue
        X = [ground[i] for i in iter_bits(sub)]
        c = connectivity(S, X)
        if any(small >= kp and c < kp for kp in range(1, k)):
            return False
    return True


def is_three_connected(S: IsotropicSystem) -> bool:
    return is_k_connected(S, 3)


def is_cyclic(S: IsotropicSystem) -> bool:
    """Some fundamental graph is a cycle of length at least 5."""
    from vmcalc.equivalence import locally_equivalent_cycle_length

    if S.n < 5:
        return False
    G = fundamental_graph(S, find_eulerian_vector(S))
    return locally_equivalent_cycle_length(G) is not None


def is_non_essential(S: IsotropicSystem, v: int) -> bool:
    """At least two of the three elementary minors at v are 3-connected."""
    return sum(is_three_connected(elementary_minor(S, v, x)) for x in (1, 2, 3)) >= 2


def non_essential_vertices(S: IsotropicSystem) -> frozenset[int]:
    return frozenset(v for v in S.ground if is_non_essential(S, v))


# ---------------------------------------------------------------------------
# triangles and H(S)
# ---------------------------------------------------------------------------


def triangles(S: IsotropicSystem) -> list[KVector]:
    """Vectors of L whose support has exactly three vertices."""
    return [t for t in S.L if bin(support_mask(t.bits)).count("1") == 3]


def build_h(S: IsotropicSystem):
    from vmcalc.hypergraph import ThreeUniformHypergraph

    return ThreeUniformHypergraph(S.ground, {t.support() for t in triangles(S)})


def check_isotropic(S: IsotropicSystem) -> bool:
    return all(form_bits(a, b) == 0 for a in S.basis for b in S.basis)
