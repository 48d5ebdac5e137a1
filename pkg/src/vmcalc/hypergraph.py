"""Tight paths in 3-uniform hypergraphs and the five local structure types.

Relative to a vertex set N, the structures recognised by
:func:`classify_structures` are N-ears, N-triangles, N-windmills, N-tripods
and N-tables.  Each recogniser follows the literal definition and does not
assume anything about where the hypergraph came from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import TYPE_CHECKING, Iterable, Iterator, Sequence

if TYPE_CHECKING:
    from vmcalc.isotropic import IsotropicSystem

class HypergraphError(ValueError):
    pass


@dataclass(frozen=True)
class ThreeUniformHypergraph:
    vertices: tuple[int, ...]
    edges: frozenset[frozenset[int]]

    def __init__(self, vertices: Iterable[int], edges: Iterable[Iterable[int]]):
        vertices = tuple(sorted(set(vertices)))
        es = frozenset(frozenset(e) for e in edges)
        vs = set(vertices)
        for e in es:
            if len(e) != 3:
                raise HypergraphError(f"edge {sorted(e)} does not have exactly 3 vertices")
            if not e <= vs:
                raise HypergraphError(f"edge {sorted(e)} uses unknown vertices")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", es)

    def incident(self, v: int) -> list[frozenset[int]]:
        return [e for e in self.edges if v in e]

    def sorted_edges(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def dumps(self) -> str:
        """Fixture format: one edge per line, three ids."""
        return "".join(f"{a} {b} {c}\n" for a, b, c in self.sorted_edges())

    @classmethod
    def loads(cls, text: str, vertices: Iterable[int] | None = None) -> ThreeUniformHypergraph:
        edges = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3:
                raise HypergraphError(f"line {lineno}: expected three ids")
            edges.append(frozenset(int(p) for p in parts))
        if vertices is None:
            vertices = set().union(*edges) if edges else ()
        return cls(vertices, edges)


@dataclass(frozen=True)
class TightPath:
    """Vertex sequence v0 .. v(k+1); its edges are the k consecutive triples."""

    sequence: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.sequence) < 3:
            raise HypergraphError("a tight path has at least 3 vertices")
        if len(set(self.sequence)) != len(self.sequence):
            raise HypergraphError("tight path repeats a vertex")

    @property
    def length(self) -> int:
        return len(self.sequence) - 2

    @property
    def edges(self) -> frozenset[frozenset[int]]:
        s = self.sequence
        return frozenset(frozenset(s[i - 1 : i + 2]) for i in range(1, len(s) - 1))

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.sequence)

    @property
    def ends(self) -> frozenset[int]:
        if self.length == 1:
            return frozenset(self.sequence)
        return frozenset((self.sequence[0], self.sequence[-1]))

    @property
    def internal(self) -> frozenset[int]:
        return self.vertex_set - self.ends

    def reversed(self) -> TightPath:
        return TightPath(self.sequence[::-1])


def is_tight_path(H: ThreeUniformHypergraph, seq: Sequence[int]) -> bool:
    seq = tuple(seq)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    return all(frozenset(seq[i - 1 : i + 2]) in H.edges for i in range(1, len(seq) - 1))


def is_maximal(H: ThreeUniformHypergraph, P: TightPath | Sequence[int]) -> bool:
    """A tight path is maximal iff none of the one-vertex extensions exists.

    The extensions checked are: a new vertex at either end; for length 1 the
    reordering v1 v0 v2 followed by a new vertex; for length 2 the
    reordering v0 v2 v1 v3 extended at either end.
    """
    if not isinstance(P, TightPath):
        P = TightPath(tuple(P))
    if not is_tight_path(H, P.sequence):
        raise HypergraphError("not a tight path of H")
    return next(_extensions(H, P), None) is None


def _extensions(H: ThreeUniformHypergraph, P: TightPath) -> Iterator[tuple[int, ...]]:
    s = P.sequence
    used = P.vertex_set
    others = [w for w in H.vertices if w not in used]
    candidates: list[tuple[int, ...]] = []
    for w in others:
        candidates.append(s + (w,))
    for w in others:
        candidates.append((w,) + s)
    if P.length == 1:
        for w in others:
            candidates.append((s[1], s[0], s[2], w))
    elif P.length == 2:
        r = (s[0], s[2], s[1], s[3])
        for w in others:
            candidates.append(r + (w,))
        for w in others:
            candidates.append((w,) + r)
    for c in candidates:
        if is_tight_path(H, c):
            yield c


def maximal_tight_path_containing(H: ThreeUniformHypergraph, e: Iterable[int]) -> TightPath:
    """Greedy extension of the edge e until no one-vertex extension applies."""
    e = frozenset(e)
    if e not in H.edges:
        raise HypergraphError(f"{sorted(e)} is not an edge")
    P = TightPath(tuple(sorted(e)))
    while True:
        nxt = next(_extensions(H, P), None)
        if nxt is None:
            return P
        P = TightPath(nxt)


def tight_paths(H: ThreeUniformHypergraph) -> Iterator[TightPath]:
    """Every tight path, once per vertex sequence (both directions)."""
    adj: dict[frozenset[int], list[int]] = {}
    for e in H.edges:
        for a, b in combinations(sorted(e), 2):
            (c,) = e - {a, b}
            adj.setdefault(frozenset((a, b)), []).append(c)

    def grow(seq: tuple[int, ...]) -> Iterator[TightPath]:
        yield TightPath(seq)
        for w in sorted(adj.get(frozenset(seq[-2:]), ())):
            if w not in seq:
                yield from grow(seq + (w,))

    for e in sorted(H.edges, key=sorted):
        for a, b, c in _orderings(e):
            yield from grow((a, b, c))


def _orderings(e: frozenset[int]) -> list[tuple[int, int, int]]:
    a, b, c = sorted(e)
    return [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)]


def maximal_tight_paths(H: ThreeUniformHypergraph) -> list[TightPath]:
    """All maximal tight paths, one per edge set (least sequence kept)."""
    best: dict[frozenset[frozenset[int]], TightPath] = {}
    for p in tight_paths(H):
        es = p.edges
        if es in best:
            if p.sequence < best[es].sequence:
                best[es] = p
            continue
        if next(_extensions(H, p), None) is not None:
            continue
        best[es] = p
    return sorted(best.values(), key=lambda p: (p.length, p.sequence))


# ---------------------------------------------------------------------------
# the five structure types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Structures:
    ears: tuple[frozenset[frozenset[int]], ...] = ()
    triangles: tuple[frozenset[frozenset[int]], ...] = ()
    windmills: tuple[frozenset[frozenset[int]], ...] = ()
    tripods: tuple[frozenset[frozenset[int]], ...] = ()
    tables: tuple[frozenset[frozenset[int]], ...] = ()
    uncovered: frozenset[frozenset[int]] = field(default_factory=frozenset)

    def covered(self) -> frozenset[frozenset[int]]:
        out: set[frozenset[int]] = set()
        for group in (self.ears, self.triangles, self.windmills, self.tripods, self.tables):
            for es in group:
                out |= es
        return frozenset(out)


def _sorted_groups(groups: Iterable[frozenset[frozenset[int]]]) -> tuple[frozenset[frozenset[int]], ...]:
    return tuple(sorted(set(groups), key=lambda g: sorted(tuple(sorted(e)) for e in g)))


def find_ears(H: ThreeUniformHypergraph, N: frozenset[int]) -> list[frozenset[frozenset[int]]]:
    out = set()
    for P in tight_paths(H):
        if P.length < 2 or not P.ends <= N or P.internal & N:
            continue
        es = P.edges
        if any(e not in es and e & P.internal for e in H.edges):
            continue
        out.add(es)
    return list(out)


def find_triangles(H: ThreeUniformHypergraph, N: frozenset[int]) -> list[frozenset[frozenset[int]]]:
    return [
        frozenset((e,))
        for e in H.edges
        if e <= N and not any(len(e & f) == 2 for f in H.edges)
    ]


def find_windmills(H: ThreeUniformHypergraph, N: frozenset[int]) -> list[frozenset[frozenset[int]]]:
    out = []
    for v in H.vertices:
        if v in N:
            continue
        X = H.incident(v)
        if not X:
            continue
        ok = True
        for e in X:
            rest = e - {v}
            if not rest <= N or sum(1 for f in H.edges if rest <= f) != 1:
                ok = False
                break
        if ok and all(e & f == {v} for e, f in combinations(X, 2)):
            out.append(frozenset(X))
    return out


def find_tripods(H: ThreeUniformHypergraph, N: frozenset[int]) -> list[frozenset[frozenset[int]]]:
    out = []
    outside = [v for v in H.vertices if v not in N]
    for v, w in combinations(outside, 2):
        X = [e for e in H.edges if v in e or w in e]
        if len(X) != 3:
            continue
        allowed = N | {v, w}
        if all({v, w} <= e <= allowed for e in X):
            out.append(frozenset(X))
    return out


def find_tables(H: ThreeUniformHypergraph, N: frozenset[int]) -> list[frozenset[frozenset[int]]]:
    out = []
    for f in H.edges:
        if f & N:
            continue
        X = [e for e in H.edges if e & f]
        if len(X) != 4:
            continue
        if not all(len(e & f) >= 2 and (e - f) <= N for e in X):
            continue
        if len({e - f for e in X}) != len(X):
            continue
        out.append(frozenset(X))
    return out


def classify_structures(H: ThreeUniformHypergraph, N: Iterable[int]) -> Structures:
    N = frozenset(N)
    ears = _sorted_groups(find_ears(H, N))
    tris = _sorted_groups(find_triangles(H, N))
    mills = _sorted_groups(find_windmills(H, N))
    pods = _sorted_groups(find_tripods(H, N))
    tables = _sorted_groups(find_tables(H, N))
    s = Structures(ears, tris, mills, pods, tables)
    return Structures(ears, tris, mills, pods, tables, frozenset(H.edges - s.covered()))


def partition_classes_ok(paths: Sequence[TightPath], N: Iterable[int]) -> bool:
    """True if the sets V(P) - N are pairwise equal or disjoint."""
    N = frozenset(N)
    classes = {p.vertex_set - N for p in paths}
    return all(a == b or not (a & b) for a, b in combinations(classes, 2))


def verify_partition_corollary(S: IsotropicSystem) -> bool:
    """Check that V(P) - N and V(Q) - N are equal or disjoint for all maximal
    tight paths P, Q of H(S), where N is the non-essential set of S."""
    from vmcalc import isotropic

    if len(S.ground) < 5 or not isotropic.is_three_connected(S) or isotropic.is_cyclic(S):
        raise HypergraphError("needs a 3-connected, non-cyclic system on at least 5 vertices")
    H = isotropic.build_h(S)
    N = isotropic.non_essential_vertices(S)
    return partition_classes_ok(maximal_tight_paths(H), N)
