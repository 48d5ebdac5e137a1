"""Bit-exact linear algebra over GF(2) and the four-element space K.

Vectors of K^V are packed into a single int: the value at vertex id ``v``
occupies bits ``2v`` (low, the alpha-bit) and ``2v + 1`` (high, the
beta-bit), so 0, alpha, beta, gamma are 0b00, 0b01, 0b10, 0b11 and vector
addition is XOR.  Subspaces are kept as reduced row echelon bases whose pivot
is the lowest set bit of each row, which makes subspace equality basis
equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence


class K(IntEnum):
    """Elements of the two-dimensional GF(2) space {0, alpha, beta, gamma}."""

    ZERO = 0
    ALPHA = 1
    BETA = 2
    GAMMA = 3

    @property
    def symbol(self) -> str:
        return "0abc"[self]


NONZERO = (K.ALPHA, K.BETA, K.GAMMA)


def form_k(x: int, y: int) -> int:
    """Symplectic form on K: 1 iff x, y are nonzero and distinct."""
    return ((x & 1) & (y >> 1)) ^ ((x >> 1) & (y & 1))


def parity(x: int) -> int:
    return bin(x).count("1") & 1


def lowbit_index(x: int) -> int:
    return (x & -x).bit_length() - 1


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# ---------------------------------------------------------------------------
# GF(2) row operations on int bitsets
# ---------------------------------------------------------------------------


def rref(rows: Iterable[int]) -> list[int]:
    """Reduced row echelon basis of the row span, sorted by pivot column.

    The pivot of a row is its lowest set bit; every pivot column is zero in
    all other rows.
    """
    basis: list[int] = []
    for row in rows:
        for b in basis:
            if row & (b & -b):
                row ^= b
        if row:
            low = row & -row
            basis = [b ^ row if b & low else b for b in basis]
            basis.append(row)
    basis.sort(key=lambda r: r & -r)
    return basis


def rank(rows: Iterable[int]) -> int:
    """Row rank over GF(2) of a matrix given as int bit-rows."""
    pivots: list[int] = []
    r = 0
    for row in rows:
        for p in pivots:
            if row & (p & -p):
                row ^= p
        if row:
            pivots.append(row)
            r += 1
    return r


def reduce(vec: int, basis: Sequence[int]) -> int:
    """Reduce ``vec`` modulo an RREF basis; zero iff ``vec`` is in the span."""
    for b in basis:
        if vec & (b & -b):
            vec ^= b
    return vec


def nullspace(rows: Iterable[int], columns: int) -> list[int]:
    """Basis of {x within ``columns`` : parity(x & r) = 0 for every row r}."""
    basis = rref(r & columns for r in rows)
    pivots = 0
    for b in basis:
        pivots |= b & -b
    out = []
    for f in iter_bits(columns & ~pivots):
        x = 1 << f
        for b in basis:
            if (b >> f) & 1:
                x |= b & -b
        out.append(x)
    return rref(out)


def solve(rows: Sequence[int], target: int) -> int | None:
    """Find a coefficient mask ``c`` with XOR of ``rows[i]`` for i in c equal
    to ``target``; None when ``target`` is outside the row span."""
    tagged: list[tuple[int, int]] = []
    for i, row in enumerate(rows):
        tag = 1 << i
        for b, t in tagged:
            if row & (b & -b):
                row ^= b
                tag ^= t
        if row:
            tagged.append((row, tag))
    coeff = 0
    for b, t in tagged:
        if target & (b & -b):
            target ^= b
            coeff ^= t
    return None if target else coeff


def invert(rows: Sequence[int], n: int) -> list[int] | None:
    """Inverse of an n x n GF(2) matrix (row i = int with column bits)."""
    work = [(rows[i], 1 << i) for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if (work[i][0] >> col) & 1), None)
        if piv is None:
            return None
        work[col], work[piv] = work[piv], work[col]
        pr, pt = work[col]
        for i in range(n):
            if i != col and (work[i][0] >> col) & 1:
                work[i] = (work[i][0] ^ pr, work[i][1] ^ pt)
    return [t for _, t in work]


@dataclass(frozen=True)
class BitMatrix:
    """Dense GF(2) matrix stored as packed int rows (bit j = column j)."""

    rows: tuple[int, ...]
    cols: int

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], cols: int | None = None) -> BitMatrix:
        if cols is None:
            cols = len(entries[0]) if entries else 0
        packed = []
        for line in entries:
            if len(line) != cols:
                raise ValueError("ragged matrix")
            r = 0
            for j, e in enumerate(line):
                if e not in (0, 1):
                    raise ValueError(f"entry {e!r} is not a GF(2) value")
                r |= e << j
            packed.append(r)
        return cls(tuple(packed), cols)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.cols

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.rows]

    def rank(self) -> int:
        return rank(self.rows)

    def rref(self) -> BitMatrix:
        basis = rref(self.rows)
        return BitMatrix(tuple(basis) + (0,) * (len(self.rows) - len(basis)), self.cols)


# ---------------------------------------------------------------------------
# K^V vectors
# ---------------------------------------------------------------------------

_EVEN = int("01" * 256, 2)


@lru_cache(maxsize=4096)
def spread(vmask: int) -> int:
    """Pair-bit mask covering both K-bits of every vertex in ``vmask``."""
    out = 0
    for v in iter_bits(vmask):
        out |= 3 << (2 * v)
    return out


def support_mask(bits: int) -> int:
    """Vertex mask of the support of a packed K-vector."""
    s = (bits | (bits >> 1)) & _EVEN
    out = 0
    while s:
        low = s & -s
        out |= 1 << ((low.bit_length() - 1) >> 1)
        s ^= low
    return out


def swap_pairs(bits: int) -> int:
    """Exchange the two K-bits of every vertex; form(a, b) = parity(a & swap(b))."""
    return ((bits & _EVEN) << 1) | ((bits >> 1) & _EVEN)


def form_bits(a: int, b: int) -> int:
    return parity(a & swap_pairs(b))


def vertex_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class KVector:
    """A function from an ordered ground set of vertex ids to K."""

    ground: tuple[int, ...]
    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits & ~spread(vertex_mask(self.ground)):
            raise ValueError("vector has entries outside its ground set")

    @classmethod
    def from_values(cls, ground: Sequence[int], values: Sequence[int] | Mapping[int, int]) -> KVector:
        ground = tuple(ground)
        if isinstance(values, Mapping):
            items = values.items()
        else:
            if len(values) != len(ground):
                raise ValueError("one value per ground vertex expected")
            items = zip(ground, values)
        bits = 0
        for v, x in items:
            if v not in ground:
                raise ValueError(f"vertex {v} not in ground set")
            bits |= (int(x) & 3) << (2 * v)
        return cls(ground, bits)

    @classmethod
    def constant(cls, ground: Sequence[int], x: int) -> KVector:
        ground = tuple(ground)
        bits = 0
        for v in ground:
            bits |= (int(x) & 3) << (2 * v)
        return cls(ground, bits)

    @classmethod
    def zero(cls, ground: Sequence[int]) -> KVector:
        return cls(tuple(ground), 0)

    def __getitem__(self, v: int) -> K:
        return K((self.bits >> (2 * v)) & 3)

    def values(self) -> tuple[K, ...]:
        return tuple(self[v] for v in self.ground)

    def __add__(self, other: KVector) -> KVector:
        _same_ground(self, other)
        return KVector(self.ground, self.bits ^ other.bits)

    def support(self) -> frozenset[int]:
        return frozenset(iter_bits(support_mask(self.bits)))

    def is_complete(self) -> bool:
        return support_mask(self.bits) == vertex_mask(self.ground)

    def restrict(self, X: Iterable[int]) -> KVector:
        return restrict(self, X)

    def mask(self, X: Iterable[int]) -> KVector:
        return mask(self, X)

    def __str__(self) -> str:
        return "".join(self[v].symbol for v in self.ground)


def _same_ground(a: KVector, b: KVector) -> None:
    if a.ground != b.ground:
        raise ValueError("ground-set mismatch")


def _subset_mask(ground: Sequence[int], X: Iterable[int]) -> int:
    g = vertex_mask(ground)
    x = vertex_mask(X)
    if x & ~g:
        raise ValueError("X is not a subset of the ground set")
    return x


def form_v(a: KVector, b: KVector) -> int:
    """Sum over vertices of the K-form, as a GF(2) bit."""
    _same_ground(a, b)
    return form_bits(a.bits, b.bits)


def supplementary(a: KVector, b: KVector) -> bool:
    _same_ground(a, b)
    return a.is_complete() and b.is_complete() and (a + b).is_complete()


def restrict(a: KVector, X: Iterable[int]) -> KVector:
    """Projection p_X: the vector on X agreeing with ``a`` there."""
    X = tuple(X)
    xm = _subset_mask(a.ground, X)
    ground = tuple(v for v in a.ground if (xm >> v) & 1)
    return KVector(ground, a.bits & spread(xm))


def mask(a: KVector, X: Iterable[int]) -> KVector:
    """a[X]: keeps the ground set, zeroes every entry outside X."""
    xm = _subset_mask(a.ground, X)
    return KVector(a.ground, a.bits & spread(xm))


# ---------------------------------------------------------------------------
# Subspaces of K^V
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """Subspace of K^V held as an RREF basis of packed vectors."""

    ground: tuple[int, ...]
    basis: tuple[int, ...]

    @classmethod
    def span(cls, ground: Sequence[int], vectors: Iterable[KVector | int]) -> Subspace:
        ground = tuple(ground)
        cols = spread(vertex_mask(ground))
        rows = []
        for vec in vectors:
            if isinstance(vec, KVector):
                if vec.ground != ground:
                    raise ValueError("ground-set mismatch")
                vec = vec.bits
            if vec & ~cols:
                raise ValueError("vector has entries outside the ground set")
            rows.append(vec)
        return cls(ground, tuple(rref(rows)))

    @classmethod
    def zero(cls, ground: Sequence[int]) -> Subspace:
        return cls(tuple(ground), ())

    @classmethod
    def full(cls, ground: Sequence[int]) -> Subspace:
        ground = tuple(ground)
        return cls.span(ground, [1 << b for b in iter_bits(spread(vertex_mask(ground)))])

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def columns(self) -> int:
        return spread(vertex_mask(self.ground))

    def __contains__(self, vec: KVector | int) -> bool:
        if isinstance(vec, KVector):
            if vec.ground != self.ground:
                return False
            vec = vec.bits
        return reduce(vec, self.basis) == 0

    def basis_vectors(self) -> list[KVector]:
        return [KVector(self.ground, b) for b in self.basis]

    def __iter__(self) -> Iterator[KVector]:
        """All 2^dim elements, zero first, in Gray-code order."""
        cur = 0
        yield KVector(self.ground, 0)
        for i in range(1, 1 << self.dim):
            cur ^= self.basis[lowbit_index(i)]
            yield KVector(self.ground, cur)

    def is_totally_isotropic(self) -> bool:
        return all(form_bits(a, b) == 0 for i, a in enumerate(self.basis) for b in self.basis[i:])

    def orthogonal_complement(self) -> Subspace:
        return orthogonal_complement(self)

    def sub_restrict_into(self, X: Iterable[int]) -> Subspace:
        return sub_restrict_into(self, X)

    def sub_project(self, X: Iterable[int]) -> Subspace:
        return sub_project(self, X)


def orthogonal_complement(L: Subspace) -> Subspace:
    """L^perp with respect to the summed K-form."""
    return Subspace(L.ground, tuple(nullspace((swap_pairs(b) for b in L.basis), L.columns)))


def _sub_ground(L: Subspace, X: Iterable[int]) -> tuple[tuple[int, ...], int]:
    xm = _subset_mask(L.ground, tuple(X))
    return tuple(v for v in L.ground if (xm >> v) & 1), xm


def sub_restrict_into(L: Subspace, X: Iterable[int]) -> Subspace:
    """L restricted into X: projections of the vectors of L supported inside X."""
    ground, xm = _sub_ground(L, X)
    outside = L.columns & ~spread(xm)
    # eliminate every outside column; the rows that survive span the answer
    rows = list(L.basis)
    for col in iter_bits(outside):
        bit = 1 << col
        piv = next((i for i, r in enumerate(rows) if r & bit), None)
        if piv is None:
            continue
        p = rows.pop(piv)
        rows = [r ^ p if r & bit else r for r in rows]
    return Subspace(ground, tuple(rref(rows)))


def sub_project(L: Subspace, X: Iterable[int]) -> Subspace:
    """L restricted to X: projections of all vectors of L onto X."""
    ground, xm = _sub_ground(L, X)
    cols = spread(xm)
    return Subspace(ground, tuple(rref(b & cols for b in L.basis)))
