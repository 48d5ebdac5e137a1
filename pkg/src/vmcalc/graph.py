"""Simple labeled graphs and the vertex-minor operations on them.

A :class:`Graph` is an immutable value: a vertex mask plus one adjacency
bit-row per vertex id.  Vertex ids are small non-negative ints and survive
deletion, so reductions of a graph stay labeled by the original ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from vmcalc.gf2 import iter_bits, rank, vertex_mask


class GraphError(ValueError):
    pass


class Graph:
    """Finite simple graph on a set of integer vertex ids."""

    __slots__ = ("vmask", "rows", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        vertices = sorted(set(vertices))
        if vertices and vertices[0] < 0:
            raise GraphError("vertex ids must be non-negative")
        size = vertices[-1] + 1 if vertices else 0
        rows = [0] * size
        vm = vertex_mask(vertices)
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at {u}")
            if not ((vm >> u) & 1 and (vm >> v) & 1):
                raise GraphError(f"edge {u}-{v} uses an unknown vertex")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._set(vm, tuple(rows))

    def _set(self, vmask: int, rows: tuple[int, ...]) -> None:
        self.vmask = vmask
        self.rows = rows
        self._hash = hash((vmask, rows))

    @classmethod
    def from_rows(cls, vmask: int, rows: Sequence[int]) -> Graph:
        """Build from raw bit-rows; trailing rows beyond the top vertex are dropped."""
        g = cls.__new__(cls)
        g._set(vmask, tuple(rows[: vmask.bit_length()]))
        return g

    # -- basic accessors ---------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.vmask))

    @property
    def n(self) -> int:
        return bin(self.vmask).count("1")

    def __len__(self) -> int:
        return self.n

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool((self.vmask >> v) & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(iter_bits(self.rows[v]))

    def nbr_mask(self, v: int) -> int:
        return self.rows[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return bin(self.rows[v]).count("1")

    def has_edge(self, u: int, v: int) -> bool:
        return u in self and v in self and bool((self.rows[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self.vertices for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(bin(r).count("1") for r in self.rows) // 2

    def _check(self, v: int) -> None:
        if v not in self:
            raise GraphError(f"unknown vertex {v}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._hash == other._hash and self.vmask == other.vmask and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(vertices={list(self.vertices)}, edges={self.edges()})"

    def relabel(self, mapping: dict[int, int]) -> Graph:
        return Graph((mapping[v] for v in self.vertices), ((mapping[u], mapping[v]) for u, v in self.edges()))

    def induced(self, X: Iterable[int]) -> Graph:
        xm = vertex_mask(X)
        if xm & ~self.vmask:
            raise GraphError("induced subgraph on unknown vertices")
        return Graph.from_rows(xm, [r & xm if (xm >> i) & 1 else 0 for i, r in enumerate(self.rows)])

    # -- common families -----------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(range(n))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(range(n), ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls(range(n), ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(range(n), ((i, j) for i in range(n) for j in range(i + 1, n)))


# ---------------------------------------------------------------------------
# vertex-minor operations
# ---------------------------------------------------------------------------


def local_complement(G: Graph, v: int) -> Graph:
    """G*v: complement the subgraph induced on the neighborhood of v."""
    G._check(v)
    nb = G.rows[v]
    rows = list(G.rows)
    for u in iter_bits(nb):
        rows[u] ^= nb & ~(1 << u)
    return Graph.from_rows(G.vmask, rows)


def pivot(G: Graph, v: int, w: int) -> Graph:
    """G pivoted on the edge vw, via the three-set toggle and a label swap."""
    if not G.has_edge(v, w):
        raise GraphError(f"{v}{w} is not an edge")
    nv, nw = G.rows[v], G.rows[w]
    only_v = nv & ~nw & ~(1 << w)
    only_w = nw & ~nv & ~(1 << v)
    both = nv & nw
    rows = list(G.rows)
    for x in iter_bits(only_v):
        rows[x] ^= only_w | both
    for x in iter_bits(only_w):
        rows[x] ^= only_v | both
    for x in iter_bits(both):
        rows[x] ^= only_v | only_w
    # exchange the labels v and w
    bv, bw = 1 << v, 1 << w
    rows[v], rows[w] = rows[w], rows[v]
    for i, r in enumerate(rows):
        if bool(r & bv) != bool(r & bw):
            rows[i] = r ^ bv ^ bw
    return Graph.from_rows(G.vmask, rows)


def delete_vertex(G: Graph, v: int) -> Graph:
    G._check(v)
    keep = ~(1 << v)
    rows = [r & keep for r in G.rows]
    rows[v] = 0
    return Graph.from_rows(G.vmask & keep, rows)


def contract_vertex(G: Graph, v: int) -> Graph:
    """G/v: G minus v if v is isolated, else pivot on the least neighbor and delete v."""
    G._check(v)
    nb = G.rows[v]
    if not nb:
        return delete_vertex(G, v)
    w = (nb & -nb).bit_length() - 1
    return delete_vertex(pivot(G, v, w), v)


def cut_rank(G: Graph, X: Iterable[int]) -> int:
    """GF(2) rank of the adjacency submatrix between X and its complement."""
    xm = vertex_mask(X)
    if xm & ~G.vmask:
        raise GraphError("X is not a subset of V(G)")
    comp = G.vmask & ~xm
    return rank(G.rows[x] & comp for x in iter_bits(xm))


# ---------------------------------------------------------------------------
# splits and primality
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1024)
def _sides(vmask: int) -> tuple[int, ...]:
    """Every X containing the least vertex with 2 <= |X| <= n - 2."""
    verts = list(iter_bits(vmask))
    n = len(verts)
    if n < 4:
        return ()
    first = 1 << verts[0]
    subsets = [0]
    for v in verts[1:]:
        subsets += [s | (1 << v) for s in subsets]
    out = []
    for s in subsets:
        size = bin(s).count("1") + 1
        if 2 <= size <= n - 2:
            out.append(s | first)
    out.sort(key=lambda s: (bin(s).count("1"), s))
    return tuple(out)


def _rank_at_most_one(rows: tuple[int, ...], xm: int, comp: int) -> bool:
    seen = 0
    for x in iter_bits(xm):
        r = rows[x] & comp
        if r:
            if not seen:
                seen = r
            elif r != seen:
                return False
    return True


def find_split(G: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Exhaustive scan of all bipartitions for one with cut-rank at most 1."""
    rows = G.rows
    for xm in _sides(G.vmask):
        comp = G.vmask & ~xm
        if _rank_at_most_one(rows, xm, comp):
            return frozenset(iter_bits(xm)), frozenset(iter_bits(comp))
    return None


def has_degenerate_vertex(G: Graph) -> bool:
    """True if G has an isolated vertex, a pendant vertex, or a pair of twins."""
    rows = G.rows
    verts = G.vertices
    for i, u in enumerate(verts):
        ru = rows[u]
        if ru & (ru - 1) == 0:
            return True
        bu = 1 << u
        for v in verts[i + 1 :]:
            if (ru ^ rows[v]) & ~(bu | (1 << v)) == 0:
                return True
    return False


@lru_cache(maxsize=1 << 19)
def is_prime(G: Graph) -> bool:
    """A graph is prime when it has no split; cached by graph value."""
    if G.n >= 4 and has_degenerate_vertex(G):
        return False
    return find_split(G) is None


# ---------------------------------------------------------------------------
# structural predicates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Structure:
    isolated: tuple[int, ...]
    pendant: tuple[int, ...]
    twins: tuple[tuple[int, int], ...]
    is_bipartite: bool
    is_cycle_graph: bool
    degree_sequence: tuple[int, ...]


def components(G: Graph) -> list[frozenset[int]]:
    seen = 0
    out = []
    for v in G.vertices:
        if (seen >> v) & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= G.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(frozenset(iter_bits(comp)))
    return out


def is_connected(G: Graph) -> bool:
    return len(components(G)) <= 1


def bipartition(G: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A proper 2-colouring as two colour classes, or None if G has an odd cycle."""
    colour: dict[int, int] = {}
    for s in G.vertices:
        if s in colour:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in iter_bits(G.rows[u]):
                if w not in colour:
                    colour[w] = colour[u] ^ 1
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return None
    return (
        frozenset(v for v, c in colour.items() if c == 0),
        frozenset(v for v, c in colour.items() if c == 1),
    )


def is_bipartite(G: Graph) -> bool:
    return bipartition(G) is not None


def is_cycle_graph(G: Graph) -> bool:
    return G.n >= 3 and all(G.degree(v) == 2 for v in G.vertices) and is_connected(G)


def twin_pairs(G: Graph) -> list[tuple[int, int]]:
    verts = G.vertices
    rows = G.rows
    return [
        (u, v)
        for i, u in enumerate(verts)
        for v in verts[i + 1 :]
        if (rows[u] ^ rows[v]) & ~((1 << u) | (1 << v)) == 0
    ]


def structural_predicates(G: Graph) -> Structure:
    degs = {v: G.degree(v) for v in G.vertices}
    return Structure(
        isolated=tuple(v for v, d in degs.items() if d == 0),
        pendant=tuple(v for v, d in degs.items() if d == 1),
        twins=tuple(twin_pairs(G)),
        is_bipartite=is_bipartite(G),
        is_cycle_graph=is_cycle_graph(G),
        degree_sequence=tuple(sorted(degs.values(), reverse=True)),
    )


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m\\nu v\\n..."`` with 0-based vertex ids."""
    tokens = text.split()
    if len(tokens) < 2:
        raise GraphError("edge list needs a header 'n m'")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphError(f"non-integer token in edge list: {exc}") from None
    n, m = nums[0], nums[1]
    body = nums[2:]
    if n < 0 or m < 0 or len(body) != 2 * m:
        raise GraphError(f"header announces {m} edges but {len(body) / 2:g} follow")
    edges = list(zip(body[0::2], body[1::2]))
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {u}-{v} out of range for n={n}")
    g = Graph(range(n), edges)
    if g.m != m:
        raise GraphError("duplicate edges in edge list")
    return g


def format_edge_list(G: Graph) -> str:
    index = {v: i for i, v in enumerate(G.vertices)}
    lines = [f"{G.n} {G.m}"]
    lines += [f"{index[u]} {index[v]}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def to_graph6(G: Graph) -> str:
    """graph6 string; vertices are renumbered 0..n-1 in increasing id order."""
    import networkx as nx

    nxg = nx.Graph()
    index = {v: i for i, v in enumerate(G.vertices)}
    nxg.add_nodes_from(range(G.n))
    nxg.add_edges_from((index[u], index[v]) for u, v in G.edges())
    return nx.to_graph6_bytes(nxg, header=False).decode().strip()


def from_graph6(s: str) -> Graph:
    import networkx as nx

    try:
        nxg = nx.from_graph6_bytes(s.strip().encode())
    except Exception as exc:  # networkx raises bare NetworkXError / ValueError
        raise GraphError(f"bad graph6 string {s!r}: {exc}") from None
    return Graph(nxg.nodes, nxg.edges)


def iter_vertex_subsets(G: Graph) -> Iterator[frozenset[int]]:
    verts = G.vertices
    for s in range(1 << len(verts)):
        yield frozenset(v for i, v in enumerate(verts) if (s >> i) & 1)
