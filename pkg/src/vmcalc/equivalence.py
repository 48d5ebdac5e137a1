"""Local and pivot equivalence classes, and the vertex classifiers built on them."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Literal, NamedTuple

from vmcalc.graph import (
    Graph,
    contract_vertex,
    delete_vertex,
    is_bipartite,
    is_cycle_graph,
    is_prime,
    local_complement,
    pivot,
)

Generator = Literal["local", "pivot"]


class OrbitTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class Orbit:
    """A labeled equivalence class: every graph reachable from ``seed``."""

    seed: Graph
    members: frozenset[Graph]
    generator: Generator

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, G: object) -> bool:
        return G in self.members

    def find(self, predicate: Callable[[Graph], bool]) -> Graph | None:
        """Least member (by sorted edge list) satisfying ``predicate``."""
        hits = [g for g in self.members if predicate(g)]
        return min(hits, key=lambda g: g.edges()) if hits else None


def _neighbors_local(G: Graph) -> Iterable[Graph]:
    for v in G.vertices:
        if G.rows[v]:
            yield local_complement(G, v)


def _neighbors_pivot(G: Graph) -> Iterable[Graph]:
    for v, w in G.edges():
        yield pivot(G, v, w)


def _closure(G: Graph, step: Callable[[Graph], Iterable[Graph]], limit: int | None) -> frozenset[Graph]:
    seen = {G}
    queue = deque([G])
    while queue:
        g = queue.popleft()
        for h in step(g):
            if h not in seen:
                seen.add(h)
                if limit is not None and len(seen) > limit:
                    raise OrbitTooLarge(f"orbit exceeds {limit} members")
                queue.append(h)
    return frozenset(seen)


def local_orbit(G: Graph) -> Orbit:
    """BFS closure of G under local complementation at every vertex."""
    return Orbit(G, _closure(G, _neighbors_local, 3 ** G.n), "local")


def pivot_orbit(G: Graph) -> Orbit:
    """BFS closure of G under pivoting on every edge."""
    return Orbit(G, _closure(G, _neighbors_pivot, 3 ** G.n), "pivot")


def are_locally_equivalent(G: Graph, H: Graph) -> bool:
    if G.vmask != H.vmask or G.m == 0 and H.m == 0:
        return G == H
    return H in local_orbit(G)


def locally_equivalent_cycle_length(G: Graph, orbit: Orbit | None = None) -> int | None:
    """Length of a cycle graph in the local orbit of G, if there is one."""
    if orbit is None:
        orbit = local_orbit(G)
    hit = orbit.find(is_cycle_graph)
    return None if hit is None else hit.n


def is_pivot_equivalent_to_even_cycle(G: Graph, orbit: Orbit | None = None) -> bool:
    if orbit is None:
        if not is_bipartite(G):
            return False
        orbit = pivot_orbit(G)
    return any(g.n % 2 == 0 and is_cycle_graph(g) for g in orbit.members)


class VertexClass(NamedTuple):
    """Primality of the three reductions G minus v, G*v minus v, G/v."""

    prime_delete: bool
    prime_star_delete: bool
    prime_contract: bool

    @property
    def non_essential(self) -> bool:
        return self.prime_delete + self.prime_star_delete + self.prime_contract >= 2

    @property
    def non_pivotal(self) -> bool:
        return self.prime_delete or self.prime_contract


def classify_vertex(G: Graph, v: int) -> VertexClass:
    return VertexClass(
        is_prime(delete_vertex(G, v)),
        is_prime(delete_vertex(local_complement(G, v), v)),
        is_prime(contract_vertex(G, v)),
    )


def classify_all(G: Graph) -> dict[int, VertexClass]:
    return {v: classify_vertex(G, v) for v in G.vertices}


def non_essential_vertices(G: Graph) -> frozenset[int]:
    """Vertices for which at least two of the three reductions are prime."""
    return frozenset(v for v in G.vertices if classify_vertex(G, v).non_essential)


def non_pivotal_vertices(G: Graph) -> frozenset[int]:
    """Vertices v with G minus v or G/v prime."""
    out = []
    for v in G.vertices:
        if is_prime(delete_vertex(G, v)) or is_prime(contract_vertex(G, v)):
            out.append(v)
    return frozenset(out)


def reductions(G: Graph, v: int) -> tuple[Graph, Graph, Graph]:
    return delete_vertex(G, v), delete_vertex(local_complement(G, v), v), contract_vertex(G, v)


def check_reduction_triple(G: Graph, v: int, w: int) -> bool:
    """Check that the reductions at v of G*w match those of G, up to local equivalence.

    For v = w the first two reductions trade places; for an edge vw the last
    two trade places; for a non-edge the order is kept.
    """
    Gw = local_complement(G, w)
    lhs = reductions(Gw, v)
    d, s, c = reductions(G, v)
    if v == w:
        rhs = (s, d, c)
    elif G.has_edge(v, w):
        rhs = (d, c, s)
    else:
        rhs = (d, s, c)
    return all(are_locally_equivalent(a, b) for a, b in zip(lhs, rhs))


def orbit_prime_invariant(orbit: Orbit) -> bool:
    """True if every member of the orbit has the same primality."""
    values = {is_prime(g) for g in orbit.members}
    return len(values) == 1

