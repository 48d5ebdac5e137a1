"""Theta graphs: two hubs joined by internally disjoint paths."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from vmcalc.equivalence import Orbit, local_orbit
from vmcalc.graph import Graph, GraphError, is_connected


class ThetaError(ValueError):
    pass


class OutsideHypotheses(ThetaError):
    """The closed-form count does not cover this spec; use the direct classifier."""


@dataclass(frozen=True)
class ThetaSpec:
    lengths: tuple[int, ...]

    def __init__(self, lengths: Iterable[int]):
        ls = tuple(sorted(int(x) for x in lengths))
        if not ls:
            raise ThetaError("at least one path is needed")
        if ls[0] < 1:
            raise ThetaError("path lengths must be positive")
        if ls.count(1) > 1:
            raise ThetaError("at most one path may have length 1")
        object.__setattr__(self, "lengths", ls)

    @property
    def m(self) -> int:
        return len(self.lengths)

    @property
    def n(self) -> int:
        return 2 + sum(x - 1 for x in self.lengths)

    def __str__(self) -> str:
        return "theta(" + ",".join(map(str, self.lengths)) + ")"

    @classmethod
    def parse(cls, text: str) -> ThetaSpec:
        body = text.split(":", 1)[1] if text.startswith("theta:") else text
        try:
            return cls(int(t) for t in body.split(",") if t.strip())
        except ValueError as exc:
            raise ThetaError(f"bad theta literal {text!r}") from exc


def build_theta(spec: ThetaSpec | Iterable[int]) -> Graph:
    """Hubs are 0 and 1; internal vertices are numbered path by path."""
    if not isinstance(spec, ThetaSpec):
        spec = ThetaSpec(spec)
    edges = []
    nxt = 2
    for length in spec.lengths:
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph(range(spec.n), edges)


class ThetaShape(NamedTuple):
    spec: ThetaSpec
    x: int
    y: int


def recognize_theta_shape(G: Graph) -> ThetaShape | None:
    """Theta structure of G read off degrees, with its hubs.

    A cycle is reported as theta(1, k-1) split at its least edge.  Otherwise
    exactly two vertices must have degree m >= 3 and all others degree 2.
    """
    if G.n < 3 or not is_connected(G):
        return None
    degs = {v: G.degree(v) for v in G.vertices}
    if all(d == 2 for d in degs.values()):
        x, y = min(G.edges())
        return ThetaShape(ThetaSpec((1, G.n - 1)), x, y)
    hubs = [v for v, d in degs.items() if d != 2]
    if len(hubs) != 2 or degs[hubs[0]] != degs[hubs[1]] or degs[hubs[0]] < 3:
        return None
    x, y = hubs
    lengths = []
    seen = {x, y}
    for start in sorted(G.neighbors(x)):
        prev, cur, length = x, start, 1
        while cur != y:
            if cur == x or cur in seen:
                return None
            seen.add(cur)
            (nxt,) = G.neighbors(cur) - {prev}
            prev, cur = cur, nxt
            length += 1
        lengths.append(length)
    if len(seen) != G.n or lengths.count(1) > 1:
        return None
    return ThetaShape(ThetaSpec(lengths), x, y)


def recognize_theta(G: Graph) -> ThetaSpec | None:
    shape = recognize_theta_shape(G)
    return None if shape is None else shape.spec


def theta_is_prime(spec: ThetaSpec) -> bool:
    """Prime iff at most one path has length 2 (m >= 2, at least 5 vertices)."""
    if spec.m < 2 or spec.n < 5:
        raise ThetaError(f"{spec} is outside the primality criterion's range")
    return spec.lengths.count(2) <= 1


class ThetaCount(NamedTuple):
    count: int
    case: int


def in_count_hypotheses(spec: ThetaSpec) -> bool:
    ls = spec.lengths
    if spec.m < 3 or ls[2] < 3:
        return False
    return ls[1] >= 3 or ls[:2] == (1, 2)


def theta_non_essential_count(spec: ThetaSpec) -> ThetaCount:
    """Closed-form number of non-essential vertices, with the case number (1-6)."""
    if not in_count_hypotheses(spec):
        raise OutsideHypotheses(f"{spec}: no closed form, use the direct classifier")
    l1, l2 = spec.lengths[:2]
    m = spec.m
    if l1 == 1 and m == 3 and l2 <= 3:
        return ThetaCount(0, 1)
    if l1 == 1 and m == 3:
        return ThetaCount(2, 2)
    if l1 == 1 and l2 == 2:
        return ThetaCount(3, 3)
    if l1 == 1:
        return ThetaCount(2, 4)
    if l1 == 2:
        return ThetaCount(3, 5)
    return ThetaCount(2, 6)


def theta_specs(max_vertices: int, min_paths: int = 2) -> list[ThetaSpec]:
    """Every valid spec (sorted lengths) with at most ``max_vertices`` vertices."""
    out: list[ThetaSpec] = []

    def rec(prefix: list[int], budget: int, lo: int) -> None:
        if len(prefix) >= min_paths:
            out.append(ThetaSpec(prefix))
        # a length-1 path costs no vertex, so only the first path may have length 1
        for length in range(lo, budget + 2):
            rec(prefix + [length], budget - (length - 1), max(length, 2))

    rec([], max_vertices - 2, 1)
    return out


def add_handle(G: Graph, u: int, v: int, length: int) -> Graph:
    """Join u and v by a new path with ``length - 1`` fresh internal vertices."""
    if u == v or u not in G or v not in G:
        raise GraphError(f"handle endpoints {u}, {v} must be distinct vertices")
    if length < 1 or (length == 1 and G.has_edge(u, v)):
        raise GraphError("handle length must be positive and keep the graph simple")
    base = max(G.vertices) + 1
    inner = list(range(base, base + length - 1))
    chain = [u, *inner, v]
    edges = G.edges() + list(zip(chain, chain[1:]))
    return Graph(list(G.vertices) + inner, edges)


def _good(G: Graph) -> bool:
    spec = recognize_theta(G)
    return spec is not None and spec.m >= 2 and 2 not in spec.lengths


def good_theta_for_theorem(G: Graph, orbit: Orbit | None = None) -> bool:
    """Some locally equivalent graph is a theta whose hubs have no common neighbor."""
    if orbit is None:
        orbit = local_orbit(G)
    return any(_good(g) for g in orbit.members)
