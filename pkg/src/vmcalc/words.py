"""Double occurrence words, their interlacement graphs, and chord-diagram multigraphs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from string import ascii_lowercase
from typing import Iterable, Sequence

import numpy as np

from vmcalc.equivalence import local_orbit
from vmcalc.graph import Graph, is_bipartite


class WordError(ValueError):
    pass


@dataclass(frozen=True)
class DoubleOccurrenceWord:
    letters: tuple[str, ...]

    def __init__(self, letters: Iterable[str]):
        letters = tuple(letters)
        counts = Counter(letters)
        bad = sorted(c for c, k in counts.items() if k != 2)
        if bad:
            raise WordError(f"letters not occurring exactly twice: {bad}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str) -> DoubleOccurrenceWord:
        text = text.strip()
        if not text or not all(c in ascii_lowercase for c in text):
            raise WordError(f"word literal must be lowercase letters, got {text!r}")
        return cls(text)

    def __str__(self) -> str:
        return "".join(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def alphabet(self) -> tuple[str, ...]:
        return tuple(sorted(set(self.letters)))

    def vertex_id(self) -> dict[str, int]:
        return {c: i for i, c in enumerate(self.alphabet)}

    def positions(self, v: str) -> tuple[int, int]:
        p = [i for i, c in enumerate(self.letters) if c == v]
        if not p:
            raise WordError(f"letter {v!r} does not occur")
        return p[0], p[1]


def interlacement_graph(m: DoubleOccurrenceWord) -> Graph:
    """A(m): letters adjacent iff they alternate; letter ids follow sorted order."""
    ids = m.vertex_id()
    pos = {c: m.positions(c) for c in ids}
    edges = []
    for a in ids:
        pa, qa = pos[a]
        for b in ids:
            if ids[a] < ids[b]:
                pb, qb = pos[b]
                if (pa < pb < qa) != (pa < qb < qa):
                    edges.append((ids[a], ids[b]))
    return Graph(range(len(ids)), edges)


def word_local_complement(m: DoubleOccurrenceWord, v: str) -> DoubleOccurrenceWord:
    """m*v: reverse the subword strictly between the two occurrences of v."""
    p, q = m.positions(v)
    s = m.letters
    return DoubleOccurrenceWord(s[: p + 1] + s[p + 1 : q][::-1] + s[q:])


# ---------------------------------------------------------------------------
# multigraphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Multigraph:
    """Loops and parallel edges allowed; edges kept as a sorted tuple of pairs."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]]):
        vs = tuple(sorted(set(vertices)))
        es = tuple(sorted((min(u, v), max(u, v)) for u, v in edges))
        known = set(vs)
        for u, v in es:
            if u not in known or v not in known:
                raise WordError(f"edge ({u}, {v}) uses unknown vertices")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)

    @classmethod
    def from_graph(cls, G: Graph) -> Multigraph:
        return cls(G.vertices, G.edges())

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w in self.edges)

    def degrees(self) -> dict[int, int]:
        return {v: self.degree(v) for v in self.vertices}

    def multiplicity(self) -> Counter:
        return Counter(self.edges)


def chord_diagram(m: DoubleOccurrenceWord) -> Multigraph:
    """D(m): circle positions as vertices, circle segments plus one chord per letter."""
    n = len(m)
    segments = [(i, (i + 1) % n) for i in range(n)]
    chords = [m.positions(c) for c in m.alphabet]
    return Multigraph(range(n), segments + chords)


def contract_chords(m: DoubleOccurrenceWord) -> Multigraph:
    """T(m): D(m) with every chord contracted, so each letter becomes one vertex."""
    ids = m.vertex_id()
    s = m.letters
    n = len(s)
    return Multigraph(ids.values(), [(ids[s[i]], ids[s[(i + 1) % n]]) for i in range(n)])


def _letters(k: int) -> str:
    if k > len(ascii_lowercase):
        raise WordError("at most 26 letters")
    return ascii_lowercase[:k]


def canonical_cycle_word(k: int) -> DoubleOccurrenceWord:
    """m_k: letter i sits at circle positions 2i and 2i+3 (mod 2k), so A(m_k) = C_k."""
    if k < 4:
        raise WordError("m_k needs k >= 4")
    names = _letters(k)
    slots = [""] * (2 * k)
    for i in range(k):
        slots[2 * i] = names[i]
        slots[(2 * i + 3) % (2 * k)] = names[i]
    m = DoubleOccurrenceWord(slots)
    if interlacement_graph(m) != Graph.cycle(k):  # pragma: no cover - self-test
        raise AssertionError(f"m_{k} does not realise C_{k}")
    return m


def square_of_cycle(k: int) -> Graph:
    if k < 3:
        raise WordError("C_k^2 needs k >= 3")
    edges = {(min(i, (i + d) % k), max(i, (i + d) % k)) for i in range(k) for d in (1, 2)}
    return Graph(range(k), [e for e in edges if e[0] != e[1]])


def multigraph_isomorphic(A: Multigraph, B: Multigraph) -> bool:
    """Brute-force search over degree-respecting bijections (small graphs only)."""
    if len(A.vertices) != len(B.vertices) or len(A.edges) != len(B.edges):
        return False
    da, db = A.degrees(), B.degrees()
    if sorted(da.values()) != sorted(db.values()):
        return False
    target = B.multiplicity()
    av, bv = A.vertices, B.vertices
    for perm in permutations(bv):
        if any(da[a] != db[b] for a, b in zip(av, perm)):
            continue
        f = dict(zip(av, perm))
        img = Counter((min(f[u], f[v]), max(f[u], f[v])) for u, v in A.edges)
        if img == target:
            return True
    return False


def verify_odd_cycle_lemma(k: int) -> bool:
    """No graph locally equivalent to C_k (k odd, k >= 5) is bipartite."""
    if k < 5 or k % 2 == 0:
        raise WordError("k must be odd and at least 5")
    return not any(is_bipartite(g) for g in local_orbit(Graph.cycle(k)).members)


# ---------------------------------------------------------------------------
# batch routes for exhaustive checks
# ---------------------------------------------------------------------------


def all_words(k: int) -> np.ndarray:
    """Every word on letters 0..k-1 whose first occurrences appear in order.

    Each row is one word of length 2k; this enumerates every double
    occurrence word with k letters up to renaming.
    """
    n = 2 * k
    words = np.full((1, n), -1, dtype=np.int8)
    for letter in range(k):
        free = words < 0
        first = free.argmax(axis=1)
        rows = np.arange(len(words))
        words[rows, first] = letter
        free[rows, first] = False
        out = []
        for j in range(n):
            sel = free[:, j] & (j > first)
            if sel.any():
                w = words[sel].copy()
                w[:, j] = letter
                out.append(w)
        words = np.concatenate(out) if out else words
    return words


def _batch_positions(words: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    """First and second positions of every letter, each shaped (k, N)."""
    N, n = words.shape
    cols = np.arange(N)
    first = np.empty((k, N), dtype=np.int32)
    last = np.empty((k, N), dtype=np.int32)
    for t in range(n):
        last[words[:, t], cols] = t
    for t in range(n - 1, -1, -1):
        first[words[:, t], cols] = t
    return first, last


def batch_interlacement(words: np.ndarray, k: int) -> np.ndarray:
    """Adjacency rows (N, k) as uint16 bitmasks of A(m) for every word.

    With span(a) the positions strictly between the two a's and occ(b) the
    two positions of b, a and b alternate iff span(a) holds exactly one of them.
    """
    p, q = _batch_positions(words, k)
    one = np.int32(1)
    occ = (one << p) | (one << q)
    span = (one << q) - (one << (p + 1))
    rows = [np.zeros(len(words), dtype=np.uint16) for _ in range(k)]
    for a in range(k):
        for b in range(a + 1, k):
            hit = span[a] & occ[b]
            adj = ((hit != 0) & (hit != occ[b])).astype(np.uint16)
            rows[a] |= adj << b
            rows[b] |= adj << a
    return np.stack(rows, axis=1) if rows else np.zeros((len(words), 0), dtype=np.uint16)


def batch_word_local_complement(words: np.ndarray, k: int, v: int) -> np.ndarray:
    first, last = _batch_positions(words, k)
    p = first[v][:, None]
    q = last[v][:, None]
    t = np.arange(words.shape[1])[None, :]
    idx = np.where((t > p) & (t < q), p + q - t, t)
    return np.take_along_axis(words, idx, axis=1)


def batch_local_complement(rows: np.ndarray, v: int) -> np.ndarray:
    nv = rows[:, v]
    out = rows.copy()
    for u in range(rows.shape[1]):
        hit = ((nv >> u) & 1).astype(bool)
        out[hit, u] ^= nv[hit] & ~np.uint16(1 << u)
    return out


def batch_contracted_edges(words: np.ndarray, k: int) -> np.ndarray:
    """(N, k*k) edge multiplicities of T(m), indexed by min*k + max."""
    nxt = np.roll(words, -1, axis=1)
    lo = np.minimum(words, nxt).astype(np.int64)
    hi = np.maximum(words, nxt).astype(np.int64)
    codes = lo * k + hi + (np.arange(len(words)) * k * k)[:, None]
    counts = np.bincount(codes.ravel(), minlength=len(words) * k * k)
    return counts.reshape(len(words), k * k)


def row_words(words: np.ndarray) -> list[DoubleOccurrenceWord]:
    names = ascii_lowercase
    return [DoubleOccurrenceWord(names[c] for c in row) for row in words]


def check_word_commutation(k: int, words: np.ndarray | None = None) -> list[tuple[str, str]]:
    """All (word, letter) with A(m*v) != A(m)*v among words with k letters."""
    if words is None:
        words = all_words(k)
    base = batch_interlacement(words, k)
    bad: list[tuple[str, str]] = []
    for v in range(k):
        lhs = batch_interlacement(batch_word_local_complement(words, k, v), k)
        rhs = batch_local_complement(base, v)
        for i in np.nonzero((lhs != rhs).any(axis=1))[0]:
            bad.append(("".join(ascii_lowercase[c] for c in words[i]), ascii_lowercase[v]))
    return bad


def check_contraction_invariance(k: int, words: np.ndarray | None = None) -> list[tuple[str, str]]:
    """All (word, letter) with T(m*v) != T(m) as edge multisets."""
    if words is None:
        words = all_words(k)
    base = batch_contracted_edges(words, k)
    bad: list[tuple[str, str]] = []
    for v in range(k):
        other = batch_contracted_edges(batch_word_local_complement(words, k, v), k)
        for i in np.nonzero((other != base).any(axis=1))[0]:
            bad.append(("".join(ascii_lowercase[c] for c in words[i]), ascii_lowercase[v]))
    return bad

