"""Labeled graph enumeration by edge code, with numpy batch versions of the
primality test and the three vertex reductions.

A graph on vertices 0..n-1 is encoded by the integer whose bit e is set when
the e-th pair (i, j), i < j, in lexicographic order is an edge.  Batches are
held "vertex-major": an (n, N) uint16 array whose row v holds the neighbor
masks of v across N graphs.
"""

from __future__ import annotations

import os
from functools import lru_cache
from itertools import combinations
from typing import Iterator

import numpy as np

from vmcalc.graph import Graph

HARD_MAX_N = 7
DEDUP_MAX_N = 8
CHUNK = 1 << 18


class BoundsError(ValueError):
    pass


def max_n(dedup: bool = False) -> int:
    env = os.environ.get("VMCALC_MAX_N")
    if env:
        return int(env)
    return DEDUP_MAX_N if dedup else HARD_MAX_N


def check_bounds(n_min: int, n_max: int, dedup: bool = False) -> None:
    if n_min < 1 or n_max < n_min:
        raise BoundsError(f"bad range {n_min}..{n_max}")
    limit = max_n(dedup)
    if n_max > limit:
        hint = "" if dedup else " (n = 8 needs --dedup-orbits)"
        raise BoundsError(f"n = {n_max} exceeds the exhaustive bound {limit}{hint}")


@lru_cache(maxsize=None)
def pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


def graph_code(G: Graph) -> int:
    if G.vertices != tuple(range(G.n)):
        raise ValueError("edge codes need vertices 0..n-1")
    code = 0
    for e, (i, j) in enumerate(pairs(G.n)):
        if G.has_edge(i, j):
            code |= 1 << e
    return code


def graph_from_code(n: int, code: int) -> Graph:
    return Graph(range(n), [p for e, p in enumerate(pairs(n)) if (code >> e) & 1])


def rows_from_codes(n: int, codes: np.ndarray) -> np.ndarray:
    codes = np.asarray(codes, dtype=np.int64)
    rows = np.zeros((n, len(codes)), dtype=np.uint16)
    for e, (i, j) in enumerate(pairs(n)):
        bit = ((codes >> e) & 1).astype(np.uint16)
        rows[i] |= bit << j
        rows[j] |= bit << i
    return rows


def codes_from_rows(rows: np.ndarray) -> np.ndarray:
    n = rows.shape[0]
    codes = np.zeros(rows.shape[1], dtype=np.int64)
    for e, (i, j) in enumerate(pairs(n)):
        codes |= ((rows[i] >> j) & 1).astype(np.int64) << e
    return codes


def iter_code_chunks(n: int, chunk: int = CHUNK) -> Iterator[np.ndarray]:
    total = 1 << len(pairs(n))
    for start in range(0, total, chunk):
        yield np.arange(start, min(total, start + chunk), dtype=np.int64)


# ---------------------------------------------------------------------------
# batch predicates
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _split_sides(n: int) -> tuple[int, ...]:
    """One side of every bipartition with both sides >= 2, containing vertex 0."""
    full = (1 << n) - 1
    out = []
    for x in range(1, full, 2):
        k = bin(x).count("1")
        if 2 <= k <= n - 2:
            out.append(x)
    return tuple(out)


def batch_is_prime(rows: np.ndarray) -> np.ndarray:
    """No bipartition with both sides >= 2 has cut-rank <= 1.

    Cut-rank <= 1 means every nonzero cross row equals their union.
    """
    n, N = rows.shape
    prime = np.ones(N, dtype=bool)
    full = (1 << n) - 1
    for x in _split_sides(n):
        comp = np.uint16(full & ~x)
        cross = [rows[v] & comp for v in range(n) if (x >> v) & 1]
        union = cross[0].copy()
        for r in cross[1:]:
            union |= r
        low = np.ones(N, dtype=bool)
        for r in cross:
            low &= (r == 0) | (r == union)
        prime &= ~low
    return prime


def batch_is_bipartite(rows: np.ndarray) -> np.ndarray:
    """Some colour class X (containing vertex 0) makes X and V - X independent."""
    n, N = rows.shape
    full = (1 << n) - 1
    ok = np.zeros(N, dtype=bool)
    for x in range(1, full + 1, 2):
        good = np.ones(N, dtype=bool)
        for v in range(n):
            side = x if (x >> v) & 1 else full & ~x
            good &= (rows[v] & np.uint16(side)) == 0
        ok |= good
    return ok


def batch_degrees(rows: np.ndarray) -> np.ndarray:
    n = rows.shape[0]
    deg = np.zeros(rows.shape, dtype=np.int8)
    for u in range(n):
        deg += ((rows >> u) & 1).astype(np.int8)
    return deg


def batch_local_complement(rows: np.ndarray, v: np.ndarray | int) -> np.ndarray:
    """Local complementation at v (one vertex, or one vertex per graph)."""
    n, N = rows.shape
    if np.isscalar(v):
        nv = rows[int(v)]
    else:
        nv = rows[np.asarray(v), np.arange(N)]
    out = rows.copy()
    for u in range(n):
        hit = ((nv >> u) & 1).astype(np.uint16)
        out[u] ^= (nv & np.uint16(~(1 << u) & 0xFFFF)) * hit
    return out


def batch_delete(rows: np.ndarray, v: int) -> np.ndarray:
    """Delete vertex v and relabel the rest to 0..n-2."""
    n = rows.shape[0]
    low = np.uint16((1 << v) - 1)
    keep = [u for u in range(n) if u != v]
    out = np.empty((n - 1, rows.shape[1]), dtype=np.uint16)
    for i, u in enumerate(keep):
        r = rows[u]
        out[i] = (r & low) | ((r >> (v + 1)) << v)
    return out


def _least_neighbor(mask: np.ndarray) -> np.ndarray:
    low = mask & (~mask + np.uint16(1))
    out = np.zeros(mask.shape, dtype=np.int64)
    for b in range(16):
        out[low == (1 << b)] = b
    return out


@lru_cache(maxsize=None)
def prime_table(n: int) -> np.ndarray:
    """Primality of every labeled graph on n vertices, indexed by edge code."""
    if len(pairs(n)) > 21:
        raise BoundsError("prime tables are only built up to 7 vertices")
    parts = [batch_is_prime(rows_from_codes(n, c)) for c in iter_code_chunks(n)]
    return np.concatenate(parts) if parts else np.ones(1, dtype=bool)


def batch_reductions(rows: np.ndarray, v: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Primality of G minus v, G*v minus v and G/v for every graph in the batch.

    G/v pivots on the least neighbor w (as G*v*w*v) and deletes v; an
    isolated v gives G minus v.
    """
    n = rows.shape[0]
    table = prime_table(n - 1)
    d = table[codes_from_rows(batch_delete(rows, v))]
    lv = batch_local_complement(rows, v)
    s = table[codes_from_rows(batch_delete(lv, v))]
    nv = rows[v]
    has = nv != 0
    w = _least_neighbor(nv)
    pv = batch_local_complement(batch_local_complement(lv, w), v)
    c = table[codes_from_rows(batch_delete(pv, v))]
    c = np.where(has, c, d)
    return d, s, c
