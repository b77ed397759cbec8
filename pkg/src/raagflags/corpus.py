"""Connected graphs on n vertices up to isomorphism, cached on disk.

Every edge subset is reduced to a canonical code (minimum over all vertex
permutations of the permuted edge bitmask); numpy does the permutation sweep.
"""
from __future__ import annotations

import itertools
import json
import logging
import os
from pathlib import Path

import numpy as np

from .graph import SimpleGraph, is_connected

log = logging.getLogger(__name__)

LABELS = "abcdefghij"
MAX_N = 7


def cache_dir() -> Path:
    root = os.environ.get("RAAG_CACHE_DIR")
    if root:
        return Path(root)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "raagflags"


def _pairs(n):
    return list(itertools.combinations(range(n), 2))


def canonical_codes(n: int) -> np.ndarray:
    """Sorted unique canonical codes of all graphs on ``n`` labelled vertices."""
    pairs = _pairs(n)
    m = len(pairs)
    if m == 0:
        return np.zeros(1, dtype=np.int64)
    index = {p: k for k, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    # weights[e, p] = bit that edge e lands on under permutation p
    weights = np.empty((m, len(perms)), dtype=np.int64)
    for j, p in enumerate(perms):
        for k, (u, v) in enumerate(pairs):
            a, b = sorted((p[u], p[v]))
            weights[k, j] = 1 << index[(a, b)]
    subsets = np.arange(1 << m, dtype=np.int64)
    bits = ((subsets[:, None] >> np.arange(m)) & 1).astype(np.int64)
    best = np.full(1 << m, np.iinfo(np.int64).max, dtype=np.int64)
    for start in range(0, len(perms), 64):
        codes = bits @ weights[:, start:start + 64]
        np.minimum(best, codes.min(axis=1), out=best)
    return np.unique(best)


def graph_from_code(n: int, code: int) -> SimpleGraph:
    verts = tuple(LABELS[:n])
    edges = [(verts[u], verts[v]) for k, (u, v) in enumerate(_pairs(n)) if (code >> k) & 1]
    return SimpleGraph(verts, frozenset(frozenset(e) for e in edges))


def connected_graphs(n: int, use_cache: bool = True) -> list[SimpleGraph]:
    """Connected graphs on *n* vertices, one per isomorphism class, in code order."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"corpus size must be between 1 and {MAX_N}")
    path = cache_dir() / f"connected_n{n}.json"
    codes = None
    if use_cache and path.exists():
        try:
            codes = json.loads(path.read_text())["codes"]
        except (OSError, ValueError, KeyError):
            log.warning("ignoring unreadable corpus cache %s", path)
    if codes is None:
        codes = [int(c) for c in canonical_codes(n) if is_connected(graph_from_code(n, int(c)))]
        if use_cache:
            try:
                path.parent.mkdir(parents=True, exist_ok=True)
                path.write_text(json.dumps({"n": n, "codes": codes}))
            except OSError:
                log.warning("could not write corpus cache %s", path)
    return [graph_from_code(n, c) for c in codes]


def corpus(min_n: int = 3, max_n: int = 6, use_cache: bool = True) -> list[SimpleGraph]:
    out = []
    for n in range(min_n, max_n + 1):
        out.extend(connected_graphs(n, use_cache))
    return out


def graph_name(g: SimpleGraph) -> str:
    """Stable identifier: vertex count plus the sorted edge list."""
    return f"n{len(g)}:" + ",".join(u + v for u, v in g.sorted_edges())
