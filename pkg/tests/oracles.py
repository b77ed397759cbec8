"""Independent reference implementations used only by the tests.

None of these import the code paths they check: graphs come in as plain
vertex lists and edge sets, words as tuples of (name, sign).
"""
from __future__ import annotations

import itertools
from collections import deque


def adjacency(vertices, edges):
    adj = {v: set() for v in vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


# -- word problem by exhaustive rewriting ------------------------------------

def _moves(word, adj):
    """Words reachable by one swap of commuting neighbours or one cancellation."""
    for i in range(len(word) - 1):
        (x, s), (y, t) = word[i], word[i + 1]
        if x == y and s == -t:
            yield word[:i] + word[i + 2:]
        elif x != y and y in adj[x]:
            yield word[:i] + (word[i + 1], word[i]) + word[i + 2:]


def bfs_is_identity(word, adj) -> bool:
    """Search the swap/cancel closure of *word* for the empty word."""
    word = tuple(word)
    if not word:
        return True
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for nxt in _moves(w, adj):
            if not nxt:
                return True
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def bfs_equivalent(w1, w2, adj) -> bool:
    return bfs_is_identity(tuple(w1) + tuple((x, -s) for x, s in reversed(w2)), adj)


def all_words_identity_table(letters, adj, max_len):
    """Identity status for every word over *letters* up to *max_len*.

    Same closure as :func:`bfs_is_identity`, organised by length: swap classes
    are found with union-find, and a class is trivial iff one of its members
    cancels into a trivial word two letters shorter.
    """
    trivial = {(): True}
    for n in range(1, max_len + 1):
        words = list(itertools.product(letters, repeat=n))
        parent = {w: w for w in words}

        def find(w):
            while parent[w] != w:
                parent[w] = parent[parent[w]]
                w = parent[w]
            return w

        hits = set()
        for w in words:
            for i in range(n - 1):
                (x, s), (y, t) = w[i], w[i + 1]
                if x == y and s == -t:
                    if trivial[w[:i] + w[i + 2:]]:
                        hits.add(w)
                elif x != y and y in adj[x]:
                    other = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
                    ra, rb = find(w), find(other)
                    if ra != rb:
                        parent[ra] = rb
        good = {find(w) for w in hits}
        for w in words:
            trivial[w] = find(w) in good
    return trivial


# -- vertex preorder, classes and hyperedges ---------------------------------

def leq_table(vertices, edges):
    adj = adjacency(vertices, edges)
    return {(u, v): adj[u] <= adj[v] | {v} for u in vertices for v in vertices}


def classes_oracle(vertices, edges):
    table = leq_table(vertices, edges)
    out = []
    for u in vertices:
        cls = frozenset(v for v in vertices if table[u, v] and table[v, u])
        if cls not in out:
            out.append(cls)
    return out


def hyperedges_oracle(vertices, edges):
    """Levels and vertex sets by direct peeling of maximal classes.

    Returns ``{top_class: (level, vertex_set)}``.
    """
    table = leq_table(vertices, edges)
    classes = classes_oracle(vertices, edges)

    def less(c, d):
        u, v = next(iter(c)), next(iter(d))
        return c != d and table[u, v]

    remaining = list(classes)
    done = {}  # top -> (level, vertex set, classes)
    level = 0
    while remaining:
        level += 1
        maximal = [c for c in remaining if not any(less(c, d) for d in remaining)]
        for c in maximal:
            verts, cls = set(c), {c}
            for top, (lev, vs, cs) in list(done.items()):
                if all(less(c, d) for d in cs):
                    verts |= vs
                    cls |= cs
            done[c] = (level, frozenset(verts), frozenset(cls))
        remaining = [c for c in remaining if c not in maximal]
    return {top: (lev, vs) for top, (lev, vs, _) in done.items()}


def brute_symmetries(vertices, edges):
    es = {frozenset(e) for e in edges}
    out = []
    for perm in itertools.permutations(vertices):
        m = dict(zip(vertices, perm))
        if {frozenset((m[u], m[v])) for u, v in map(tuple, es)} == es:
            out.append(m)
    return out
