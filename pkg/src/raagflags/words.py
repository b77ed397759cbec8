"""Exact word arithmetic in the right-angled Artin group of a graph.

Internally a letter is an int: ``2*i`` is the i-th generator and ``2*i + 1``
its inverse, so integer order is the canonical letter order (vertex input
order, positive before negative). Normal forms are the lexicographically
least linearisation of the reduced trace.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Union

from .graph import GraphError, SimpleGraph


class Letter(NamedTuple):
    generator: str
    sign: int

    def __str__(self):
        return self.generator if self.sign > 0 else f"{self.generator}^-1"


Word = tuple  # tuple of Letter
WordLike = Union[str, Sequence[Letter], Sequence[tuple]]


class RAAG:
    """Word engine bound to one defining graph."""

    def __init__(self, g: SimpleGraph):
        self.graph = g
        self.names = g.vertices
        self.n = len(g)
        self.commute = [0] * self.n
        for i, v in enumerate(self.names):
            for w in g.neighbors(v):
                self.commute[i] |= 1 << g.index(w)
        self._balls: list[list[tuple[int, ...]]] = [[()]]

    # -- conversion --

    def letter(self, name: str, sign: int = 1) -> int:
        return 2 * self.graph.index(name) + (0 if sign > 0 else 1)

    def parse(self, text: str) -> tuple[int, ...]:
        out = []
        for tok in text.split():
            name, exp = tok, 1
            if "^" in tok:
                name, _, e = tok.rpartition("^")
                try:
                    exp = int(e)
                except ValueError:
                    raise GraphError(f"bad exponent in token {tok!r}") from None
                if exp == 0:
                    raise GraphError(f"zero exponent in token {tok!r}")
            x = self.letter(name, exp)
            out.extend([x] * abs(exp))
        return tuple(out)

    def encode(self, w: WordLike) -> tuple[int, ...]:
        if isinstance(w, str):
            return self.parse(w)
        return tuple(self.letter(gen, sign) for gen, sign in w)

    def decode(self, w: Iterable[int]) -> Word:
        return tuple(Letter(self.names[x >> 1], -1 if x & 1 else 1) for x in w)

    def format(self, w: Iterable[int]) -> str:
        return " ".join(self.names[x >> 1] + ("^-1" if x & 1 else "") for x in w)

    # -- arithmetic --

    def reduce(self, w: Iterable[int]) -> list[int]:
        """Cancel every pair ``x ... x^-1`` whose intervening letters commute with x."""
        out: list[int] = []
        commute = self.commute
        for x in w:
            g = x >> 1
            mask = commute[g]
            cancelled = False
            j = len(out) - 1
            while j >= 0:
                y = out[j]
                h = y >> 1
                if h == g:
                    if y == x ^ 1:
                        del out[j]
                        cancelled = True
                    break
                if not (mask >> h) & 1:
                    break
                j -= 1
            if not cancelled:
                out.append(x)
        return out

    def linearize(self, w: Sequence[int]) -> tuple[int, ...]:
        """Least linearisation of the dependence order of a reduced word."""
        n = len(w)
        if n < 2:
            return tuple(w)
        commute = self.commute
        preds = [0] * n
        for i in range(n):
            gi = w[i] >> 1
            mask = commute[gi]
            p = 0
            for j in range(i):
                gj = w[j] >> 1
                if gj == gi or not (mask >> gj) & 1:
                    p |= 1 << j
            preds[i] = p
        done = 0
        out = []
        for _ in range(n):
            best = -1
            for i in range(n):
                if (done >> i) & 1 or preds[i] & ~done:
                    continue
                if best < 0 or w[i] < w[best]:
                    best = i
            done |= 1 << best
            out.append(w[best])
        return tuple(out)

    def normal_form(self, w: Iterable[int]) -> tuple[int, ...]:
        return self.linearize(self.reduce(w))

    def inverse(self, w: Sequence[int]) -> tuple[int, ...]:
        return self.normal_form(x ^ 1 for x in reversed(w))

    def multiply(self, *ws: Sequence[int]) -> tuple[int, ...]:
        return self.normal_form(x for w in ws for x in w)

    def is_identity(self, w: Iterable[int]) -> bool:
        return not self.reduce(w)

    def exponent_sums(self, w: Iterable[int]) -> list[int]:
        out = [0] * self.n
        for x in w:
            out[x >> 1] += -1 if x & 1 else 1
        return out

    def ball(self, radius: int) -> list[tuple[int, ...]]:
        """Normal forms of length <= radius in (length, lexicographic) order."""
        while len(self._balls) <= radius:
            shell = set()
            for w in self._balls[-1]:
                for x in range(2 * self.n):
                    nf = self.normal_form(w + (x,))
                    if len(nf) == len(self._balls):
                        shell.add(nf)
            self._balls.append(sorted(shell))
        return [w for shell in self._balls[: radius + 1] for w in shell]


@functools.lru_cache(maxsize=256)
def raag(g: SimpleGraph) -> RAAG:
    return RAAG(g)


@dataclass(frozen=True)
class Conjugator:
    """A word found by a bounded search."""
    word: Word

    def __str__(self):
        return " ".join(map(str, self.word)) or "1"


@dataclass(frozen=True)
class NotWithinRadius:
    """Bounded search exhausted; this is not a proof of non-existence."""
    radius: int


def parse_word(g: SimpleGraph, text: str) -> Word:
    R = raag(g)
    return R.decode(R.parse(text))


def format_word(w: Iterable[Letter]) -> str:
    return " ".join(str(Letter(*x)) for x in w)


def normal_form(g: SimpleGraph, w: WordLike) -> Word:
    R = raag(g)
    return R.decode(R.normal_form(R.encode(w)))


def is_identity(g: SimpleGraph, w: WordLike) -> bool:
    R = raag(g)
    return R.is_identity(R.encode(w))


def multiply(g: SimpleGraph, w1: WordLike, w2: WordLike) -> Word:
    R = raag(g)
    return R.decode(R.multiply(R.encode(w1), R.encode(w2)))


def invert(g: SimpleGraph, w: WordLike) -> Word:
    R = raag(g)
    return R.decode(R.inverse(R.encode(w)))


def conjugacy_search(g: SimpleGraph, w1: WordLike, w2: WordLike, radius: int):
    """First ``c`` (by length, then lexicographically) with ``c w1 c^-1 = w2``."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    R = raag(g)
    a, b = R.encode(w1), R.encode(w2)
    b_inv = tuple(x ^ 1 for x in reversed(b))
    for c in R.ball(radius):
        c_inv = tuple(x ^ 1 for x in reversed(c))
        if R.is_identity(c + a + c_inv + b_inv):
            return Conjugator(R.decode(c))
    return NotWithinRadius(radius)
