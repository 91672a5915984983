"""
The set Z of subwords of rotations of the reduced word of rho_{2n}.

An element of C_n^(1) is a Z when one of its reduced words embeds in a cyclic
rotation of ``1 2 ... n ... 1 0``.  Those rotations are exactly the saturated
words ``N_{k,k-1}`` and their reversals, so membership can be read either way;
both readings are implemented and cross-checked in the tests.

>>> rho(2, 4).word_str(), rho(3, 3).word_str()
('1210', '210')
>>> z = build_zee(2)
>>> [len(z.layer(r)) for r in range(5)]
[1, 3, 5, 6, 4]
>>> lee_partition(2, from_word(2, "0210"))
(3, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .cartan import type_c_affine
from .weyl import (
    WeylElement, covers_below, format_word, from_word, identity, is_grassmannian,
    reduced_words,
)

__all__ = [
    "Support", "ZeeIndex", "rho", "rho_word", "rotation_words", "n_word", "reverse_n_word",
    "is_n_word", "is_reverse_n_word", "is_z_word", "peaks", "valleys", "is_v_word",
    "is_lambda_word", "is_proper", "build_zee", "zee_words", "components",
    "support_of_word", "in_partitions_c", "partitions_c", "lee_partition",
    "partition_to_grassmannian", "zee_covers", "check_prop_p2",
]

Word = tuple[int, ...]
Partition = tuple[int, ...]


def rho_word(n: int, i: int) -> Word:
    if not 1 <= i <= 2 * n:
        raise ValueError(f"rho index {i} outside 1..{2 * n}")
    if i <= n:
        return tuple(range(i - 1, -1, -1))
    return tuple(range(2 * n + 1 - i, n)) + (n,) + tuple(range(n - 1, -1, -1))


def rho(n: int, i: int) -> WeylElement:
    return from_word(n, rho_word(n, i))


def rotation_words(n: int) -> list[Word]:
    base = rho_word(n, 2 * n)
    return [base[k:] + base[:k] for k in range(len(base))]


def n_word(n: int, k: int) -> Word:
    """The saturated N_{k,k-1} = k (k+1) ... n ... 1 0 1 ... (k-1)."""
    return tuple(range(k, n)) + (n,) + tuple(range(n - 1, 0, -1)) + (0,) + tuple(range(1, k))


def reverse_n_word(n: int, k: int) -> Word:
    """The saturated reverse N_{k-1,k} = (k-1) ... 1 0 1 ... n ... k."""
    return tuple(range(k - 1, 0, -1)) + (0,) + tuple(range(1, n)) + (n,) + tuple(range(n - 1, k - 1, -1))


def _is_subword(u: Sequence[int], big: Sequence[int]) -> bool:
    it = iter(big)
    return all(any(x == y for y in it) for x in u)


def is_n_word(n: int, u: Sequence[int]) -> bool:
    return any(_is_subword(u, n_word(n, k)) for k in range(1, n + 1))


def is_reverse_n_word(n: int, u: Sequence[int]) -> bool:
    return any(_is_subword(u, reverse_n_word(n, k)) for k in range(1, n + 1))


def is_z_word(n: int, u: Sequence[int]) -> bool:
    return is_n_word(n, u) or is_reverse_n_word(n, u)


def is_proper(n: int, u: Sequence[int]) -> bool:
    return 0 in u and n in u


def peaks(u: Sequence[int]) -> list[int]:
    """Positions (0-based) of peaks, with the boundary conventions for the ends."""
    m = len(u)
    if m == 1:
        return [0]
    out = []
    for p in range(m):
        left = p == 0 or u[p - 1] < u[p]
        right = p == m - 1 or u[p] > u[p + 1]
        if left and right:
            out.append(p)
    return out


def valleys(u: Sequence[int]) -> list[int]:
    return peaks([-x for x in u])


def is_v_word(u: Sequence[int]) -> bool:
    return not u or len(valleys(u)) == 1


def is_lambda_word(u: Sequence[int]) -> bool:
    return not u or len(peaks(u)) == 1


@dataclass(frozen=True)
class Support:
    support: frozenset[int]
    intervals: tuple[tuple[int, ...], ...]

    @property
    def c(self) -> int:
        return len(self.intervals)


def support_of_word(u: Sequence[int]) -> Support:
    letters = sorted(set(u))
    intervals: list[list[int]] = []
    for x in letters:
        if intervals and intervals[-1][-1] == x - 1:
            intervals[-1].append(x)
        else:
            intervals.append([x])
    return Support(frozenset(letters), tuple(tuple(iv) for iv in intervals))


def components(w: WeylElement) -> Support:
    return support_of_word(w.word)


@dataclass
class ZeeIndex:
    n: int
    layers: dict[int, tuple[WeylElement, ...]]

    def __post_init__(self):
        self._c = {w: components(w).c for layer in self.layers.values() for w in layer}

    def __contains__(self, w: WeylElement) -> bool:
        return w in self._c

    def __iter__(self):
        for r in sorted(self.layers):
            yield from self.layers[r]

    def layer(self, r: int) -> tuple[WeylElement, ...]:
        return self.layers.get(r, ())

    def c(self, w: WeylElement) -> int:
        return self._c[w]

    def grassmannian(self, r: int) -> list[WeylElement]:
        return [w for w in self.layer(r) if is_grassmannian(w)]


@lru_cache(maxsize=None)
def build_zee(n: int) -> ZeeIndex:
    """All reduced subwords of all rotations, graded by length."""
    type_c_affine(n)
    found: dict[WeylElement, None] = {}
    for rot in rotation_words(n):
        for k in range(len(rot) + 1):
            for pos in combinations(range(len(rot)), k):
                w = from_word(n, [rot[p] for p in pos])
                if w.length == k:
                    found.setdefault(w, None)
    layers: dict[int, list[WeylElement]] = {}
    for w in found:
        layers.setdefault(w.length, []).append(w)
    return ZeeIndex(n, {r: tuple(sorted(ws)) for r, ws in sorted(layers.items())})


def zee_words(n: int, w: WeylElement) -> frozenset[Word]:
    """Reduced words of w that are N or reverse N words."""
    out = frozenset(u for u in reduced_words(w) if is_z_word(n, u))
    if not out:
        raise ValueError(f"{format_word(n, w.word)} is not in Z")
    return out


def in_partitions_c(n: int, lam: Sequence[int]) -> bool:
    lam = tuple(lam)
    if any(x <= 0 for x in lam) or list(lam) != sorted(lam, reverse=True):
        return False
    if lam and lam[0] > 2 * n:
        return False
    small = [x for x in lam if x <= n]
    return len(small) == len(set(small))


def partitions_c(n: int, size: int) -> list[Partition]:
    """Partitions of ``size`` with parts <= 2n, parts <= n appearing at most once."""
    out = []

    def rec(rest: int, top: int, acc: list[int]):
        if rest == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rest, top), 0, -1):
            if p <= n and acc and acc[-1] == p:
                continue
            acc.append(p)
            rec(rest - p, p if p > n else p - 1, acc)
            acc.pop()

    rec(size, 2 * n, [])
    return out


def lee_partition(n: int, w: WeylElement) -> Partition:
    """lambda(w) from the greedy factorization w = rho_{l_k} ... rho_{l_1}.

    At each step the rightmost factor is the longest rho_r that can be peeled
    off length-subtractively while leaving a Grassmannian element.
    """
    if not is_grassmannian(w):
        raise ValueError("lee_partition needs a Grassmannian element")
    parts = []
    x = w
    while x.length:
        for r in range(min(2 * n, x.length), 0, -1):
            y = x.strip_suffix(rho_word(n, r))
            if y is not None and is_grassmannian(y):
                parts.append(r)
                x = y
                break
        else:
            raise AssertionError(f"no rho factor peels off {x!r}")
    lam = tuple(parts)
    if not in_partitions_c(n, lam):
        raise AssertionError(f"factorization {lam} is not a partition of the expected kind")
    return lam


def partition_to_grassmannian(n: int, lam: Sequence[int]) -> WeylElement:
    lam = tuple(lam)
    if not in_partitions_c(n, lam):
        raise ValueError(f"{lam} is not a valid partition for n={n}")
    x = identity(n)
    for part in reversed(lam):
        x = x.mul_word_additive(rho_word(n, part))
        if x is None or not is_grassmannian(x):
            raise AssertionError(f"rho product for {lam} is not length-additive Grassmannian")
    return x


def zee_covers(n: int, v: WeylElement) -> list[tuple[WeylElement, tuple[int, ...]]]:
    """Pairs ``(w, alpha_vw^vee)`` over the covers w of v that lie in Z."""
    z = build_zee(n)
    if v not in z:
        raise ValueError(f"{v!r} is not in Z")
    out = []
    for w in z.layer(v.length + 1):
        for u, mu in covers_below(w):
            if u == v:
                out.append((w, mu))
    return out


def check_prop_p2(n: int, v: WeylElement) -> bool:
    """Whether sum over Z-covers w of 2^(c(w)-1) alpha_vw^vee equals 2^c(v) K."""
    z = build_zee(n)
    if v not in z:
        raise ValueError(f"{v!r} is not in Z")
    if v.length >= 2 * n:
        raise ValueError("needs length below 2n")
    total = [0] * (n + 1)
    for w, mu in zee_covers(n, v):
        weight = 2 ** (z.c(w) - 1)
        for i, x in enumerate(mu):
            total[i] += weight * x
    target = 2 ** z.c(v)
    return all(x == target * k for x, k in zip(total, type_c_affine(n).central_element))
