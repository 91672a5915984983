"""
Closed formula for the coproduct of ``A_w`` evaluated at zero.

Fix a reduced word ``v`` of ``w``.  A tuple ``[v1, ..., vk]`` of embedded
subwords of ``v`` contributes when each ``vi`` has at least two letters and
avoids the first letters of the earlier ``vj``, the last letters ``y`` occur in
increasing positions, and no first letter is a last letter.  Each tuple
weights the splittings of the leftover letters into two complementary subwords,
with the ``y`` letters appended to both sides.

Everything is positional: two tuples using the same letter values at
different positions are different tuples.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations
from typing import Sequence

from .cartan import CartanData, type_c_affine
from .nilcoxeter import NilCoxElem, pp_generator
from .weyl import WeylElement, identity, reduced_words

__all__ = [
    "b_coefficient", "subword_tuples", "phi0_delta_closed", "phi0_delta_of",
    "tensor_of_products", "verify_t_phip", "swap",
]

Tensor = dict[tuple[WeylElement, WeylElement], int]


def b_coefficient(data: CartanData, u: Sequence[int]) -> int:
    """Product of -a[u_i][u_{i+1}] over consecutive letters."""
    out = 1
    for p, q in zip(u, u[1:]):
        out *= -data.a[p][q]
    return out


def subword_tuples(data: CartanData, v: Sequence[int]) -> Iterator[tuple[tuple[tuple[int, ...], ...], int]]:
    """Yield ``(tuple of position tuples, b weight)`` for every admissible tuple.

    Tuples with zero weight are skipped.
    """
    L = len(v)
    a = data.a

    def chains(start: int, blocked: frozenset[int]) -> Iterator[tuple[tuple[int, ...], int]]:
        # subwords beginning at ``start`` with nonzero b, length >= 2
        def grow(path: list[int], weight: int):
            last = path[-1]
            for q in range(last + 1, L):
                if q in blocked:
                    continue
                b = -a[v[last]][v[q]]
                if b:
                    path.append(q)
                    yield tuple(path), weight * b
                    yield from grow(path, weight * b)
                    path.pop()

        yield from grow([start], 1)

    def rec(xs: frozenset[int], ys: tuple[int, ...], acc: list, weight: int):
        yield tuple(acc), weight
        last_y = ys[-1] if ys else -1
        for x in range(L):
            if x in xs or x in ys:
                continue
            for sub, b in chains(x, xs):
                y = sub[-1]
                if y <= last_y:
                    continue
                acc.append(sub)
                yield from rec(xs | {x}, ys + (y,), acc, weight * b)
                acc.pop()

    yield from rec(frozenset(), (), [], 1)


def _element(n: int, v: Sequence[int], positions: Sequence[int]) -> WeylElement | None:
    return identity(n).mul_word_additive(v[p] for p in positions)


def phi0_delta_closed(n: int, w: WeylElement, word: Sequence[int] | None = None) -> Tensor:
    """The evaluated coproduct of A_w as a map (left, right) -> integer."""
    data = type_c_affine(n)
    v = tuple(min(reduced_words(w)) if word is None else word)
    if len(v) != w.length:
        raise ValueError("word is not reduced for w")
    out: Tensor = {}
    cache: dict[tuple[int, ...], WeylElement | None] = {}

    def elem(pos: tuple[int, ...]):
        if pos not in cache:
            cache[pos] = _element(n, v, pos)
        return cache[pos]

    for tup, weight in subword_tuples(data, v):
        xs = {sub[0] for sub in tup}
        ys = {sub[-1] for sub in tup}
        rest = [p for p in range(len(v)) if p not in xs and p not in ys]
        for k in range(len(rest) + 1):
            for u in combinations(rest, k):
                left = elem(tuple(sorted(set(u) | ys)))
                if left is None:
                    continue
                right = elem(tuple(sorted((set(rest) - set(u)) | ys)))
                if right is None:
                    continue
                key = (left, right)
                out[key] = out.get(key, 0) + weight
    return {k: c for k, c in sorted(out.items()) if c}


def phi0_delta_of(a: NilCoxElem) -> Tensor:
    """Extend the closed formula linearly over a nilCoxeter element."""
    out: Tensor = {}
    for w, c in a:
        for key, d in phi0_delta_closed(a.n, w).items():
            out[key] = out.get(key, 0) + c * d
    return {k: x for k, x in sorted(out.items()) if x}


def tensor_of_products(pairs: Sequence[tuple[int, NilCoxElem, NilCoxElem]]) -> Tensor:
    out: Tensor = {}
    for k, left, right in pairs:
        for u, c in left:
            for v, d in right:
                out[(u, v)] = out.get((u, v), 0) + k * c * d
    return {key: x for key, x in sorted(out.items()) if x}


def swap(t: Tensor) -> Tensor:
    return dict(sorted(((v, u), c) for (u, v), c in t.items()))


def verify_t_phip(n: int, r: int) -> bool:
    """Check the coproduct of the r-th special generator.

    It should equal ``1 (x) P_r + P_r (x) 1 + 2 sum_{0<s<r} P_s (x) P_{r-s}``.
    """
    if not 1 <= r <= 2 * n:
        raise ValueError(f"r must lie in 1..{2 * n}")
    one = NilCoxElem.one(n)
    p = {s: pp_generator(n, s) for s in range(1, r + 1)}
    pairs = [(1, one, p[r]), (1, p[r], one)]
    pairs += [(2, p[s], p[r - s]) for s in range(1, r)]
    return phi0_delta_of(p[r]) == tensor_of_products(pairs)
