"""
The nilCoxeter algebra of C_n^(1) and its affine Fomin-Stanley subalgebra.

``A_v A_u`` is ``A_{vu}`` when lengths add and zero otherwise.  Membership in
the Fomin-Stanley subalgebra is decided by coroot sums over Bruhat covers, and
the Schubert basis element of a Grassmannian ``w`` is the unique member of the
form ``A_w + (non-Grassmannian terms)``.

>>> p1 = pp_generator(2, 1)
>>> str(p1 * p1)
'A_01 + A_10 + A_12 + 2 A_20 + A_21'
>>> expand_in_pp_basis(2, p1 * p1) == {rho(2, 2): 1}
True
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .cartan import type_c_affine
from .linalg import as_int, invert, rank, sparse_rref
from .weyl import (
    CapacityError, WeylElement, covers_below, format_word, from_word, group_table,
    identity, is_grassmannian,
)
from .zee import build_zee, lee_partition, partitions_c, rho

__all__ = [
    "NilCoxElem", "multiply", "is_fomin_stanley", "pp_generator", "pp_schubert",
    "expand_in_pp_basis", "pieri", "j_coefficient", "even_relation_check",
    "grassmannian_layer", "check_generation",
]


class NilCoxElem:
    """A finite integer combination of basis elements ``A_w``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[WeylElement, int] | None = None):
        self.n = n
        self.terms: dict[WeylElement, int] = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, w: WeylElement) -> NilCoxElem:
        return cls(w.n, {w: 1})

    @classmethod
    def one(cls, n: int) -> NilCoxElem:
        return cls(n, {identity(n): 1})

    @classmethod
    def from_words(cls, n: int, pairs: Iterable[tuple[str, int]]) -> NilCoxElem:
        out: dict[WeylElement, int] = {}
        for word, c in pairs:
            w = from_word(n, word)
            if w.length != len(word):
                continue
            out[w] = out.get(w, 0) + c
        return cls(n, out)

    def __iter__(self) -> Iterator[tuple[WeylElement, int]]:
        return iter(sorted(self.terms.items()))

    def coefficient(self, w: WeylElement) -> int:
        return self.terms.get(w, 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, NilCoxElem):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: NilCoxElem) -> NilCoxElem:
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NilCoxElem(self.n, out)

    def __neg__(self) -> NilCoxElem:
        return NilCoxElem(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: NilCoxElem) -> NilCoxElem:
        return self + (-other)

    def __rmul__(self, k: int) -> NilCoxElem:
        return NilCoxElem(self.n, {w: k * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return multiply(self, other)

    def degrees(self) -> set[int]:
        return {w.length for w in self.terms}

    def homogeneous_parts(self) -> dict[int, NilCoxElem]:
        parts: dict[int, dict] = {}
        for w, c in self.terms.items():
            parts.setdefault(w.length, {})[w] = c
        return {d: NilCoxElem(self.n, t) for d, t in parts.items()}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for w, c in self:
            body = "1" if w.length == 0 else "A_" + format_word(self.n, w.word)
            mag = abs(c)
            text = body if mag == 1 else (str(mag) if w.length == 0 else f"{mag} {body}")
            if w.length == 0 and mag != 1:
                text = str(mag)
            pieces.append((c < 0, text))
        out = ("-" if pieces[0][0] else "") + pieces[0][1]
        for neg, text in pieces[1:]:
            out += (" - " if neg else " + ") + text
        return out

    def __repr__(self) -> str:
        return f"NilCoxElem({self.n}, {str(self)!r})"

    def to_json(self) -> list[dict]:
        return [{"word": format_word(self.n, w.word), "coeff": c} for w, c in self]


def multiply(a: NilCoxElem, b: NilCoxElem) -> NilCoxElem:
    out: dict[WeylElement, int] = {}
    for v, c in a.terms.items():
        for u, d in b.terms.items():
            vu = v.mul_word_additive(u.word)
            if vu is not None:
                out[vu] = out.get(vu, 0) + c * d
    return NilCoxElem(a.n, out)


def _cover_sums(a: NilCoxElem) -> dict[WeylElement, list[int]]:
    sums: dict[WeylElement, list[int]] = {}
    for w, c in a.terms.items():
        for v, mu in covers_below(w):
            acc = sums.setdefault(v, [0] * (a.n + 1))
            for i, x in enumerate(mu):
                acc[i] += c * x
    return sums


def is_fomin_stanley(n: int, a: NilCoxElem) -> bool:
    """Whether every coroot sum over covers of a fixed element is a multiple of K."""
    for acc in _cover_sums(a).values():
        if any(x != acc[0] for x in acc):
            return False
    return True


def pp_generator(n: int, r: int) -> NilCoxElem:
    """Sum over w in Z_r of 2^(c(w)-1) A_w."""
    if not 1 <= r <= 2 * n:
        raise ValueError(f"r must lie in 1..{2 * n}")
    z = build_zee(n)
    return NilCoxElem(n, {w: 2 ** (z.c(w) - 1) for w in z.layer(r)})


def grassmannian_layer(n: int, d: int, cap: int | None = None) -> list[WeylElement]:
    return [w for w in group_table(n, cap).layer(d) if is_grassmannian(w)]


@lru_cache(maxsize=None)
def _schubert_layer(n: int, d: int, cap: int | None) -> dict[WeylElement, NilCoxElem]:
    table = group_table(n, cap)
    layer = table.layer(d)
    if d == 0:
        return {identity(n): NilCoxElem.one(n)}
    grass = [w for w in layer if is_grassmannian(w)]
    other = [w for w in layer if not is_grassmannian(w)]
    order = {w: k for k, w in enumerate(other + grass)}
    rows: dict[tuple[WeylElement, int], dict[WeylElement, int]] = {}
    for w in layer:
        for v, mu in covers_below(w):
            for i in range(1, n + 1):
                x = mu[i] - mu[0]
                if x:
                    row = rows.setdefault((v, i), {})
                    row[w] = row.get(w, 0) + x
    pivots = sparse_rref(rows.values(), order)
    if set(pivots) != set(other):
        raise AssertionError(f"Schubert system in degree {d} is not uniquely solvable")
    out = {}
    for g in grass:
        terms = {g: 1}
        for u in other:
            x = -pivots[u].get(g, Fraction(0))
            if x:
                terms[u] = as_int(x)
        out[g] = NilCoxElem(n, terms)
    return out


def pp_schubert(n: int, w: WeylElement, cap: int | None = None) -> NilCoxElem:
    """The Schubert basis element of the Fomin-Stanley subalgebra indexed by Grassmannian w."""
    if not is_grassmannian(w):
        raise ValueError(f"{w!r} is not Grassmannian")
    return _schubert_layer(n, w.length, cap)[w]


def expand_in_pp_basis(n: int, a: NilCoxElem, cap: int | None = None) -> dict[WeylElement, int]:
    out: dict[WeylElement, int] = {}
    residual = a
    for w, c in a:
        if is_grassmannian(w):
            out[w] = c
            residual = residual - c * pp_schubert(n, w, cap)
    if residual:
        raise ValueError(f"element is not in the Fomin-Stanley subalgebra: residual {residual}")
    return out


def pieri(n: int, i: int, w: WeylElement) -> dict[WeylElement, int]:
    """Coefficients of the product of the i-th special class with the class of w."""
    if not 1 <= i <= 2 * n:
        raise ValueError(f"i must lie in 1..{2 * n}")
    if not is_grassmannian(w):
        raise ValueError(f"{w!r} is not Grassmannian")
    z = build_zee(n)
    out: dict[WeylElement, int] = {}
    for v in z.layer(i):
        vw = v.mul_word_additive(w.word)
        if vw is not None and is_grassmannian(vw):
            out[vw] = out.get(vw, 0) + 2 ** (z.c(v) - 1)
    return dict(sorted(out.items()))


def j_coefficient(n: int, v: WeylElement, w: WeylElement, cap: int | None = None) -> int:
    if v.length != w.length:
        raise ValueError("lengths differ")
    return pp_schubert(n, v, cap).coefficient(w)


def even_relation_check(n: int, m: int) -> bool:
    if not 1 <= m <= n:
        raise ValueError(f"m must lie in 1..{n}")
    p = {r: pp_generator(n, r) for r in range(1, 2 * m + 1)}
    rhs = NilCoxElem(n)
    for k in range(1, m):
        rhs = rhs + (2 * (-1) ** (k - 1)) * (p[k] * p[2 * m - k])
    rhs = rhs + (-1) ** (m - 1) * (p[m] * p[m])
    return rhs == p[2 * m]


def check_generation(n: int, d: int, cap: int | None = None) -> bool:
    """Whether products of the special generators span the degree-d Schubert classes.

    Products indexed by partitions in the Lee bijection image give a square
    matrix in the Schubert basis; spanning over the integers is equivalent to
    that matrix being unimodular, checked here via a rational inverse.
    """
    grass = grassmannian_layer(n, d, cap)
    lams = partitions_c(n, d)
    if len(lams) != len(grass):
        raise AssertionError("Grassmannian count differs from the partition count")
    rows = []
    for lam in lams:
        prod = NilCoxElem.one(n)
        for part in lam:
            prod = prod * pp_generator(n, part)
        coeffs = expand_in_pp_basis(n, prod, cap)
        rows.append([coeffs.get(w, 0) for w in grass])
    if rank(rows) != len(grass):
        return False
    inv = invert(rows)
    return all(x.denominator == 1 for row in inv for x in row)
