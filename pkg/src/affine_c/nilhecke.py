"""
The affine nilHecke algebra with coefficients in S = Sym(P).

Polynomials are in the finite fundamental weights ``w_1, ..., w_n``.  The
affine Weyl group acts on them through the level zero action, with ``s_0``
acting as the reflection in the highest root.  Elements are left S-linear
combinations of ``A_w``; the commutation rule

    A_i f = s_i(f) A_i + d_i(f)

moves polynomials to the left, where ``d_i`` is the divided difference
computed by the twisted Leibniz rule.

The coproduct here is the slow recursive one, built by letting each ``A_i``
act on ``1 (x) 1``.  It exists to check the closed formula in ``coproduct``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .cartan import type_c_affine
from .nilcoxeter import NilCoxElem
from .weyl import CapacityError, WeylElement, covers_below, identity

__all__ = [
    "SPoly", "NilHeckeElem", "TensorElem", "level_zero_root", "pair_coroot_weight",
    "reflect_poly", "divided_difference", "weyl_act_poly", "commute_right", "multiply",
    "left_mul_generator", "phi0", "delta_recursive", "phi0_tensor", "DELTA_CAP",
]

Exp = tuple[int, ...]
DELTA_CAP = 6


class SPoly:
    """Integer polynomial in w_1..w_n, stored as exponent tuple -> coefficient."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exp, int] | None = None):
        self.n = n
        self.terms: dict[Exp, int] = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, n: int, c: int) -> SPoly:
        return cls(n, {(0,) * n: c})

    @classmethod
    def var(cls, n: int, k: int) -> SPoly:
        """The weight w_k, 1 <= k <= n."""
        if not 1 <= k <= n:
            raise IndexError(f"no fundamental weight w_{k}")
        return cls(n, {tuple(int(j == k - 1) for j in range(n)): 1})

    @classmethod
    def linear(cls, n: int, coeffs: Sequence[int]) -> SPoly:
        """sum_k coeffs[k-1] w_k."""
        return cls(n, {tuple(int(j == k) for j in range(n)): c for k, c in enumerate(coeffs)})

    def linear_coeffs(self) -> tuple[int, ...]:
        if any(sum(e) != 1 for e in self.terms):
            raise ValueError("not a linear form")
        out = [0] * self.n
        for e, c in self.terms.items():
            out[e.index(1)] += c
        return tuple(out)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == SPoly.const(self.n, other)
        if not isinstance(other, SPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: SPoly) -> SPoly:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SPoly(self.n, out)

    def __neg__(self) -> SPoly:
        return SPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: SPoly) -> SPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SPoly(self.n, {e: other * c for e, c in self.terms.items()})
        out: dict[Exp, int] = {}
        for e, c in self.terms.items():
            for f, d in other.terms.items():
                g = tuple(x + y for x, y in zip(e, f))
                out[g] = out.get(g, 0) + c * d
        return SPoly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> SPoly:
        out = SPoly.const(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.n, 0)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def truncate(self, max_degree: int) -> SPoly:
        return SPoly(self.n, {e: c for e, c in self.terms.items() if sum(e) <= max_degree})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(f"w{k + 1}" + (f"^{x}" if x > 1 else "") for k, x in enumerate(e) if x)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


@lru_cache(maxsize=None)
def level_zero_root(n: int, j: int) -> tuple[int, ...]:
    """The image of alpha_j in P, as coefficients on w_1..w_n.

    For j >= 1 this is the column of the finite Cartan matrix; alpha_0 maps to
    minus the highest root, theta = sum_{j>=1} delta_j alpha_j.
    """
    a = type_c_affine(n).a
    if j:
        return tuple(a[k][j] for k in range(1, n + 1))
    delta = type_c_affine(n).null_root
    theta = [0] * n
    for i in range(1, n + 1):
        for k, x in enumerate(level_zero_root(n, i)):
            theta[k] += delta[i] * x
    return tuple(-x for x in theta)


def pair_coroot_weight(n: int, mu: Sequence[int], lam: Sequence[int]) -> int:
    """<mu, lam> for a coroot vector mu and a weight lam = sum lam[k-1] w_k.

    <alpha_i^vee, w_k> = delta_ik for i >= 1, and alpha_0^vee = K - theta^vee.
    """
    k_vec = type_c_affine(n).central_element
    total = 0
    for i in range(1, n + 1):
        total += (mu[i] - mu[0] * k_vec[i]) * lam[i - 1]
    return total


def _unit(n: int, i: int) -> tuple[int, ...]:
    return tuple(int(j == i) for j in range(n + 1))


@lru_cache(maxsize=None)
def _reflected_vars(n: int, i: int) -> tuple[SPoly, ...]:
    root = level_zero_root(n, i)
    out = []
    for k in range(1, n + 1):
        lam = [int(j == k - 1) for j in range(n)]
        p = pair_coroot_weight(n, _unit(n, i), lam)
        out.append(SPoly.linear(n, [x - p * r for x, r in zip(lam, root)]))
    return tuple(out)


@lru_cache(maxsize=200_000)
def _reflect_monomial(n: int, i: int, e: Exp) -> SPoly:
    images = _reflected_vars(n, i)
    out = SPoly.const(n, 1)
    for k, x in enumerate(e):
        if x:
            out = out * images[k] ** x
    return out


def reflect_poly(i: int, f: SPoly) -> SPoly:
    out = SPoly(f.n)
    for e, c in f.terms.items():
        out = out + _reflect_monomial(f.n, i, e) * c
    return out


@lru_cache(maxsize=200_000)
def _dd_monomial(n: int, i: int, e: Exp) -> SPoly:
    # d(x g) = d(x) g + s_i(x) d(g), peeling one variable x off the monomial
    k = next((k for k, x in enumerate(e) if x), None)
    if k is None:
        return SPoly(n)
    rest = tuple(x - (j == k) for j, x in enumerate(e))
    x = SPoly.var(n, k + 1)
    dx = pair_coroot_weight(n, _unit(n, i), x.linear_coeffs())
    g = SPoly(n, {rest: 1})
    return g * dx + _reflected_vars(n, i)[k] * _dd_monomial(n, i, rest)


def divided_difference(i: int, f: SPoly) -> SPoly:
    out = SPoly(f.n)
    for e, c in f.terms.items():
        out = out + _dd_monomial(f.n, i, e) * c
    return out


def weyl_act_poly(x: WeylElement, f: SPoly) -> SPoly:
    """Level zero action; the rightmost letter acts first."""
    for i in reversed(x.word):
        f = reflect_poly(i, f)
    return f


class NilHeckeElem:
    """A left S-linear combination sum p_w A_w."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[WeylElement, SPoly] | None = None):
        self.n = n
        self.terms: dict[WeylElement, SPoly] = {w: p for w, p in (terms or {}).items() if p}

    @classmethod
    def basis(cls, w: WeylElement, coeff: SPoly | None = None) -> NilHeckeElem:
        return cls(w.n, {w: SPoly.const(w.n, 1) if coeff is None else coeff})

    @classmethod
    def scalar(cls, f: SPoly) -> NilHeckeElem:
        return cls(f.n, {identity(f.n): f})

    @classmethod
    def from_nilcoxeter(cls, a: NilCoxElem) -> NilHeckeElem:
        return cls(a.n, {w: SPoly.const(a.n, c) for w, c in a.terms.items()})

    def __iter__(self) -> Iterator[tuple[WeylElement, SPoly]]:
        return iter(sorted(self.terms.items()))

    def __eq__(self, other):
        if not isinstance(other, NilHeckeElem):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: NilHeckeElem) -> NilHeckeElem:
        out = dict(self.terms)
        for w, p in other.terms.items():
            out[w] = out[w] + p if w in out else p
        return NilHeckeElem(self.n, out)

    def __neg__(self):
        return NilHeckeElem(self.n, {w: -p for w, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale_left(self, f: SPoly) -> NilHeckeElem:
        return NilHeckeElem(self.n, {w: f * p for w, p in self.terms.items()})

    def __mul__(self, other: NilHeckeElem) -> NilHeckeElem:
        return multiply(self, other)

    def __repr__(self):
        return "NilHeckeElem(" + ", ".join(f"[{p}] A_{w.word_str()}" for w, p in self) + ")"


def left_mul_generator(i: int, a: NilHeckeElem) -> NilHeckeElem:
    """A_i * a, using A_i p = s_i(p) A_i + d_i(p)."""
    out: dict[WeylElement, SPoly] = {}

    def add(w, p):
        if p:
            out[w] = out[w] + p if w in out else p

    for w, p in a.terms.items():
        iw = w.simple_mul(i)
        if iw.length > w.length:
            add(iw, reflect_poly(i, p))
        add(w, divided_difference(i, p))
    return NilHeckeElem(a.n, out)


def multiply(a: NilHeckeElem, b: NilHeckeElem) -> NilHeckeElem:
    out = NilHeckeElem(a.n)
    for x, p in a.terms.items():
        t = b
        for i in reversed(x.word):
            t = left_mul_generator(i, t)
        out = out + t.scale_left(p)
    return out


def commute_right(x: WeylElement, lam: SPoly) -> NilHeckeElem:
    """A_x lam = (x.lam) A_x + sum over covers y of x of <alpha_yx^vee, lam> A_y."""
    coeffs = lam.linear_coeffs()
    terms = {x: weyl_act_poly(x, lam)}
    for y, mu in covers_below(x):
        c = pair_coroot_weight(x.n, mu, coeffs)
        if c:
            terms[y] = terms[y] + SPoly.const(x.n, c) if y in terms else SPoly.const(x.n, c)
    return NilHeckeElem(x.n, terms)


def phi0(a: NilHeckeElem) -> NilCoxElem:
    return NilCoxElem(a.n, {w: p.constant_term() for w, p in a.terms.items()})


class TensorElem:
    """sum p_{w,v} A_w (x) A_v with every polynomial kept in the left slot."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple[WeylElement, WeylElement], SPoly] | None = None):
        self.n = n
        self.terms = {k: p for k, p in (terms or {}).items() if p}

    @classmethod
    def one(cls, n: int) -> TensorElem:
        e = identity(n)
        return cls(n, {(e, e): SPoly.const(n, 1)})

    def act(self, i: int, max_degree: int | None = None) -> TensorElem:
        """A_i acting on M (x)_S N."""
        n = self.n
        root = SPoly.linear(n, level_zero_root(n, i))
        out: dict = {}

        def add(key, p):
            if max_degree is not None:
                p = p.truncate(max_degree)
            if p:
                out[key] = out[key] + p if key in out else p

        for (w, v), p in self.terms.items():
            iw, iv = w.simple_mul(i), v.simple_mul(i)
            w_up, v_up = iw.length > w.length, iv.length > v.length
            sp, dp = reflect_poly(i, p), divided_difference(i, p)
            # (A_i m) (x) n
            if w_up:
                add((iw, v), sp)
            add((w, v), dp)
            if v_up:
                # m (x) (A_i n)
                add((w, iv), p)
                # - alpha_i (A_i m) (x) (A_i n)
                if w_up:
                    add((iw, iv), -(root * sp))
                add((w, iv), -(root * dp))
        return TensorElem(n, out)

    def __eq__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        return self.terms == other.terms


def delta_recursive(w: WeylElement, word: Sequence[int] | None = None,
                    prune: bool = False) -> TensorElem:
    """Delta(A_w) = A_{i_1} (A_{i_2} ( ... A_{i_l} (1 (x) 1))).

    With ``prune`` set, polynomial terms that cannot survive evaluation at zero
    are dropped along the way; the result is then only valid after ``phi0_tensor``.
    """
    if w.length > DELTA_CAP:
        raise CapacityError(f"recursive coproduct is capped at length {DELTA_CAP}")
    word = tuple(w.word if word is None else word)
    t = TensorElem.one(w.n)
    for step, i in enumerate(reversed(word)):
        remaining = len(word) - step - 1
        t = t.act(i, remaining if prune else None)
    return t


def phi0_tensor(t: TensorElem) -> dict[tuple[WeylElement, WeylElement], int]:
    out = {}
    for key, p in t.terms.items():
        c = p.constant_term()
        if c:
            out[key] = c
    return dict(sorted(out.items()))
