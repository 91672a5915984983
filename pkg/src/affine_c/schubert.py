"""
Affine Stanley functions Q^(n)_w and their duals P^(n)_w.

``Q^(n)_w`` is a generating function of factorizations ``w = v^l ... v^1``
into elements of Z, each factor weighted by ``2^c(v)``.  It is stored by its
coefficients on ``M_lambda = 2^l(lambda) m_lambda`` with ``lambda_1 <= 2n``.

The Grassmannian ``Q^(n)_w`` of a fixed degree are a basis of that degree of
the quotient ring.  Pairing against products of one-row Schur P functions
turns this into a square matrix over odd partitions, and ``P^(n)_w`` comes from
its inverse transpose.

>>> from affine_c.weyl import from_word
>>> affine_stanley(2, from_word(2, "0210")).coeffs
{(3, 1): 1, (2, 2): 2, (2, 1, 1): 2, (1, 1, 1, 1): 2}
>>> dual_kschur(2, from_word(2, "010"))
{(2, 1): 1}
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .linalg import as_int, invert, solve
from .nilcoxeter import grassmannian_layer, j_coefficient
from .symfunc import (
    DEGREE_CAP, MSym, expand_in_schur_p, format_partition, odd_partitions,
    p_product, pair_pproduct, partitions, project_gamma_n, q_one_row,
)
from .weyl import CapacityError, WeylElement, format_word, from_word, is_grassmannian
from .zee import build_zee, lee_partition, partitions_c

__all__ = [
    "StanleyExpansion", "DualityMatrix", "factorization_count", "affine_stanley",
    "stanley_symmetry_check", "duality_matrix", "lee_matrix", "dual_kschur",
    "expand_in_grassmannian", "q_equals_j", "c_word", "check_cr_surjectivity",
    "pair_dual", "product_in_grassmannian",
]

Partition = tuple[int, ...]


@dataclass(frozen=True)
class StanleyExpansion:
    n: int
    degree: int
    coeffs: dict[Partition, int]

    def coefficient(self, lam: Sequence[int]) -> int:
        return self.coeffs.get(tuple(lam), 0)

    def to_msym(self) -> MSym:
        return MSym.from_m_view(self.coeffs)

    def to_json(self) -> dict:
        return {"basis": "M", "terms": [{"partition": format_partition(lam), "coeff": c}
                                        for lam, c in self.coeffs.items()]}


def _check_degree(d: int) -> None:
    if d > DEGREE_CAP:
        raise CapacityError(f"degree {d} exceeds cap {DEGREE_CAP}")


@lru_cache(maxsize=None)
def factorization_count(w: WeylElement, parts: tuple[int, ...]) -> int:
    """Weighted count of ``w = v^k ... v^1`` with v^i in Z of length parts[i-1].

    The first part is the length of the rightmost factor.  Each factor carries
    the weight ``2^c(v)``.
    """
    if not parts:
        return 1 if w.length == 0 else 0
    if sum(parts) != w.length:
        return 0
    z = build_zee(w.n)
    total = 0
    for v in z.layer(parts[0]):
        rest = w.strip_suffix(v.word)
        if rest is not None:
            total += 2 ** z.c(v) * factorization_count(rest, parts[1:])
    return total


def affine_stanley(n: int, w: WeylElement) -> StanleyExpansion:
    if w.n != n:
        raise ValueError("element belongs to a different group")
    d = w.length
    _check_degree(d)
    out = {}
    for lam in partitions(d, 2 * n):
        total = factorization_count(w, lam)
        q, r = divmod(total, 2 ** len(lam))
        if r:
            raise ArithmeticError(f"count {total} for {lam} is not divisible by 2^{len(lam)}")
        if q:
            out[lam] = q
    return StanleyExpansion(n, d, out)


def stanley_symmetry_check(n: int, w: WeylElement) -> bool:
    """Whether every rearrangement of a part sequence gives the same count."""
    for lam in partitions(w.length, 2 * n):
        base = factorization_count(w, lam)
        for alpha in set(permutations(lam)):
            if factorization_count(w, alpha) != base:
                return False
    return True


@dataclass(frozen=True)
class DualityMatrix:
    """Rows are Grassmannian elements, columns are partitions, entries M-coefficients."""
    n: int
    degree: int
    rows: tuple[WeylElement, ...]
    cols: tuple[Partition, ...]
    entries: tuple[tuple[int, ...], ...]

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def _op_columns(n: int, d: int) -> tuple[Partition, ...]:
    return odd_partitions(d, 2 * n - 1)


@lru_cache(maxsize=None)
def duality_matrix(n: int, d: int) -> DualityMatrix:
    """Coefficients of M_lambda in the Grassmannian Q^(n)_w over odd lambda."""
    _check_degree(d)
    rows = tuple(grassmannian_layer(n, d))
    cols = _op_columns(n, d)
    if len(rows) != len(cols):
        raise AssertionError(f"duality matrix is {len(rows)}x{len(cols)}")
    entries = tuple(tuple(affine_stanley(n, w).coefficient(lam) for lam in cols) for w in rows)
    return DualityMatrix(n, d, rows, cols, entries)


@lru_cache(maxsize=None)
def lee_matrix(n: int, d: int) -> DualityMatrix:
    """Same coefficients over the partitions in bijection with Grassmannian elements.

    Rows are sorted by their partitions and columns lexicographically, both
    ascending, so the triangularity is visible as an upper-zero pattern.
    """
    cols = tuple(sorted(partitions_c(n, d)))
    rows = tuple(sorted(grassmannian_layer(n, d), key=lambda w: lee_partition(n, w)))
    entries = tuple(tuple(affine_stanley(n, w).coefficient(lam) for lam in cols) for w in rows)
    return DualityMatrix(n, d, rows, cols, entries)


@lru_cache(maxsize=None)
def _inverse(n: int, d: int) -> tuple[tuple[int, ...], ...]:
    dm = duality_matrix(n, d)
    inv = invert(dm.entries) if dm.entries else []
    return tuple(tuple(as_int(x) for x in row) for row in inv)


@lru_cache(maxsize=None)
def _dual_layer(n: int, d: int) -> dict[WeylElement, dict[Partition, int]]:
    dm = duality_matrix(n, d)
    inv = _inverse(n, d)
    out = {}
    for k, w in enumerate(dm.rows):
        f = MSym()
        for j, lam in enumerate(dm.cols):
            # inverse transpose: row w of C is column w of D^{-1}
            c = inv[j][k]
            if c:
                f = f + c * p_product(lam)
        out[w] = expand_in_schur_p(f)
    return out


def dual_kschur(n: int, w: WeylElement) -> dict[Partition, int]:
    """Schur P coefficients of P^(n)_w."""
    if not is_grassmannian(w):
        raise ValueError(f"{format_word(n, w.word)} is not Grassmannian")
    return dict(_dual_layer(n, w.length)[w])


def _solve_in_grassmannian(n: int, f: MSym, d: int) -> dict[WeylElement, int]:
    dm = duality_matrix(n, d)
    inv = _inverse(n, d)
    q = [Fraction(f.m_view().get(lam, 0)) for lam in dm.cols]
    coeffs = {}
    for k, u in enumerate(dm.rows):
        x = sum(q[j] * inv[j][k] for j in range(len(q)))
        if x:
            coeffs[u] = as_int(x)
    rebuilt = MSym()
    for u, c in coeffs.items():
        rebuilt = rebuilt + c * affine_stanley(n, u).to_msym()
    if rebuilt != project_gamma_n(n, f.degree_part(d)):
        raise ValueError("function is not in the span of the Grassmannian basis")
    return coeffs


def expand_in_grassmannian(n: int, w: WeylElement) -> dict[WeylElement, int]:
    """Coefficients of Q^(n)_w on the Grassmannian Q^(n)_v."""
    return _solve_in_grassmannian(n, affine_stanley(n, w).to_msym(), w.length)


def product_in_grassmannian(n: int, u: WeylElement, v: WeylElement) -> dict[WeylElement, int]:
    """Expansion of the product Q^(n)_u Q^(n)_v in the Grassmannian basis."""
    f = project_gamma_n(n, affine_stanley(n, u).to_msym() * affine_stanley(n, v).to_msym())
    return _solve_in_grassmannian(n, f, u.length + v.length)


def q_equals_j(n: int, v: WeylElement, w: WeylElement) -> bool:
    if v.length != w.length:
        raise ValueError("lengths differ")
    if not is_grassmannian(v):
        raise ValueError(f"{format_word(n, v.word)} is not Grassmannian")
    return expand_in_grassmannian(n, w).get(v, 0) == j_coefficient(n, v, w)


@lru_cache(maxsize=None)
def _op_pproduct_table(n: int, d: int):
    cols = _op_columns(n, d)
    expansions = [expand_in_schur_p(p_product(lam)) for lam in cols]
    strict = tuple(sorted({mu for e in expansions for mu in e}))
    # one row per strict partition, one column per odd P-product
    mat = [[e.get(mu, 0) for e in expansions] for mu in strict]
    return cols, strict, mat


def pair_dual(n: int, v: WeylElement, w: WeylElement) -> int:
    """The pairing of P^(n)_v with Q^(n)_w.

    P^(n)_v is rebuilt from its Schur P coefficients, rewritten in products of
    odd one-row P functions, and paired with Q^(n)_w coefficient by coefficient.
    """
    if v.length != w.length:
        return 0
    cols, strict, mat = _op_pproduct_table(n, v.length)
    pv = dual_kschur(n, v)
    if set(pv) - set(strict):
        raise ValueError("dual function leaves the span of odd P-products")
    y = solve(mat, [pv.get(mu, 0) for mu in strict]) if cols else []
    qw = affine_stanley(n, w).to_msym()
    total = sum((c * pair_pproduct(n, lam, qw) for c, lam in zip(y, cols) if c), Fraction(0))
    return as_int(total)


def c_word(n: int, r: int) -> tuple[int, ...]:
    """Last r letters of ... s_1 s_0 s_1 ... s_n ... s_1 s_0."""
    cycle = list(range(0, n + 1)) + list(range(n - 1, 0, -1))
    return tuple(reversed([cycle[k % len(cycle)] for k in range(r)]))


def check_cr_surjectivity(n: int, r: int) -> bool:
    if not 1 <= r <= DEGREE_CAP:
        raise ValueError(f"r must lie in 1..{DEGREE_CAP}")
    word = c_word(n, r)
    cr = from_word(n, word)
    if cr.length != r:
        raise AssertionError("c_r word is not reduced")
    return affine_stanley(n, cr).to_msym() == project_gamma_n(n, q_one_row(r))

