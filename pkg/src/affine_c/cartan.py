"""
Affine Cartan data and the coroot lattice.

A `CartanData` holds a generalized Cartan matrix with entries
``a[i][j] = <alpha_i^vee, alpha_j>`` on the index set ``0..n``.  Coroot vectors
are plain integer tuples in the basis ``alpha_0^vee, ..., alpha_n^vee``.

>>> data = type_c_affine(2)
>>> data.a
((2, -1, 0), (-2, 2, -2), (0, -1, 2))
>>> simple_reflect_coroot(data, 1, (1, 0, 0))
(1, 1, 0)
>>> data.central_element
(1, 1, 1)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from fractions import Fraction
from typing import Sequence

__all__ = [
    "CartanData", "CorootVector", "type_c_affine",
    "simple_reflect_coroot", "word_act_coroot", "is_multiple_of_K",
    "unit_coroot",
]

CorootVector = tuple[int, ...]


def _null_vector(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Primitive nonnegative integer generator of the kernel of a corank-one matrix."""
    m = [[Fraction(x) for x in row] for row in rows]
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        raise ValueError("Cartan matrix is not of corank one")
    f = free[0]
    vec = [Fraction(0)] * ncols
    vec[f] = Fraction(1)
    for row, c in zip(m, pivots):
        vec[c] = -row[f]
    denom = 1
    for x in vec:
        denom = denom * x.denominator // _gcd(denom, x.denominator)
    ints = [int(x * denom) for x in vec]
    g = 0
    for x in ints:
        g = _gcd(g, abs(x))
    ints = [x // g for x in ints]
    if ints[0] < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class CartanData:
    """A generalized Cartan matrix on the index set ``0..n``."""
    n: int
    a: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        size = self.n + 1
        if self.n < 1 or len(self.a) != size or any(len(row) != size for row in self.a):
            raise ValueError(f"expected a {size}x{size} matrix")
        for i in range(size):
            if self.a[i][i] != 2:
                raise ValueError("diagonal entries must be 2")
            for j in range(size):
                if i != j:
                    if self.a[i][j] > 0:
                        raise ValueError("off-diagonal entries must be <= 0")
                    if (self.a[i][j] < 0) != (self.a[j][i] < 0):
                        raise ValueError("a[i][j] < 0 must match a[j][i] < 0")

    @property
    def labels(self) -> range:
        return range(self.n + 1)

    def check_index(self, i: int) -> None:
        if not 0 <= i <= self.n:
            raise IndexError(f"index {i} outside 0..{self.n}")

    @cached_property
    def central_element(self) -> CorootVector:
        """K: the row dependence of the Cartan matrix, normalised to coefficient 1 on alpha_0^vee."""
        transposed = [[self.a[i][j] for i in self.labels] for j in self.labels]
        k = _null_vector(transposed)
        if k[0] != 1:
            raise ValueError("node 0 is not a special node")
        return k

    @cached_property
    def null_root(self) -> tuple[int, ...]:
        """delta: the column dependence, in the basis of simple roots."""
        return _null_vector(self.a)

    @cached_property
    def theta_coroot(self) -> CorootVector:
        """theta^vee = K - alpha_0^vee."""
        k = self.central_element
        return (k[0] - 1,) + k[1:]

    def pair(self, mu: Sequence[int], j: int) -> int:
        """<mu, alpha_j> for a coroot vector mu."""
        return sum(mu[i] * self.a[i][j] for i in self.labels if mu[i])


@lru_cache(maxsize=None)
def type_c_affine(n: int) -> CartanData:
    """The affine Cartan matrix of type C_n^(1), n >= 2."""
    if n < 2:
        raise ValueError("type C affine needs n >= 2")
    a = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        a[i][i] = 2
    for i in range(1, n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    a[0][1], a[1][0] = -1, -2
    a[n - 1][n], a[n][n - 1] = -2, -1
    return CartanData(n, tuple(tuple(row) for row in a), name=f"C{n}~")


def unit_coroot(data: CartanData, i: int) -> CorootVector:
    data.check_index(i)
    return tuple(1 if j == i else 0 for j in data.labels)


def simple_reflect_coroot(data: CartanData, i: int, mu: Sequence[int]) -> CorootVector:
    """s_i(mu) = mu - <mu, alpha_i> alpha_i^vee."""
    data.check_index(i)
    out = list(mu)
    out[i] -= data.pair(mu, i)
    return tuple(out)


def word_act_coroot(data: CartanData, word: Sequence[int], mu: Sequence[int]) -> CorootVector:
    """Act by s_{w_1} s_{w_2} ... s_{w_m}; the rightmost letter acts first."""
    out = tuple(mu)
    for i in reversed(word):
        out = simple_reflect_coroot(data, i, out)
    return out


def is_multiple_of_K(data: CartanData, mu: Sequence[int]) -> tuple[bool, int | None]:
    """Return ``(True, m)`` when mu = m K, else ``(False, None)``."""
    k = data.central_element
    m = mu[0]  # k[0] == 1
    if all(mu[i] == m * k[i] for i in data.labels):
        return True, m
    return False, None
