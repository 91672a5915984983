"""
Symmetric functions in the monomial basis, with Schur Q and P functions.

``MSym`` stores coefficients on ``m_lambda``.  ``M_lambda = 2^l(lambda) m_lambda`` is
only a view.  Schur Q functions come from a strip-by-strip count of marked
shifted tableaux; ``schur_q_pfaffian`` recomputes them from one-row functions
as an independent check.

>>> str(m_basis((1,)) * m_basis((1,)))
'm[2] + 2 m[1,1]'
>>> q_one_row(2).m_view() == {(2,): 1, (1, 1): 1}
True
>>> expand_in_schur_p(p_product((2, 1)))
{(3,): 1, (2, 1): 1}
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterator, Mapping, Sequence

from .linalg import as_int, invert

__all__ = [
    "Partition", "MSym", "m_basis", "partitions", "strict_partitions", "odd_partitions",
    "is_strict", "is_odd_partition", "dominates", "m_multiply", "q_one_row",
    "schur_q", "schur_q_pfaffian", "schur_p", "p_product", "expand_in_schur_p",
    "h_one_row", "m_to_h", "theta", "t_lambda", "project_gamma_n", "pair_pproduct",
    "format_partition", "parse_partition", "DEGREE_CAP",
]

Partition = tuple[int, ...]
DEGREE_CAP = 10


def format_partition(lam: Sequence[int]) -> str:
    if not lam:
        return "0"
    if max(lam) > 9:
        return ",".join(str(x) for x in lam)
    return "".join(str(x) for x in lam)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "0", "()"):
        return ()
    if "," in text:
        parts = [int(x) for x in text.strip("()").split(",") if x.strip()]
    elif "^" in text:
        parts = []
        for chunk in _split_powers(text):
            base, _, exp = chunk.partition("^")
            parts.extend([int(base)] * int(exp or 1))
    else:
        parts = [int(ch) for ch in text]
    lam = tuple(sorted((p for p in parts if p), reverse=True))
    if list(lam) != [p for p in parts if p]:
        raise ValueError(f"{text!r} is not written as a partition")
    return lam


def _split_powers(text: str) -> list[str]:
    out, i = [], 0
    while i < len(text):
        j = i + 1
        if j < len(text) and text[j] == "^":
            j += 1
            while j < len(text) and text[j].isdigit():
                j += 1
        out.append(text[i:j])
        i = j
    return out


@lru_cache(maxsize=None)
def partitions(d: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """Partitions of d in reverse lexicographic order (largest first)."""
    top = d if max_part is None else min(d, max_part)
    if d == 0:
        return ((),)
    out = []
    for p in range(top, 0, -1):
        for rest in partitions(d - p, p):
            out.append((p,) + rest)
    return tuple(out)


def is_strict(lam: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(lam, lam[1:]))


def is_odd_partition(lam: Sequence[int]) -> bool:
    return all(x % 2 for x in lam)


def strict_partitions(d: int) -> tuple[Partition, ...]:
    return tuple(p for p in partitions(d) if is_strict(p))


def odd_partitions(d: int, max_part: int | None = None) -> tuple[Partition, ...]:
    return tuple(p for p in partitions(d, max_part) if is_odd_partition(p))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """lam >= mu in dominance order (equal sizes assumed)."""
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if a < b:
            return False
    return True


class MSym:
    """A symmetric function as partition -> coefficient of m_lambda."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, int] | None = None):
        self.terms: dict[Partition, int] = {tuple(k): c for k, c in (terms or {}).items() if c}

    @classmethod
    def from_m_view(cls, coeffs: Mapping[Partition, int]) -> MSym:
        """Build from coefficients on M_lambda."""
        return cls({lam: c * 2 ** len(lam) for lam, c in coeffs.items()})

    def m_view(self) -> dict[Partition, int]:
        """Coefficients on M_lambda; raises if some are not integers."""
        out = {}
        for lam, c in self.terms.items():
            q, r = divmod(c, 2 ** len(lam))
            if r:
                raise ArithmeticError(f"m-coefficient {c} of {lam} is not divisible by 2^{len(lam)}")
            out[lam] = q
        return out

    def __iter__(self) -> Iterator[tuple[Partition, int]]:
        return iter(sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0]))))

    def coefficient(self, lam: Sequence[int]) -> int:
        return self.terms.get(tuple(lam), 0)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == MSym({(): other})
        if not isinstance(other, MSym):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __add__(self, other: MSym) -> MSym:
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return MSym(out)

    def __neg__(self) -> MSym:
        return MSym({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: MSym) -> MSym:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return MSym({k: other * c for k, c in self.terms.items()})
        return m_multiply(self, other)

    def __rmul__(self, k: int) -> MSym:
        return self * k

    def divide_exact(self, k: int) -> MSym:
        out = {}
        for lam, c in self.terms.items():
            q, r = divmod(c, k)
            if r:
                raise ArithmeticError(f"coefficient {c} is not divisible by {k}")
            out[lam] = q
        return MSym(out)

    def degree_part(self, d: int) -> MSym:
        return MSym({k: c for k, c in self.terms.items() if sum(k) == d})

    def degrees(self) -> set[int]:
        return {sum(k) for k in self.terms}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for lam, c in self:
            body = "m[" + ",".join(str(x) for x in lam) + "]" if lam else ""
            mag = abs(c)
            text = (str(mag) if not body else body if mag == 1 else f"{mag} {body}")
            out += (" - " if c < 0 else " + ") + text if out else ("-" if c < 0 else "") + text
        return out

    def __repr__(self):
        return f"MSym({str(self)!r})"

    def to_json(self, basis: str = "m") -> dict:
        coeffs = self.m_view() if basis == "M" else self.terms
        return {"basis": basis, "terms": [{"partition": format_partition(lam), "coeff": c}
                                         for lam, c in sorted(coeffs.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))]}


def m_basis(lam: Sequence[int]) -> MSym:
    return MSym({tuple(lam): 1})


def _arrangements(lam: Partition, slots: int) -> int:
    """Number of distinct exponent vectors with ``slots`` entries that sort to lam."""
    out = factorial(slots) // factorial(slots - len(lam))
    mult: dict[int, int] = {}
    for x in lam:
        mult[x] = mult.get(x, 0) + 1
    for m in mult.values():
        out //= factorial(m)
    return out


@lru_cache(maxsize=100_000)
def _m_product(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    # fix x^lam and count placements of mu over L = l(lam) + l(mu) variables
    L = len(lam) + len(mu)
    base = list(lam) + [0] * len(mu)
    counts: dict[Partition, int] = {}

    def place(k: int, used: list[bool], prev_slot: int, vec: list[int]):
        if k == len(mu):
            nu = tuple(sorted((x for x in vec if x), reverse=True))
            counts[nu] = counts.get(nu, 0) + 1
            return
        start = prev_slot + 1 if k and mu[k] == mu[k - 1] else 0
        for s in range(start, L):
            if not used[s]:
                used[s] = True
                vec[s] += mu[k]
                place(k + 1, used, s, vec)
                vec[s] -= mu[k]
                used[s] = False

    place(0, [False] * L, -1, base)
    a_lam = _arrangements(lam, L)
    out = []
    for nu, cnt in counts.items():
        num = a_lam * cnt
        den = _arrangements(nu, L)
        if num % den:
            raise AssertionError("monomial product count is not integral")
        out.append((nu, num // den))
    return tuple(out)


def m_multiply(f: MSym, g: MSym) -> MSym:
    out: dict[Partition, int] = {}
    for lam, c in f.terms.items():
        for mu, d in g.terms.items():
            key = (lam, mu) if lam >= mu else (mu, lam)
            for nu, k in _m_product(*key):
                out[nu] = out.get(nu, 0) + c * d * k
    return MSym(out)


@lru_cache(maxsize=None)
def q_one_row(r: int) -> MSym:
    """Q_r = sum over partitions of r of 2^l m_lambda."""
    return MSym({lam: 2 ** len(lam) for lam in partitions(r)})


@lru_cache(maxsize=None)
def h_one_row(r: int) -> MSym:
    return MSym({lam: 1 for lam in partitions(r)})


def _shifted_strip_weight(lam: Partition, nu: Partition) -> int:
    """2^a for a shifted horizontal strip lam/nu, or 0 when it is not one."""
    if len(nu) > len(lam) or len(lam) > len(nu) + 1:
        return 0
    for i, x in enumerate(lam):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        y = nu[i] if i < len(nu) else 0
        if not (below <= y <= x):
            return 0
    cells = set()
    for i, x in enumerate(lam):
        y = nu[i] if i < len(nu) else 0
        cells.update((i, c) for c in range(i + y, i + x))
    # one free marking per edge-connected component
    comps = 0
    seen: set[tuple[int, int]] = set()
    for cell in cells:
        if cell in seen:
            continue
        comps += 1
        stack = [cell]
        seen.add(cell)
        while stack:
            r, c = stack.pop()
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
    return 2 ** comps


@lru_cache(maxsize=None)
def _strips_below(lam: Partition, size: int) -> tuple[tuple[Partition, int], ...]:
    out = []

    def rec(i: int, acc: list[int], removed: int):
        if i == len(lam):
            if removed == size:
                nu = tuple(x for x in acc if x)
                if is_strict(nu):
                    w = _shifted_strip_weight(lam, nu)
                    if w:
                        out.append((nu, w))
            return
        below = lam[i + 1] if i + 1 < len(lam) else 0
        for y in range(lam[i], below - 1, -1):
            if removed + lam[i] - y > size:
                break
            rec(i + 1, acc + [y], removed + lam[i] - y)

    rec(0, [], 0)
    return tuple(out)


@lru_cache(maxsize=None)
def _tableau_count(lam: Partition, content: Partition) -> int:
    """Weighted count of marked shifted tableaux of shape lam with the given content."""
    if not content:
        return 1 if not lam else 0
    total = 0
    for nu, w in _strips_below(lam, content[-1]):
        total += w * _tableau_count(nu, content[:-1])
    return total


@lru_cache(maxsize=None)
def schur_q(lam: Partition) -> MSym:
    lam = tuple(lam)
    if not is_strict(lam):
        return MSym()
    return MSym({mu: _tableau_count(lam, mu) for mu in partitions(sum(lam))})


@lru_cache(maxsize=None)
def _q_two_row(r: int, s: int) -> MSym:
    if s == 0:
        return q_one_row(r)
    out = q_one_row(r) * q_one_row(s)
    for i in range(1, s + 1):
        out = out + (2 * (-1) ** i) * (q_one_row(r + i) * q_one_row(s - i))
    return out


@lru_cache(maxsize=None)
def schur_q_pfaffian(lam: Partition) -> MSym:
    """Q_lambda by Pfaffian expansion along the first row of two-row functions."""
    lam = tuple(lam)
    if not is_strict(lam):
        return MSym()
    if len(lam) % 2:
        lam = lam + (0,)
    if not lam:
        return MSym({(): 1})
    if len(lam) == 2:
        return _q_two_row(*lam)
    out = MSym()
    for j in range(1, len(lam)):
        rest = lam[1:j] + lam[j + 1:]
        sign = 1 if j % 2 else -1
        out = out + sign * (_q_two_row(lam[0], lam[j]) * schur_q_pfaffian(tuple(x for x in rest if x)))
    return out


@lru_cache(maxsize=None)
def schur_p(lam: Partition) -> MSym:
    return schur_q(tuple(lam)).divide_exact(2 ** len(lam))


@lru_cache(maxsize=None)
def p_product(lam: Partition) -> MSym:
    """P_{lam_1} P_{lam_2} ... in the monomial basis."""
    out = MSym({(): 1})
    for x in lam:
        out = out * schur_p((x,))
    return out


def expand_in_schur_p(f: MSym) -> dict[Partition, int]:
    """Coefficients of f in the Schur P basis, by peeling lexicographically largest terms."""
    out: dict[Partition, int] = {}
    rest = f
    while rest:
        lam = max(rest.terms, key=lambda k: (sum(k), k))
        if not is_strict(lam):
            raise ValueError(f"not in the span of Schur P functions (leading term {lam})")
        c = rest.terms[lam]
        out[lam] = c
        rest = rest - schur_p(lam) * c
    return dict(sorted(out.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0]))))


@lru_cache(maxsize=None)
def _h_product(mu: Partition) -> MSym:
    out = MSym({(): 1})
    for x in mu:
        out = out * h_one_row(x)
    return out


@lru_cache(maxsize=None)
def m_to_h(d: int) -> dict[Partition, dict[Partition, int]]:
    """m_lambda = sum_mu c[lambda][mu] h_mu for every partition of d."""
    if d > DEGREE_CAP:
        from .weyl import CapacityError
        raise CapacityError(f"degree {d} exceeds cap {DEGREE_CAP}")
    parts = partitions(d)
    h = [[_h_product(mu).coefficient(lam) for lam in parts] for mu in parts]
    inv = invert(h)
    # rows of h are h_mu in m coordinates, so m = h^{-T} applied to the h vector
    out = {}
    for j, lam in enumerate(parts):
        out[lam] = {mu: as_int(inv[j][i]) for i, mu in enumerate(parts) if inv[j][i]}
    return out


@lru_cache(maxsize=None)
def _q_product(mu: Partition) -> MSym:
    out = MSym({(): 1})
    for x in mu:
        out = out * q_one_row(x)
    return out


@lru_cache(maxsize=None)
def t_lambda(lam: Partition) -> MSym:
    """theta(m_lambda)."""
    lam = tuple(lam)
    out = MSym()
    for mu, c in m_to_h(sum(lam))[lam].items():
        out = out + _q_product(mu) * c
    return out


def theta(f: MSym) -> MSym:
    """The ring map sending h_r to Q_r."""
    out = MSym()
    for lam, c in f.terms.items():
        out = out + t_lambda(lam) * c
    return out


def project_gamma_n(n: int, f: MSym) -> MSym:
    """Drop every m_lambda with lambda_1 > 2n."""
    return MSym({lam: c for lam, c in f.terms.items() if not lam or lam[0] <= 2 * n})


def pair_pproduct(n: int, lam: Sequence[int], f: MSym) -> int:
    """The pairing of P_{lam_1} P_{lam_2} ... with f: the coefficient of M_lambda."""
    lam = tuple(lam)
    if lam and lam[0] > 2 * n:
        raise ValueError(f"largest part of {lam} exceeds {2 * n}")
    q, r = divmod(f.coefficient(lam), 2 ** len(lam))
    if r:
        raise ArithmeticError(f"coefficient of M_{lam} is not an integer")
    return q
