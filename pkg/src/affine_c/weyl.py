"""
The affine Weyl group of type C_n^(1).

Elements are stored by the integer matrix of their action on the affine coroot
lattice; column ``j`` holds ``w(alpha_j^vee)``.  The action is faithful, so the
matrix is a canonical form.  ``w s_i`` is longer than ``w`` exactly when
``w(alpha_i^vee)`` is a positive coroot, which makes right descents, length and
a canonical reduced word computable from the matrix alone.

The canonical word of an element is the reduced word whose *reversal* is
lexicographically least (the last letter is the smallest right descent, and so
on).  Elements are totally ordered by ``(length, canonical word)``.

>>> w = from_word(2, "0101")
>>> w == from_word(2, "1010"), w.length, w.word_str()
(True, 4, '1010')
>>> is_grassmannian(from_word(2, "10")), is_grassmannian(from_word(2, "20"))
(True, False)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .cartan import CartanData, CorootVector, type_c_affine, unit_coroot, word_act_coroot

__all__ = [
    "CapacityError", "WeylElement", "GroupTable",
    "identity", "from_word", "parse_word", "format_word", "length", "multiply",
    "is_reduced", "reduced_words", "is_grassmannian", "bruhat_leq",
    "bruhat_leq_subword", "covers_below", "covers_of", "cover_coroot",
    "group_table", "default_cap",
]


class CapacityError(RuntimeError):
    """A request exceeds a configured enumeration cap."""


Word = tuple[int, ...]


class WeylElement:
    __slots__ = ("n", "mat", "_hash", "_length", "_word", "_covers")

    def __init__(self, n: int, mat: tuple[int, ...]):
        self.n = n
        self.mat = mat
        self._hash = hash((n, mat))
        self._length: int | None = None
        self._word: Word | None = None
        self._covers = None

    @property
    def cartan(self) -> CartanData:
        return type_c_affine(self.n)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.n == other.n and self.mat == other.mat

    def __hash__(self):
        return self._hash

    def sort_key(self) -> tuple[int, Word]:
        return (self.length, self.word)

    def __lt__(self, other: WeylElement) -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"WeylElement({self.n}, {self.word_str()!r})"

    def column(self, j: int) -> CorootVector:
        size = self.n + 1
        return tuple(self.mat[r * size + j] for r in range(size))

    def is_right_descent(self, i: int) -> bool:
        size = self.n + 1
        for r in range(size):
            x = self.mat[r * size + i]
            if x:
                return x < 0
        raise AssertionError("zero column in a Weyl group matrix")

    def right_descents(self) -> list[int]:
        return [i for i in range(self.n + 1) if self.is_right_descent(i)]

    def left_descents(self) -> list[int]:
        return self.inverse().right_descents()

    def mul_simple(self, i: int) -> WeylElement:
        """The product ``w s_i``."""
        size = self.n + 1
        a = self.cartan.a
        m = list(self.mat)
        col_i = [self.mat[r * size + i] for r in range(size)]
        for j in range(size):
            if j == i:
                for r in range(size):
                    m[r * size + i] = -col_i[r]
            elif a[j][i]:
                f = a[j][i]
                for r in range(size):
                    m[r * size + j] -= f * col_i[r]
        return WeylElement(self.n, tuple(m))

    def simple_mul(self, i: int) -> WeylElement:
        """The product ``s_i w``."""
        size = self.n + 1
        a = self.cartan.a
        m = list(self.mat)
        for c in range(size):
            m[i * size + c] -= sum(self.mat[k * size + c] * a[k][i] for k in range(size) if a[k][i])
        return WeylElement(self.n, tuple(m))

    def _reduce(self) -> None:
        letters = []
        x = self
        while True:
            i = next((i for i in range(self.n + 1) if x.is_right_descent(i)), None)
            if i is None:
                break
            letters.append(i)
            x = x.mul_simple(i)
        self._word = tuple(reversed(letters))
        self._length = len(letters)

    @property
    def length(self) -> int:
        if self._length is None:
            self._reduce()
        return self._length

    @property
    def word(self) -> Word:
        """The canonical reduced word."""
        if self._word is None:
            self._reduce()
        return self._word

    def word_str(self) -> str:
        return format_word(self.n, self.word)

    def inverse(self) -> WeylElement:
        x = identity(self.n)
        for i in reversed(self.word):
            x = x.mul_simple(i)
        return x

    def __mul__(self, other: WeylElement) -> WeylElement:
        return multiply(self, other)

    def mul_word_additive(self, word: Iterable[int]) -> WeylElement | None:
        """``w s_{i_1} ... s_{i_k}`` if every step raises the length, else None."""
        x = self
        for i in word:
            if x.is_right_descent(i):
                return None
            x = x.mul_simple(i)
        return x

    def strip_suffix(self, word: Sequence[int]) -> WeylElement | None:
        """``w (s_{i_1} ... s_{i_k})^{-1}`` if the word is a reduced right factor of w, else None."""
        x = self
        for i in reversed(word):
            if not x.is_right_descent(i):
                return None
            x = x.mul_simple(i)
        return x


def format_word(n: int, word: Sequence[int]) -> str:
    if n <= 9:
        return "".join(str(i) for i in word)
    return ",".join(str(i) for i in word)


def parse_word(n: int, text: str | Sequence[int]) -> Word:
    """Parse a digit string (n <= 9) or a comma separated list of indices."""
    if not isinstance(text, str):
        word = tuple(int(i) for i in text)
    elif "," in text:
        word = tuple(int(part) for part in text.split(",") if part.strip())
    elif n > 9 and text.strip():
        raise ValueError("words for n > 9 must be comma separated")
    else:
        word = tuple(int(ch) for ch in text.strip())
    for i in word:
        if not 0 <= i <= n:
            raise IndexError(f"letter {i} outside 0..{n}")
    return word


@lru_cache(maxsize=None)
def identity(n: int) -> WeylElement:
    size = n + 1
    e = WeylElement(n, tuple(1 if r == c else 0 for r in range(size) for c in range(size)))
    e._length, e._word = 0, ()
    return e


def from_word(n: int, word: str | Sequence[int]) -> WeylElement:
    """The product s_{w_1} s_{w_2} ... (leftmost letter is the first factor)."""
    x = identity(n)
    for i in parse_word(n, word):
        x = x.mul_simple(i)
    return x


def length(w: WeylElement) -> int:
    return w.length


def multiply(v: WeylElement, w: WeylElement) -> WeylElement:
    if v.n != w.n:
        raise ValueError("elements of different groups")
    size = v.n + 1
    a, b = v.mat, w.mat
    m = tuple(
        sum(a[r * size + k] * b[k * size + c] for k in range(size))
        for r in range(size) for c in range(size)
    )
    return WeylElement(v.n, m)


def is_reduced(n: int, word: str | Sequence[int]) -> bool:
    word = parse_word(n, word)
    return from_word(n, word).length == len(word)


def is_grassmannian(w: WeylElement) -> bool:
    return not any(w.is_right_descent(i) for i in range(1, w.n + 1))


def default_cap(n: int) -> int:
    return 12 if n <= 3 else 8


def reduced_words(w: WeylElement, cap: int | None = None) -> frozenset[Word]:
    """All reduced words of w."""
    cap = default_cap(w.n) if cap is None else cap
    if w.length > cap:
        raise CapacityError(f"length {w.length} exceeds reduced-word cap {cap}")
    return _reduced_words(w)


@lru_cache(maxsize=200_000)
def _reduced_words(w: WeylElement) -> frozenset[Word]:
    if w.length == 0:
        return frozenset({()})
    out = set()
    for i in w.right_descents():
        for u in _reduced_words(w.mul_simple(i)):
            out.add(u + (i,))
    return frozenset(out)


def bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    """Bruhat comparison by the lifting property."""
    return _bruhat_leq(v, w)


@lru_cache(maxsize=500_000)
def _bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    if v.length > w.length:
        return False
    if v.length == 0:
        return True
    if v.length == w.length:
        return v == w
    s = w.word[-1]
    ws = w.mul_simple(s)
    if v.is_right_descent(s):
        return _bruhat_leq(v.mul_simple(s), ws)
    return _bruhat_leq(v, ws)


def bruhat_leq_subword(v: WeylElement, w: WeylElement) -> bool:
    """Bruhat comparison by searching the subwords of one reduced word of w."""
    k = v.length
    if k > w.length:
        return False
    word = w.word
    for positions in combinations(range(len(word)), k):
        if from_word(w.n, [word[p] for p in positions]) == v:
            return True
    return False


def covers_below(w: WeylElement) -> list[tuple[WeylElement, CorootVector]]:
    """Pairs ``(v, alpha_vw^vee)`` for every v covered by w.

    Deleting letter ``j`` from a reduced word ``i_1 ... i_l`` of w gives ``v``
    when the result is reduced, and then the cover coroot is
    ``s_{i_l} ... s_{i_{j+1}}(alpha_{i_j}^vee)``.
    """
    if w._covers is None:
        data = w.cartan
        word = w.word
        out = []
        for j in range(len(word)):
            v = from_word(w.n, word[:j] + word[j + 1:])
            if v.length == len(word) - 1:
                out.append((v, word_act_coroot(data, word[:j:-1], unit_coroot(data, word[j]))))
        w._covers = out
    return w._covers


def cover_coroot(v: WeylElement, w: WeylElement) -> CorootVector:
    for u, mu in covers_below(w):
        if u == v:
            return mu
    raise ValueError(f"{v!r} is not covered by {w!r}")


@dataclass
class GroupTable:
    """All elements of length <= cap, layer by layer."""
    n: int
    cap: int
    layers: list[list[WeylElement]]
    _above: dict = field(default_factory=dict, repr=False)

    def layer(self, r: int) -> list[WeylElement]:
        if r > self.cap:
            raise CapacityError(f"length {r} exceeds table cap {self.cap}")
        return self.layers[r] if r >= 0 else []

    def __iter__(self) -> Iterator[WeylElement]:
        for layer in self.layers:
            yield from layer

    def __len__(self) -> int:
        return sum(len(layer) for layer in self.layers)

    def covers_above(self, v: WeylElement) -> list[WeylElement]:
        r = v.length + 1
        if r not in self._above:
            index: dict[WeylElement, list[WeylElement]] = {}
            for w in self.layer(r):
                for u, _ in covers_below(w):
                    index.setdefault(u, []).append(w)
            self._above[r] = index
        return list(self._above[r].get(v, []))


@lru_cache(maxsize=None)
def group_table(n: int, cap: int | None = None) -> GroupTable:
    """Breadth-first closure of the identity under right multiplication."""
    cap = default_cap(n) if cap is None else cap
    layers = [[identity(n)]]
    for r in range(1, cap + 1):
        seen = {}
        for x in layers[-1]:
            for i in range(n + 1):
                if not x.is_right_descent(i):
                    y = x.mul_simple(i)
                    if y not in seen:
                        y._length = r
                        seen[y] = y
        layers.append(sorted(seen))
    return GroupTable(n, cap, layers)


def covers_of(v: WeylElement, table: GroupTable | None = None) -> list[WeylElement]:
    """Elements covering v, found by scanning the next layer of the table."""
    table = group_table(v.n) if table is None else table
    if v.length + 1 > table.cap:
        raise CapacityError(f"covers of length {v.length + 1} exceed table cap {table.cap}")
    return sorted(table.covers_above(v))
