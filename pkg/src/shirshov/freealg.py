"""Free associative algebra over the integers.

Words are tuples of generator ids; the empty tuple is the unit.  A
:class:`Polynomial` is an immutable sparse map from words to nonzero Python
ints, so coefficients never overflow.
"""

from __future__ import annotations

import enum
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

Word = Tuple[int, ...]
EMPTY: Word = ()


class InvalidInputError(ValueError):
    pass


class Cmp(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class DegLex:
    """Degree-lexicographic order.

    ``precedence`` lists generator ids from smallest to largest; by default
    the declaration order is used.
    """

    kind = "deglex"

    def __init__(self, ngens: int, precedence: Optional[Sequence[int]] = None):
        if precedence is None:
            precedence = range(ngens)
        precedence = tuple(precedence)
        if sorted(precedence) != list(range(ngens)):
            raise InvalidInputError(
                f"precedence {precedence} is not a permutation of 0..{ngens - 1}")
        self.ngens = ngens
        self.precedence = precedence
        self._rank = [0] * ngens
        for r, g in enumerate(precedence):
            self._rank[g] = r

    def key(self, w: Word) -> Tuple[int, Tuple[int, ...]]:
        rank = self._rank
        try:
            return len(w), tuple(rank[x] for x in w)
        except (IndexError, TypeError):
            raise InvalidInputError(f"word {w!r} uses a letter outside 0..{self.ngens - 1}") from None

    def check(self, w: Word) -> None:
        for x in w:
            if not (isinstance(x, int) and 0 <= x < self.ngens):
                raise InvalidInputError(f"letter {x!r} outside the alphabet of size {self.ngens}")

    def __eq__(self, other):
        return isinstance(other, DegLex) and self.precedence == other.precedence

    def __hash__(self):
        return hash(("deglex", self.precedence))

    def __repr__(self):
        return f"DegLex({self.ngens}, {list(self.precedence)})"


MonomialOrder = DegLex


def compare_words(u: Word, v: Word, order: MonomialOrder) -> Cmp:
    order.check(u)
    order.check(v)
    ku, kv = order.key(u), order.key(v)
    if ku < kv:
        return Cmp.LESS
    if ku > kv:
        return Cmp.GREATER
    return Cmp.EQUAL


class Polynomial:
    """Element of Z<X>: an immutable map word -> nonzero int."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Word, int] | Iterable[Tuple[Word, int]] = ()):
        acc: Dict[Word, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            w = tuple(w)
            acc[w] = acc.get(w, 0) + int(c)
        self._terms = {w: c for w, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: Dict[Word, int]) -> "Polynomial":
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, n: int) -> "Polynomial":
        return cls._from_clean({EMPTY: n} if n else {})

    @classmethod
    def monomial(cls, w: Sequence[int], c: int = 1) -> "Polynomial":
        return cls._from_clean({tuple(w): c} if c else {})

    @property
    def terms(self) -> Mapping[Word, int]:
        return self._terms

    def coefficient(self, w: Word) -> int:
        return self._terms.get(w, 0)

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def degree(self) -> int:
        """Largest word length in the support; -1 for zero."""
        return max(map(len, self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(w == EMPTY for w in self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Word, int]]:
        return iter(self._terms.items())

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        inner = ", ".join(f"{w}: {c}" for w, c in sorted(self._terms.items()))
        return f"Polynomial({{{inner}}})"

    def __neg__(self):
        return Polynomial._from_clean({w: -c for w, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def scale(self, n: int) -> "Polynomial":
        if not n:
            return ZERO
        return Polynomial._from_clean({w: n * c for w, c in self._terms.items()})

    def sandwich(self, left: Word, right: Word, coeff: int = 1) -> "Polynomial":
        """``coeff * left * self * right`` for words ``left`` and ``right``."""
        if not coeff:
            return ZERO
        return Polynomial._from_clean(
            {left + w + right: coeff * c for w, c in self._terms.items()})

    def sorted_terms(self, order: MonomialOrder):
        """Terms in descending monomial order."""
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)


ZERO = Polynomial()
ONE = Polynomial.constant(1)


def support(p: Polynomial) -> frozenset:
    return p.support()


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    if len(p) < len(q):
        p, q = q, p
    acc = dict(p.terms)
    for w, c in q.terms.items():
        s = acc.get(w, 0) + c
        if s:
            acc[w] = s
        else:
            acc.pop(w, None)
    return Polynomial._from_clean(acc)


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    acc: Dict[Word, int] = {}
    for u, a in p.terms.items():
        for v, b in q.terms.items():
            w = u + v
            acc[w] = acc.get(w, 0) + a * b
    return Polynomial._from_clean({w: c for w, c in acc.items() if c})


def leading_term(p: Polynomial, order: MonomialOrder) -> Optional[Tuple[int, Word]]:
    """Return ``(lc(p), leading word)``, or ``None`` for the zero polynomial.

    A nonzero constant ``n`` gives ``(n, ())``.
    """
    if not p:
        return None
    w = max(p.terms, key=order.key)
    return p.terms[w], w


def leading_word(p: Polynomial, order: MonomialOrder) -> Optional[Word]:
    lt = leading_term(p, order)
    return None if lt is None else lt[1]
