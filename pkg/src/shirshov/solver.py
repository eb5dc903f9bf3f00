"""Degree-bounded search for two-sided inverses in a presented algebra.

The unknown inverse is written as ``x = sum alpha_i u_i`` over irreducible
words ``u_i``.  On a Groebner-Shirshov basis the normal form is Z-linear, so
``u x = 1`` and ``x u = 1`` become an integer linear system in the ``alpha_i``.
Any solution is re-checked by plain reduction before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from .freealg import EMPTY, ONE, Polynomial, Word
from .gsb import check_gsb
from .linalg import solve_integer_linear
from .rewrite import PreconditionError, ReductionTrace, RuleSet, enumerate_irr, normal_form


class InternalConsistencyError(RuntimeError):
    pass


@dataclass(frozen=True)
class LinearSystem:
    """``matrix * alpha = rhs``.  Rows are labelled ``(side, word)`` with side
    ``"left"`` for ``u x = 1`` and ``"right"`` for ``x u = 1``; columns by basis words."""

    rows: Tuple[Tuple[str, Word], ...]
    columns: Tuple[Word, ...]
    matrix: Tuple[Tuple[int, ...], ...]
    rhs: Tuple[int, ...]

    def solve(self) -> Optional[List[int]]:
        return solve_integer_linear(self.matrix, self.rhs, ncols=len(self.columns))


@dataclass(frozen=True)
class InverseCertificate:
    element: Polynomial
    inverse: Polynomial
    left_trace: ReductionTrace
    right_trace: ReductionTrace
    degree_bound: int


@dataclass(frozen=True)
class NoSolutionUpToDegree:
    """No inverse supported on irreducible words of degree <= ``degree_bound``.
    Says nothing about larger degrees."""

    element: Polynomial
    degree_bound: int


@dataclass(frozen=True)
class TrivialRing:
    """1 = 0 in the presented ring, so every element is invertible with inverse 0."""

    element: Polynomial


InverseResult = Union[InverseCertificate, NoSolutionUpToDegree, TrivialRing]


def default_degree_bound(rules: RuleSet) -> int:
    return 2 * max((len(r.lead) for r in rules.rules), default=1)


def verify_inverse(u: Polynomial, x: Polynomial, rules: RuleSet):
    """Return ``(ok, left_trace, right_trace)`` for ``NF(u x - 1)`` and ``NF(x u - 1)``."""
    left, lt = normal_form(u * x - ONE, rules, "full")
    right, rt = normal_form(x * u - ONE, rules, "full")
    return not left and not right, lt, rt


def build_system(u: Polynomial, rules: RuleSet, basis: List[Word]) -> LinearSystem:
    left_cols: List[Polynomial] = []
    right_cols: List[Polynomial] = []
    for w in basis:
        m = Polynomial.monomial(w)
        left_cols.append(normal_form(u * m, rules, "full")[0])
        right_cols.append(normal_form(m * u, rules, "full")[0])

    key = rules.order.key
    rows = []
    matrix = []
    rhs = []
    for side, cols in (("left", left_cols), ("right", right_cols)):
        words = set([EMPTY])
        for p in cols:
            words.update(p.terms)
        for w in sorted(words, key=key, reverse=True):
            rows.append((side, w))
            matrix.append(tuple(p.coefficient(w) for p in cols))
            rhs.append(1 if w == EMPTY else 0)
    return LinearSystem(tuple(rows), tuple(basis), tuple(matrix), tuple(rhs))


def invert_element(u: Polynomial, rules: RuleSet,
                   max_degree: Optional[int] = None) -> InverseResult:
    """Look for a two-sided inverse of ``u`` supported on irreducible words
    of degree at most ``max_degree``."""
    if rules.is_trivial:
        return TrivialRing(u)
    report = check_gsb(rules)
    if not report.is_gsb:
        bad = report.failing()[0].composition
        raise PreconditionError(
            f"rule set is not a Groebner-Shirshov basis ({bad.kind.value} composition of rules "
            f"{bad.rule_left} and {bad.rule_right} does not reduce to 0); complete it first")
    if max_degree is None:
        max_degree = default_degree_bound(rules)
    if not normal_form(u, rules, "full")[0]:
        raise PreconditionError("element is 0 in the presented ring")

    basis = enumerate_irr(rules, max_degree)
    system = build_system(u, rules, basis)
    alpha = system.solve()
    if alpha is None:
        return NoSolutionUpToDegree(u, max_degree)
    x = Polynomial({w: a for w, a in zip(basis, alpha) if a})
    ok, lt, rt = verify_inverse(u, x, rules)
    if not ok:
        raise InternalConsistencyError(
            f"linear solution {x!r} fails verification; normal forms are not linear here")
    return InverseCertificate(u, x, lt, rt, max_degree)
