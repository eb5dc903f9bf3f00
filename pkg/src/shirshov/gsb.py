"""Compositions, Groebner-Shirshov basis checks, completion and ideal membership."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .freealg import EMPTY, Polynomial, Word, leading_term
from .rewrite import (
    PreconditionError,
    ReductionTrace,
    RewriteRule,
    RuleSet,
    all_occurrences,
    normal_form,
)

# Explicit combination sum c * left * r_j * right of original relations r_j,
# keyed by (left, j, right).
Witness = Dict[Tuple[Word, int, Word], int]


class Kind(str, enum.Enum):
    INTERSECTION = "intersection"
    INCLUSION = "inclusion"


@dataclass(frozen=True)
class Composition:
    """``poly = f * right - left * g`` (intersection) or ``f - left * g * right``
    (inclusion), where f, g are rules ``rule_left`` and ``rule_right``."""

    kind: Kind
    ambiguity: Word
    rule_left: int
    rule_right: int
    left: Word
    right: Word
    poly: Polynomial


@dataclass(frozen=True)
class GsbEntry:
    composition: Composition
    residual: Polynomial
    trace: ReductionTrace


@dataclass(frozen=True)
class GsbReport:
    is_gsb: bool
    entries: Tuple[GsbEntry, ...]

    def failing(self) -> List[GsbEntry]:
        return [e for e in self.entries if e.residual]


def _composition_poly(kind, f: RewriteRule, g: RewriteRule, left: Word, right: Word):
    if kind is Kind.INTERSECTION:
        return f.poly.sandwich(EMPTY, right) - g.poly.sandwich(left, EMPTY)
    return f.poly - g.poly.sandwich(left, right)


def find_compositions(rules: RuleSet) -> List[Composition]:
    if rules.is_trivial:
        return []
    found = []
    for f in rules.rules:
        F = f.lead
        for g in rules.rules:
            G = g.lead
            for k in range(1, min(len(F), len(G))):
                if F[len(F) - k:] == G[:k]:
                    left, right = F[:len(F) - k], G[k:]
                    found.append(Composition(
                        Kind.INTERSECTION, F + right, f.index, g.index, left, right,
                        _composition_poly(Kind.INTERSECTION, f, g, left, right)))
            if f.index != g.index:
                for left, right in all_occurrences(F, G):
                    found.append(Composition(
                        Kind.INCLUSION, F, f.index, g.index, left, right,
                        _composition_poly(Kind.INCLUSION, f, g, left, right)))
    key = rules.order.key
    found.sort(key=lambda c: (_desc(key(c.ambiguity)), c.rule_left, c.rule_right,
                              c.kind.value, len(c.left)))
    return found


def _desc(k):
    return (-k[0], tuple(-r for r in k[1]))


def check_gsb(rules: RuleSet) -> GsbReport:
    entries = []
    for comp in find_compositions(rules):
        residual, trace = normal_form(comp.poly, rules, "full")
        entries.append(GsbEntry(comp, residual, trace))
    return GsbReport(all(not e.residual for e in entries), tuple(entries))


def membership(p: Polynomial, rules: RuleSet) -> Tuple[bool, ReductionTrace]:
    """Decide ``p in I(rules)`` by head reduction; the trace is the certificate.

    Only valid for a Groebner-Shirshov basis; anything else raises
    :class:`PreconditionError`.
    """
    report = check_gsb(rules)
    if not report.is_gsb:
        bad = report.failing()[0].composition
        raise PreconditionError(
            f"rule set is not a Groebner-Shirshov basis: {bad.kind.value} composition of "
            f"rules {bad.rule_left} and {bad.rule_right} at ambiguity {bad.ambiguity} "
            f"does not reduce to 0")
    nf, trace = normal_form(p, rules, "head")
    return not nf, trace


# -- completion -------------------------------------------------------------

class Outcome(str, enum.Enum):
    COMPLETED = "completed"
    CONSTANT_OBSTRUCTION = "constant_obstruction"
    NONMONIC_OBSTRUCTION = "nonmonic_obstruction"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class AddedRule:
    """A rule introduced by completion, with the composition and trace it came from."""

    poly: Polynomial
    composition: Composition
    trace: ReductionTrace
    rules_at_time: RuleSet


@dataclass(frozen=True)
class CompletionResult:
    outcome: Outcome
    rules: RuleSet
    original: RuleSet
    witnesses: Tuple[Witness, ...]
    added: Tuple[AddedRule, ...] = ()
    constant: Optional[int] = None
    residual: Optional[Polynomial] = None
    residual_witness: Optional[Witness] = None
    reason: str = ""

    @property
    def trivial(self) -> bool:
        return self.outcome is Outcome.COMPLETED and self.rules.is_trivial


def expand_witness(witness: Witness, original: RuleSet) -> Polynomial:
    acc: Dict[Word, int] = {}
    for (left, j, right), c in witness.items():
        for w, a in original[j].poly.sandwich(left, right, c):
            acc[w] = acc.get(w, 0) + a
    return Polynomial(acc)


def _w_add(acc: Witness, other: Witness, coeff: int = 1, left: Word = EMPTY, right: Word = EMPTY):
    for (a, j, b), c in other.items():
        k = (left + a, j, b + right)
        s = acc.get(k, 0) + coeff * c
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


def _w_minus_trace(base: Witness, trace: ReductionTrace, witness_of) -> Witness:
    out = dict(base)
    for s in trace.steps:
        _w_add(out, witness_of(s.rule_index), -s.coefficient, s.left, s.right)
    return out


class _Stop(Exception):
    def __init__(self, result):
        self.result = result


class _Completion:
    def __init__(self, original: RuleSet, max_degree: int, max_rules: int):
        self.original = original
        self.max_degree = max_degree
        self.max_rules = max_rules
        self.polys: List[Polynomial] = [r.poly for r in original.rules]
        self.witnesses: List[Witness] = [{(EMPTY, i, EMPTY): 1} for i in range(len(original))]
        self.added: List[AddedRule] = []

    def ruleset(self, skip: Optional[int] = None) -> RuleSet:
        polys = [p for i, p in enumerate(self.polys) if i != skip]
        return RuleSet.from_polynomials(self.original.alphabet, self.original.order, polys)

    def result(self, outcome, rules=None, witnesses=None, **kw) -> CompletionResult:
        if rules is None:
            rules = self.ruleset()
        if witnesses is None:
            witnesses = self.witnesses
        return CompletionResult(outcome, rules, self.original, tuple(witnesses),
                                tuple(self.added), **kw)

    def classify(self, r: Polynomial, witness: Witness) -> Polynomial:
        """Sign-normalize a nonzero residual or stop with an obstruction."""
        c, w = leading_term(r, self.original.order)
        if w == EMPTY:
            if abs(c) == 1:
                raise _Stop(self.result(
                    Outcome.COMPLETED, RuleSet.trivial(self.original.alphabet, self.original.order),
                    witnesses=[{k: c * v for k, v in witness.items()}], residual=r, residual_witness=witness,
                    reason="1 lies in the ideal: the presented ring is trivial"))
            raise _Stop(self.result(Outcome.CONSTANT_OBSTRUCTION, constant=abs(c), residual=r,
                                    residual_witness=witness,
                                    reason=f"the constant {abs(c)} lies in the ideal"))
        if abs(c) != 1:
            raise _Stop(self.result(Outcome.NONMONIC_OBSTRUCTION, residual=r, residual_witness=witness,
                                    reason=f"residual has leading coefficient {c}"))
        return r if c == 1 else -r

    def interreduce(self):
        changed = True
        while changed:
            changed = False
            for i in range(len(self.polys)):
                others = [k for k in range(len(self.polys)) if k != i]
                rs = self.ruleset(skip=i)
                nf, trace = normal_form(self.polys[i], rs, "full")
                if nf == self.polys[i]:
                    continue
                wit = _w_minus_trace(self.witnesses[i], trace,
                                     lambda idx: self.witnesses[others[idx]])
                changed = True
                if not nf or nf in self.polys or -nf in self.polys:
                    del self.polys[i], self.witnesses[i]
                    break
                c = leading_term(nf, self.original.order)[0]
                nf = self.classify(nf, wit)
                if c == -1:
                    wit = {k: -v for k, v in wit.items()}
                self.polys[i], self.witnesses[i] = nf, wit
                break

    def run(self) -> CompletionResult:
        self.interreduce()
        while True:
            rs = self.ruleset()
            comps = find_compositions(rs)
            comps.reverse()  # ascending by ambiguity word
            for comp in comps:
                if len(comp.ambiguity) > self.max_degree:
                    return self.result(Outcome.BUDGET_EXHAUSTED,
                                       reason=f"ambiguity of degree {len(comp.ambiguity)} "
                                              f"exceeds max_degree={self.max_degree}")
                r, trace = normal_form(comp.poly, rs, "full")
                if not r:
                    continue
                wit: Witness = {}
                if comp.kind is Kind.INTERSECTION:
                    _w_add(wit, self.witnesses[comp.rule_left], 1, EMPTY, comp.right)
                    _w_add(wit, self.witnesses[comp.rule_right], -1, comp.left, EMPTY)
                else:
                    _w_add(wit, self.witnesses[comp.rule_left], 1)
                    _w_add(wit, self.witnesses[comp.rule_right], -1, comp.left, comp.right)
                wit = _w_minus_trace(wit, trace, lambda idx: self.witnesses[idx])
                c = leading_term(r, self.original.order)[0]
                r = self.classify(r, wit)
                if c == -1:
                    wit = {k: -v for k, v in wit.items()}
                if len(self.polys) + 1 > self.max_rules:
                    return self.result(Outcome.BUDGET_EXHAUSTED,
                                       reason=f"rule count would exceed max_rules={self.max_rules}")
                self.polys.append(r)
                self.witnesses.append(wit)
                self.added.append(AddedRule(r, comp, trace, rs))
                self.interreduce()
                break
            else:
                return self.result(Outcome.COMPLETED)


def complete(rules: RuleSet, max_degree: int = 16, max_rules: int = 64) -> CompletionResult:
    """Close ``rules`` under compositions (Knuth-Bendix style, over Z).

    Residuals are added as rules when their leading coefficient is +-1;
    constants and other leading coefficients end the run with an obstruction.
    Every resulting rule carries a witness expressing it as an explicit
    combination of the original relations.
    """
    if max_degree <= 0 or max_rules <= 0:
        raise ValueError("completion budgets must be positive")
    try:
        return _Completion(rules, max_degree, max_rules).run()
    except _Stop as stop:
        return stop.result
