"""Reduction of polynomials modulo a set of monic rules, with replayable traces."""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .freealg import (
    EMPTY,
    DegLex,
    InvalidInputError,
    MonomialOrder,
    Polynomial,
    Word,
    leading_term,
)


class InvalidRuleSetError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class RewriteRule:
    poly: Polynomial
    lead: Word
    index: int

    @property
    def tail(self) -> Polynomial:
        """``lead - poly``: what the lead word rewrites to."""
        return Polynomial.monomial(self.lead) - self.poly


@dataclass(frozen=True)
class RuleSet:
    """Generator names, a monomial order and an ordered list of monic rules.

    This doubles as a presentation of the algebra Z<X | rules>.
    """

    alphabet: Tuple[str, ...]
    order: MonomialOrder
    rules: Tuple[RewriteRule, ...] = ()
    unit_ideal: bool = field(default=False, repr=False)

    def __post_init__(self):
        if self.order.ngens != len(self.alphabet):
            raise InvalidRuleSetError("order and alphabet disagree on the number of generators")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InvalidRuleSetError(f"duplicate generator names in {self.alphabet}")
        seen = set()
        for i, r in enumerate(self.rules):
            if r.index != i:
                raise InvalidRuleSetError(f"rule at position {i} carries index {r.index}")
            lt = leading_term(r.poly, self.order)
            if lt is None:
                raise InvalidRuleSetError(f"rule {i} is the zero polynomial")
            c, w = lt
            if c != 1:
                raise InvalidRuleSetError(f"rule {i} is not monic (leading coefficient {c})")
            if w != r.lead:
                raise InvalidRuleSetError(f"rule {i} caches a wrong leading word")
            if w == EMPTY and not (self.unit_ideal and len(self.rules) == 1):
                raise InvalidRuleSetError(
                    f"rule {i} is a constant; the presentation collapses (complete it instead)")
            for x in w:
                if not 0 <= x < len(self.alphabet):
                    raise InvalidRuleSetError(f"rule {i} uses an unknown generator id {x}")
            if r.poly in seen:
                raise InvalidRuleSetError(f"rule {i} duplicates an earlier rule")
            seen.add(r.poly)

    @classmethod
    def from_polynomials(cls, alphabet: Sequence[str], order: Optional[MonomialOrder],
                         polys: Sequence[Polynomial]) -> "RuleSet":
        """Build a rule set, sign-normalizing each polynomial and skipping zeros
        and duplicates.  Leading coefficients other than +-1 are rejected."""
        alphabet = tuple(alphabet)
        if order is None:
            order = DegLex(len(alphabet))
        rules: List[RewriteRule] = []
        seen = set()
        for p in polys:
            lt = leading_term(p, order)
            if lt is None:
                continue
            c, w = lt
            if c == -1:
                p = -p
            elif c != 1:
                raise InvalidRuleSetError(
                    f"polynomial with leading coefficient {c} cannot be a monic rule")
            if p in seen:
                continue
            seen.add(p)
            rules.append(RewriteRule(p, w, len(rules)))
        return cls(alphabet, order, tuple(rules))

    @classmethod
    def trivial(cls, alphabet: Sequence[str], order: MonomialOrder) -> "RuleSet":
        """The presentation in which 1 = 0; every polynomial reduces to 0."""
        return cls(tuple(alphabet), order, (RewriteRule(Polynomial.constant(1), EMPTY, 0),),
                   unit_ideal=True)

    @property
    def is_trivial(self) -> bool:
        return self.unit_ideal

    @property
    def polynomials(self) -> List[Polynomial]:
        return [r.poly for r in self.rules]

    def __len__(self):
        return len(self.rules)

    def __getitem__(self, i) -> RewriteRule:
        return self.rules[i]

    def with_polynomials(self, polys: Sequence[Polynomial]) -> "RuleSet":
        return RuleSet.from_polynomials(self.alphabet, self.order, polys)


@dataclass(frozen=True)
class ReductionStep:
    rule_index: int
    left: Word
    right: Word
    coefficient: int
    word: Word

    def term(self, rules: RuleSet) -> Polynomial:
        """The subtracted multiple ``coefficient * left * g * right``."""
        return rules[self.rule_index].poly.sandwich(self.left, self.right, self.coefficient)


@dataclass(frozen=True)
class ReductionTrace:
    input: Polynomial
    steps: Tuple[ReductionStep, ...]
    output: Polynomial

    def replay(self, rules: RuleSet) -> Polynomial:
        p = self.input
        for s in self.steps:
            if p.coefficient(s.word) != s.coefficient:
                raise PreconditionError(f"step on {s.word} does not match the polynomial")
            p = p - s.term(rules)
            if p.coefficient(s.word):
                raise PreconditionError(f"step on {s.word} did not eliminate it")
        return p

    def combination(self, rules: RuleSet) -> Polynomial:
        """Expand ``sum coefficient * left * g * right`` over the steps; equals
        ``input - output`` for a sound trace."""
        acc: Dict[Word, int] = {}
        for s in self.steps:
            for w, c in s.term(rules):
                acc[w] = acc.get(w, 0) + c
        return Polynomial(acc)

    def rules_used(self) -> List[int]:
        return [s.rule_index for s in self.steps]


def find_occurrence(w: Word, lead: Word) -> Optional[Tuple[Word, Word]]:
    """Leftmost factorization ``w = left + lead + right``, or None."""
    n, k = len(w), len(lead)
    for i in range(n - k + 1):
        if w[i:i + k] == lead:
            return w[:i], w[i + k:]
    return None


def all_occurrences(w: Word, lead: Word) -> List[Tuple[Word, Word]]:
    n, k = len(w), len(lead)
    return [(w[:i], w[i + k:]) for i in range(n - k + 1) if w[i:i + k] == lead]


def _eliminate(p: Polynomial, rule: RewriteRule, target: Word,
               left: Word, right: Word) -> Tuple[Polynomial, ReductionStep]:
    alpha = p.coefficient(target)
    step = ReductionStep(rule.index, left, right, alpha, target)
    return p - rule.poly.sandwich(left, right, alpha), step


def reduce_once(p: Polynomial, rule: RewriteRule, target: Word) -> Tuple[Polynomial, ReductionStep]:
    """Eliminate ``target`` from ``p`` using the leftmost occurrence of the rule's lead."""
    if not p.coefficient(target):
        raise PreconditionError(f"word {target} is not in the support")
    occ = find_occurrence(target, rule.lead)
    if occ is None:
        raise PreconditionError(f"lead {rule.lead} of rule {rule.index} does not occur in {target}")
    return _eliminate(p, rule, target, *occ)


def _first_match(w: Word, rules: RuleSet) -> Optional[Tuple[RewriteRule, Word, Word]]:
    # lowest rule index, then leftmost occurrence
    for r in rules.rules:
        occ = find_occurrence(w, r.lead)
        if occ is not None:
            return r, occ[0], occ[1]
    return None


def _random_match(w: Word, rules: RuleSet, rng: random.Random):
    choices = [(r, a, b) for r in rules.rules for a, b in all_occurrences(w, r.lead)]
    return rng.choice(choices) if choices else None


def is_irreducible_word(w: Word, rules: RuleSet) -> bool:
    return _first_match(w, rules) is None


def normal_form(p: Polynomial, rules: RuleSet, mode: str = "full",
                rng: Optional[random.Random] = None) -> Tuple[Polynomial, ReductionTrace]:
    """Reduce ``p`` modulo ``rules``.

    ``mode="head"`` only ever rewrites the leading word and stops once it is
    irreducible; ``mode="full"`` also rewrites lower terms.  The default
    strategy picks the largest reducible word, the lowest-index rule and its
    leftmost occurrence.  Passing ``rng`` randomizes the choice of word (full
    mode), rule and occurrence instead.
    """
    if mode not in ("head", "full"):
        raise InvalidInputError(f"unknown reduction mode {mode!r}")
    for r in rules.rules:
        lt = leading_term(r.poly, rules.order)
        if lt is None or lt[0] != 1:
            raise InvalidRuleSetError(f"rule {r.index} is not monic")
    if rng is not None:
        return _normal_form_random(p, rules, mode, rng)

    key = rules.order.key
    terms = dict(p.terms)
    steps: List[ReductionStep] = []
    heap = [(_neg(key(w)), w) for w in terms]
    heapq.heapify(heap)
    queued = set(terms)
    while heap:
        _, w = heapq.heappop(heap)
        queued.discard(w)
        alpha = terms.get(w)
        if not alpha:
            continue
        m = _first_match(w, rules)
        if m is None:
            if mode == "head":
                break
            continue
        rule, left, right = m
        steps.append(ReductionStep(rule.index, left, right, alpha, w))
        for v, c in rule.poly.terms.items():
            x = left + v + right
            s = terms.get(x, 0) - alpha * c
            if s:
                terms[x] = s
                if x not in queued:
                    queued.add(x)
                    heapq.heappush(heap, (_neg(key(x)), x))
            else:
                terms.pop(x, None)
    out = Polynomial(terms)
    return out, ReductionTrace(p, tuple(steps), out)


def _neg(k):
    # max-heap key for (length, ranks) tuples
    return (-k[0], tuple(-r for r in k[1]))


def _normal_form_random(p, rules, mode, rng):
    key = rules.order.key
    steps = []
    cur = p
    while cur:
        if mode == "head":
            w = max(cur.terms, key=key)
            m = _random_match(w, rules, rng)
            if m is None:
                break
        else:
            reducible = [w for w in cur.terms if not is_irreducible_word(w, rules)]
            if not reducible:
                break
            w = rng.choice(sorted(reducible, key=key))
            m = _random_match(w, rules, rng)
        cur, step = _eliminate(cur, m[0], w, m[1], m[2])
        steps.append(step)
    return cur, ReductionTrace(p, tuple(steps), cur)


def enumerate_irr(rules: RuleSet, max_degree: int) -> List[Word]:
    """All irreducible words of degree <= max_degree, largest first."""
    if max_degree < 0:
        raise InvalidInputError("max_degree must be non-negative")
    if rules.is_trivial:
        return []
    leads = [r.lead for r in rules.rules]
    n = len(rules.alphabet)
    layer = [EMPTY]
    out = [EMPTY]
    for _ in range(max_degree):
        nxt = []
        for w in layer:
            for x in range(n):
                v = w + (x,)
                # w is irreducible, so only factors ending at the new letter matter
                if not any(len(l) <= len(v) and v[len(v) - len(l):] == l for l in leads):
                    nxt.append(v)
        out.extend(nxt)
        layer = nxt
    out.sort(key=rules.order.key, reverse=True)
    return out
