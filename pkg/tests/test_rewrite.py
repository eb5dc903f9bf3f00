import random

import pytest
from hypothesis import given, strategies as st

from shirshov import (
    EMPTY, ZERO, DegLex, InvalidRuleSetError, Polynomial, PreconditionError, RewriteRule,
    RuleSet, check_gsb, enumerate_irr, find_occurrence, is_irreducible_word, leading_term,
    normal_form, reduce_once,
)

from conftest import random_poly
from oracles import all_factorizations, words_upto

A, B, C = 0, 1, 2


def W(s):
    return tuple("abc".index(ch) for ch in s)


def test_find_occurrence_examples():
    assert find_occurrence(W("babca"), W("abc")) == (W("b"), W("a"))
    assert find_occurrence(W("ba"), W("abc")) is None
    # leftmost of all factorizations, found by exhaustive scan
    assert all_factorizations(W("abcabc"), W("abc")) == [(EMPTY, W("abc")), (W("abc"), EMPTY)]
    assert find_occurrence(W("abcabc"), W("abc")) == (EMPTY, W("abc"))


@given(st.lists(st.integers(0, 2), max_size=8).map(tuple),
       st.lists(st.integers(0, 2), min_size=1, max_size=3).map(tuple))
def test_find_occurrence_matches_scan(w, lead):
    occ = all_factorizations(w, lead)
    assert find_occurrence(w, lead) == (occ[0] if occ else None)


def test_reduce_once_examples(jacobson, P):
    f = jacobson[0]
    out, step = reduce_once(P("b*a*b*c*a + b*a - b*c*a"), f, W("babca"))
    assert out == ZERO
    assert (step.rule_index, step.left, step.right, step.coefficient) == (0, W("b"), W("a"), 1)
    assert reduce_once(f.poly, f, W("abc"))[0] == ZERO
    # 3*abc - 3*(abc - c + 1), expanded by hand
    assert reduce_once(P("3*a*b*c"), f, W("abc"))[0] == P("3*c - 3")


def test_reduce_once_preconditions(jacobson, P):
    with pytest.raises(PreconditionError):
        reduce_once(P("c"), jacobson[0], W("abc"))
    with pytest.raises(PreconditionError):
        reduce_once(P("b*a"), jacobson[0], W("ba"))


@pytest.mark.parametrize("text, expected", [
    ("b*a*b*c*a + b*a - b*c*a", "0"),
    ("b*c*a*b*a + b*a - b*c*a", "0"),
    ("b*a*b*c*a - b*c*a + 1", "1 - b*a"),
    ("c", "c"),
])
def test_normal_form_examples(jacobson, P, text, expected):
    for mode in ("head", "full"):
        nf, trace = normal_form(P(text), jacobson, mode)
        assert nf == P(expected)
        assert trace.replay(jacobson) == nf


def test_normal_form_rule_choice(jacobson, P):
    _, t = normal_form(P("b*c*a*b*a + b*a - b*c*a"), jacobson)
    assert t.rules_used() == [1]
    assert (t.steps[0].left, t.steps[0].right) == (W("b"), W("a"))


def test_head_mode_leaves_lower_terms(jacobson, P):
    p = P("c*c*c + a*b*c")
    head, _ = normal_form(p, jacobson, "head")
    full, _ = normal_form(p, jacobson, "full")
    assert head == p
    assert full == P("c*c*c + c - 1")


def test_irreducible_words(jacobson):
    assert is_irreducible_word(W("ba"), jacobson)
    assert not is_irreducible_word(W("abc"), jacobson)
    assert is_irreducible_word(W("bca"), jacobson)
    assert not is_irreducible_word(W("bcabc"), jacobson)


def test_enumerate_irr_counts(jacobson):
    assert len(enumerate_irr(jacobson, 2)) == 13
    irr3 = enumerate_irr(jacobson, 3)
    brute = [w for w in words_upto(3, 3)
             if not any(all_factorizations(w, r.lead) for r in jacobson.rules)]
    assert len(brute) == 38 and set(irr3) == set(brute)
    assert len(irr3) == 38
    keys = [jacobson.order.key(w) for w in irr3]
    assert keys == sorted(keys, reverse=True)
    free = RuleSet(("a", "b", "c"), DegLex(3))
    assert enumerate_irr(free, 1) == [W("c"), W("b"), W("a"), EMPTY]


def test_rules_must_be_monic():
    order = DegLex(2)
    with pytest.raises(InvalidRuleSetError):
        RuleSet.from_polynomials("ab", order, [Polynomial({(0,): 2, EMPTY: 1})])
    with pytest.raises(InvalidRuleSetError):
        RuleSet(("a", "b"), order, (RewriteRule(Polynomial({(0,): 2}), (0,), 0),))
    with pytest.raises(InvalidRuleSetError):
        RuleSet.from_polynomials("ab", order, [Polynomial.constant(1)])
    # sign normalization is allowed
    rs = RuleSet.from_polynomials("ab", order, [Polynomial({(0, 1): -1, EMPTY: 1})])
    assert rs[0].poly == Polynomial({(0, 1): 1, EMPTY: -1})


def test_unknown_mode(jacobson, P):
    with pytest.raises(ValueError):
        normal_form(P("c"), jacobson, "tail")


def _random_ruleset(rng):
    polys = []
    for _ in range(rng.randint(1, 3)):
        lead = tuple(rng.randrange(2) for _ in range(rng.randint(1, 3)))
        p = Polynomial.monomial(lead)
        for _ in range(rng.randint(0, 3)):
            w = tuple(rng.randrange(2) for _ in range(rng.randint(0, len(lead))))
            if w != lead and DegLex(2).key(w) < DegLex(2).key(lead):
                p = p + Polynomial.monomial(w, rng.randint(-3, 3))
        polys.append(p)
    return RuleSet.from_polynomials("ab", DegLex(2), polys)


def test_reduction_fuzz_sound_terminating_irreducible():
    rng = random.Random(7)
    for _ in range(300):
        rules = _random_ruleset(rng)
        p = random_poly(rng, 2, 6)
        for mode in ("head", "full"):
            nf, trace = normal_form(p, rules, mode)
            assert trace.replay(rules) == nf
            assert p - nf == trace.combination(rules)
            if p:
                lt_out = leading_term(nf, rules.order)
                if lt_out:
                    assert rules.order.key(lt_out[1]) <= rules.order.key(leading_term(p, rules.order)[1])
        assert all(is_irreducible_word(w, rules) for w in nf.terms)
        assert nf == normal_form(p, rules, "full", rng=random.Random(1))[0] or not check_gsb(rules).is_gsb


def test_strategy_independence_and_linearity(jacobson):
    rng = random.Random(11)
    for _ in range(100):
        p = random_poly(rng, 3, 6)
        q = random_poly(rng, 3, 6)
        nf = normal_form(p, jacobson)[0]
        for seed in range(3):
            alt, trace = normal_form(p, jacobson, rng=random.Random(seed))
            assert alt == nf
            assert trace.replay(jacobson) == alt
        assert normal_form(p + q, jacobson)[0] == nf + normal_form(q, jacobson)[0]
        assert normal_form(p.scale(-4), jacobson)[0] == nf.scale(-4)


def test_trivial_ruleset_reduces_everything(P):
    rs = RuleSet.trivial(("a", "b", "c"), DegLex(3))
    nf, trace = normal_form(P("a*b - 7*c + 3"), rs)
    assert nf == ZERO
    assert trace.replay(rs) == ZERO
    assert enumerate_irr(rs, 3) == []
