"""Exit criteria.  Every check is exact; a summary line per criterion is
printed at the end of the pytest run."""

import random

import pytest

from shirshov import (
    DegLex, InverseCertificate, Kind, Outcome, Polynomial, RuleSet, check_gsb, complete,
    enumerate_irr, invert_element, is_irreducible_word, membership, normal_form,
    parse_polynomial, verify_inverse,
)
from shirshov.cli import main

from conftest import DATA, random_poly
from oracles import confluent_up_to, ideal_spanning_set, in_integer_span, words_upto

criterion = pytest.mark.criterion
JAC = str(DATA / "jacobson.pres")
ZERO = Polynomial()


def W(s):
    return tuple("abc".index(ch) for ch in s)


@criterion(1, "Jacobson presentation is a GSB with exactly two intersection compositions")
def test_gsb_check(jacobson, capsys):
    report = check_gsb(jacobson)
    assert report.is_gsb
    assert len(report.entries) == 2
    assert all(e.composition.kind is Kind.INTERSECTION for e in report.entries)
    assert {e.composition.ambiguity for e in report.entries} == {W("abcab"), W("cabc")}
    assert [e.residual for e in report.entries] == [ZERO, ZERO]
    assert main(["gsb-check", JAC]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "GSB: yes (2 compositions, all reduce to 0)"


@criterion(2, "inverse of 1 - b*a at degree 3 is b*c*a + 1, certified by f (left) and g (right)")
def test_jacobson_inverse(jacobson, P, capsys):
    u = P("1 - b*a")
    cert = invert_element(u, jacobson, 3)
    assert isinstance(cert, InverseCertificate)
    assert cert.inverse == P("b*c*a + 1")
    ok, left, right = verify_inverse(u, cert.inverse, jacobson)
    assert ok
    assert left.replay(jacobson) == ZERO and right.replay(jacobson) == ZERO
    assert left.rules_used() == [0] and right.rules_used() == [1]
    assert main(["invert", JAC, "--elem", "1 - b*a", "--max-degree", "3"]) == 0
    assert capsys.readouterr().out.strip() == "b*c*a + 1"


@criterion(3, "inverse of 1 - a*b is c")
def test_defining_relation_inverse(jacobson, P):
    cert = invert_element(P("1 - a*b"), jacobson)
    assert isinstance(cert, InverseCertificate)
    assert cert.inverse == P("c")


@criterion(4, "membership certificates for b*a*b*c*a + b*a - b*c*a (yes) and c (no)")
def test_membership_certificates(jacobson, P, capsys):
    ok, trace = membership(P("b*a*b*c*a + b*a - b*c*a"), jacobson)
    assert ok and trace.steps and trace.replay(jacobson) == ZERO
    ok, trace = membership(P("c"), jacobson)
    assert not ok and trace.output == P("c")
    assert main(["member", JAC, "--poly", "c"]) == 0
    assert capsys.readouterr().out.strip() == "no (normal form: c)"


@criterion(5, "membership agrees with the integer span oracle on 600 random polynomials")
def test_membership_oracle(jacobson):
    rng = random.Random(20240601)
    basis = list(words_upto(3, 4))
    span = ideal_spanning_set(jacobson.polynomials, 3, 4, jacobson.order.key)
    yes = no = 0
    for k in range(600):
        if k % 2:
            p = random_poly(rng, 3, 4, coeff=5)
        else:
            p = ZERO
            for g in rng.sample(span, rng.randint(1, 4)):
                p = p + g.scale(rng.choice([c for c in range(-5, 6) if c]))
            if k % 4 == 2:
                p = p + Polynomial.monomial(rng.choice(basis), rng.randint(-5, 5))
        member, trace = membership(p, jacobson)
        assert member == in_integer_span(p, span, basis), p
        assert trace.replay(jacobson) == trace.output
        yes += member
        no += not member
    assert yes >= 150 and no >= 150


@criterion(6, "full normal forms are strategy independent and Z-linear on 500 random polynomials")
def test_normal_form_uniqueness(jacobson):
    rng = random.Random(6)
    for _ in range(500):
        p = random_poly(rng, 3, 6, coeff=5)
        q = random_poly(rng, 3, 6, coeff=5)
        nf = normal_form(p, jacobson)[0]
        for seed in range(5):
            assert normal_form(p, jacobson, rng=random.Random(rng.random()))[0] == nf
        assert normal_form(p + q, jacobson)[0] == nf + normal_form(q, jacobson)[0]


@criterion(7, "completion of {a*b*a - 1} and obstruction for {a*b - 2, b*a - 1}")
def test_completion():
    names = ["a", "b"]
    G = RuleSet.from_polynomials(names, DegLex(2), [parse_polynomial("a*b*a - 1", names)])
    res = complete(G)
    assert res.outcome is Outcome.COMPLETED
    assert set(res.rules.polynomials) == {parse_polynomial("b*a - a*b", names),
                                          parse_polynomial("a*a*b - 1", names)}
    assert check_gsb(res.rules).is_gsb
    assert confluent_up_to(res.rules, 5) and not confluent_up_to(G, 5)
    H = RuleSet.from_polynomials(names, DegLex(2), [parse_polynomial(t, names)
                                                    for t in ("a*b - 2", "b*a - 1")])
    res = complete(H)
    assert res.outcome is Outcome.CONSTANT_OBSTRUCTION and res.constant == 2


@criterion(8, "NF(sum alpha_i u v_i) != 0 whenever u*v_1 is irreducible (500 instances)")
def test_leading_irreducible_survives(jacobson):
    rng = random.Random(32)
    irr = enumerate_irr(jacobson, 3)
    key = jacobson.order.key
    done = 0
    while done < 500:
        u = rng.choice(irr)
        vs = sorted(rng.sample(irr, rng.randint(1, 5)), key=key, reverse=True)
        if not is_irreducible_word(u + vs[0], jacobson):
            continue
        alphas = [rng.choice([c for c in range(-5, 6) if c]) for _ in vs]
        p = Polynomial({u + v: a for v, a in zip(vs, alphas)})
        assert normal_form(p, jacobson)[0] != ZERO
        done += 1
