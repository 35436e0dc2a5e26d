import itertools
import random

import pytest

from newtonbases.convert import source_staircase
from newtonbases.core import BudgetExceeded, QQ, Polynomial, homogenize
from newtonbases.engine import (BasisCandidate, EngineOptions, LeadMonomialSet, _spoly_candidates,
                                certificate_failures, certified_truncation, interreduce, lm_set_member, normal_form,
                                reduce_polynomial, reducing_set, spoly_set, standard_basis,
                                zero_dim_standard_basis)
from newtonbases.orderings import (LinearForm, NewtonOrdering, OrderingError, SemigroupOrdering,
                                   lead)
from newtonbases.parser import parse_polynomial
from newtonbases.polytope import newton_polyhedron, ordering_from_polyhedron

import oracles

DS = SemigroupOrdering("ds", 2)
LEX = SemigroupOrdering("lex", 2)
TWO_FORMS = NewtonOrdering((LinearForm((QQ(1), QQ(2))), LinearForm((QQ(2), QQ(1)))), (0, 0))


def P(text):
    return parse_polynomial(text, ["x", "y"])


def h(text):
    return homogenize(P(text))


def test_lm_set_membership():
    L = LeadMonomialSet([P("x+y")], TWO_FORMS)
    assert lm_set_member(L, (3, 0))
    # x*y*(x+y) ties x^2*y with x*y^2; the local tie-break picks x^2*y
    assert lm_set_member(L, (2, 1))
    favour_y = SemigroupOrdering("weighted", 2, (QQ(1), QQ(2)), DS)
    other = NewtonOrdering(TWO_FORMS.forms, (0, 0), favour_y)
    assert not lm_set_member(LeadMonomialSet([P("x+y")], other), (2, 1))
    # brute force over every possible multiplier agrees
    f = P("x+y")
    for m in [(a, b) for a in range(6) for b in range(6)]:
        expected = any(lead(TWO_FORMS, f * Polynomial.monomial(u)).monomial == m
                       for u in [(a, b) for a in range(6) for b in range(6)])
        assert lm_set_member(L, m) == expected
    Lx = LeadMonomialSet([P("x")], DS)
    for k, j in itertools.product(range(4), range(4)):
        assert lm_set_member(Lx, (k, j)) == (k >= 1)


def test_normal_form_examples():
    assert normal_form(h("x+y^2"), [h("x+y^2")], DS).is_zero()
    assert normal_form(h("x"), [h("x-x^2")], DS).is_zero()
    assert normal_form(h("x^2*y+x"), [h("x"), h("y")], DS).is_zero()
    assert normal_form(h("x+y"), [h("x^2")], DS) == h("x+y")


def test_normal_form_rejects_inhomogeneous_and_uncertified():
    from newtonbases.core import HPolynomial
    bad = HPolynomial(2, {(0, (1, 0)): 1, (0, (2, 0)): 1})
    with pytest.raises(ValueError):
        normal_form(bad, [h("x")], DS)
    uncertified = NewtonOrdering((LinearForm((QQ(1), QQ(-1))), LinearForm((QQ(-1), QQ(2)))), (1, 1))
    with pytest.raises(OrderingError):
        normal_form(h("x"), [h("x")], uncertified)


def test_spoly_set_semigroup_is_classical():
    f, g = P("x^2+y^3"), P("x*y+y^4")
    S = spoly_set(f, g, DS)
    assert S == [f * P("y") - g * P("x")]
    assert spoly_set(P("3*x^2"), P("3*x^2"), DS) == []
    with pytest.raises(ValueError):
        spoly_set(P("x"), Polynomial.zero(2), DS)


@pytest.mark.parametrize("f,g", [("x+y", "x+y"), ("x+y", "x^2+y^3"), ("x*y+x^3+y^2", "x^2+y^2")])
def test_spoly_pairs_against_bruteforce(f, g):
    f, g = P(f), P(g)
    key = oracles.key_newton([(1, 2), (2, 1)], (0, 0), oracles.key_ds)
    brute = oracles.common_lead_pairs(f, g, key, bound=8)
    assert set(_spoly_candidates(f, g, TWO_FORMS)) == brute


def _representation_holds(f, R, o, bound=6):
    """Every multiple x^a f has lead x^c LM(x^u f) for some u in R, c in the cone semigroup."""
    for a in itertools.product(range(bound + 1), repeat=f.nvars):
        m = lead(o, f * Polynomial.monomial(a)).monomial
        ok = False
        for u in R:
            c = tuple(x - y for x, y in zip(a, u))
            if min(c) < 0:
                continue
            mu = lead(o, f * Polynomial.monomial(u)).monomial
            if tuple(x + y for x, y in zip(mu, c)) != m:
                continue
            if o.is_semigroup or any(_in_semigroup(o, i, c) for i in o.minimizers(m)):
                ok = True
                break
        if not ok:
            return False
    return True


def _in_semigroup(o, i, c):
    vals = [sum(a * e for a, e in zip(cs, c)) for cs in o.int_forms]
    return vals[i] == min(vals)


def test_reducing_sets():
    assert reducing_set(h("x+y^2"), [], DS) == {(0, 0)}
    R = reducing_set(h("x*y^2"), [], TWO_FORMS)
    assert (0, 0) in R and _representation_holds(P("x*y^2"), R, TWO_FORMS)
    R = reducing_set(h("x+y"), [], TWO_FORMS)
    leads = {lead(TWO_FORMS, P("x+y") * Polynomial.monomial(u)).monomial for u in R}
    # one preimage on the x-branch and one on the y-branch
    assert (1, 0) in leads and (0, 2) in leads
    assert _representation_holds(P("x+y"), R, TWO_FORMS)
    cone_o = NewtonOrdering((LinearForm((QQ(3), QQ(3))), LinearForm((QQ(2), QQ(6))),
                             LinearForm((QQ(6), QQ(2)))), (1, 1))
    f = P("x^2+x*y+y^3")
    assert _representation_holds(f, reducing_set(homogenize(f), [], cone_o), cone_o, bound=5)


def test_standard_basis_examples():
    X = [Polynomial.variable(3, i) for i in range(3)]
    o3 = SemigroupOrdering("ds", 3)
    assert sorted(standard_basis(BasisCandidate(X, o3)).lead_monomials()) == sorted(
        [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    G = standard_basis(BasisCandidate([P("2*x"), P("3*y^2")], DS))
    assert sorted(G.lead_monomials()) == [(0, 2), (1, 0)]
    o = ordering_from_polyhedron(newton_polyhedron(P("x^2+y^3")))
    G = standard_basis(BasisCandidate([P("2*x"), P("3*y^2")], o))
    assert sorted(source_staircase(G)) == [(0, 0), (0, 1)]
    key = oracles.key_newton([(QQ(1, 2), QQ(1, 3))], (1, 1), oracles.key_ds)
    assert oracles.staircase_enumerate(G.polys, key, 8) == [(0, 0), (0, 1)]


def test_standard_basis_is_idempotent():
    o = ordering_from_polyhedron(newton_polyhedron(P("x^4+x*y^2+y^5")))
    J = [P("4*x^3+y^2"), P("2*x*y+5*y^4")]
    G = standard_basis(BasisCandidate(J, o))
    G2 = standard_basis(G)
    assert sorted(source_staircase(G2)) == sorted(source_staircase(G))
    assert len(G2.polys) == len(G.polys)


def test_interreduce():
    assert interreduce(BasisCandidate([P("x"), P("x^2")], DS)).polys == [P("x")]
    G = BasisCandidate([P("x"), P("y^3")], DS)
    assert interreduce(G).polys == G.polys
    out = interreduce(BasisCandidate([P("x+y^2"), P("x")], LEX))
    assert len(out.polys) == 1
    L = LeadMonomialSet(out.polys, LEX)
    assert lm_set_member(L, (1, 0))


def test_ideal_membership_of_random_combinations():
    rng = random.Random(7)
    o = ordering_from_polyhedron(newton_polyhedron(P("x^3+x*y^2+y^4")))
    J = [P("3*x^2+y^2"), P("2*x*y+4*y^3")]
    G = standard_basis(BasisCandidate(J, o))
    for _ in range(20):
        comb = Polynomial.zero(2)
        for g in J:
            u = (rng.randint(0, 3), rng.randint(0, 3))
            comb = comb + g.mul_term(u, QQ(rng.randint(-5, 5), rng.randint(1, 4)))
        assert reduce_polynomial(comb, G.polys, o).is_zero()


def test_certificate_on_newton_basis():
    o = ordering_from_polyhedron(newton_polyhedron(P("x^5+x^2*y^2+y^6")))
    f = P("x^5+x^2*y^2+y^6")
    G = standard_basis(BasisCandidate([f.derivative(0), f.derivative(1)], o))
    assert certificate_failures(G, extra_multipliers=50) == []


def test_certificate_rejects_incomplete_bases():
    f = P("x^5+x^2*y^2+y^6")
    J = [f.derivative(0), f.derivative(1)]
    o = ordering_from_polyhedron(newton_polyhedron(f))
    for order in (DS, o):
        full = standard_basis(BasisCandidate(J, order))
        assert len(full.polys) > 2
        assert certificate_failures(BasisCandidate(J, order)) != []
        assert certificate_failures(full) == []


def test_certified_truncation():
    G = zero_dim_standard_basis([P("x^2+y^3"), P("x*y")], DS)
    filt, D = certified_truncation(G)
    for m in filt.below(D + 3):
        if filt.grade(m) >= D:
            assert reduce_polynomial(Polynomial.monomial(m), G.polys, DS).is_zero()
    assert certified_truncation(BasisCandidate([P("x")], DS)) is None
    assert certified_truncation(BasisCandidate([P("x")], LEX)) is None


def test_pair_budget_is_surfaced():
    f = P("x^5+x^2*y^2+y^6")
    with pytest.raises(BudgetExceeded):
        standard_basis(BasisCandidate([f.derivative(0), f.derivative(1)], DS),
                       EngineOptions(max_pairs=1))


def test_truncated_basis_matches_plain_run():
    f = P("x^4+x^2*y^2+y^5")
    J = [f.derivative(0), f.derivative(1)]
    a = zero_dim_standard_basis(J, DS)
    b = standard_basis(BasisCandidate(J, DS))
    assert sorted(source_staircase(a)) == sorted(source_staircase(b))
    o = ordering_from_polyhedron(newton_polyhedron(f))
    c = zero_dim_standard_basis(J, o)
    d = standard_basis(BasisCandidate(J, o))
    assert sorted(source_staircase(c)) == sorted(source_staircase(d))
    assert certificate_failures(c) == []


def test_non_zero_dimensional_is_reported():
    with pytest.raises(BudgetExceeded):
        zero_dim_standard_basis([P("x*y")], DS, max_rounds=3)
