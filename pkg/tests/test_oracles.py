from fractions import Fraction

from newtonbases.core import Polynomial
from newtonbases.engine import BasisCandidate, standard_basis
from newtonbases.groebner import classical_groebner, contains_one
from newtonbases.orderings import SemigroupOrdering
from newtonbases.parser import parse_polynomial
from newtonbases.polytope import newton_polyhedron, ordering_from_polyhedron

import oracles


def P(text, names="xy"):
    return parse_polynomial(text, list(names))


def test_classical_groebner_examples():
    lex = SemigroupOrdering("lex", 2)
    assert classical_groebner([P("x"), P("y")], lex) == [P("y"), P("x")]
    G = classical_groebner([P("x^2-y"), P("y^2-x")], lex)
    assert P("y^4-y") in G
    # the textbook oracle agrees on the lead ideal
    mora = oracles.mora_standard_basis([P("x^2-y"), P("y^2-x")], oracles.key_lex)
    assert oracles.lead_ideal_generators(mora, oracles.key_lex) == sorted(
        lex.lead_monomial(g) for g in G)


def test_elimination_produces_univariate_polynomial():
    lex = SemigroupOrdering("lex", 2)
    # with y as the larger variable the basis eliminates y and leaves x^4 - x
    G = classical_groebner([P("y^2-x", "yx"), P("x^2-y", "yx")], lex)
    assert P("x^4-x", "yx") in G


def test_torus_test_for_morse_partials():
    xyz = "xyz"
    assert contains_one([P("2*x", xyz), P("2*y", xyz), P("x*y*z-1", xyz)])


def test_staircase_enumerate():
    assert oracles.staircase_enumerate([P("x"), P("y^2")], oracles.key_ds, 6) == [(0, 0), (0, 1)]
    o = ordering_from_polyhedron(newton_polyhedron(P("x^2+y^3")))
    G = standard_basis(BasisCandidate([P("2*x"), P("3*y^2")], o))
    key = oracles.key_newton([(Fraction(1, 2), Fraction(1, 3))], (1, 1), oracles.key_ds)
    assert oracles.staircase_enumerate(G.polys, key, 8) == [(0, 0), (0, 1)]


def test_qh_spectrum():
    F = Fraction
    assert oracles.qh_spectrum((F(1, 2), F(1, 3)), [(0, 0), (0, 1)]) == [F(5, 6), F(7, 6)]
    assert oracles.qh_spectrum((F(1, 2), F(1, 2)), [(0, 0)]) == [1]
    assert oracles.qh_spectrum((F(1, 3), F(1, 3)), [(0, 0), (1, 0), (0, 1), (1, 1)]) == [
        F(2, 3), 1, 1, F(4, 3)]


def test_mora_oracle_local_example():
    S = oracles.mora_standard_basis([P("x-x^2"), P("y^3+x*y")], oracles.key_ds)
    assert oracles.lead_ideal_generators(S, oracles.key_ds) == [(0, 3), (1, 0)]
    assert oracles.mora_normal_form(P("x"), [P("x-x^2")], oracles.key_ds).is_zero()


def test_cone_oracle_matches_definition():
    pts = oracles.cone_points([(1, 2), (2, 1)], (0, 0), 0, 5)
    assert all(a >= b for a, b in pts)
    gens = oracles.semigroup_generators(pts)
    assert gens == [(1, 0), (1, 1)]
