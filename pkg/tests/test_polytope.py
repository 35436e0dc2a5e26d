import itertools

import pytest

from newtonbases.core import QQ, Polynomial
from newtonbases.orderings import classify
from newtonbases.parser import parse_polynomial
from newtonbases.polytope import (PolyhedronError, compact_faces, convenientize, is_convenient,
                                  newton_polyhedron, nondegenerate, ordering_from_polyhedron)
from newtonbases.spectrum import milnor_number

BIG = ("x^12+y^12+z^12+x^5*y^5+x^5*z^5+y^5*z^5"
       "+x*y*z*(x^2*y^2+x^2*z^2+y^2*z^2)+x^2*y^2*z^2")


def P2(text):
    return parse_polynomial(text, ["x", "y"])


def P3(text):
    return parse_polynomial(text, ["x", "y", "z"])


def forms(f):
    return [F.form.coefficients for F in newton_polyhedron(f).compact_facets]


def test_simple_facets():
    assert forms(P2("x^2+y^3")) == [(QQ(1, 2), QQ(1, 3))]
    assert forms(P2("x^2+y^2")) == [(QQ(1, 2), QQ(1, 2))]


def test_big_example_has_twelve_facets():
    P = newton_polyhedron(P3(BIG))
    assert len(P.compact_facets) == 12
    assert is_convenient(P)


def test_facet_invariants():
    f = P3(BIG)
    P = newton_polyhedron(f)
    for F in P.compact_facets:
        assert all(c > 0 for c in F.form.coefficients)
        assert all(F.form(p) == 1 for p in F.face_points)
        assert all(F.form(q) >= 1 for q in P.support)
        assert len(F.face_points) >= 3


def test_facets_are_sorted_and_equivariant():
    f = P3(BIG + "+x^3*y^4")
    base = sorted(forms(f))
    assert forms(f) == base
    for perm in itertools.permutations(range(3)):
        g = f.permute(perm)
        permuted = sorted(tuple(c[perm.index(i)] for i in range(3)) for c in base)
        assert sorted(forms(g)) == permuted


def test_convenience():
    assert is_convenient(newton_polyhedron(P2("x^2+y^3")))
    assert not is_convenient(newton_polyhedron(P2("x^2*y+x*y^3")))


def test_convenientize():
    f = P2("x^2+y^3")
    assert convenientize(f, 5) == f
    g = P2("x^2*y+x*y^3")
    mu = milnor_number(g)
    assert convenientize(g, mu) == g + P2(f"x^{mu + 2}+y^{mu + 2}")
    assert convenientize(P2("x^2"), 1) == P2("x^2+y^3")


def test_nondegeneracy():
    assert nondegenerate(P2("x^2+y^2")) is True
    assert nondegenerate(P2("x^2+2*x*y+y^2+x^3")) is False
    assert nondegenerate(P3(BIG)) is True


def test_nondegeneracy_budget_is_surfaced():
    f = P3("x^3+y^3+z^3+x*y*z")
    assert nondegenerate(f, max_pairs=0) == "indeterminate"


def test_compact_faces_include_edges_and_vertices():
    faces = compact_faces(newton_polyhedron(P2("x^4+x*y+y^4")))
    assert ((0, 4), (1, 1)) in faces and ((1, 1), (4, 0)) in faces
    assert ((1, 1),) in faces and ((4, 0),) in faces


def test_ordering_from_polyhedron():
    o = ordering_from_polyhedron(newton_polyhedron(P2("x^2+y^3")))
    assert [l.coefficients for l in o.forms] == [(QQ(1, 2), QQ(1, 3))]
    assert o.shift == (1, 1)
    assert classify(o).is_local
    assert len(ordering_from_polyhedron(newton_polyhedron(P3(BIG))).forms) == 12
    with pytest.raises(PolyhedronError):
        ordering_from_polyhedron(newton_polyhedron(P2("x^2*y+x*y^3")))


def test_quasihomogeneous_weight_closed_form():
    o = ordering_from_polyhedron(newton_polyhedron(P2("x^3+y^5")))
    for a in range(6):
        for b in range(6):
            assert o.weight((a, b)) == QQ(a + 1, 3) + QQ(b + 1, 5)


def test_zero_polynomial_rejected():
    with pytest.raises(PolyhedronError):
        newton_polyhedron(Polynomial.zero(2))
