"""Standard bases for Newton orderings, standard-basis conversion between local
orderings, and spectra of nondegenerate isolated hypersurface singularities."""

from .convert import compute_zgen, standard_basis_change
from .core import QQ, BudgetExceeded, HPolynomial, Polynomial, dehomogenize, homogenize, strip_t_powers
from .engine import (BasisCandidate, EngineOptions, LeadMonomialSet, interreduce, lm_set_member,
                     normal_form, reducing_set, spoly_set, standard_basis)
from .linalg import gauss_eliminate
from .orderings import (LinearForm, NewtonOrdering, SemigroupOrdering, classify, compare,
                        compare_h, lead, weight, weight_poly)
from .parser import parse_ordering, parse_polynomial
from .polytope import (convenientize, is_convenient, newton_polyhedron, nondegenerate,
                       ordering_from_polyhedron)
from .spectrum import geometric_genus, jacobian, milnor_number, poincare_coefficient, spectrum

__version__ = "0.1.0"
