"""Exact arithmetic, duality and classification for a-adic number systems."""
# flake8: noqa: F401
from .arithmetic import (AdicApprox, add, embed, eq_mod, from_digits, in_N, negate,
                         scalar_mul, truncate, unit, weight, zero)
from .classify import (ClassificationReport, compare, delta_isomorphic, equivalent,
                       is_integral_domain, is_ring, maximal_open_ring, n_equal,
                       n_isomorphic, omega_isomorphic, realize, report, ring_companion,
                       self_dual, sequence_surgery)
from .duality import (SHARP, STAR, Angle, annihilator_level, character_eval, pair_general,
                      pair_sharp, pair_star, verify_annihilator)
from .dynamics import (AffineElement, HSubgroup, act, contraction_witness, fixed_point_in_N,
                       haar_index, orbit_witness)
from .errors import (AdicError, BadCase, EmptyP, InsufficientPrecision, InvalidSpec,
                     NoContraction, NotInLattice, NotInN, NotInNStar, NotInS, NotNested,
                     OutOfRepresentableClass, SpecMismatch, TrivialH)
from .lattice import FracIdeal, generalized_index, in_U, intersect, quotient_size, u_chain
from .primes import PrimeSet
from .sequence import (EventuallyPeriodic, Increment, Tail, in_S, prime_sets, sharp, shift,
                       spec_from_json, spec_to_json, star, translate)
from .supernatural import GenSupernatural, canonical_pair_form, equivalent_pair, lambda_rho

__version__ = "0.1.0"
