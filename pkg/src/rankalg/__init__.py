"""Exact computational algebra for statistical ranking models on posets."""

from .groebner import (CapExceeded, binomial_groebner, binomial_normal_form,
                       buchberger, minimalize_binomials, poly_buchberger,
                       poly_normal_form, same_ideal_binomials)
from .hilbert import (HilbertSeries, MonomialIdeal, face_count_polynomial,
                      hilbert_series, intersect_monomial_ideals,
                      series_invariants)
from .linalg import (RationalMatrix, hermite_normal_form, integer_rank,
                     kernel_lattice_basis, rational_rank, rowspace_contains)
from .models import (HDescription, ModelError, ModelMatrix, SufficientStats,
                     birkhoff_dimension, csiszar_mle, evaluate_distribution,
                     h_description, mallows_specialize, model_inclusion,
                     model_matrix, polytope_dimension, sufficient_stats,
                     verify_h_description)
from .plackett_luce import (PLMap, alexander_dual, bt_parametrization_check,
                            incomparability_ideal, marginalize,
                            pl_homogeneous_map, pl_probability, pl_vanishes,
                            total_mass_identity)
from .polynomials import Binomial, Polynomial, TermOrder
from .posets import (GradedPoset, Poset, PosetError, antichain,
                     boolean_lattice, chain, chain_word, grade,
                     interval_subposets, is_lattice, linear_extensions,
                     maximal_chains, mixed_poset, order_ideal_lattice,
                     parse_poset, poset_shorthand, shadows, word_chain)
from .structural import (ascending_lift_basis, bipartite_cycle_binomials,
                         bt_circuit_binomials, csiszar_minor_basis,
                         minor_matrix)
from .toric import (ToricSpec, binomial_in_toric, fiber, initial_ideal,
                    lattice_ideal_generators, same_ideal, squarefree_initial,
                    toric_groebner, toric_markov_basis)
from .verify import RunReport, run_verify

__version__ = "0.1.0"
