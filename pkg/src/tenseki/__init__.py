"""Finite tense DLI+-algebras, tense Kleene algebras with implication, and
the Kalman-style equivalence between them, checked exhaustively."""

from .algebra import (AlgebraInstance, AxiomReport, AxiomResult, Morphism,
                      adjoint_of, find_isomorphism, is_homomorphism)
from .congruence import (Congruence, SubsetWitness, congruence_transport,
                         ds_filter_bijection, enumerate_congruences,
                         enumerate_filters, eval_t_term, one_class_filter,
                         theta_of_filter, theta_S_direct)
from .dli import (check_heyting_characterization, check_implication_profile,
                  check_monotonicity_laws, heyting_residual)
from .errors import (LatticeError, ParseError, PreconditionUnverified,
                     ResolveError, ShapeError, TensekiError)
from .kalman import (alpha_map, beta_map, center_C, equivalence_report,
                     kalman_K, lift_morphism)
from .kleene import check_CK, check_kleene_ki_profile, verify_ki_derived
from .lattice import FiniteLattice, build_lattice, chain, product_lattice
from .nelson import (check_centered_nelson, check_nelson_itkic1,
                     check_tense_heyting, fv_kalman)
from .profiles import check_profile
from .specfile import SpecDocument, emit_spec, parse_spec
from .tense import (TenseQuadruple, check_tense_axioms,
                    enumerate_tense_structures, verify_tense_derived,
                    with_tense)

__version__ = "0.1.0"
