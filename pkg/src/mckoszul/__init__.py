"""Exact-rational computer algebra for Maurer-Cartan theory and Koszul
duality of differential graded (Lie) algebras."""

from .graded import (CochainComplex, GradedMap, GradedSpace, Vec, cohomology,
                     dual, dual_map, koszul_swap, quasi_iso_check, suspend,
                     tensor)
from .assoc import (DgAlgebra, GaugeElement, adjoin_unit, check_axioms,
                    gauge_act, gauge_to_homotopy, homotopy_decompose,
                    homotopy_to_gauge, interval_algebra, mc_check,
                    tensor_algebra)
from .lie import (DgLieAlgebra, PolynomialPathAlgebra, TruncatedEnveloping,
                  check_lie_axioms, enveloping_truncated, exp_gauge,
                  gauge_to_sullivan, lower_central, mc_check_lie, pbw_dims,
                  sullivan_path, sullivan_to_gauge, tilde_square_check)
from .duality import (LocalArtinianAlgebra, Presentation, abelianize, bar, ce,
                      cobar, comass_check, enveloping_of_presentation,
                      forget_commutative, harrison, lie_functor,
                      local_artinian, truncate)
from .adjunction import AssocAdjunction, LieAdjunction, sample_mc

__version__ = "0.1.0"
