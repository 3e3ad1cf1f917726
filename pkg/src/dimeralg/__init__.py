"""Dimer quivers on the two-torus and the geometry of their centers."""

from .quiver import (Arrow, DimerQuiver, Face, Path, QuiverFormatError,
                     ValidationReport, face_path, lift_displacement,
                     parse_quiver, unit_cycle_at, validate)
from .matchings import (Matching, is_cancellative, perfect_matchings,
                        simple_matchings, uncovered_arrows)
from .grading import (FamilyEmptyError, GradingContext, Monomial,
                      build_context, display_sorted, label, sigma)
from .paths import (CentralCandidate, EquivalenceVerdict, NoncancellativePair,
                    PathBudget, RelationPair, face_relations,
                    find_noncancellative_pair, is_central, paths_equal,
                    permanent_two_cycles)
from .contraction import (Contraction, ContractionError, contract,
                          find_cyclic_contraction, is_cyclic,
                          simplify_two_cycles)
from .centers import (CenterBounds, CenterReport, HomotopyCenter,
                      MonomialSemigroup, SaturationFailure, central_lift,
                      cycle_algebra, depiction_report, homotopy_center,
                      is_normal, krull_dimension, membership,
                      nonnoetherian_witness, semigroups_equal,
                      vertex_cycle_monomials)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
