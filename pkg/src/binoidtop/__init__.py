"""Topological invariants of realizations of commutative binoid schemes.

Finitely presented commutative binoids, their prime spectra and
idempotent decompositions, the sign-cube model of their real points, and
the fundamental groupoid and integral homology of glued binoid schemes,
with a direct combinatorial shortcut for Stanley-Reisner punctured
spectra.
"""

__version__ = "0.1.0"

from ._kernel import KERNEL_BACKEND
from .presentation import BinoidHom, BinoidPresentation, Element
from .structure import (
    AbelianGroupData,
    AdmBlock,
    PrimeIdeal,
    adm,
    component,
    idempotents,
    is_separated,
    spec,
    unit_group,
)
from .pi0 import (
    Pi0Map,
    Pi0Set,
    complex_component_count,
    induced_pi0_map,
    n_r,
    pi0_affine,
    real_component_count,
)
from .groupoid import (
    GroupoidFunctorData,
    GroupoidPresentation,
    GroupPresentationResult,
    check_colimit_conditions,
    colimit,
    skeletonize,
    stretch,
)
from .scheme import SchemeDiagram, fundamental_groupoid, load_scheme, pi0_scheme, realization_functor
from .homology import chain_complex, homology, homology_by_component
from .stanley_reisner import (
    SimplicialComplexData,
    geometric_realization_groupoid,
    sr_binoid,
    sr_fundamental_groups,
    sr_groupoid,
    sr_scheme,
)

__all__ = [
    "KERNEL_BACKEND",
    "AbelianGroupData",
    "AdmBlock",
    "BinoidHom",
    "BinoidPresentation",
    "Element",
    "GroupPresentationResult",
    "GroupoidFunctorData",
    "GroupoidPresentation",
    "Pi0Map",
    "Pi0Set",
    "PrimeIdeal",
    "SchemeDiagram",
    "SimplicialComplexData",
    "adm",
    "chain_complex",
    "check_colimit_conditions",
    "colimit",
    "complex_component_count",
    "component",
    "fundamental_groupoid",
    "geometric_realization_groupoid",
    "homology",
    "homology_by_component",
    "idempotents",
    "induced_pi0_map",
    "is_separated",
    "load_scheme",
    "n_r",
    "pi0_affine",
    "pi0_scheme",
    "real_component_count",
    "realization_functor",
    "skeletonize",
    "spec",
    "sr_binoid",
    "sr_fundamental_groups",
    "sr_groupoid",
    "sr_scheme",
    "stretch",
    "unit_group",
]
