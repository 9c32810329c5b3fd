"""Decide whether a finite quandle matrix is an Alexander quandle.

Labels are 1-based throughout the public interface, as in the usual matrix
notation for quandles and Cayley tables.
"""

from .errors import (
    GroupAxiomError,
    MalformedTableError,
    NotAnAutomorphism,
    QuandleAxiomError,
    SizeCapExceeded,
    Violation,
)
from .group import (
    CayleyMatrix,
    automorphism_group,
    cyclic_group,
    direct_product,
    group_inverse,
    has_inverses,
    is_associative,
    is_commutative,
    is_group_automorphism,
    validate_abelian_group,
    validate_group,
)
from .obstruction import explain_trace, obstruction_check, replay_trace
from .quandle import (
    QuandleMatrix,
    conj_quandle,
    count_homs,
    dihedral_quandle,
    dual_quandle,
    enumerate_quandles,
    is_abelian,
    is_left_distributive,
    is_quandle_hom,
    is_quandle_iso,
    quandle_violation,
    trivial_quandle,
    validate_quandle,
)
from .search import (
    AlexanderPresentation,
    Contradiction,
    PartialCayley,
    SearchOutcome,
    alexander_presentations,
    alexander_quandle,
    apply_lemma_constraints,
    find_zero,
    propagate_group_axioms,
    seed_partial,
    zero_fill,
)

__version__ = "0.1.0"
