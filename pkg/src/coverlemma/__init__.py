"""Covering-lemma decompositions of finite transformation semigroups.

Given a surjective relational morphism onto a smaller transformation
semigroup, build a two-level cascade product that emulates the original,
together with the interpretation back and the local bottom components.
"""

__version__ = "0.1.0"

from .core import (
    BudgetExceeded,
    PartialTransformation,
    Transformation,
    TransformationSemigroup,
    act,
    closure,
    compose,
    image_set,
    is_aperiodic,
    is_idempotent,
    is_permutation,
)
from .relmorph import (
    Counterexample,
    GenRelation,
    MorphismError,
    StateRelation,
    check_morphism,
    inverse,
    is_injective,
    is_injective_on_gens,
    is_surjective,
)
from .labelling import Labelling, nn1_labelling, squash_labelling
from .cascade import (
    CascadeProduct,
    CascadeTransformation,
    DependencyFunction,
    cascade_act,
    cascade_compose,
    flatten,
    format_cascade,
)
from .covering import (
    Emulation,
    InterpretationError,
    LiftError,
    LocalComponent,
    cascade_product,
    emulate,
    greedy_cover,
    local_component,
    local_components,
    mu,
    mu_inverse,
    psi,
    psi_inverse,
)
from .builders import (
    Partition,
    congruence_closure,
    theta_phi_congruence,
    theta_phi_constant,
    theta_phi_local_monoid,
    theta_phi_nn1,
)
from .verify import (
    VerificationReport,
    flat_oracle,
    verify_all,
    verify_blocked,
    verify_emulation,
    verify_identities,
)
