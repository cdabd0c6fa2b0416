"""Exact and numeric evaluation of compact-group characters, coadjoint-orbit
Fourier transforms, and the torus characters of the representations dual to
them under the four compact dual pairs."""

from .errors import (
    CapExceeded,
    ChamberMismatch,
    FormulaInconsistency,
    HowecharError,
    MonteCarloOnly,
    NonConvergentDirection,
    NotInCorrespondence,
    NotMinimalKType,
    PoleAtPoint,
    QuadratureUnreliable,
    SingularPoint,
    TruncationTooSmall,
)
from .howe import (
    CorrespondenceData,
    DualPairSpec,
    PairKind,
    SupportInterval,
    dual_pair,
    embedded_index_set,
    eta_cosets,
    kprime_weyl,
    project,
    rho_z,
    support_interval,
    validate_weight,
    z_weyl,
)
from .laurent import (
    LaurentSeries,
    dominant_chamber,
    eval_exact,
    expand_inverse_root_factor,
    partial_fraction_sum,
    series,
    series_add,
    series_mul,
)
from .orbits import (
    OracleEstimate,
    OrbitParameter,
    liouville_normalization,
    orbit_integral_oracle,
    orbit_parameter,
    rdv_fourier,
)
from .rootsys import (
    RootSystem,
    WeylElement,
    act,
    build_root_system,
    compose,
    inverse,
    rho,
    sign,
    weight,
    weyl_elements,
)
from .thetachar import (
    ThetaCharacter,
    ktype_expansion,
    normalizing_constant,
    theta_character,
    theta_eval,
    theta_numerator_form,
    theta_u1_closed,
    vandermonde_identity_check,
)
from .torus import eval_monomial, is_regular, restricted_denominator, weyl_denominator
from .weylchar import QuadratureGrid, schur_oracle, torus_inner_product, weyl_character, weyl_dimension

__version__ = "0.1.0"
