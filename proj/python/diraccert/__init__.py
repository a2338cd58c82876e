"""Certified eigenvalue-free regions for 3D non-self-adjoint Dirac operators.

Thin wrapper around the compiled extension; see the project README for the
underlying criteria and the CLI equivalents.
"""

from ._core import (  # noqa: F401
    BSNormEstimate,
    EnclosureReport,
    GridSpec,
    PotentialModel,
    QuadratureResult,
    RegionGrid,
    __version__,
    bs_estimate,
    certify,
    check_kato_pointwise,
    check_proposition_sufficient,
    constant_C,
    constant_Cprime,
    declared_potential,
    dirac_basis,
    f_function,
    hs_bound,
    hs_closed_form,
    hs_norm,
    is_resolvent_point,
    kappa,
    kernel,
    lemma1_bound,
    lemma2_bound,
    lp_norm,
    operator_norm,
    potential,
    raster,
    selfcheck,
    write_grid,
)
