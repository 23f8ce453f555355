"""Pairwise entanglement of local fermionic modes in exactly solvable models."""

from .bcs import (
    BcsPoint,
    bcs_ground_state,
    bcs_thermal_concurrence,
    concurrence_vs_order_parameter,
    gap_self_consistency_residual,
    solve_gap,
)
from .core import (
    InputDomainError,
    NumericError,
    ResourceLimitError,
    TwoSiteRDM,
    concurrence_from_rdm,
    entanglement_window,
)
from .eta import EtaNumberState, eta_concurrence, eta_rdm, odlro_correlator
from .free_fermion import (
    CorrelationSet,
    EigenstateSpec,
    ModelParams,
    ModeSpectrum,
    eigenstate_concurrence,
    eigenstate_correlator,
    energy_density_relation_check,
    fermi_dirac,
    ground_state_concurrence_infinite,
    ground_state_correlator_infinite,
    mean_number_two_site,
    mu_from_mean_number,
    thermal_concurrence,
    thermal_concurrence_two_site,
    thermal_correlators,
    threshold_temperature,
)

__version__ = "0.1.0"
