"""qsteer: entropic EPR-steering criteria built on Renyi uncertainty relations,
with analytic joint-measurability thresholds to benchmark them against."""

from .config import DEFAULT_TOLS, Tolerances
from .entropy import (
    JointDistribution,
    NoDualOrderError,
    conditional_renyi,
    conditional_tsallis,
    dual_order,
    renyi_entropy,
    tsallis_entropy,
)
from .jointmeas import (
    NonBracketingError,
    ThresholdRecord,
    ThresholdSolution,
    bisect_threshold,
    exact_eta_of_chi,
    mub_jm_holds,
    mub_jm_threshold_symmetric,
    qubit_exact_threshold,
    qubit_renyi_threshold,
    renyi_eta_of_chi,
    renyi_mub_holds,
    renyi_mub_threshold_symmetric,
)
from .qobj import (
    DensityMatrix,
    Ket,
    Povm,
    QubitBinaryPovm,
    depolarize,
    fourier_matrix,
    joint_distribution,
    max_entangled_state,
    mub_pair,
    partial_trace,
    qubit_povm,
    rotated_d3_bases,
)
from .scenarios import (
    LhsFalsificationReport,
    ScanResult,
    alpha_optimality_check,
    d3_family_scan,
    fig1_scan,
    lhs_falsification_suite,
    mub_pipeline_threshold,
    qubit_angle_scan,
    qubit_random_povm_check,
)
from .steering import (
    LhsModel,
    SteeringCertificate,
    UnsupportedBoundError,
    evaluate,
    lhs_statistics,
    overlap_bound,
    sample_lhs_model,
    steering_lhs,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOLS",
    "DensityMatrix",
    "JointDistribution",
    "Ket",
    "LhsFalsificationReport",
    "LhsModel",
    "NoDualOrderError",
    "NonBracketingError",
    "Povm",
    "QubitBinaryPovm",
    "ScanResult",
    "SteeringCertificate",
    "ThresholdRecord",
    "ThresholdSolution",
    "Tolerances",
    "UnsupportedBoundError",
    "alpha_optimality_check",
    "bisect_threshold",
    "conditional_renyi",
    "conditional_tsallis",
    "d3_family_scan",
    "depolarize",
    "dual_order",
    "evaluate",
    "exact_eta_of_chi",
    "fig1_scan",
    "fourier_matrix",
    "joint_distribution",
    "lhs_falsification_suite",
    "lhs_statistics",
    "max_entangled_state",
    "mub_jm_holds",
    "mub_jm_threshold_symmetric",
    "mub_pair",
    "mub_pipeline_threshold",
    "overlap_bound",
    "partial_trace",
    "qubit_angle_scan",
    "qubit_exact_threshold",
    "qubit_povm",
    "qubit_random_povm_check",
    "qubit_renyi_threshold",
    "renyi_entropy",
    "renyi_eta_of_chi",
    "renyi_mub_holds",
    "renyi_mub_threshold_symmetric",
    "rotated_d3_bases",
    "sample_lhs_model",
    "steering_lhs",
    "tsallis_entropy",
]
