"""Correlations of separated particle pairs, entangled versus disentangled.

The library models a spin-1/2 (or photon-helicity) pair two ways: as the
fully entangled singlet, and as the same pair after decoherence of the
inter-particle interference terms leaves an anti-correlated mixture along
a shared random axis. It provides every closed-form probability,
correlation function, ensemble average, CHSH value, and visibility
prediction of both models, plus seeded Monte Carlo and an event-level
coincidence-experiment simulator that reproduce them.
"""

__version__ = "0.1.0"

from .core import (
    ATOL,
    PSD_FLOOR,
    assert_density_operator,
    conditional_reduce,
    is_density_operator,
    ket,
    partial_trace,
    pure_density,
    tensor_product,
    unit_vector3,
)
from .states import (
    IDENTITY_2,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    X_AXIS,
    Y_AXIS,
    Z_AXIS,
    BellLabel,
    DirectionAxis,
    bell_state,
    epr_density,
    pauli_projection,
    spin_projector,
    spinor,
)
from .disentangle import (
    BRANCH_MINUS_PLUS,
    BRANCH_PLUS_MINUS,
    branch_pair,
    decohere_offdiagonal,
    disentangled_mixture,
)
from .photon import (
    HELICITY_LABELS,
    PARITY,
    ROTATION_PERP,
    SymmetryClassification,
    apply_parity,
    apply_r_perp,
    classification_table,
    classify,
    helicity_state,
)
from .correlations import (
    FERMION,
    PHOTON,
    AnalyzerPair,
    JointProbabilities,
    born_joint_probabilities,
    correlation,
    disentangled_joint_probabilities_fixed_axis,
    entangled_correlation_model,
    entangled_expectations,
    entangled_joint_probabilities,
    polarizer_angle_to_pair_angle,
    single_probabilities,
    single_probabilities_from_spinor,
)
from .ensemble import (
    SPHERE,
    TRANSVERSE_CIRCLE,
    EnsembleGeometry,
    McEstimate,
    analytic_average_correlation,
    averaged_correlation_model,
    mc_average_correlation,
    mc_average_singles,
    sample_axis,
    sample_axis_vectors,
)
from .chsh import (
    CLASSICAL_BOUND,
    TSIRELSON_BOUND,
    ChshSettings,
    ViolationReport,
    chsh_value,
    cosine_optimal_settings,
    optimize_settings,
    violation_report,
)
from .experiment import (
    DISENTANGLED,
    ENTANGLED,
    FORMAT_VERSION,
    CountsTable,
    ExperimentConfig,
    PrefactorReport,
    SweepPoint,
    VisibilityFit,
    counts_std_error,
    default_sweep_angles,
    fit_visibility,
    normalized_correlation,
    prefactor_insensitivity_demo,
    run_chsh_counts,
    run_pairs,
    sweep_csv_text,
    sweep_json_payload,
    visibility_sweep,
    write_sweep_csv,
    write_sweep_json,
)
