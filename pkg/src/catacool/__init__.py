"""Catalytic cooling and thermometry protocols for diagonal quantum states."""

from .cnu import (
    CATALYSIS_TOL,
    VIOLATION_TOL,
    Cnu1Certificate,
    DiagramData,
    PlanRotation,
    TransformPlan,
    VerificationReport,
    build_plan,
    check_cnu1,
    check_cnu1_general,
    diagram_export,
    diagram_to_csv,
    execute_plan,
    fmt,
    ground_subspace_plan,
    serialize_plan,
    synthesize_catalyst,
)
from .cooling_opt import (
    EnhancementResult,
    HotOnlyPlan,
    OptimalCatalystSolution,
    GeneralEnhancement,
    catalytic_enhancement_degenerate3,
    optimal_enhancement_p1v,
    optimal_hot_only_cooling,
    optimal_qubit_catalyst,
    qubit_catalyst_loop_currents,
    simulate_enhancement_degenerate3,
    general_enhancement_applicable,
    general_enhancement,
)
from .currents import (
    Chain,
    Current,
    JointIndexCodec,
    JointState,
    Loop,
    TwoLevelRotation,
    apply_rotation,
    apply_rotations,
    catalyst_marginal_delta,
    solve_uniform_loop,
    swap_current,
)
from .errors import (
    CatacoolError,
    InconsistentCertificateError,
    InvalidInputError,
    NoLoopError,
    NotSynthesizableError,
    OutsideRegimeError,
    PlanVerificationError,
)
from .multiqubit import (
    ConjectureReport,
    GammaResult,
    MbcBounds,
    OptimalNcReport,
    QubitEnsembleParams,
    cc_advantage_threshold,
    cc_cycle_heat,
    cooling_coefficient,
    gamma_continuous,
    k_qubit_delta_p1c,
    optimal_nc_comparison,
    performance_ratio,
    q_cc,
    q_mbc_bounds,
    verify_coefficient_conjecture,
    xi2,
)
from .states import (
    EPS,
    INF_BETA,
    DiagonalState,
    EnergyLevels,
    entropy,
    is_passive_wrt_cold,
    joint_passive_wrt_cold,
    majorizes,
    mean_energy,
    thermal_state,
)
from .thermometry import (
    SensitivityRecord,
    ThermometrySetup,
    cramer_rao_bound,
    env_lambdas,
    env_probs,
    p1_after_catalytic,
    p1_after_swap,
    probe_after_optimal_swap,
    sensitivity_after_catalytic,
    sigma_in_temperature_units,
)

__version__ = "0.1.0"
