"""Two-qubit quantum-correlations toolkit: X-state closed forms for
classical correlations and locally available quantum correlations, a
numerical two-stage optimizer, concurrence, quantum discord, and
Kraus-operator decoherence channels."""

from .channels import (
    KrausSet,
    amplitude_damping_kraus,
    apply_channel,
    depolarizing_kraus,
    esd_threshold,
    phase_damping_kraus,
    werner_ad_closed_form,
    werner_ad_concurrence,
)
from .closed_form import (
    CorrelationReport,
    DiscordInternals,
    GValues,
    OptimalBasisBranch,
    classical_correlations_x,
    concurrence_wootters,
    concurrence_x,
    full_report,
    g_values,
    laqc_x,
    mutual_information,
    quantum_discord_x,
)
from .oracle import (
    ComplementaryPhases,
    JointDistribution,
    LocalBasisAngles,
    SearchConfig,
    discord_numeric,
    induced_distribution,
    laqc_numeric,
    maximize_complementary,
    minimize_classical,
)
from .states import (
    DensityMatrix4,
    FanoBloch,
    StateFamily,
    StateValidationError,
    SymmetryClass,
    XStateParams,
    bloch_from_density,
    density_from_bloch,
    make_family,
    partial_trace,
    state_from_json,
    von_neumann_entropy,
    werner,
    x_params_from_density,
    x_state_eigenvalues,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
