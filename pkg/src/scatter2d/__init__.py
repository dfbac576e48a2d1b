"""Two-dimensional partial-wave scattering for 1/r^2 and regularized-delta potentials."""

from .errors import (
    AccuracyError,
    ConditioningError,
    DomainError,
    ExtrapolationError,
    FallToCenterError,
    PoleError,
    QuadratureError,
    ResonanceError,
    Scatter2dError,
)
from .potentials import (
    ConstantStrength,
    InverseSquare,
    LogRunning,
    RegularizedDelta,
    ScaleTransformation,
    evaluate,
    scale_covariance_defect,
    scale_transform,
)
from .partialwave import (
    PhaseShift,
    ScatteringConfig,
    effective_order,
    exact_radial,
    inverse_square_phase_shift,
    phase_shift_finite_a,
    scheme_a_closed_form,
    zero_radius_limit,
)
from .greens import (
    QuadratureSpec,
    ScatteringAmplitude,
    build_amplitude,
    expand_plane_wave,
    green_function,
    integral_phase_shift,
    radial_source_integral,
    scattering_amplitude,
    weber_schafheitlin,
)
from .sae import (
    NearOriginExpansion,
    SWaveSolution,
    boundary_residual,
    dilation_apply,
    extension_alpha,
    near_origin_expansion,
    scale_invariance_test,
)
from .oracle import (
    RadialGrid,
    RadialSolution,
    extract_phase_shift,
    integrate_radial,
    long_range_grid,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
