"""Operator algebra of SU(N)-invariant two-qudit scattering.

Builds the su(N) generator basis, the channel projectors and invariant gates,
the crossing reshuffle between channels, the coefficient-disk unitarity
checks, and the one-ancilla block encoding of amplitudes — with every defining
identity machine-checkable at desk scale.
"""

from .amplitude_model import (
    AmplitudeCoefficients,
    DiskSample,
    PartialWaveSector,
    UnitarityReport,
    amplitude_operator,
    check_partial_wave,
    cross_coefficients,
    disk_samples,
    invariance_residual,
    scalar_amplitudes,
    unitary_parameterization,
)
from .invariant_channels import (
    CROSSING_AXES,
    Channel,
    ChannelSpec,
    GateSet,
    ProjectorSet,
    adjoint_states,
    build_gates,
    build_projectors,
    charge_parity_bilinear,
    crossing_map,
    generator_form_projectors,
    s_channel,
    select_crossing_axes,
    singlet_state,
    swap_matrix,
    t_channel,
    u_exponential_form,
)
from .lcu_encoder import (
    BlockEncodingPlan,
    BlockEncodingReport,
    CircuitDescription,
    PostselectionResult,
    apply_with_postselection,
    build_w,
    build_w_from_circuit,
    circuit_from_json,
    circuit_to_json,
    export_circuit,
    plan_encoding,
    ry,
    verify_block,
)
from .qudit_ops import OperatorBasisDecomposition, decompose, reconstruct, tensor
from .sun_algebra import (
    DEFAULT_TOLERANCE,
    CompletenessReport,
    GeneratorSet,
    StructureConstants,
    build_generators,
    hermiticity_deviation,
    orthonormality_deviation,
    structure_constants,
    tracelessness_deviation,
    verify_completeness,
)

__version__ = "0.1.0"
