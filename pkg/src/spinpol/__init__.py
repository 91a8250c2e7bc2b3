"""Unit-vector characterization of spin-1/2 polarization.

Spinor algebra, quantization-axis triads with ladder-built eigenspinors, the
double-angle SU(2)/SO(3) rotation laws they obey, and plane-wave packet spin
polarization fields.
"""

from .algebra import (
    IDENTITY2,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    dot_sigma,
    eigen_residual,
    sigma_product,
    spv,
)
from .frames import (
    DEFAULT_REFERENCES,
    FALLBACK_REFERENCES,
    DegenerateFrame,
    EigenPair,
    Frame,
    ReferenceAnnihilated,
    ReferenceSpinors,
    build_frame,
    complex_basis,
    compose_spinor,
    eigen_spinors,
    ladder_constants,
    ladder_operators,
    mapping_matrix,
    phase_factor,
)
from .heisenberg import (
    HeisenbergSigma,
    closed_form_residual,
    equivalence_residual,
    expectation_spv_residual,
    heisenberg_sigma,
    rotation_residual,
)
from .rotations import (
    correspondence_residual,
    dot_generators,
    eigenspinor_rotation_residuals,
    rotate_characterization,
    so3_generators,
    so3_rotation,
    spv_rotation_residual,
    su2_rotation,
)
from .wavepacket import (
    BadGrid,
    NodePoint,
    PacketConfig,
    Spectrum,
    SpectrumNearOrigin,
    SpinField,
    dispersion,
    eigen_component,
    evaluate_wavefunction,
    gaussian_spectrum,
    load_spectrum,
    local_spv,
    position_grid,
    sample_spinors,
    save_spectrum,
    save_spin_field,
    spin_field,
    total_spin,
    total_spin_i_sweep,
)

__version__ = "0.1.0"
