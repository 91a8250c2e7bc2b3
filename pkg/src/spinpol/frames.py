"""Triads attached to a quantization axis and the eigenspinors built on them.

A quantization axis w together with a second unit vector (the characterization
vector) fixes a right-handed triad (u, v, w).  From the triad come the complex
basis vectors w+/w-, the nilpotent ladder operators, and a pair of normalized
eigenspinors of w.sigma whose phases are controlled by the azimuth of the
characterization vector about w.
"""

from dataclasses import dataclass

import numpy as np

from .algebra import EPS_INPUT, IDENTITY2, dot_sigma

# below this |w x I| the azimuth of I about w is numerically meaningless
EPS_PARALLEL = 1e-8
# below this ||sigma_pm chi_ref|| the reference spinor carries no usable phase
EPS_LADDER = 1e-8

SQRT2 = np.sqrt(2.0)


class DegenerateFrame(ValueError):
    """Characterization vector is (anti)parallel to the quantization axis."""


class ReferenceAnnihilated(ValueError):
    """A reference spinor is annihilated by its ladder operator."""


@dataclass(frozen=True)
class ReferenceSpinors:
    """Fixed spinor pair (chi1, chi2) that sets the phase reference of the eigenspinors."""

    chi1: np.ndarray
    chi2: np.ndarray


DEFAULT_REFERENCES = ReferenceSpinors(
    chi1=np.array([0.0, 1.0], dtype=complex),
    chi2=np.array([1.0, 0.0], dtype=complex),
)
# swapped pair for callers whose axis annihilates the default; switching
# references changes the phase convention, so it is never applied silently
FALLBACK_REFERENCES = ReferenceSpinors(
    chi1=np.array([1.0, 0.0], dtype=complex),
    chi2=np.array([0.0, 1.0], dtype=complex),
)


@dataclass(frozen=True)
class Frame:
    """Right-handed orthonormal triad (u, v, w) plus the vectors that built it."""

    w: np.ndarray
    i_vec: np.ndarray
    u: np.ndarray
    v: np.ndarray


@dataclass(frozen=True)
class EigenPair:
    """Normalized +1/-1 eigenspinors of w.sigma and their normalization constants."""

    chi_plus: np.ndarray
    chi_minus: np.ndarray
    n_plus: float
    n_minus: float


def _check_unit(name, vec):
    vec = np.asarray(vec, dtype=float)
    if vec.shape != (3,):
        raise ValueError(f"{name} must be a 3-vector")
    if abs(np.linalg.norm(vec) - 1.0) > EPS_INPUT:
        raise ValueError(f"{name} must be a unit vector, |{name}| = {np.linalg.norm(vec)}")
    return vec


def _check_spinor(name, chi):
    chi = np.asarray(chi, dtype=complex)
    if chi.shape != (2,):
        raise ValueError(f"{name} must be a 2-spinor")
    if abs(np.linalg.norm(chi) - 1.0) > EPS_INPUT:
        raise ValueError(f"{name} must be normalized")
    return chi


def build_frame(w, i_vec) -> Frame:
    """Build the triad: v = (w x I)/|w x I|, u = v x w.

    Only the azimuth of I about w matters; its polar angle is degenerate.
    Raises DegenerateFrame when |w x I| < EPS_PARALLEL.
    """
    w = _check_unit("w", w)
    i_vec = _check_unit("i_vec", i_vec)
    cross = np.cross(w, i_vec)
    norm = np.linalg.norm(cross)
    if norm < EPS_PARALLEL:
        raise DegenerateFrame(
            f"characterization vector {i_vec.tolist()} is (anti)parallel to the "
            f"quantization axis {w.tolist()}: |w x I| = {norm}"
        )
    v = cross / norm
    u = np.cross(v, w)
    return Frame(w=w, i_vec=i_vec, u=u, v=v)


def complex_basis(frame: Frame):
    """Complex unit vectors w+ = (u + iv)/sqrt2 and w- = (v + iu)/sqrt2."""
    w_plus = (frame.u + 1j * frame.v) / SQRT2
    w_minus = (frame.v + 1j * frame.u) / SQRT2
    return w_plus, w_minus


def ladder_operators(frame: Frame):
    """Nilpotent ladder operators sigma+ = w+.sigma and sigma- = w-.sigma."""
    w_plus, w_minus = complex_basis(frame)
    return dot_sigma(w_plus), dot_sigma(w_minus)


def eigen_spinors(frame: Frame, ref: ReferenceSpinors = DEFAULT_REFERENCES) -> EigenPair:
    """Normalized eigenspinors chi+ = N+ sigma+ chi1 and chi- = N- sigma- chi2.

    The normalization constants N+ = [chi1^dag (1 - w.sigma) chi1]^(-1/2) and
    N- = [chi2^dag (1 + w.sigma) chi2]^(-1/2) depend on w and the references
    only, not on the characterization vector.

    Raises ReferenceAnnihilated when a reference spinor is (numerically) the
    eigenspinor its ladder operator annihilates; the caller must then supply a
    different pair, e.g. FALLBACK_REFERENCES.
    """
    chi1 = _check_spinor("chi1", ref.chi1)
    chi2 = _check_spinor("chi2", ref.chi2)
    sig_plus, sig_minus = ladder_operators(frame)
    raised = sig_plus @ chi1
    lowered = sig_minus @ chi2
    if np.linalg.norm(raised) < EPS_LADDER:
        raise ReferenceAnnihilated(
            "chi1 is annihilated by sigma+ for this axis (chi1 is already the +1 "
            "eigenspinor); supply references valid for this axis, e.g. FALLBACK_REFERENCES"
        )
    if np.linalg.norm(lowered) < EPS_LADDER:
        raise ReferenceAnnihilated(
            "chi2 is annihilated by sigma- for this axis (chi2 is already the -1 "
            "eigenspinor); supply references valid for this axis, e.g. FALLBACK_REFERENCES"
        )
    w_sigma = dot_sigma(frame.w)
    n_plus = 1.0 / np.sqrt(np.vdot(chi1, (IDENTITY2 - w_sigma) @ chi1).real)
    n_minus = 1.0 / np.sqrt(np.vdot(chi2, (IDENTITY2 + w_sigma) @ chi2).real)
    return EigenPair(
        chi_plus=n_plus * raised,
        chi_minus=n_minus * lowered,
        n_plus=float(n_plus),
        n_minus=float(n_minus),
    )


def ladder_constants(frame: Frame, ref: ReferenceSpinors = DEFAULT_REFERENCES):
    """Constants (c, c') defined by sigma+ chi- = c chi+ and sigma- chi+ = c' chi-.

    Both have modulus sqrt2 and satisfy c = i conj(c').
    """
    pair = eigen_spinors(frame, ref)
    sig_plus, sig_minus = ladder_operators(frame)
    c = complex(np.vdot(pair.chi_plus, sig_plus @ pair.chi_minus))
    c_prime = complex(np.vdot(pair.chi_minus, sig_minus @ pair.chi_plus))
    return c, c_prime


def phase_factor(frame: Frame, ref: ReferenceSpinors = DEFAULT_REFERENCES) -> float:
    """Angle phi0 in (-pi, pi] with exp(i phi0) = sqrt2 N+ N- chi1^dag sigma- chi2.

    c = sqrt2 exp(i phi0) is the raising constant of ladder_constants; rotating
    the characterization vector by an angle about w shifts phi0 by the same angle.
    """
    chi1 = _check_spinor("chi1", ref.chi1)
    chi2 = _check_spinor("chi2", ref.chi2)
    pair = eigen_spinors(frame, ref)
    _, sig_minus = ladder_operators(frame)
    phase = SQRT2 * pair.n_plus * pair.n_minus * np.vdot(chi1, sig_minus @ chi2)
    return float(np.angle(phase))


def mapping_matrix(frame: Frame, ref: ReferenceSpinors = DEFAULT_REFERENCES) -> np.ndarray:
    """Unitary with columns (chi+, chi-); maps Jones vectors to state spinors."""
    pair = eigen_spinors(frame, ref)
    return np.column_stack((pair.chi_plus, pair.chi_minus))


def compose_spinor(varpi, alpha) -> np.ndarray:
    """State spinor varpi @ alpha from a mapping matrix and a normalized Jones vector."""
    varpi = np.asarray(varpi, dtype=complex)
    if np.linalg.norm(varpi.conj().T @ varpi - IDENTITY2) > EPS_INPUT:
        raise ValueError("mapping matrix must be unitary")
    alpha = _check_spinor("alpha", alpha)
    return varpi @ alpha
