"""Plane-wave superpositions of a free spin-1/2 particle and their spin fields.

Each plane wave takes its own wave vector direction as quantization axis while
sharing one characterization vector and one Jones vector:

    Psi(x,t) = (2 pi)^(-3/2) sum_k weight A(k) chi(k_hat) exp(i(k.x - w(k) t))

so the packet's local polarization field and total spin are determined by the
weighting A(k), the Jones vector, and the shared characterization vector alone.
"""

from dataclasses import dataclass, field, replace

import numpy as np

from .algebra import SIGMA_X, SIGMA_Y, SIGMA_Z
from .frames import (
    DEFAULT_REFERENCES,
    DegenerateFrame,
    ReferenceAnnihilated,
    ReferenceSpinors,
    build_frame,
    compose_spinor,
    mapping_matrix,
)
from .heisenberg import heisenberg_sigma

# relative floor on |k|: a zero wave vector has no quantization axis
EPS_K = 1e-6
# quadrature sum of weight |A|^2 must match 1 this closely
NORM_TOL = 1e-9

SPECTRUM_HEADER = "kx,ky,kz,re_A,im_A,weight"
FIELD_HEADER = "x,y,z,t,rho,sx,sy,sz"


class SpectrumNearOrigin(ValueError):
    """A spectrum sample sits at (or the grid reaches) the zero wave vector."""


class BadGrid(ValueError):
    """Grid parameters are unusable (even sample count, non-positive span)."""


class NodePoint(ValueError):
    """Probability density vanishes here; the local polarization is undefined."""


@dataclass(frozen=True)
class Spectrum:
    """Discrete plane-wave spectrum: wave vectors, complex weights, quadrature weights.

    Attributes
    ----------
    k : ndarray, shape (n, 3)
        Wave vectors, lexicographic in grid index for generated spectra.
    amplitude : ndarray, shape (n,), complex
        Weighting function samples A(k).
    weight : ndarray, shape (n,)
        Quadrature weights (cell volumes); sum(weight |A|^2) must equal 1.
    """

    k: np.ndarray
    amplitude: np.ndarray
    weight: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "k", np.atleast_2d(np.asarray(self.k, dtype=float)))
        object.__setattr__(
            self, "amplitude", np.atleast_1d(np.asarray(self.amplitude, dtype=complex))
        )
        object.__setattr__(
            self, "weight", np.atleast_1d(np.asarray(self.weight, dtype=float))
        )
        n = len(self.weight)
        if self.k.shape != (n, 3) or self.amplitude.shape != (n,):
            raise ValueError("spectrum arrays must have matching lengths, k of shape (n, 3)")
        norms = np.linalg.norm(self.k, axis=1)
        scale = float(norms.max(initial=0.0))
        small = np.flatnonzero(norms < EPS_K * max(scale, 1e-300))
        if small.size:
            raise SpectrumNearOrigin(
                f"sample {small[0]} has |k| = {norms[small[0]]}; the zero wave "
                "vector has no quantization axis"
            )
        total = float(np.sum(self.weight * np.abs(self.amplitude) ** 2))
        if abs(total - 1.0) > NORM_TOL:
            raise ValueError(
                f"spectrum is not normalized: sum(weight |A|^2) = {total}"
            )

    def __len__(self):
        return len(self.weight)


@dataclass(frozen=True)
class PacketConfig:
    """Shared per-packet parameters: characterization vector, Jones vector, references."""

    i_vec: np.ndarray
    alpha: np.ndarray
    ref: ReferenceSpinors = DEFAULT_REFERENCES
    hbar: float = 1.0
    mu: float = 1.0


@dataclass(frozen=True)
class SpinField:
    """Sampled local polarization: density rho and unit vector s at grid points.

    Rows where rho falls below 1e-12 of the peak are node points; their s rows
    are NaN and flagged in `node`.
    """

    x: np.ndarray
    t: float
    rho: np.ndarray
    s: np.ndarray
    node: np.ndarray = field(repr=False, default=None)


def gaussian_spectrum(k0, sigma_k: float, n_per_axis: int, span: float) -> Spectrum:
    """Gaussian weighting sampled on a cubic midpoint grid around k0.

    Parameters
    ----------
    k0 : array_like, shape (3,)
        Grid center; must satisfy |k0| > 3 sigma_k so the grid stays clear of
        the origin and the sampled directions stay in one hemisphere.
    sigma_k : float
        Width of |A|^2 per axis: A(k) ~ exp(-|k - k0|^2 / (4 sigma_k^2)).
    n_per_axis : int
        Odd number of samples per axis (the center sample then sits at k0).
    span : float
        Grid half-width per axis in units of sigma_k.

    Returns
    -------
    Spectrum
        Lexicographically ordered samples with weights equal to the cell
        volume, renormalized so sum(weight |A|^2) is exactly 1.
    """
    k0 = np.asarray(k0, dtype=float)
    if n_per_axis < 1 or n_per_axis % 2 == 0:
        raise BadGrid(f"n_per_axis must be odd and positive, got {n_per_axis}")
    if span <= 0 or sigma_k <= 0:
        raise BadGrid(f"span and sigma_k must be positive, got {span}, {sigma_k}")
    if np.linalg.norm(k0) <= 3.0 * sigma_k + EPS_K:
        raise SpectrumNearOrigin(
            f"|k0| = {np.linalg.norm(k0)} is within 3 sigma_k = {3 * sigma_k} of "
            "the origin; samples would reach the zero wave vector"
        )
    half = span * sigma_k
    h = 2.0 * half / n_per_axis
    axes = [k0[i] - half + (np.arange(n_per_axis) + 0.5) * h for i in range(3)]
    k = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, 3)
    weight = np.full(len(k), h**3)
    amp = np.exp(-np.sum((k - k0) ** 2, axis=1) / (4.0 * sigma_k**2)).astype(complex)
    amp /= np.sqrt(np.sum(weight * np.abs(amp) ** 2))
    return Spectrum(k=k, amplitude=amp, weight=weight)


def dispersion(k, cfg: PacketConfig) -> float:
    """Angular frequency hbar |k|^2 / (2 mu) of one plane wave."""
    return float(cfg.hbar * np.dot(k, k) / (2.0 * cfg.mu))


def sample_spinors(spec: Spectrum, cfg: PacketConfig, branch: int = 0) -> np.ndarray:
    """Per-sample spinors chi(k_hat): the superposition (branch 0) or one eigenspinor.

    branch +1/-1 selects the corresponding eigenspinor instead of the
    superposition varpi alpha.  Raises DegenerateFrame naming the offending
    sample when some k is parallel to the characterization vector, and
    ReferenceAnnihilated when the references fail on the spectrum's support.
    """
    out = np.empty((len(spec), 2), dtype=complex)
    for j in range(len(spec)):
        k = spec.k[j]
        what = k / np.linalg.norm(k)
        try:
            varpi = mapping_matrix(build_frame(what, cfg.i_vec), cfg.ref)
        except DegenerateFrame as exc:
            raise DegenerateFrame(
                f"sample {j} with k = {k.tolist()} is parallel to the "
                f"characterization vector: {exc}"
            ) from exc
        except ReferenceAnnihilated as exc:
            raise ReferenceAnnihilated(
                f"sample {j} with k = {k.tolist()}: {exc}; choose references "
                "valid on the whole spectrum support"
            ) from exc
        if branch == 0:
            out[j] = compose_spinor(varpi, cfg.alpha)
        elif branch == +1:
            out[j] = varpi[:, 0]
        elif branch == -1:
            out[j] = varpi[:, 1]
        else:
            raise ValueError(f"branch must be 0, +1 or -1, got {branch!r}")
    return out


def _plane_wave_sum(spec, cfg, spinors, points, t):
    """Sum the spectrum at each point, in fixed sample order for reproducibility."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    omega = cfg.hbar * np.sum(spec.k**2, axis=1) / (2.0 * cfg.mu)
    coeff = (spec.weight * spec.amplitude)[:, None] * spinors
    out = np.empty((len(points), 2), dtype=complex)
    for lo in range(0, len(points), 2048):
        hi = min(lo + 2048, len(points))
        phases = np.exp(1j * (points[lo:hi] @ spec.k.T - t * omega))
        # per-point reduction over samples in index order, not a BLAS product
        out[lo:hi, 0] = (phases * coeff[:, 0]).sum(axis=1)
        out[lo:hi, 1] = (phases * coeff[:, 1]).sum(axis=1)
    return (2.0 * np.pi) ** -1.5 * out


def evaluate_wavefunction(spec: Spectrum, cfg: PacketConfig, x, t: float) -> np.ndarray:
    """Unnormalized spinor amplitude of the packet at one space-time point."""
    spinors = sample_spinors(spec, cfg)
    return _plane_wave_sum(spec, cfg, spinors, x, t)[0]


def eigen_component(
    spec: Spectrum, cfg: PacketConfig, branch: int, x, t: float
) -> np.ndarray:
    """Eigen component of the packet: the same sum with chi+ or chi- per sample.

    The full amplitude decomposes as alpha_1 (+ branch) + alpha_2 (- branch).
    """
    if branch not in (+1, -1):
        raise ValueError(f"branch must be +1 or -1, got {branch!r}")
    spinors = sample_spinors(spec, cfg, branch=branch)
    return _plane_wave_sum(spec, cfg, spinors, x, t)[0]


def _density_and_spin(psi):
    rho = np.abs(psi[:, 0]) ** 2 + np.abs(psi[:, 1]) ** 2
    sdens = np.empty((len(psi), 3))
    for j, mat in enumerate((SIGMA_X, SIGMA_Y, SIGMA_Z)):
        sdens[:, j] = np.einsum("ni,ij,nj->n", psi.conj(), mat, psi).real
    return rho, sdens


def local_spv(spec: Spectrum, cfg: PacketConfig, x, t: float, rho_floor: float = 0.0):
    """Probability density and unit polarization vector at one point.

    Returns (rho, s) with s = Psi^dag sigma Psi / rho.  Raises NodePoint when
    rho does not exceed rho_floor (default: only an exactly vanishing density).
    """
    psi = evaluate_wavefunction(spec, cfg, x, t)[None, :]
    rho, sdens = _density_and_spin(psi)
    if rho[0] <= rho_floor:
        raise NodePoint(f"density {rho[0]} at x = {np.asarray(x).tolist()}")
    return float(rho[0]), sdens[0] / rho[0]


def spin_field(spec: Spectrum, cfg: PacketConfig, points, t: float) -> SpinField:
    """Local polarization field over a batch of points.

    Node points (rho below 1e-12 of the grid peak) get NaN polarization rows
    instead of an error so one node cannot abort a whole field evaluation.
    """
    spinors = sample_spinors(spec, cfg)
    psi = _plane_wave_sum(spec, cfg, spinors, points, t)
    rho, sdens = _density_and_spin(psi)
    peak = rho.max(initial=0.0)
    node = rho < 1e-12 * peak if peak > 0.0 else np.ones(len(rho), dtype=bool)
    s = np.full_like(sdens, np.nan)
    ok = ~node
    s[ok] = sdens[ok] / rho[ok, None]
    return SpinField(
        x=np.atleast_2d(np.asarray(points, dtype=float)), t=float(t), rho=rho, s=s, node=node
    )


def total_spin(spec: Spectrum, cfg: PacketConfig) -> np.ndarray:
    """Total spin: (hbar/2) alpha^dag [sum weight |A|^2 sigma^H(k_hat)] alpha.

    Each sample contributes its conjugated Pauli components expanded on its own
    triad; the result does not involve time.  |S| <= hbar/2 up to quadrature
    normalization error.
    """
    alpha = np.asarray(cfg.alpha, dtype=complex)
    acc = np.zeros(3)
    for j in range(len(spec)):
        k = spec.k[j]
        what = k / np.linalg.norm(k)
        try:
            hs = heisenberg_sigma(build_frame(what, cfg.i_vec), cfg.ref)
        except (DegenerateFrame, ReferenceAnnihilated) as exc:
            raise type(exc)(f"sample {j} with k = {k.tolist()}: {exc}") from exc
        expect = np.array([np.vdot(alpha, m @ alpha).real for m in hs.cartesian()])
        acc += spec.weight[j] * np.abs(spec.amplitude[j]) ** 2 * expect
    return 0.5 * cfg.hbar * acc


def total_spin_i_sweep(spec: Spectrum, cfg: PacketConfig, axis, n_steps: int):
    """Total spin under rotation of the characterization vector about an axis.

    Returns (phis, spins): n_steps angles uniform on [0, 2 pi) and the total
    spin at each rotated characterization vector.
    """
    from .rotations import so3_rotation

    if n_steps < 1:
        raise ValueError("n_steps must be at least 1")
    axis = np.asarray(axis, dtype=float)
    phis = 2.0 * np.pi * np.arange(n_steps) / n_steps
    spins = np.empty((n_steps, 3))
    for i, phi in enumerate(phis):
        i_rot = so3_rotation(axis, phi) @ cfg.i_vec
        spins[i] = total_spin(spec, replace(cfg, i_vec=i_rot))
    return phis, spins


def position_grid(n_per_axis: int, half_span: float):
    """Cubic lexicographic grid of n^3 points spanning [-half_span, half_span]^3.

    Returns (points, spacing); the inclusive grid has spacing
    2 half_span / (n - 1).
    """
    if n_per_axis < 2:
        raise BadGrid(f"position grid needs at least 2 points per axis, got {n_per_axis}")
    ax = np.linspace(-half_span, half_span, n_per_axis)
    points = np.stack(np.meshgrid(ax, ax, ax, indexing="ij"), axis=-1).reshape(-1, 3)
    return points, float(ax[1] - ax[0])


def _fmt(value: float) -> str:
    return f"{value:.17g}"


def save_spectrum(spec: Spectrum, path) -> None:
    """Write a spectrum as CSV rows kx,ky,kz,re_A,im_A,weight."""
    lines = [SPECTRUM_HEADER]
    for j in range(len(spec)):
        a = spec.amplitude[j]
        lines.append(
            ",".join(
                _fmt(v)
                for v in (*spec.k[j], a.real, a.imag, spec.weight[j])
            )
        )
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_spectrum(path) -> Spectrum:
    """Read a spectrum CSV; the exact header line is required."""
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or lines[0] != SPECTRUM_HEADER:
        raise ValueError(f"spectrum file must start with header '{SPECTRUM_HEADER}'")
    rows = np.array([[float(tok) for tok in ln.split(",")] for ln in lines[1:]])
    if rows.ndim != 2 or rows.shape[1] != 6:
        raise ValueError("spectrum rows must have 6 comma-separated fields")
    return Spectrum(
        k=rows[:, :3], amplitude=rows[:, 3] + 1j * rows[:, 4], weight=rows[:, 5]
    )


def save_spin_field(fld: SpinField, path) -> None:
    """Write a spin field as CSV rows x,y,z,t,rho,sx,sy,sz (NaN s at nodes)."""
    lines = [FIELD_HEADER]
    for j in range(len(fld.rho)):
        lines.append(
            ",".join(
                _fmt(v) for v in (*fld.x[j], fld.t, fld.rho[j], *fld.s[j])
            )
        )
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
