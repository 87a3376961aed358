"""Uniform real-line grids and dense operator matrices on them.

The laboratory discretizes the line on n equally spaced points
x_k = -L + k*dx, dx = 2L/n (periodic Fourier convention, right endpoint
excluded).  Momentum is represented either pseudospectrally (diagonal in
the discrete Fourier basis, wavenumbers in (-p_max, p_max] with
p_max = pi/dx) or by antisymmetric finite-difference stencils.

Everything downstream manipulates OperatorMatrix values: a dense complex
matrix plus the grid and a basis tag.  Builders are pure functions and
the stored arrays are frozen, so results are safe to share across
threads and parameter sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConfigurationError

# Basis tags for OperatorMatrix.  "position-grid" is the default
# full-line representation; "momentum-grid" marks matrices expressed in
# the discrete Fourier basis (modes ordered like fftfreq); "half-line-grid"
# is the Dirichlet radial grid; "momentum-window" is a contiguous block of
# low-|k| Fourier modes (used by hermitize, where the full grid cannot
# represent the conjugated operator in double precision).
POSITION = "position-grid"
MOMENTUM = "momentum-grid"
HALF_LINE = "half-line-grid"
MOMENTUM_WINDOW = "momentum-window"

_BASIS_TAGS = (POSITION, MOMENTUM, HALF_LINE, MOMENTUM_WINDOW)


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid on [-L, L) with n_points points.

    dx = 2L/n, x_k = -L + k*dx, and the Fourier momentum cutoff is
    p_max = pi/dx.  n_points must be >= 8; Fourier-based builders
    additionally require it to be even.
    """

    n_points: int
    half_width: float

    def __post_init__(self):
        if self.n_points < 8:
            raise ConfigurationError(f"n_points must be >= 8, got {self.n_points}")
        if not self.half_width > 0:
            raise ConfigurationError(f"half_width must be > 0, got {self.half_width}")

    @property
    def dx(self) -> float:
        return 2.0 * self.half_width / self.n_points

    @property
    def p_max(self) -> float:
        return np.pi / self.dx

    def points(self) -> np.ndarray:
        return _frozen(-self.half_width + self.dx * np.arange(self.n_points))

    def wavenumbers(self) -> np.ndarray:
        """Fourier wavenumbers in fftfreq ordering, Nyquist mapped to +p_max."""
        self.require_even()
        k = 2.0 * np.pi * np.fft.fftfreq(self.n_points, d=self.dx)
        k[self.n_points // 2] = abs(k[self.n_points // 2])
        return _frozen(k)

    def require_even(self) -> None:
        if self.n_points % 2 != 0:
            raise ConfigurationError(
                f"Fourier discretization needs even n_points, got {self.n_points}")


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense complex matrix representing an operator on a grid."""

    entries: np.ndarray
    basis: str
    grid: GridSpec

    def __post_init__(self):
        if self.basis not in _BASIS_TAGS:
            raise ConfigurationError(f"unknown basis tag {self.basis!r}")
        e = np.asarray(self.entries, dtype=complex)
        if e.ndim != 2 or e.shape[0] != e.shape[1]:
            raise ConfigurationError(f"entries must be square, got shape {e.shape}")
        # momentum-window blocks are smaller than the grid by construction
        if self.basis != MOMENTUM_WINDOW and e.shape[0] != self.grid.n_points:
            raise ConfigurationError(
                f"matrix dimension {e.shape[0]} != grid n_points {self.grid.n_points}")
        object.__setattr__(self, "entries", _frozen(e))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def hermiticity_residual(self) -> float:
        """||M - M^dag||_F / ||M||_F."""
        nrm = np.linalg.norm(self.entries)
        if nrm == 0.0:
            return 0.0
        return float(np.linalg.norm(self.entries - self.entries.conj().T) / nrm)


def build_position(grid: GridSpec) -> OperatorMatrix:
    """Diagonal position operator, x_k = -L + k*dx."""
    return OperatorMatrix(np.diag(grid.points().astype(complex)), POSITION, grid)


def _fourier_momentum(grid: GridSpec) -> np.ndarray:
    k = grid.wavenumbers()
    eye = np.eye(grid.n_points, dtype=complex)
    return np.fft.ifft(k[:, None] * np.fft.fft(eye, axis=0), axis=0)


def build_momentum(grid: GridSpec, scheme: str = "fourier") -> OperatorMatrix:
    """Momentum operator p = -i d/dx.

    "fourier": diagonal in the discrete Fourier basis (wavenumbers in
    (-p_max, p_max]), transformed back to the position grid; Hermitian.
    "fd2"/"fd4": antisymmetric 2nd/4th-order central stencils without
    wrap-around, times -i.
    """
    n = grid.n_points
    if scheme == "fourier":
        return OperatorMatrix(_fourier_momentum(grid), POSITION, grid)
    if scheme == "fd2":
        D = np.zeros((n, n))
        i = np.arange(n - 1)
        D[i, i + 1] = 1.0
        D[i + 1, i] = -1.0
        return OperatorMatrix(-1j * D / (2.0 * grid.dx), POSITION, grid)
    if scheme == "fd4":
        D = np.zeros((n, n))
        i = np.arange(n - 1)
        D[i, i + 1] = 8.0
        D[i + 1, i] = -8.0
        i = np.arange(n - 2)
        D[i, i + 2] = -1.0
        D[i + 2, i] = 1.0
        return OperatorMatrix(-1j * D / (12.0 * grid.dx), POSITION, grid)
    raise ConfigurationError(f"unknown momentum scheme {scheme!r}")


def to_momentum_rep(entries: np.ndarray) -> np.ndarray:
    """Conjugate a position-basis matrix into the Fourier basis, U M U^dag."""
    return np.fft.fft(np.fft.ifft(entries, axis=1), axis=0)


def to_position_rep(entries: np.ndarray) -> np.ndarray:
    """Inverse of to_momentum_rep."""
    return np.fft.ifft(np.fft.fft(entries, axis=1), axis=0)


def fft_state(grid: GridSpec, v: np.ndarray) -> np.ndarray:
    """Position-grid vector -> unitary Fourier coefficients."""
    return np.fft.fft(v) / np.sqrt(grid.n_points)


def ifft_state(grid: GridSpec, c: np.ndarray) -> np.ndarray:
    """Unitary Fourier coefficients -> position-grid vector."""
    return np.fft.ifft(c) * np.sqrt(grid.n_points)


def hermite_columns(x: np.ndarray, n_modes: int) -> np.ndarray:
    """First n_modes unit-frequency Hermite functions sampled on x.

    Stable two-term recurrence; columns are L2-orthonormal on the line
    (up to grid quadrature), not re-normalized here.
    """
    cols = np.empty((x.size, n_modes))
    h0 = np.pi ** -0.25 * np.exp(-x ** 2 / 2.0)
    cols[:, 0] = h0
    if n_modes > 1:
        cols[:, 1] = np.sqrt(2.0) * x * h0
    for v in range(1, n_modes - 1):
        cols[:, v + 1] = (np.sqrt(2.0 / (v + 1)) * x * cols[:, v]
                          - np.sqrt(v / (v + 1.0)) * cols[:, v - 1])
    return cols

# Super-Gaussian taper steepness for probe frames.  exp(-40 (k/klim)^4)
# is ~1 over the probes' physical momentum reach, drops below underflow
# well before 2*klim, and in particular annihilates the ~1e-16 FFT noise
# floor that metric weights exp(e(k)) would otherwise amplify.
_TAPER_STEEPNESS = 40.0


@lru_cache(maxsize=32)
def probe_frame(grid: GridSpec, n_modes: int, k_limit: float) -> np.ndarray:
    """Orthonormal frame of band-limited, box-interior probe states.

    Columns are unitary-Fourier coefficients of the lowest Hermite
    functions, multiplied by the super-Gaussian taper
    exp(-40 (k/k_limit)^4) and re-orthonormalized.  The taper makes the
    columns exactly zero (underflow) outside ~2*k_limit, so products of
    the form diag(w) @ frame never touch the noise floor even for
    violently growing weights w.  All metric-weighted residuals are
    measured on the span of such a frame: it is the band-limited,
    interior subspace on which the unbounded metrics of this laboratory
    are actually defined.
    """
    if n_modes < 1:
        raise ConfigurationError("probe frame needs at least one mode")
    if not k_limit > 0:
        raise ConfigurationError("probe k_limit must be positive")
    reach = np.sqrt(2.0 * n_modes + 1.0)
    if k_limit < 1.2 * reach:
        raise ConfigurationError(
            f"probe k_limit {k_limit:.2f} too small for {n_modes} modes "
            f"(momentum reach ~{reach:.2f}); use fewer modes or a finer grid")
    x = grid.points()
    k = grid.wavenumbers()
    ck = np.fft.fft(hermite_columns(x, n_modes).astype(complex), axis=0)
    ck /= np.sqrt(grid.n_points)
    ck *= np.exp(-_TAPER_STEEPNESS * (k[:, None] / k_limit) ** 4)
    frame, _ = np.linalg.qr(ck)
    return _frozen(frame)


def default_probe_count(grid: GridSpec, k_cap: float) -> tuple[int, float]:
    """Pick (n_modes, k_limit) so probes fit under a momentum cap.

    k_limit is set to half the cap (taper margin), and the mode count
    so the probes' physical reach sqrt(2N+1) stays below k_limit/1.9.
    """
    k_limit = min(0.5 * k_cap, 0.75 * grid.p_max)
    n_modes = int(((k_limit / 1.9) ** 2 - 1.0) / 2.0)
    n_modes = max(4, min(n_modes, 48))
    return n_modes, k_limit
