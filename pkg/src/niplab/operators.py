"""Hamiltonian families of the wrong-sign quartic oscillator laboratory.

Every builder returns a dense OperatorMatrix.  The complex-contour
models are realized on the real line: the Jones-Mateo (JM) family uses
the mapped form H0 + H1 with

    H0 = p^2 - p/2 + 16 lam^2 (x^2 - 1)          (Hermitian)
    H1 = i(x p^2 + p^2 x)/2 - 32 i lam^2 x       (anti-Hermitian)

which is the real-line image of -d^2/dz^2 - lam^2 z^4 on the contour
z = -2i sqrt(1 + ix); the Buslaev-Grecchi (BG) family and the tilded
quartic partner of the radial anharmonic oscillator use the shifted
line r = x - i*eps.  Self-adjoint "avatar" partners are ordinary
Schroedinger operators assembled directly.

Radial operators live on a Dirichlet half-line grid (0, 2L), kinetic
part spectrally exact via the type-I discrete sine transform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.fft

from .errors import ConfigurationError
from .grids import (
    HALF_LINE,
    POSITION,
    GridSpec,
    OperatorMatrix,
    build_momentum,
    build_position,
)

DEFAULT_EPS = 0.5  # regularizing shift for the tilded quartic partner


@dataclass(frozen=True)
class AHOParams:
    """Correct-sign radial anharmonic oscillator: coupling lam >= 0, j = 2l+d-2."""
    lam: float
    j: float = 1.0

    def __post_init__(self):
        if self.lam < 0:
            raise ConfigurationError("AHO coupling lam must be >= 0")
        if self.j < 1:
            raise ConfigurationError(
                "j < 1 is unsupported (attractive centrifugal singularity)")


@dataclass(frozen=True)
class BBParams:
    """Bender-Boettcher potential lam^2 x^2 (ix)^delta on the real line."""
    lam: float
    delta: float

    def __post_init__(self):
        if not self.lam > 0:
            raise ConfigurationError("BB coupling lam must be > 0")
        if not 0.0 <= self.delta < 2.0:
            raise ConfigurationError(
                f"BB exponent delta must lie in [0, 2), got {self.delta}; "
                "larger delta needs a complex contour and is out of scope")


@dataclass(frozen=True)
class JMParams:
    """Jones-Mateo wrong-sign quartic, coupling lam > 0."""
    lam: float

    def __post_init__(self):
        if not self.lam > 0:
            raise ConfigurationError("JM coupling lam must be > 0")


@dataclass(frozen=True)
class BGParams:
    """Buslaev-Grecchi shifted-line operator: lam >= 0, j >= 1, shift eps > 0."""
    lam: float
    j: float = 1.0
    eps: float = DEFAULT_EPS

    def __post_init__(self):
        if self.lam < 0:
            raise ConfigurationError("BG coupling lam must be >= 0")
        if self.j < 1:
            raise ConfigurationError("BG requires j >= 1")
        if not self.eps > 0:
            raise ConfigurationError(
                "BG requires eps > 0 (eps = 0 puts the centrifugal pole on the grid)")


@dataclass(frozen=True)
class WellAnalysis:
    """Closed-form double-well data for the JM avatar -D^2 - 2 lam y + 4 lam^2 y^4."""
    y_min: float
    v_min: float
    omega_sq: float
    e0_estimate: float


def analyze_well(lam: float) -> WellAnalysis:
    """Minimum, curvature and ground-state estimate of the avatar well.

    y_min = 1/(2 lam^(1/3)), v(y_min) = -(3/4) lam^(2/3),
    omega^2 = v''(y_min)/2 = 24 lam^2 y_min^2, and
    E0 ~ v_min + sqrt(6) lam^(2/3) = (sqrt(6) - 3/4) lam^(2/3) > 0.
    """
    if not lam > 0:
        raise ConfigurationError("analyze_well requires lam > 0")
    y_min = 1.0 / (2.0 * lam ** (1.0 / 3.0))
    v_min = -0.75 * lam ** (2.0 / 3.0)
    omega_sq = 24.0 * lam ** 2 * y_min ** 2
    e0 = v_min + np.sqrt(6.0) * lam ** (2.0 / 3.0)
    return WellAnalysis(y_min, v_min, omega_sq, float(e0))


def _p_squared(grid: GridSpec) -> np.ndarray:
    P = build_momentum(grid, "fourier").entries
    return P @ P


def half_line_points(grid: GridSpec) -> np.ndarray:
    """Interior points of (0, 2L): r_k = (k+1) * dr, dr = 2L/(n+1)."""
    n = grid.n_points
    dr = 2.0 * grid.half_width / (n + 1)
    return dr * np.arange(1, n + 1)


def _dst_kinetic(grid: GridSpec) -> np.ndarray:
    """-d^2/dr^2 on (0, 2L) with Dirichlet ends, exact in the sine basis."""
    n = grid.n_points
    length = 2.0 * grid.half_width
    km = np.pi * np.arange(1, n + 1) / length
    M = scipy.fft.idst(np.diag(km ** 2), type=1, axis=0, norm="ortho")
    return scipy.fft.idst(M.T, type=1, axis=0, norm="ortho").T


def build_aho_radial(lam: float, j: float, grid: GridSpec) -> OperatorMatrix:
    """Radial reduction of the correct-sign anharmonic oscillator.

    (1/2)(-d^2/dr^2 + (j^2-1)/(4 r^2) + r^2) + lam^2 r^4 on (0, 2L),
    Dirichlet at both ends, small-r end offset one spacing from the pole.
    At lam = 0 the spectrum is 2n + 1 + j/2.
    """
    AHOParams(lam, j)
    r = half_line_points(grid)
    V = 0.5 * ((j ** 2 - 1.0) / (4.0 * r ** 2) + r ** 2) + lam ** 2 * r ** 4
    H = 0.5 * _dst_kinetic(grid) + np.diag(V)
    return OperatorMatrix(H.astype(complex), HALF_LINE, grid)


def build_qtilde(lam: float, j: float, eps: float, grid: GridSpec) -> OperatorMatrix:
    """Wrong-sign full-line partner of the radial oscillator.

    -D^2 + j/2 - i j lam r + r^2 - 2 i lam r^3 - lam^2 r^4 with the
    shifted-line argument r = x - i*eps (decaying eigenfunctions on a
    finite box).  Isospectral-in-subset with build_aho_radial; the
    shifted line may carry a surplus quasi-parity tower.
    """
    if lam < 0:
        raise ConfigurationError("qtilde requires lam >= 0")
    if eps < 0:
        raise ConfigurationError("qtilde requires eps >= 0")
    x = grid.points()
    r = x - 1j * eps
    V = j / 2.0 - 1j * j * lam * r + r ** 2 - 2j * lam * r ** 3 - lam ** 2 * r ** 4
    return OperatorMatrix(_p_squared(grid) + np.diag(V), POSITION, grid)


def build_bb(lam: float, delta: float, grid: GridSpec) -> OperatorMatrix:
    """Bender-Boettcher operator -D^2 + lam^2 x^2 (ix)^delta, 0 <= delta < 2.

    Principal branch: on the real grid (ix)^delta =
    |x|^delta exp(i delta pi/2 sign(x)).
    """
    BBParams(lam, delta)
    x = grid.points()
    V = lam ** 2 * x ** 2 * np.abs(x) ** delta \
        * np.exp(1j * delta * np.pi / 2.0 * np.sign(x))
    return OperatorMatrix(_p_squared(grid) + np.diag(V), POSITION, grid)


def build_njm_mapped(g_value: float, grid: GridSpec) -> OperatorMatrix:
    """Mapped wrong-sign quartic with coupling g = lam^2.

    H0 + H1 with 16 lam^2 -> 16 g and 32 lam^2 -> 32 g; reproduces
    build_jm_mapped(lam) bit-identically when g = lam*lam.
    """
    if not g_value > 0:
        raise ConfigurationError("mapped quartic requires coupling g > 0")
    x = grid.points()
    X = np.diag(x.astype(complex))
    P = build_momentum(grid, "fourier").entries
    P2 = P @ P
    H0 = P2 - P / 2.0 + 16.0 * g_value * (X @ X - np.eye(grid.n_points))
    H1 = 1j * (X @ P2 + P2 @ X) / 2.0 - 32j * g_value * X
    return OperatorMatrix(H0 + H1, POSITION, grid)


def build_jm_mapped(lam: float, grid: GridSpec) -> OperatorMatrix:
    """Jones-Mateo mapped operator H0 + H1 (see module docstring)."""
    JMParams(lam)
    return build_njm_mapped(lam * lam, grid)


def build_njm_avatar(g_value: float, grid: GridSpec) -> OperatorMatrix:
    """Self-adjoint avatar -D^2 - 2 sqrt(g) y + 4 g y^4."""
    if not g_value > 0:
        raise ConfigurationError("avatar requires coupling g > 0")
    y = grid.points()
    V = -2.0 * np.sqrt(g_value) * y + 4.0 * g_value * y ** 4
    return OperatorMatrix(_p_squared(grid) + np.diag(V), POSITION, grid)


def build_jm_avatar(lam: float, grid: GridSpec) -> OperatorMatrix:
    """Self-adjoint avatar -D^2 - 2 lam y + 4 lam^2 y^4 of the JM operator."""
    JMParams(lam)
    return build_njm_avatar(lam * lam, grid)


def build_bg(lam: float, j: float, eps: float, grid: GridSpec) -> OperatorMatrix:
    """Buslaev-Grecchi shifted-line operator.

    (1/2)(-D^2 + (j^2-1)/(4 r^2) + r^2) - lam^2 r^4, r = x - i*eps.
    TP-symmetric: commutes with grid reflection composed with complex
    conjugation.
    """
    BGParams(lam, j, eps)
    x = grid.points()
    r = x - 1j * eps
    V = 0.5 * ((j ** 2 - 1.0) / (4.0 * r ** 2) + r ** 2) - lam ** 2 * r ** 4
    return OperatorMatrix(0.5 * _p_squared(grid) + np.diag(V), POSITION, grid)


def build_bg_avatar(lam: float, j: float, grid: GridSpec) -> OperatorMatrix:
    """Self-adjoint confining double well isospectral to build_bg.

    -D^2 + j/2 - j lam y + y^2 - 2 lam y^3 + lam^2 y^4.
    """
    if lam < 0:
        raise ConfigurationError("BG avatar requires lam >= 0")
    if j < 1:
        raise ConfigurationError("BG avatar requires j >= 1")
    y = grid.points()
    V = j / 2.0 - j * lam * y + y ** 2 - 2.0 * lam * y ** 3 + lam ** 2 * y ** 4
    return OperatorMatrix(_p_squared(grid) + np.diag(V), POSITION, grid)
