"""Thin-wire method-of-moments solver for arrays of parallel rods.

Formulation: electric-field integral equation on wire axes, discretized with
overlapping piecewise-sinusoidal dipole modes on segment junctions and tested
with the same functions (Galerkin), so the moment matrix is complex-symmetric
by construction. The driven element's feed segment is split internally at its
center so the delta-gap excitation lands on a junction and the feed unknown is
the gap current itself.

Same-wire interactions use the azimuthally averaged surface kernel, which
stays accurate when segments are about as short as the wire is thick; wire to
wire interactions use the axis-to-axis distance. All kernel integrals run
Gauss-Legendre quadrature after the substitution u = rho*sinh(t), which
flattens the 1/R peak so near-singular entries are exact to quadrature
precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DiscretizationError, DomainError, GeometryError, SolverError
from .geometry import SPEED_OF_LIGHT, ElementRole, YagiDesign

MU_0 = 4.0e-7 * math.pi
ETA_0 = MU_0 * SPEED_OF_LIGHT  # wave impedance consistent with the project's c

DEFAULT_SEGMENTS_PER_ELEMENT = 21
GAIN_FLOOR_DBI = -180.0

_AXIAL_QUAD_ORDER = 16
_RING_QUAD_ORDER = 32
_PATTERN_QUAD_ORDER = 12
_PIVOT_RATIO_LIMIT = 1e-12

# power-normalization quadrature (independent of the returned sample grid)
_POWER_THETA_ORDER = 64
_POWER_PHI_SAMPLES = 128

_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gauss(order: int) -> tuple[np.ndarray, np.ndarray]:
    if order not in _GL_CACHE:
        _GL_CACHE[order] = np.polynomial.legendre.leggauss(order)
    return _GL_CACHE[order]


@dataclass(frozen=True, eq=False)
class WireGrid:
    """Segmented wire layout: one row per segment, grouped by element."""

    start: np.ndarray  # (n, 3) segment start points, meters
    end: np.ndarray  # (n, 3) segment end points
    radius: np.ndarray  # (n,) wire radius per segment
    element: np.ndarray  # (n,) owning element index
    feed_segment: int  # global index of the delta-gap segment

    @property
    def n_segments(self) -> int:
        return int(self.start.shape[0])

    @property
    def centers(self) -> np.ndarray:
        return 0.5 * (self.start + self.end)

    @property
    def lengths(self) -> np.ndarray:
        return np.linalg.norm(self.end - self.start, axis=1)

    def validate(self) -> list[str]:
        """Structural checks; returns human-readable violations (empty if valid)."""
        v: list[str] = []
        n = self.n_segments
        if n == 0:
            return ["grid has no segments"]
        if not 0 <= self.feed_segment < n:
            v.append(f"feed segment {self.feed_segment} out of range 0..{n - 1}")
            return v
        lengths = self.lengths
        if np.any(lengths <= 0):
            v.append("zero-length segment present")
        transverse = self.end[:, :2] - self.start[:, :2]
        if np.any(np.abs(transverse) > 1e-12):
            v.append("segments must be parallel to the z axis")
        # thin-wire validity: a segment shorter than its own radius leaves the
        # wire better modeled as a fat cylinder than a line current
        bad = np.nonzero(lengths <= self.radius)[0]
        if bad.size:
            v.append(
                f"segment {bad[0]} of element {int(self.element[bad[0]])} shorter than its radius"
            )
        for e in np.unique(self.element):
            idx = np.nonzero(self.element == e)[0]
            if idx.size % 2 == 0:
                v.append(f"element {int(e)} has an even segment count {idx.size}")
            seg_l = lengths[idx]
            if seg_l.size and not np.allclose(seg_l, seg_l[0], rtol=1e-9, atol=0):
                v.append(f"element {int(e)} segments are not uniform")
            ends = self.end[idx[:-1]]
            starts = self.start[idx[1:]]
            if idx.size > 1 and not np.allclose(ends, starts, rtol=0, atol=1e-12):
                v.append(f"element {int(e)} segments are not contiguous")
        feed_elem = self.element[self.feed_segment]
        idx = np.nonzero(self.element == feed_elem)[0]
        within = int(np.nonzero(idx == self.feed_segment)[0][0])
        if idx.size % 2 == 1 and within != (idx.size - 1) // 2:
            v.append("feed segment is not centered on its element")
        return v


@dataclass(frozen=True, eq=False)
class ModeBasis:
    """Sinusoidal dipole modes derived from a grid.

    One mode per internal junction of each element; the driven element's feed
    segment is split at its center, which adds a junction exactly at the gap.
    Each mode peaks at z_peak and falls sinusoidally to zero over w_lo below
    and w_hi above the peak.
    """

    x: np.ndarray  # (m,) wire x per mode
    y: np.ndarray  # (m,) wire y per mode
    z_peak: np.ndarray  # (m,) junction height
    w_lo: np.ndarray  # (m,) lower half-tent width
    w_hi: np.ndarray  # (m,) upper half-tent width
    radius: np.ndarray  # (m,) wire radius per mode
    element: np.ndarray  # (m,) owning element index
    feed_mode: int  # mode sitting on the feed gap
    feed_length_m: float  # length of the (unsplit) feed segment

    @property
    def n_modes(self) -> int:
        return int(self.x.size)


@dataclass(frozen=True, eq=False)
class CurrentSolution:
    """Segment currents produced by one delta-gap solve.

    currents holds one sample per grid segment (the expansion evaluated at
    segment centers); amplitudes holds the raw junction-mode coefficients the
    linear solve produced, paired with basis.
    """

    currents: np.ndarray  # (n,) complex amps, one per segment
    amplitudes: np.ndarray  # (m,) complex junction-mode coefficients
    basis: ModeBasis
    excitation_voltage: complex
    frequency_hz: float
    feed_index: int
    feed_length_m: float
    residual: float  # relative residual of the linear solve


@dataclass(frozen=True)
class ImpedanceResult:
    z: complex
    frequency_hz: float
    segment_count: int


@dataclass(frozen=True, eq=False)
class FarField:
    """Directivity samples on a regular sphere grid.

    gain_dbi is floored at GAIN_FLOOR_DBI so axial nulls stay finite;
    magnitude keeps the exact normalized field (zeros included).
    """

    theta_deg: np.ndarray  # (nt,) 0..180 inclusive
    phi_deg: np.ndarray  # (np,) 0..360 exclusive
    gain_dbi: np.ndarray  # (nt, np)
    magnitude: np.ndarray  # (nt, np) normalized |E|, peak 1.0
    resolution_deg: float
    frequency_hz: float

    def peak_gain_dbi(self) -> float:
        return float(np.max(self.gain_dbi))

    def peak_direction(self) -> tuple[float, float]:
        t, p = np.unravel_index(int(np.argmax(self.gain_dbi)), self.gain_dbi.shape)
        return float(self.theta_deg[t]), float(self.phi_deg[p])

    def gain_at(self, theta_deg: float, phi_deg: float) -> float:
        """Gain at an exact grid sample; raises if the direction is off-grid."""
        ti = np.nonzero(np.isclose(self.theta_deg, theta_deg, rtol=0, atol=1e-9))[0]
        pi = np.nonzero(np.isclose(self.phi_deg, phi_deg % 360.0, rtol=0, atol=1e-9))[0]
        if not ti.size or not pi.size:
            raise DomainError(f"direction ({theta_deg}, {phi_deg}) is not on the sample grid")
        return float(self.gain_dbi[ti[0], pi[0]])

    def sphere_integral_linear_gain(self) -> float:
        """Solid-angle integral of linear gain over the sample grid.

        Trapezoid in theta, rectangle over the periodic phi row; equals
        4*pi when the samples are consistently normalized.
        """
        res = math.radians(self.resolution_deg)
        linear = 10.0 ** (self.gain_dbi / 10.0)
        sin_t = np.sin(np.radians(self.theta_deg))
        w_theta = np.full(self.theta_deg.size, res)
        w_theta[0] *= 0.5
        w_theta[-1] *= 0.5
        return float(np.sum((w_theta * sin_t)[:, None] * linear) * res)


@dataclass(frozen=True)
class SweepPoint:
    frequency_hz: float
    impedance: ImpedanceResult | None
    peak_gain_dbi: float | None
    error: str | None


def _check_frequency(frequency_hz: float) -> float:
    if not (isinstance(frequency_hz, (int, float)) and math.isfinite(frequency_hz)):
        raise DomainError(f"frequency must be finite, got {frequency_hz!r}")
    if frequency_hz <= 0:
        raise DomainError(f"frequency must be positive, got {frequency_hz}")
    return float(frequency_hz)


def _check_segment_count(segs_per_element: int) -> int:
    if not isinstance(segs_per_element, (int, np.integer)):
        raise DomainError(f"segment count must be an integer, got {segs_per_element!r}")
    if segs_per_element < 3:
        raise DomainError(f"need at least 3 segments per element, got {segs_per_element}")
    if segs_per_element % 2 == 0:
        raise DomainError(
            f"segment count must be odd so the feed gap is centered, got {segs_per_element}"
        )
    return int(segs_per_element)


def _build_grid(rows: list[tuple[float, float, float, float, int]], segs: int, feed_element: int) -> WireGrid:
    """rows: (x, y, length, radius, element_index) per element."""
    starts, ends, radii, owners = [], [], [], []
    for x, y, length, radius, index in rows:
        seg_len = length / segs
        if seg_len <= radius:
            raise DiscretizationError(
                f"element {index}: segment length {seg_len:.4g} m does not exceed the"
                f" wire radius {radius:.4g} m; use fewer segments or a thinner rod"
            )
        z_edges = np.linspace(-length / 2.0, length / 2.0, segs + 1)
        for z0, z1 in zip(z_edges[:-1], z_edges[1:]):
            starts.append((x, y, z0))
            ends.append((x, y, z1))
            radii.append(radius)
            owners.append(index)
    feed = feed_element * segs + segs // 2
    return WireGrid(
        start=np.asarray(starts, dtype=float),
        end=np.asarray(ends, dtype=float),
        radius=np.asarray(radii, dtype=float),
        element=np.asarray(owners, dtype=int),
        feed_segment=feed,
    )


def segment(design: YagiDesign, segs_per_element: int = DEFAULT_SEGMENTS_PER_ELEMENT) -> WireGrid:
    """Subdivide every element into the same odd number of uniform segments."""
    segs = _check_segment_count(segs_per_element)
    rows = []
    feed_element = None
    for i, e in enumerate(design.elements):
        rows.append((e.position_m, 0.0, e.length_m, e.diameter_m / 2.0, i))
        if e.role is ElementRole.DRIVEN:
            feed_element = i
    if feed_element is None:
        raise DomainError("design has no driven element to feed")
    return _build_grid(rows, segs, feed_element)


def dipole_grid(length_m: float, radius_m: float, segments: int) -> WireGrid:
    """Single center-fed straight wire on the z axis."""
    if length_m <= 0 or radius_m <= 0:
        raise DomainError("dipole length and radius must be positive")
    segs = _check_segment_count(segments)
    return _build_grid([(0.0, 0.0, length_m, radius_m, 0)], segs, 0)


def mode_basis(grid: WireGrid) -> ModeBasis:
    """Junction modes for a grid, with the feed segment split at the gap."""
    violations = grid.validate()
    if violations:
        raise GeometryError("; ".join(violations))
    xs, ys, zp, wlo, whi, rad, owner = [], [], [], [], [], [], []
    feed_mode = None
    feed_elem = int(grid.element[grid.feed_segment])
    for e in np.unique(grid.element):
        idx = np.nonzero(grid.element == e)[0]
        x = float(grid.start[idx[0], 0])
        y = float(grid.start[idx[0], 1])
        a = float(grid.radius[idx[0]])
        edges = [float(grid.start[i, 2]) for i in idx] + [float(grid.end[idx[-1], 2])]
        if int(e) == feed_elem:
            gap = float(grid.centers[grid.feed_segment, 2])
            within = int(np.nonzero(idx == grid.feed_segment)[0][0])
            edges.insert(within + 1, gap)
        else:
            gap = None
        for j in range(1, len(edges) - 1):
            if gap is not None and edges[j] == gap:
                feed_mode = len(xs)
            xs.append(x)
            ys.append(y)
            zp.append(edges[j])
            wlo.append(edges[j] - edges[j - 1])
            whi.append(edges[j + 1] - edges[j])
            rad.append(a)
            owner.append(int(e))
    if feed_mode is None:
        raise GeometryError("feed gap junction missing from the mode table")
    return ModeBasis(
        x=np.asarray(xs),
        y=np.asarray(ys),
        z_peak=np.asarray(zp),
        w_lo=np.asarray(wlo),
        w_hi=np.asarray(whi),
        radius=np.asarray(rad),
        element=np.asarray(owner, dtype=int),
        feed_mode=int(feed_mode),
        feed_length_m=float(grid.lengths[grid.feed_segment]),
    )


def _sin_widths(k: float, basis: ModeBasis) -> tuple[np.ndarray, np.ndarray]:
    """sin(k*w) per half-tent, guarding against half-wave-long segments."""
    kw = k * np.maximum(basis.w_lo, basis.w_hi)
    if np.max(kw) >= 0.95 * math.pi:
        raise DiscretizationError(
            "segments approach a half wavelength; sinusoidal interpolation needs"
            " a finer grid at this frequency"
        )
    return np.sin(k * basis.w_lo), np.sin(k * basis.w_hi)


def _tent_integrals(
    k: float,
    centers: np.ndarray,
    coefs: np.ndarray,
    rho: np.ndarray,
    lo: np.ndarray,
    hi: np.ndarray,
    z_zero: np.ndarray,
    sign: float,
    sin_w: np.ndarray,
) -> np.ndarray:
    """Half-tent integrals of sin(k(z - z_zero)) against spherical waves.

    Returns sum over the three wave centers (weighted by coefs) of
    integral over [lo, hi] of sin(k*sign*(z - z_zero))/sin_w * e^{-jkR}/R dz
    with R = hypot(z - center, rho); vectorized over the leading axis.
    """
    t_lo = np.arcsinh((lo[:, None] - centers) / rho[:, None])
    t_hi = np.arcsinh((hi[:, None] - centers) / rho[:, None])
    mid = 0.5 * (t_hi + t_lo)
    half = 0.5 * (t_hi - t_lo)
    nodes, weights = _gauss(_AXIAL_QUAD_ORDER)
    t = mid[..., None] + half[..., None] * nodes
    z = centers[None, :, None] + rho[:, None, None] * np.sinh(t)
    beta = np.sin(k * sign * (z - z_zero[:, None, None])) / sin_w[:, None, None]
    vals = beta * np.exp(-1j * k * rho[:, None, None] * np.cosh(t))
    return (((vals * weights).sum(axis=-1) * half) * coefs).sum(axis=-1)


def _tent_integrals_ring(
    k: float,
    centers: np.ndarray,
    coefs: np.ndarray,
    ring_rho: np.ndarray,
    lo: np.ndarray,
    hi: np.ndarray,
    z_zero: np.ndarray,
    sign: float,
    sin_w: np.ndarray,
    ring_weights: np.ndarray,
) -> np.ndarray:
    """Same as _tent_integrals with rho averaged around the wire surface."""
    t_lo = np.arcsinh((lo[:, None, None] - centers[None, :, None]) / ring_rho)
    t_hi = np.arcsinh((hi[:, None, None] - centers[None, :, None]) / ring_rho)
    mid = 0.5 * (t_hi + t_lo)
    half = 0.5 * (t_hi - t_lo)
    nodes, weights = _gauss(_AXIAL_QUAD_ORDER)
    t = mid[..., None] + half[..., None] * nodes
    z = centers[None, :, None, None] + ring_rho[None, None, :, None] * np.sinh(t)
    beta = np.sin(k * sign * (z - z_zero[:, None, None, None])) / sin_w[:, None, None, None]
    vals = beta * np.exp(-1j * k * ring_rho[None, None, :, None] * np.cosh(t))
    per_ring = (vals * weights).sum(axis=-1) * half  # (m, 3, ring)
    return ((per_ring * ring_weights).sum(axis=-1) * coefs).sum(axis=-1)


def impedance_matrix(grid: WireGrid, frequency_hz: float, symmetrize: bool = True) -> np.ndarray:
    """Dense complex-symmetric moment matrix for a grid at one frequency.

    Row/column order follows mode_basis(grid). The matrix is scaled by the
    reciprocal feed segment length so the matching excitation vector is zero
    except for voltage/feed_length at the feed mode. The Galerkin fill is
    symmetric up to quadrature roundoff; symmetrize=False skips the final
    (Z + Z^T)/2 cleanup so that roundoff can be inspected.
    """
    f = _check_frequency(frequency_hz)
    if grid.n_segments == 0:
        raise DomainError("grid has no segments")
    if np.any(np.abs((grid.end - grid.start)[:, :2]) > 1e-12):
        raise GeometryError("solver requires all wires parallel to the z axis")
    basis = mode_basis(grid)
    _check_wire_spacing(basis)

    k = 2.0 * math.pi * f / SPEED_OF_LIGHT
    sin_lo, sin_hi = _sin_widths(k, basis)
    m = basis.n_modes
    z = np.empty((m, m), dtype=complex)

    # ring quadrature for the azimuthally averaged same-wire kernel:
    # (1/pi) * integral over (0, pi) of f(2 a sin(phi/2)) dphi
    ring_nodes, ring_w = _gauss(_RING_QUAD_ORDER)
    ring_phi = 0.5 * math.pi * (ring_nodes + 1.0)
    ring_weights = 0.5 * ring_w  # folded (1/pi) * (pi/2) Jacobian

    obs_lo = basis.z_peak - basis.w_lo
    obs_hi = basis.z_peak + basis.w_hi
    for n in range(m):
        centers = np.array(
            [basis.z_peak[n] - basis.w_lo[n], basis.z_peak[n], basis.z_peak[n] + basis.w_hi[n]]
        )
        coefs = np.array(
            [
                1.0 / sin_lo[n],
                -(math.cos(k * basis.w_lo[n]) / sin_lo[n] + math.cos(k * basis.w_hi[n]) / sin_hi[n]),
                1.0 / sin_hi[n],
            ]
        )
        same = (basis.x == basis.x[n]) & (basis.y == basis.y[n])
        rho = np.hypot(basis.x - basis.x[n], basis.y - basis.y[n])
        rho[same] = basis.radius[n]  # placeholder, replaced by the ring average
        col = np.zeros(m, dtype=complex)
        rising = (obs_lo, basis.z_peak, obs_lo, 1.0, sin_lo)
        falling = (basis.z_peak, obs_hi, obs_hi, -1.0, sin_hi)
        for lo, hi, z_zero, sign, sin_w in (rising, falling):
            far = _tent_integrals(k, centers, coefs, rho, lo, hi, z_zero, sign, sin_w)
            col[~same] += far[~same]
            idx = np.nonzero(same)[0]
            ring_rho = 2.0 * basis.radius[n] * np.sin(ring_phi / 2.0)
            col[idx] += _tent_integrals_ring(
                k,
                centers,
                coefs,
                ring_rho,
                lo[idx],
                hi[idx],
                z_zero[idx],
                sign,
                sin_w[idx],
                ring_weights,
            )
        z[:, n] = col
    z *= 1j * ETA_0 / (4.0 * math.pi * basis.feed_length_m)
    if not symmetrize:
        return z
    return (z + z.T) / 2.0


def _check_wire_spacing(basis: ModeBasis) -> None:
    xy = np.stack([basis.x, basis.y], axis=1)
    for e in np.unique(basis.element):
        sel = basis.element == e
        for q in np.unique(basis.element):
            if q <= e:
                continue
            other = basis.element == q
            d = math.hypot(
                float(basis.x[sel][0] - basis.x[other][0]),
                float(basis.y[sel][0] - basis.y[other][0]),
            )
            if d == 0.0:
                raise GeometryError(f"elements {int(e)} and {int(q)} are coincident")
            if d <= float(basis.radius[sel][0] + basis.radius[other][0]):
                raise GeometryError(
                    f"elements {int(e)} and {int(q)} overlap (axis spacing {d:.4g} m)"
                )
    del xy


def _interpolate_to_segments(
    basis: ModeBasis, amplitudes: np.ndarray, grid: WireGrid, k: float
) -> np.ndarray:
    """Evaluate the sinusoidal expansion at every segment center."""
    currents = np.zeros(grid.n_segments, dtype=complex)
    zc = grid.centers[:, 2]
    sin_lo = np.sin(k * basis.w_lo)
    sin_hi = np.sin(k * basis.w_hi)
    for m_idx in range(basis.n_modes):
        e = basis.element[m_idx]
        seg_sel = np.nonzero(grid.element == e)[0]
        z = zc[seg_sel]
        z0 = basis.z_peak[m_idx]
        lo = z0 - basis.w_lo[m_idx]
        hi = z0 + basis.w_hi[m_idx]
        beta = np.zeros(z.size)
        below = (z >= lo) & (z <= z0)
        above = (z > z0) & (z <= hi)
        beta[below] = np.sin(k * (z[below] - lo)) / sin_lo[m_idx]
        beta[above] = np.sin(k * (hi - z[above])) / sin_hi[m_idx]
        currents[seg_sel] += amplitudes[m_idx] * beta
    return currents


def solve_currents(
    matrix: np.ndarray,
    grid: WireGrid,
    frequency_hz: float,
    voltage: complex = 1.0 + 0j,
) -> CurrentSolution:
    """LU solve of the delta-gap excitation (V/feed_length in the gap row)."""
    f = _check_frequency(frequency_hz)
    basis = mode_basis(grid)
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DomainError(f"moment matrix must be square, got shape {matrix.shape}")
    if matrix.shape[0] != basis.n_modes:
        raise DomainError(
            f"moment matrix size {matrix.shape[0]} does not match the grid's"
            f" {basis.n_modes} modes"
        )
    if not np.all(np.isfinite(matrix.real)) or not np.all(np.isfinite(matrix.imag)):
        raise DomainError("moment matrix contains non-finite entries")

    rhs = np.zeros(basis.n_modes, dtype=complex)
    rhs[basis.feed_mode] = voltage / basis.feed_length_m

    try:
        lu, piv = scipy.linalg.lu_factor(matrix)
    except scipy.linalg.LinAlgError as exc:
        raise SolverError(f"moment matrix factorization failed: {exc}") from None
    pivots = np.abs(np.diag(lu))
    if pivots.min() < _PIVOT_RATIO_LIMIT * pivots.max():
        anorm = np.linalg.norm(matrix, 1)
        gecon = scipy.linalg.get_lapack_funcs(("gecon",), (lu,))[0]
        rcond, _ = gecon(lu, anorm)
        cond = math.inf if rcond == 0 else 1.0 / rcond
        raise SolverError(
            f"moment matrix is numerically singular (condition estimate {cond:.3e})"
        )
    amplitudes = scipy.linalg.lu_solve((lu, piv), rhs)
    residual = float(np.linalg.norm(matrix @ amplitudes - rhs) / np.linalg.norm(rhs))
    k = 2.0 * math.pi * f / SPEED_OF_LIGHT
    currents = _interpolate_to_segments(basis, amplitudes, grid, k)
    return CurrentSolution(
        currents=currents,
        amplitudes=amplitudes,
        basis=basis,
        excitation_voltage=complex(voltage),
        frequency_hz=f,
        feed_index=int(grid.feed_segment),
        feed_length_m=basis.feed_length_m,
        residual=residual,
    )


def solve_grid(grid: WireGrid, frequency_hz: float, voltage: complex = 1.0 + 0j) -> CurrentSolution:
    """Fill and solve in one step for a grid's own feed segment."""
    matrix = impedance_matrix(grid, frequency_hz)
    return solve_currents(matrix, grid, frequency_hz, voltage)


def input_impedance(solution: CurrentSolution) -> ImpedanceResult:
    """Driving-point impedance V/I at the feed gap."""
    i_feed = solution.currents[solution.feed_index]
    if abs(i_feed) < 1e-15:
        raise SolverError("feed current vanished; input impedance is undefined")
    return ImpedanceResult(
        z=complex(solution.excitation_voltage / i_feed),
        frequency_hz=solution.frequency_hz,
        segment_count=int(solution.currents.size),
    )


def _axial_transforms(
    k: float, basis: ModeBasis, amplitudes: np.ndarray, cos_theta: np.ndarray
) -> dict[tuple[float, float], np.ndarray]:
    """Per-wire radiation integrals of the expansion, keyed by wire (x, y).

    Each entry is integral of I(z) e^{jk cos(theta) z} dz over the wire,
    evaluated with Gauss-Legendre per half-tent.
    """
    nodes, weights = _gauss(_PATTERN_QUAD_ORDER)
    sin_lo = np.sin(k * basis.w_lo)
    sin_hi = np.sin(k * basis.w_hi)
    u = cos_theta

    def half(zlo: np.ndarray, zhi: np.ndarray, z_zero: np.ndarray, sign: float, sin_w: np.ndarray) -> np.ndarray:
        mid = 0.5 * (zhi + zlo)
        halfw = 0.5 * (zhi - zlo)
        zq = mid[:, None] + halfw[:, None] * nodes  # (m, q)
        beta = np.sin(k * sign * (zq - z_zero[:, None])) / sin_w[:, None]
        phase = np.exp(1j * k * u[:, None, None] * zq[None])  # (t, m, q)
        return (beta[None] * phase * weights).sum(axis=-1) * halfw[None]

    tents = half(basis.z_peak - basis.w_lo, basis.z_peak, basis.z_peak - basis.w_lo, 1.0, sin_lo)
    tents = tents + half(basis.z_peak, basis.z_peak + basis.w_hi, basis.z_peak + basis.w_hi, -1.0, sin_hi)
    out: dict[tuple[float, float], np.ndarray] = {}
    for e in np.unique(basis.element):
        sel = basis.element == e
        key = (float(basis.x[sel][0]), float(basis.y[sel][0]))
        profile = (tents[:, sel] * amplitudes[sel]).sum(axis=1)
        if key in out:
            out[key] = out[key] + profile
        else:
            out[key] = profile
    return out


def _pattern_power(
    k: float,
    profiles: dict[tuple[float, float], np.ndarray],
    cos_theta: np.ndarray,
    phi: np.ndarray,
) -> np.ndarray:
    """|sin(theta) * AF|^2 on a (theta, phi) grid, elements factored per wire."""
    sin_theta = np.sqrt(np.clip(1.0 - cos_theta**2, 0.0, 1.0))
    af = np.zeros((cos_theta.size, phi.size), dtype=complex)
    cos_phi = np.cos(phi)
    sin_phi = np.sin(phi)
    for (x, y), axial in profiles.items():
        radial = np.exp(1j * k * np.outer(sin_theta, x * cos_phi + y * sin_phi))
        af += axial[:, None] * radial
    return (sin_theta[:, None] * np.abs(af)) ** 2


def far_field(solution: CurrentSolution, grid: WireGrid, resolution_deg: float = 1.0) -> FarField:
    """Directivity over the full sphere on a regular grid.

    The gain normalization divides by radiated power computed with a
    Gauss-Legendre quadrature that is independent of the sample grid.
    """
    if not (isinstance(resolution_deg, (int, float)) and resolution_deg > 0):
        raise DomainError(f"resolution must be positive, got {resolution_deg!r}")
    n_phi = 360.0 / resolution_deg
    if abs(n_phi - round(n_phi)) > 1e-9 or round(n_phi) % 2 != 0:
        raise DomainError(
            f"resolution must divide 360 into an even number of steps, got {resolution_deg}"
        )
    n_phi = int(round(n_phi))
    n_theta = n_phi // 2 + 1

    k = 2.0 * math.pi * solution.frequency_hz / SPEED_OF_LIGHT
    basis = solution.basis

    theta = np.linspace(0.0, 180.0, n_theta)
    phi = np.arange(n_phi) * resolution_deg
    profiles = _axial_transforms(k, basis, solution.amplitudes, np.cos(np.radians(theta)))
    power = _pattern_power(k, profiles, np.cos(np.radians(theta)), np.radians(phi))

    # radiated power from an independent spherical quadrature
    x_nodes, x_weights = _gauss(_POWER_THETA_ORDER)
    phi_q = (np.arange(_POWER_PHI_SAMPLES) + 0.5) * (2.0 * math.pi / _POWER_PHI_SAMPLES)
    profiles_q = _axial_transforms(k, basis, solution.amplitudes, x_nodes)
    power_q = _pattern_power(k, profiles_q, x_nodes, phi_q)
    u_const = k**2 * ETA_0 / (32.0 * math.pi**2)
    p_rad = u_const * float(
        (x_weights[:, None] * power_q).sum() * (2.0 * math.pi / _POWER_PHI_SAMPLES)
    )
    if not (p_rad > 0.0 and math.isfinite(p_rad)):
        raise SolverError("radiated power is zero; far field is undefined")

    directivity = (4.0 * math.pi * u_const / p_rad) * power
    with np.errstate(divide="ignore"):
        gain_dbi = 10.0 * np.log10(directivity)
    gain_dbi = np.maximum(gain_dbi, GAIN_FLOOR_DBI)

    peak = math.sqrt(float(power.max()))
    if peak == 0.0:
        raise SolverError("pattern is identically zero on the sample grid")
    magnitude = np.sqrt(power) / peak
    return FarField(
        theta_deg=theta,
        phi_deg=phi,
        gain_dbi=gain_dbi,
        magnitude=magnitude,
        resolution_deg=float(resolution_deg),
        frequency_hz=solution.frequency_hz,
    )


def frequency_sweep(
    design: YagiDesign,
    frequencies_hz: list[float],
    segs_per_element: int = DEFAULT_SEGMENTS_PER_ELEMENT,
    resolution_deg: float = 2.0,
) -> list[SweepPoint]:
    """Impedance and peak gain at each frequency; failures are tagged per point."""
    if not frequencies_hz:
        raise DomainError("frequency sweep needs at least one frequency")
    grid = segment(design, segs_per_element)
    points: list[SweepPoint] = []
    for f in frequencies_hz:
        try:
            sol = solve_grid(grid, f)
            imp = input_impedance(sol)
            ff = far_field(sol, grid, resolution_deg)
            points.append(SweepPoint(float(f), imp, ff.peak_gain_dbi(), None))
        except (DomainError, SolverError, GeometryError) as exc:
            points.append(SweepPoint(float(f), None, None, str(exc)))
    return points


GRID_CSV_HEADER = "x1,y1,z1,x2,y2,z2,radius_m,element_index"


def grid_to_csv(grid: WireGrid) -> str:
    """One row per segment; floats use repr so re-reading is lossless."""
    lines = [GRID_CSV_HEADER]
    for i in range(grid.n_segments):
        x1, y1, z1 = grid.start[i]
        x2, y2, z2 = grid.end[i]
        lines.append(
            f"{x1!r},{y1!r},{z1!r},{x2!r},{y2!r},{z2!r},"
            f"{grid.radius[i]!r},{int(grid.element[i])}"
        )
    return "\n".join(lines) + "\n"
