"""Numpy implementations of the hot kernels.

Semantics match ``gridkart.kernels._native`` exactly; only the execution
speed differs. Keep the two in lockstep: the equivalence tests in
``tests/test_kernels.py`` compare them element by element.
"""

from __future__ import annotations

import numpy as np

# Rays shorter than this are treated as degenerate and ignored. Shared with
# the native kernel.
MIN_RAY_RANGE = 1e-9


def convolve_separable(cells: np.ndarray, taps: np.ndarray) -> np.ndarray:
    """Zero-padded 2D convolution of ``cells`` with ``outer(taps, taps)``.

    ``cells`` is (H, W) float64; ``taps`` is a 1D kernel of odd length.
    Runs as a horizontal then a vertical pass.
    """
    cells = np.asarray(cells, dtype=np.float64)
    taps = np.asarray(taps, dtype=np.float64)
    flipped = taps[::-1]
    pad = taps.size // 2

    padded = np.pad(cells, ((0, 0), (pad, pad)))
    win = np.lib.stride_tricks.sliding_window_view(padded, taps.size, axis=1)
    tmp = win @ flipped

    padded = np.pad(tmp, ((pad, pad), (0, 0)))
    win = np.lib.stride_tricks.sliding_window_view(padded, taps.size, axis=0)
    return win @ flipped


def cast_rays(
    sin_el: np.ndarray,
    cos_el: np.ndarray,
    sin_az: np.ndarray,
    cos_az: np.ndarray,
    cones: np.ndarray,
    mount_height: float,
    max_range: float,
) -> np.ndarray:
    """Trace one ray per (elevation, azimuth) pair through cones and ground.

    Rays start at the sensor origin; the direction for elevation e and
    azimuth a is (cos_e*sin_a, cos_e*cos_a, sin_e) in the sensor frame
    (x right, y forward, z up). ``cones`` is (M, 4) with rows
    (x, y, radius, height): x, y relative to the sensor, height measured up
    from the ground plane, which sits at z = -mount_height.

    Returns ranges of shape (E*A,), elevation-major, NaN where the ray hits
    nothing within max_range.
    """
    sin_el = np.asarray(sin_el, dtype=np.float64)
    cos_el = np.asarray(cos_el, dtype=np.float64)
    sin_az = np.asarray(sin_az, dtype=np.float64)
    cos_az = np.asarray(cos_az, dtype=np.float64)
    cones = np.asarray(cones, dtype=np.float64).reshape(-1, 4)
    n_el, n_az = sin_el.size, sin_az.size

    best = np.full((n_el, n_az), np.inf)

    # Ground plane: range depends on elevation only.
    down = sin_el < 0.0
    t_ground = np.where(down, -mount_height / np.where(down, sin_el, -1.0), np.inf)
    t_ground = np.where(t_ground <= max_range, t_ground, np.inf)
    best[:] = t_ground[:, None]

    if cones.shape[0]:
        cx, cy, radius, height = cones.T
        # Quadratic in range along the horizontal direction: with
        # u = distance * cos(azimuth offset), the roots are
        # (u -+ sqrt(u^2 - q)) / cos_el.
        u = sin_az[:, None] * cx[None, :] + cos_az[:, None] * cy[None, :]
        q = cx * cx + cy * cy - radius * radius
        disc = u * u - q[None, :]
        hit = disc >= 0.0
        sq = np.sqrt(np.where(hit, disc, 0.0))
        z_lo = -mount_height
        z_hi = z_lo + height

        t_cone = np.full((n_el, n_az, cones.shape[0]), np.inf)
        for root in (u - sq, u + sq):
            t = root[None, :, :] / cos_el[:, None, None]
            z = t * sin_el[:, None, None]
            ok = (
                hit[None, :, :]
                & (t > MIN_RAY_RANGE)
                & (t <= max_range)
                & (z >= z_lo)
                & (z <= z_hi[None, None, :])
            )
            t_cone = np.where(ok & (t < t_cone), t, t_cone)
        best = np.minimum(best, t_cone.min(axis=2))

    out = best.reshape(-1)
    return np.where(np.isfinite(out), out, np.nan)


def plane_inlier_stats(
    points: np.ndarray,
    normals: np.ndarray,
    offsets: np.ndarray,
    threshold: float,
) -> tuple[np.ndarray, np.ndarray]:
    """Inlier count and inlier-residual sum for a batch of candidate planes.

    ``points`` is (N, 3); ``normals`` (M, 3) unit normals with ``offsets``
    (M,) such that a plane is n.p + d = 0. Returns (counts int64, sums
    float64), both shape (M,).
    """
    points = np.asarray(points, dtype=np.float64)
    normals = np.asarray(normals, dtype=np.float64)
    offsets = np.asarray(offsets, dtype=np.float64)
    resid = np.abs(points @ normals.T + offsets[None, :])
    mask = resid <= threshold
    counts = mask.sum(axis=0, dtype=np.int64)
    sums = np.where(mask, resid, 0.0).sum(axis=0)
    return counts, sums
