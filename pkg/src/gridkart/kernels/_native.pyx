# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Semantics mirror gridkart.kernels.fallback."""

import numpy as np

cimport numpy as cnp
from libc.math cimport M_PI, asin, atan2, ceil, fabs, floor, isnan, sqrt

cnp.import_array()

# Keep in sync with fallback.MIN_RAY_RANGE.
cdef double MIN_RAY_RANGE = 1e-9


def convolve_separable(cells, taps):
    """Zero-padded 2D convolution of cells with outer(taps, taps)."""
    cdef double[:, ::1] src = np.ascontiguousarray(cells, dtype=np.float64)
    cdef double[::1] tv = np.ascontiguousarray(taps, dtype=np.float64)
    cdef Py_ssize_t h = src.shape[0], w = src.shape[1], k = tv.shape[0]
    cdef Py_ssize_t pad = k // 2
    tmp_arr = np.zeros((h, w), dtype=np.float64)
    out_arr = np.zeros((h, w), dtype=np.float64)
    cdef double[:, ::1] tmp = tmp_arr
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, j, m, jj, ii
    cdef double acc, weight

    for i in range(h):
        for j in range(w):
            acc = 0.0
            for m in range(k):
                jj = j + pad - m
                if 0 <= jj < w:
                    acc += src[i, jj] * tv[m]
            tmp[i, j] = acc

    for i in range(h):
        for m in range(k):
            ii = i + pad - m
            if 0 <= ii < h:
                weight = tv[m]
                for j in range(w):
                    out[i, j] += tmp[ii, j] * weight
    return out_arr


def cast_rays(sin_el, cos_el, sin_az, cos_az, cones, double mount_height,
              double max_range):
    """Trace one ray per (elevation, azimuth) pair through cones and ground.

    See fallback.cast_rays for the full contract. Cones are culled per
    azimuth window; a ray can only touch a cylinder when its azimuth is
    within asin(radius / distance) of the cylinder bearing.
    """
    cdef double[::1] se = np.ascontiguousarray(sin_el, dtype=np.float64)
    cdef double[::1] ce = np.ascontiguousarray(cos_el, dtype=np.float64)
    cdef double[::1] sa = np.ascontiguousarray(sin_az, dtype=np.float64)
    cdef double[::1] ca = np.ascontiguousarray(cos_az, dtype=np.float64)
    cdef double[:, ::1] cn = np.ascontiguousarray(cones, dtype=np.float64).reshape(-1, 4)
    cdef Py_ssize_t n_el = se.shape[0], n_az = sa.shape[0], n_cones = cn.shape[0]
    out_arr = np.full(n_el * n_az, np.nan)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t e, a, m, idx, a_lo, a_hi, aw
    cdef double t_ground, cx, cy, radius, height, q, dist, bearing, half, step
    cdef double u, disc, sq, t, z, z_lo, z_hi, prev

    for e in range(n_el):
        if se[e] < 0.0:
            t_ground = -mount_height / se[e]
            if t_ground <= max_range:
                for a in range(n_az):
                    out[e * n_az + a] = t_ground

    if n_cones == 0:
        return out_arr

    step = 2.0 * M_PI / n_az
    z_lo = -mount_height
    for m in range(n_cones):
        cx = cn[m, 0]
        cy = cn[m, 1]
        radius = cn[m, 2]
        height = cn[m, 3]
        q = cx * cx + cy * cy - radius * radius
        dist = sqrt(cx * cx + cy * cy)
        z_hi = z_lo + height
        if dist - radius > max_range:
            continue
        if dist <= radius:
            a_lo = 0
            a_hi = n_az - 1
        else:
            bearing = atan2(cx, cy)
            half = asin(radius / dist) + 2.0 * step
            a_lo = <Py_ssize_t>floor((bearing - half) / step)
            a_hi = <Py_ssize_t>ceil((bearing + half) / step)
            if a_hi - a_lo >= n_az:
                a_lo = 0
                a_hi = n_az - 1
        for aw in range(a_lo, a_hi + 1):
            a = aw % n_az
            if a < 0:
                a += n_az
            u = sa[a] * cx + ca[a] * cy
            disc = u * u - q
            if disc < 0.0:
                continue
            sq = sqrt(disc)
            for e in range(n_el):
                t = (u - sq) / ce[e]
                z = t * se[e]
                if not (t > MIN_RAY_RANGE and t <= max_range
                        and z_lo <= z <= z_hi):
                    t = (u + sq) / ce[e]
                    z = t * se[e]
                    if not (t > MIN_RAY_RANGE and t <= max_range
                            and z_lo <= z <= z_hi):
                        continue
                idx = e * n_az + a
                prev = out[idx]
                if isnan(prev) or t < prev:
                    out[idx] = t
    return out_arr


def plane_inlier_stats(points, normals, offsets, double threshold):
    """Inlier count and inlier-residual sum per candidate plane."""
    cdef double[:, ::1] pts = np.ascontiguousarray(points, dtype=np.float64)
    cdef double[:, ::1] nrm = np.ascontiguousarray(normals, dtype=np.float64)
    cdef double[::1] off = np.ascontiguousarray(offsets, dtype=np.float64)
    cdef Py_ssize_t n_pts = pts.shape[0], n_planes = nrm.shape[0]
    counts_arr = np.zeros(n_planes, dtype=np.int64)
    sums_arr = np.zeros(n_planes, dtype=np.float64)
    cdef cnp.int64_t[::1] counts = counts_arr
    cdef double[::1] sums = sums_arr
    cdef Py_ssize_t m, n
    cdef double nx, ny, nz, d, resid, acc
    cdef cnp.int64_t hits

    for m in range(n_planes):
        nx = nrm[m, 0]
        ny = nrm[m, 1]
        nz = nrm[m, 2]
        d = off[m]
        hits = 0
        acc = 0.0
        for n in range(n_pts):
            resid = fabs(nx * pts[n, 0] + ny * pts[n, 1] + nz * pts[n, 2] + d)
            if resid <= threshold:
                hits += 1
                acc += resid
        counts[m] = hits
        sums[m] = acc
    return counts_arr, sums_arr
