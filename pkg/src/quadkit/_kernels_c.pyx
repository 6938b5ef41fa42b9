# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled quadruple-check kernels.

Twin of ``_kernels_py`` with identical tuple layouts.  The integer kernel
runs in 128-bit machine arithmetic, which is exact for coordinates with
absolute value up to 2**40; larger inputs raise OverflowError and the
selector in ``kernels`` falls back to the pure-Python kernel.
"""

from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    ctypedef long long i128 "__int128"

# |coord| <= 2**40 keeps every intermediate below 2**126.
cdef int64_t COORD_LIMIT = 1 << 40

cdef object _pyint(i128 v):
    # Exact __int128 -> PyLong: arithmetic-shift high word + unsigned low.
    cdef int64_t hi = <int64_t> (v >> 64)
    cdef uint64_t lo = <uint64_t> v
    return (int(hi) << 64) + int(lo)


def check_quad_ints(ax_in, ay_in, bx_in, by_in, cx_in, cy_in, dx_in, dy_in):
    """Exact doubled-area check of one integer quadruple."""
    cdef int64_t ax = ax_in, ay = ay_in, bx = bx_in, by = by_in
    cdef int64_t cx = cx_in, cy = cy_in, dx = dx_in, dy = dy_in
    if (ax > COORD_LIMIT or ax < -COORD_LIMIT or ay > COORD_LIMIT or ay < -COORD_LIMIT
            or bx > COORD_LIMIT or bx < -COORD_LIMIT or by > COORD_LIMIT or by < -COORD_LIMIT
            or cx > COORD_LIMIT or cx < -COORD_LIMIT or cy > COORD_LIMIT or cy < -COORD_LIMIT
            or dx > COORD_LIMIT or dx < -COORD_LIMIT or dy > COORD_LIMIT or dy < -COORD_LIMIT):
        raise OverflowError("coordinate exceeds compiled-kernel range")

    cdef i128 k2_bcd = (<i128> (cx - bx)) * (dy - by) - (<i128> (cy - by)) * (dx - bx)
    cdef i128 k2_acd = (<i128> (cx - ax)) * (dy - ay) - (<i128> (cy - ay)) * (dx - ax)
    cdef i128 k2_abd = (<i128> (bx - ax)) * (dy - ay) - (<i128> (by - ay)) * (dx - ax)
    cdef i128 k2_abc = (<i128> (bx - ax)) * (cy - ay) - (<i128> (by - ay)) * (cx - ax)
    cdef i128 k2_quad = k2_abd + k2_bcd
    cdef i128 jx2 = k2_bcd * ax - k2_acd * bx + k2_abd * cx - k2_abc * dx
    cdef i128 jy2 = k2_bcd * ay - k2_acd * by + k2_abd * cy - k2_abc * dy
    cdef i128 dec2_bd = k2_bcd + k2_abd - k2_quad
    cdef i128 dec2_ac = k2_acd + k2_abc - k2_quad
    return (
        _pyint(k2_bcd), _pyint(k2_acd), _pyint(k2_abd), _pyint(k2_abc),
        _pyint(k2_quad), _pyint(jx2), _pyint(jy2),
        _pyint(dec2_bd), _pyint(dec2_ac),
    )


def check_quad_floats(double ax, double ay, double bx, double by,
                      double cx, double cy, double dx, double dy):
    """Float check of one quadruple, with tolerance scales appended."""
    cdef double k_bcd = 0.5 * ((cx - bx) * (dy - by) - (cy - by) * (dx - bx))
    cdef double k_acd = 0.5 * ((cx - ax) * (dy - ay) - (cy - ay) * (dx - ax))
    cdef double k_abd = 0.5 * ((bx - ax) * (dy - ay) - (by - ay) * (dx - ax))
    cdef double k_abc = 0.5 * ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))
    cdef double k_quad = k_abd + k_bcd
    cdef double jx = k_bcd * ax - k_acd * bx + k_abd * cx - k_abc * dx
    cdef double jy = k_bcd * ay - k_acd * by + k_abd * cy - k_abc * dy
    cdef double dec_bd = k_bcd + k_abd - k_quad
    cdef double dec_ac = k_acd + k_abc - k_quad
    cdef double jacobi_scale = max(
        abs(k_bcd) * max(abs(ax), abs(ay)),
        abs(k_acd) * max(abs(bx), abs(by)),
        abs(k_abd) * max(abs(cx), abs(cy)),
        abs(k_abc) * max(abs(dx), abs(dy)),
    )
    cdef double dec_scale = max(
        abs(k_bcd), abs(k_acd), abs(k_abd), abs(k_abc), abs(k_quad)
    )
    return (
        k_bcd, k_acd, k_abd, k_abc, k_quad, jx, jy, dec_bd, dec_ac,
        jacobi_scale, dec_scale,
    )
