"""Pure-Python quadruple-check kernels.

Reference implementation of the hot path used by batch checking; the
compiled twin in ``_kernels_c`` must agree with these bit for bit.  The
integer kernel works on doubled areas so everything stays in (unbounded)
integer arithmetic; callers halve for display.  Tuple layout, both kernels:

    (k2_bcd, k2_acd, k2_abd, k2_abc, k2_quad, jx2, jy2, dec2_bd, dec2_ac)

where k2_* are doubled signed areas, k2_quad the doubled quadrilateral
area (diagonal-BD decomposition), (jx2, jy2) the doubled alternating
position-vector combination, and dec2_* the doubled residuals of the two
diagonal decompositions.  The float kernel returns the same layout
un-doubled, plus the two tolerance scales.
"""

from __future__ import annotations


def check_quad_ints(ax, ay, bx, by, cx, cy, dx, dy):
    """Exact doubled-area check of one integer quadruple."""
    k2_bcd = (cx - bx) * (dy - by) - (cy - by) * (dx - bx)
    k2_acd = (cx - ax) * (dy - ay) - (cy - ay) * (dx - ax)
    k2_abd = (bx - ax) * (dy - ay) - (by - ay) * (dx - ax)
    k2_abc = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    k2_quad = k2_abd + k2_bcd
    jx2 = k2_bcd * ax - k2_acd * bx + k2_abd * cx - k2_abc * dx
    jy2 = k2_bcd * ay - k2_acd * by + k2_abd * cy - k2_abc * dy
    dec2_bd = k2_bcd + k2_abd - k2_quad
    dec2_ac = k2_acd + k2_abc - k2_quad
    return (
        k2_bcd, k2_acd, k2_abd, k2_abc, k2_quad, jx2, jy2, dec2_bd, dec2_ac,
    )


def check_quad_floats(ax, ay, bx, by, cx, cy, dx, dy):
    """Float check of one quadruple, with tolerance scales appended."""
    k_bcd = 0.5 * ((cx - bx) * (dy - by) - (cy - by) * (dx - bx))
    k_acd = 0.5 * ((cx - ax) * (dy - ay) - (cy - ay) * (dx - ax))
    k_abd = 0.5 * ((bx - ax) * (dy - ay) - (by - ay) * (dx - ax))
    k_abc = 0.5 * ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))
    k_quad = k_abd + k_bcd
    jx = k_bcd * ax - k_acd * bx + k_abd * cx - k_abc * dx
    jy = k_bcd * ay - k_acd * by + k_abd * cy - k_abc * dy
    dec_bd = k_bcd + k_abd - k_quad
    dec_ac = k_acd + k_abc - k_quad
    jacobi_scale = max(
        abs(k_bcd) * max(abs(ax), abs(ay)),
        abs(k_acd) * max(abs(bx), abs(by)),
        abs(k_abd) * max(abs(cx), abs(cy)),
        abs(k_abc) * max(abs(dx), abs(dy)),
    )
    dec_scale = max(
        abs(k_bcd), abs(k_acd), abs(k_abd), abs(k_abc), abs(k_quad)
    )
    return (
        k_bcd, k_acd, k_abd, k_abc, k_quad, jx, jy, dec_bd, dec_ac,
        jacobi_scale, dec_scale,
    )
