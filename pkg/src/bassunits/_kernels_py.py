"""Pure-Python versions of the hot inner loops.

These mirror ``_kernels_c.pyx`` exactly; the selector in ``_kernels`` prefers
the compiled versions when the extension built.  Coefficients are Python
ints (arbitrary precision), so the kernels only shave interpreter overhead
off the loop structure, never precision.
"""

from __future__ import annotations


def poly_conv(a: list, b: list) -> list:
    """Dense convolution (polynomial product) of integer coefficient lists."""
    na = len(a)
    nb = len(b)
    if na == 0 or nb == 0:
        return []
    out = [0] * (na + nb - 1)
    for i in range(na):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(nb):
            out[i + j] += ai * b[j]
    return out


def poly_reduce(c: list, rows: tuple, deg: int) -> list:
    """Fold coefficients of x^deg and above using precomputed reduction rows.

    rows[i] holds the coefficient vector of x**(deg+i) modulo the field
    polynomial.
    """
    out = list(c[:deg])
    out.extend([0] * (deg - len(out)))
    for i in range(deg, len(c)):
        ci = c[i]
        if ci == 0:
            continue
        row = rows[i - deg]
        for j in range(deg):
            rj = row[j]
            if rj:
                out[j] += ci * rj
    return out


def ring_conv(items_a: list, items_b: list, mods: tuple) -> dict:
    """Convolution product of two sparse group-ring coefficient listings.

    items are (coords, coeff) pairs over the abelian group with the given
    component moduli; returns a coords -> coeff dict with zeros kept.
    """
    out: dict = {}
    r = len(mods)
    for ca, va in items_a:
        for cb, vb in items_b:
            key = tuple((ca[i] + cb[i]) % mods[i] for i in range(r))
            if key in out:
                out[key] += va * vb
            else:
                out[key] = va * vb
    return out
