"""Regenerate the frozen constants pinned in the test suite.

Each fixture is produced by an independent route from the code under test:
the chi-square p-values come from numerical quadrature of the chi-square
density (scipy.integrate.quad), the length-8 ramp spectrum from the closed
form of the geometric-series DFT, and the length-16 digit-reversal table
from an explicit two-digit base-(8,2) index calculation.

Run:  python tools/make_fixtures.py
"""

import math

import numpy as np
from scipy.integrate import quad


def chi2_sf_quadrature(chi2_total: float, ndf: int) -> float:
    """Survival function of the chi-square distribution via quadrature."""

    def density(t: float) -> float:
        return (
            t ** (ndf / 2.0 - 1.0)
            * math.exp(-t / 2.0)
            / (2.0 ** (ndf / 2.0) * math.gamma(ndf / 2.0))
        )

    # Integrate the density over [0, chi2] and take the complement (the
    # upper tail itself has an infinite domain, the lower one does not).
    # Substituting t = u^2 removes the ndf=1 singularity at the origin.
    lower, err = quad(
        lambda u: density(u * u) * 2.0 * u,
        0.0,
        math.sqrt(chi2_total),
        limit=200,
        epsabs=1e-13,
        epsrel=1e-13,
    )
    assert err < 1e-10, err
    return 1.0 - lower


def ramp_spectrum_closed_form(n: int) -> np.ndarray:
    """DFT of x[m] = m from the closed form of the geometric series.

    X_0 = n(n-1)/2 and, for k != 0, X_k = -n/2 + i*(n/2)/tan(pi*k/n).
    """
    out = np.empty(n, dtype=np.complex128)
    out[0] = n * (n - 1) / 2.0
    for k in range(1, n):
        out[k] = complex(-n / 2.0, (n / 2.0) / math.tan(math.pi * k / n))
    return out


def digit_reversal_8_2(n: int = 16) -> list[int]:
    """Source indices for stage list [8, 2] by explicit digit arithmetic.

    Position p = d1*8 + d0 (d1 the base-2 digit, d0 the base-8 digit)
    reads from source index d0*2 + d1.
    """
    out = []
    for p in range(n):
        d1, d0 = divmod(p, 8)
        out.append(d0 * 2 + d1)
    return out


if __name__ == "__main__":
    print("# chi-square p-values by quadrature: (chi2_total, ndf, p)")
    points = [
        (0.5, 1), (1.0, 1), (2.0, 1), (3.0, 2), (0.25, 2),
        (2.0, 2), (4.5, 3), (1.5, 4), (10.0, 5), (5.0, 5),
        (7.0, 7), (12.0, 8), (3.0, 10), (15.0, 10), (20.0, 12),
        (9.5, 15), (30.0, 20), (18.0, 25), (40.0, 40), (55.0, 50),
    ]
    for chi2_total, ndf in points:
        print(f"    ({chi2_total!r}, {ndf}, {chi2_sf_quadrature(chi2_total, ndf)!r}),")
    print()
    print("# length-8 ramp spectrum, closed form (double precision)")
    for value in ramp_spectrum_closed_form(8):
        print(f"    complex({float(value.real)!r}, {float(value.imag)!r}),")
    print()
    print("# digit reversal for stages [8, 2]")
    print(f"    {digit_reversal_8_2()}")
