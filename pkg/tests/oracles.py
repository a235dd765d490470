"""Independent reference computations used by the tests.

Nothing here calls into the Euler-Maclaurin engine.
"""

import math

import numpy as np


def naive_hurwitz(s: float, alpha: float, terms: int = 1_000_000) -> float:
    """Direct sum of ``terms`` terms plus the midpoint-rule tail.

    The tail ``sum_{n >= M} (n + a)^-s`` is replaced by
    ``int_{M + a - 1/2}^inf x^-s dx``; its relative error is about
    ``s (s + 1) / (24 (M + a)^2)``, far below 1e-12 for ``M = 10^6``.
    """
    n = np.arange(terms, dtype=float)
    head = math.fsum((n + alpha) ** (-s))
    tail = (terms + alpha - 0.5) ** (1.0 - s) / (s - 1.0)
    return math.fsum([head, tail])


def brute_zeta2(s1: float, s2: float, terms: int) -> float:
    """``sum_{n1 < n2 <= terms} n1^-s1 n2^-s2``; truncation error about ``zeta(s1) terms^(1-s2)/(s2-1)``."""
    n = np.arange(1, terms + 1, dtype=float)
    inner = n ** (-s2)
    # suffix[k] = sum_{m > k+1} m^-s2, accumulated from the small end.
    suffix = np.concatenate((np.cumsum(inner[::-1])[::-1][1:], [0.0]))
    return math.fsum(n ** (-s1) * suffix)


def brute_tornheim(s1: float, s2: float, s3: float, terms: int) -> float:
    n = np.arange(1, terms + 1, dtype=float)
    grid = (n[:, None] ** (-s1)) * (n[None, :] ** (-s2)) * (n[:, None] + n[None, :]) ** (-s3)
    return math.fsum(grid.ravel())


def bernoulli_numbers(count: int):
    """``B_0 .. B_{count-1}`` (with ``B_1 = +1/2``) by the Akiyama-Tanigawa algorithm."""
    from fractions import Fraction

    out = []
    row = []
    for m in range(count):
        row.append(Fraction(1, m + 1))
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    return out


def brute_zeta3(s1: float, s2: float, s3: float, terms: int) -> float:
    """``sum_{n1 < n2 < n3 <= terms}`` by nested suffix sums."""
    n = np.arange(1, terms + 1, dtype=float)

    def strict_suffix(v):
        return np.concatenate((np.cumsum(v[::-1])[::-1][1:], [0.0]))

    inner = strict_suffix(n ** (-s3))
    middle = strict_suffix(n ** (-s2) * inner)
    return math.fsum(n ** (-s1) * middle)


def zeta2_at_one(s: float, head: int = 500) -> float:
    """``zeta2(1, s) = sum_m H_{m-1} m^-s`` in 30-digit arithmetic.

    The tail uses ``H_{m-1} = psi(m) + gamma`` with the asymptotic series of
    ``psi``, so it reduces to Hurwitz zeta values and the ``s``-derivative
    ``-sum_{m >= M} log(m) m^-s``.  Generic ``mpmath.nsum`` is unreliable
    here because the summand decays like ``log(m) m^-s``.
    """
    import mpmath

    with mpmath.workdps(30):
        s = mpmath.mpf(s)
        total = mpmath.fsum(mpmath.harmonic(m - 1) * mpmath.power(m, -s) for m in range(1, head))
        hz = lambda t: mpmath.zeta(t, head)  # noqa: E731
        tail = -mpmath.zeta(s, head, 1) + mpmath.euler * hz(s) - hz(s + 1) / 2
        for k in range(1, 8):
            tail -= mpmath.bernoulli(2 * k) / (2 * k) * hz(s + 2 * k)
        return float(total + tail)
