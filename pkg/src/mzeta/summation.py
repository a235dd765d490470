"""Compensated accumulation.

Reductions in this package go through :func:`fsum` (exactly rounded, so
independent of grouping) or :func:`neumaier_rows`, a vectorised
Kahan-Babuska-Neumaier sum used when many short sums are formed at once.
Both are deterministic for a fixed input order.
"""

from __future__ import annotations

import math

import numpy as np

fsum = math.fsum


def neumaier_rows(terms: np.ndarray) -> np.ndarray:
    """Sum a 2-D array along axis 1 with Neumaier compensation.

    Columns are added left to right, so callers should order them from the
    smallest expected magnitude to the largest.
    """
    terms = np.asarray(terms, dtype=float)
    if terms.ndim != 2:
        raise ValueError("expected a 2-D array")
    total = np.zeros(terms.shape[0])
    comp = np.zeros(terms.shape[0])
    for j in range(terms.shape[1]):
        x = terms[:, j]
        t = total + x
        big = np.abs(total) >= np.abs(x)
        comp += np.where(big, (total - t) + x, (x - t) + total)
        total = t
    return total + comp


def suffix_sums(values: np.ndarray) -> np.ndarray:
    """Return ``out[i] = sum(values[i:])`` with Neumaier compensation."""
    values = np.asarray(values, dtype=float)
    out = np.empty_like(values)
    total = 0.0
    comp = 0.0
    for i in range(values.size - 1, -1, -1):
        x = float(values[i])
        t = total + x
        if abs(total) >= abs(x):
            comp += (total - t) + x
        else:
            comp += (x - t) + total
        total = t
        out[i] = total + comp
    return out
