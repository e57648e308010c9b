"""Numeric spectra of signed adjacency matrices.

The exact coefficient test in :mod:`sgs.poly` decides spectral symmetry;
the floating-point spectrum here is for reports and as a cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import SignedGraph

PAIRING_TOLERANCE = 1e-6


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]               # descending
    pairing_tolerance: float = PAIRING_TOLERANCE

    def rounded(self, digits: int = 4) -> list[float]:
        return [round(v, digits) + 0.0 for v in self.values]


def jacobi_eigenvalues(a: np.ndarray, tol: float | None = None, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps over all (p, q) pairs until the off-diagonal Frobenius norm is
    below ``tol`` (default 1e-12 * n).
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    if tol is None:
        tol = 1e-12 * n
    for _ in range(max_sweeps):
        # summed directly: total minus diagonal cancels catastrophically near convergence
        off = math.sqrt(float(np.sum(np.square(a - np.diag(np.diag(a))))))
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
    else:
        raise ArithmeticError("Jacobi iteration did not converge")
    return np.diag(a).copy()


def eigenvalues(g: SignedGraph, pairing_tolerance: float = PAIRING_TOLERANCE) -> Spectrum:
    vals = jacobi_eigenvalues(g.adjacency_matrix(float))
    return Spectrum(tuple(float(v) for v in sorted(vals, reverse=True)), pairing_tolerance)


def numeric_symmetry_check(s: Spectrum) -> bool:
    v = s.values
    return all(abs(v[i] + v[-1 - i]) <= s.pairing_tolerance for i in range(len(v)))
