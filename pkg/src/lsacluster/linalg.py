"""Dense matrices and a from-scratch one-sided Jacobi SVD.

The decomposition works directly on the columns of the input: plane
rotations orthogonalize column pairs until every off-diagonal entry of the
implicit Gram matrix is negligible, at which point the column norms are the
singular values. No library decomposition routine is called.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NonFiniteInput

# Relative threshold below which a column pair counts as orthogonal.
_ROTATION_EPS = 1e-14
_MAX_SWEEPS = 60


class DenseMatrix:
    """Immutable 2-D real matrix with positive dimensions, float64 storage."""

    __slots__ = ("_data",)

    def __init__(self, entries) -> None:
        arr = np.array(entries, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
            raise ValueError(f"matrix must be 2-D with positive dimensions, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise NonFiniteInput("matrix entries must be finite")
        arr.setflags(write=False)
        self._data = arr

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "DenseMatrix":
        return cls(np.zeros((rows, cols)))

    @classmethod
    def identity(cls, n: int) -> "DenseMatrix":
        return cls(np.eye(n))

    @property
    def data(self) -> np.ndarray:
        """Read-only view of the underlying array."""
        return self._data

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._data.shape

    def to_array(self) -> np.ndarray:
        """Writable copy of the entries."""
        return np.array(self._data)

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(self._data.T)

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        return matmul(self, other)

    def __repr__(self) -> str:
        return f"DenseMatrix({self.rows}x{self.cols})"


def matmul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    """Matrix product; raises DimensionMismatch on incompatible shapes."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    return DenseMatrix(a.data @ b.data)


@dataclass(frozen=True)
class SvdFactors:
    """Thin SVD A = U diag(sigma) V^T truncated to rank r.

    u is m x r, sigma is length r (strictly positive, nonincreasing) and
    v is n x r. A zero matrix yields r = 0 and empty factors.
    """

    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray
    rank: int

    def reconstruct(self) -> np.ndarray:
        """Return U diag(sigma) V^T as an array (m x n of zeros when r = 0)."""
        return (self.u * self.sigma) @ self.v.T


def svd(a: DenseMatrix | np.ndarray, tol: float | None = None) -> SvdFactors:
    """One-sided Jacobi SVD with deterministic ordering and signs.

    Singular values are sorted nonincreasing and values at or below tol
    (default 1e-10 * max(m, n) * max|a_ij|) are truncated. Each column of V
    is flipped so its largest-magnitude entry is positive, with the matching
    U column flipped alongside, which pins an otherwise arbitrary sign.
    """
    arr = a.to_array() if isinstance(a, DenseMatrix) else np.array(a, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
        raise ValueError(f"matrix must be 2-D with positive dimensions, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput("matrix entries must be finite")

    m, n = arr.shape
    max_abs = float(np.max(np.abs(arr)))
    if tol is None:
        tol = 1e-10 * max(m, n) * max_abs
    elif tol <= 0.0:
        raise ValueError("tol must be positive")

    transposed = m < n
    work = arr.T.copy() if transposed else arr.copy()
    nn = work.shape[1]
    accum = np.eye(nn)

    if max_abs > 0.0:
        for _ in range(_MAX_SWEEPS):
            rotated = False
            for p in range(nn - 1):
                for q in range(p + 1, nn):
                    col_p = work[:, p]
                    col_q = work[:, q]
                    gamma = float(col_p @ col_q)
                    if gamma == 0.0:
                        continue
                    alpha = float(col_p @ col_p)
                    beta = float(col_q @ col_q)
                    if abs(gamma) <= _ROTATION_EPS * math.sqrt(alpha * beta):
                        continue
                    rotated = True
                    tau = (beta - alpha) / (2.0 * gamma)
                    if tau >= 0.0:
                        t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                    else:
                        t = 1.0 / (tau - math.sqrt(1.0 + tau * tau))
                    c = 1.0 / math.sqrt(1.0 + t * t)
                    s = c * t
                    new_p = c * col_p - s * col_q
                    new_q = s * col_p + c * col_q
                    work[:, p] = new_p
                    work[:, q] = new_q
                    rot_p = c * accum[:, p] - s * accum[:, q]
                    rot_q = s * accum[:, p] + c * accum[:, q]
                    accum[:, p] = rot_p
                    accum[:, q] = rot_q
            if not rotated:
                break

    norms = np.sqrt(np.sum(work * work, axis=0))
    order = np.argsort(-norms, kind="stable")
    keep = [int(j) for j in order if norms[j] > tol]

    sigma = norms[keep]
    u_work = work[:, keep] / sigma if keep else work[:, :0].copy()
    v_work = accum[:, keep]

    if transposed:
        u_final, v_final = v_work, u_work
    else:
        u_final, v_final = u_work, v_work

    for j in range(len(keep)):
        i = int(np.argmax(np.abs(v_final[:, j])))
        if v_final[i, j] < 0.0:
            v_final[:, j] = -v_final[:, j]
            u_final[:, j] = -u_final[:, j]

    u_final = np.ascontiguousarray(u_final)
    v_final = np.ascontiguousarray(v_final)
    sigma = np.ascontiguousarray(sigma)
    for out in (u_final, sigma, v_final):
        out.setflags(write=False)
    return SvdFactors(u=u_final, sigma=sigma, v=v_final, rank=len(keep))
