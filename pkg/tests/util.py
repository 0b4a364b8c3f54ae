"""Shared helpers for the test suite."""

from __future__ import annotations

import numpy as np

from qubolab.model import (
    BinaryEncoding,
    QcioProblem,
    QuboProblem,
    upper_triangularize,
)


def random_qubo(rng: np.random.Generator, n: int, density: float = 0.6) -> QuboProblem:
    """Random upper-triangular QUBO with entries in [-2, 2]."""
    Q = rng.uniform(-2.0, 2.0, size=(n, n))
    Q[rng.random((n, n)) > density] = 0.0
    Q = np.triu(Q)
    return QuboProblem(Q=Q, constant=float(rng.uniform(-1.0, 1.0)))


def random_qcio(rng: np.random.Generator, n: int) -> tuple[QcioProblem, BinaryEncoding]:
    """Random integer problem over {0..3}^n with one random equality constraint."""
    M = rng.uniform(-1.0, 1.0, size=(n, n))
    l = rng.uniform(-1.0, 1.0, size=n)
    c = float(rng.uniform(-1.0, 1.0))
    A = np.zeros((n, n))
    A[0] = rng.integers(0, 2, size=n).astype(float)
    if not A[0].any():
        A[0, 0] = 1.0
    x_feas = rng.integers(0, 4, size=n)
    r = np.zeros(n)
    r[0] = float(A[0] @ x_feas)
    qcio = QcioProblem(
        dim_n=n, M=M, l=l, c=c, A=A, r=r,
        lower=np.zeros(n, dtype=int), upper=np.full(n, 3),
    )
    return qcio, BinaryEncoding.levels(n)


def symmetrized(Q: np.ndarray) -> np.ndarray:
    return upper_triangularize(Q)
