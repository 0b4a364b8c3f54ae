"""Problem representations and the QCIO -> QUIO -> QUBO -> Ising transform chain.

The chain starts from a quadratic constrained integer optimization problem
(QCIO), folds the equality constraints into a quadratic penalty (QUIO),
encodes the bounded integers into bits (QUBO), and finally rewrites the
binary cost as a diagonal Hamiltonian over qubits (Ising form). Brute-force
enumeration and the penalty-weight scan live here as well, since they are
the oracles everything else is verified against.

Bit convention used across the package: bit i of a bitstring is qubit i and
carries weight 2^i, so the integer value of bits b is sum_i b_i 2^i. String
renderings put bit 0 leftmost, i.e. ``s[i]`` is bit i.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# Enumeration beyond this many variables refuses rather than thrashes.
BRUTE_FORCE_CAP = 26

_ATOL = 1e-9


# ---------------------------------------------------------------------------
# bitstring helpers


def int_to_bits(value: int, num_bits: int) -> np.ndarray:
    """Bits of ``value`` as an array with bit i (weight 2^i) at index i."""
    return (value >> np.arange(num_bits)) & 1


def bits_to_int(bits: np.ndarray) -> int:
    bits = np.asarray(bits)
    return int((bits.astype(np.int64) << np.arange(bits.size)).sum())


def bits_to_str(bits: np.ndarray) -> str:
    return "".join("1" if b else "0" for b in np.asarray(bits).ravel())


def str_to_bits(s: str) -> np.ndarray:
    return np.frombuffer(s.encode(), dtype=np.uint8) - ord("0")


def all_bitstrings(num_bits: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Rows of bit vectors for the integers ``start..stop-1`` (default: all 2^n)."""
    if stop is None:
        stop = 1 << num_bits
    idx = np.arange(start, stop, dtype=np.int64)
    return ((idx[:, None] >> np.arange(num_bits)) & 1).astype(np.float64)


# ---------------------------------------------------------------------------
# problem representations


@dataclass
class QcioProblem:
    """Quadratic constrained integer problem min x'Mx + lx + c s.t. Ax = r.

    Parameters
    ----------
    dim_n:
        Number of integer variables.
    M:
        n x n cost matrix.
    l:
        Linear cost row vector of length n.
    c:
        Constant cost offset.
    A:
        n x n constraint matrix (rows may be zero padding).
    r:
        Constraint right-hand side of length n.
    lower, upper:
        Elementwise integer bounds on the variables.
    """

    dim_n: int
    M: np.ndarray
    l: np.ndarray
    c: float
    A: np.ndarray
    r: np.ndarray
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self) -> None:
        n = self.dim_n
        self.M = np.asarray(self.M, dtype=np.float64)
        self.l = np.asarray(self.l, dtype=np.float64).ravel()
        self.c = float(self.c)
        self.A = np.asarray(self.A, dtype=np.float64)
        self.r = np.asarray(self.r, dtype=np.float64).ravel()
        self.lower = np.asarray(self.lower, dtype=np.int64).ravel()
        self.upper = np.asarray(self.upper, dtype=np.int64).ravel()
        if self.M.shape != (n, n):
            raise ValueError(f"M must be {n}x{n}, got {self.M.shape}")
        if self.A.shape != (n, n):
            raise ValueError(f"A must be {n}x{n}, got {self.A.shape}")
        if self.l.shape != (n,) or self.r.shape != (n,):
            raise ValueError("l and r must have length n")
        if self.lower.shape != (n,) or self.upper.shape != (n,):
            raise ValueError("bounds must have length n")
        if np.any(self.lower > self.upper):
            raise ValueError("lower bound exceeds upper bound")

    def cost(self, x: np.ndarray) -> float:
        x = np.asarray(x, dtype=np.float64)
        return float(x @ self.M @ x + self.l @ x + self.c)

    def constraint_residual(self, x: np.ndarray) -> np.ndarray:
        return self.A @ np.asarray(x, dtype=np.float64) - self.r


@dataclass
class QuioProblem:
    """Unconstrained integer problem after folding constraints in at weight rho."""

    M_rho: np.ndarray
    l_rho: np.ndarray
    c_rho: float
    rho: float

    def __post_init__(self) -> None:
        self.M_rho = np.asarray(self.M_rho, dtype=np.float64)
        self.l_rho = np.asarray(self.l_rho, dtype=np.float64).ravel()
        self.c_rho = float(self.c_rho)
        self.rho = float(self.rho)

    @property
    def dim_n(self) -> int:
        return self.M_rho.shape[0]

    def cost(self, x: np.ndarray) -> float:
        x = np.asarray(x, dtype=np.float64)
        return float(x @ self.M_rho @ x + self.l_rho @ x + self.c_rho)


@dataclass
class BinaryEncoding:
    """Linear map x = B b from N bits to n integers.

    Each integer row of B touches its own contiguous block of bits; the
    two-bit level encoding uses weights (1, 2) per variable.
    """

    B: np.ndarray
    bits_per_var: list[int]

    def __post_init__(self) -> None:
        self.B = np.asarray(self.B, dtype=np.float64)
        self.bits_per_var = [int(k) for k in self.bits_per_var]
        n, N = self.B.shape
        if len(self.bits_per_var) != n:
            raise ValueError("bits_per_var must have one entry per integer variable")
        if sum(self.bits_per_var) != N:
            raise ValueError("bits_per_var must sum to the bit count")
        # each row must own exactly its contiguous block
        offset = 0
        for i, k in enumerate(self.bits_per_var):
            block = np.zeros(N, dtype=bool)
            block[offset : offset + k] = True
            if np.any(self.B[i, ~block] != 0.0):
                raise ValueError(f"row {i} touches bits outside its block")
            offset += k

    @property
    def num_bits(self) -> int:
        return self.B.shape[1]

    @property
    def num_vars(self) -> int:
        return self.B.shape[0]

    def decode(self, bits: np.ndarray) -> np.ndarray:
        """Integer vector encoded by ``bits``."""
        return self.B @ np.asarray(bits, dtype=np.float64)

    @classmethod
    def levels(cls, num_vars: int, bits_per_var: int = 2) -> "BinaryEncoding":
        """Positional encoding with weights 1, 2, 4, ... for every variable."""
        weights = 2.0 ** np.arange(bits_per_var)
        B = np.zeros((num_vars, num_vars * bits_per_var))
        for i in range(num_vars):
            B[i, i * bits_per_var : (i + 1) * bits_per_var] = weights
        return cls(B=B, bits_per_var=[bits_per_var] * num_vars)


@dataclass
class QuboProblem:
    """min b'Qb + constant over bitstrings, Q upper-triangular."""

    Q: np.ndarray
    constant: float
    num_vars: int = 0

    def __post_init__(self) -> None:
        self.Q = np.asarray(self.Q, dtype=np.float64)
        self.constant = float(self.constant)
        if self.Q.ndim != 2 or self.Q.shape[0] != self.Q.shape[1]:
            raise ValueError("Q must be square")
        if self.num_vars == 0:
            self.num_vars = self.Q.shape[0]
        elif self.num_vars != self.Q.shape[0]:
            raise ValueError("num_vars does not match Q")
        if np.any(np.tril(self.Q, k=-1) != 0.0):
            raise ValueError("Q must be upper-triangular")


@dataclass
class IsingModel:
    """Diagonal cost Hamiltonian sum h_ij Z_i Z_j + sum h'_i Z_i + h'' I.

    The basis-state expectation of this operator reproduces the QUBO cost of
    the corresponding bitstring, with Z eigenvalue z_i = 1 - 2 b_i.
    """

    h_quad: dict[tuple[int, int], float]
    h_lin: np.ndarray
    h_const: float
    num_qubits: int = 0

    def __post_init__(self) -> None:
        self.h_lin = np.asarray(self.h_lin, dtype=np.float64).ravel()
        self.h_const = float(self.h_const)
        if self.num_qubits == 0:
            self.num_qubits = self.h_lin.size
        self.h_quad = {
            (int(i), int(j)): float(w) for (i, j), w in self.h_quad.items()
        }
        for i, j in self.h_quad:
            if not 0 <= i < j < self.num_qubits:
                raise ValueError(f"coupling ({i},{j}) must satisfy 0 <= i < j < n")

    def diag_cost(self, bits: np.ndarray) -> float:
        z = 1.0 - 2.0 * np.asarray(bits, dtype=np.float64)
        cost = self.h_const + float(self.h_lin @ z)
        for (i, j), w in self.h_quad.items():
            cost += w * z[i] * z[j]
        return cost

    def cost_vector(self) -> np.ndarray:
        """diag_cost of every bitstring, indexed by integer value."""
        z = 1.0 - 2.0 * all_bitstrings(self.num_qubits)
        cost = self.h_const + z @ self.h_lin
        for (i, j), w in self.h_quad.items():
            cost += w * z[:, i] * z[:, j]
        return cost


@dataclass
class SolveReport:
    """Exhaustive-enumeration result: the optimum and everything attaining it."""

    optimal_cost: float
    optimal_set: list[str] = field(default_factory=list)
    evaluations: int = 0


# ---------------------------------------------------------------------------
# transforms


def build_quio(qcio: QcioProblem, rho: float) -> QuioProblem:
    """Fold Ax = r into the cost at penalty weight rho.

    M_rho = M + rho A'A,  l_rho = l - 2 rho r'A,  c_rho = c + rho |r|^2,
    so that cost_rho(x) = cost(x) + rho |Ax - r|^2.
    """
    if rho < 0:
        raise ValueError("penalty weight must be nonnegative")
    M_rho = qcio.M + rho * qcio.A.T @ qcio.A
    l_rho = qcio.l - 2.0 * rho * qcio.r @ qcio.A
    c_rho = qcio.c + rho * float(qcio.r @ qcio.r)
    return QuioProblem(M_rho=M_rho, l_rho=l_rho, c_rho=c_rho, rho=rho)


def upper_triangularize(mat: np.ndarray) -> np.ndarray:
    """Fold the strict lower triangle onto the upper one, preserving x'Mx."""
    mat = np.asarray(mat, dtype=np.float64)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("matrix must be square")
    out = np.triu(mat) + np.triu(mat.T, k=1)
    return out


def encode_binary(quio: QuioProblem, enc: BinaryEncoding) -> QuboProblem:
    """Substitute x = B b, using b^2 = b to absorb linear terms into the diagonal."""
    if enc.num_vars != quio.dim_n:
        raise ValueError(
            f"encoding has {enc.num_vars} integer rows, problem has {quio.dim_n}"
        )
    B = enc.B
    Q = upper_triangularize(B.T @ quio.M_rho @ B + np.diag(quio.l_rho @ B))
    return QuboProblem(Q=Q, constant=quio.c_rho)


def qubo_cost(qubo: QuboProblem, bits: np.ndarray | str) -> float:
    """b'Qb + constant for a single bitstring."""
    if isinstance(bits, str):
        bits = str_to_bits(bits)
    b = np.asarray(bits, dtype=np.float64).ravel()
    if b.size != qubo.num_vars:
        raise ValueError(f"expected {qubo.num_vars} bits, got {b.size}")
    return float(b @ qubo.Q @ b + qubo.constant)


def qubo_cost_vector(qubo: QuboProblem, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Costs of the bitstrings with integer values ``start..stop-1``, vectorized."""
    bits = all_bitstrings(qubo.num_vars, start, stop)
    return ((bits @ qubo.Q) * bits).sum(axis=1) + qubo.constant


def to_ising(qubo: QuboProblem) -> IsingModel:
    """Rewrite the QUBO cost as a diagonal Hamiltonian via b_i -> (I - Z_i)/2."""
    N = qubo.num_vars
    h_lin = np.zeros(N)
    h_const = qubo.constant
    h_quad: dict[tuple[int, int], float] = {}
    for i in range(N):
        q_ii = qubo.Q[i, i]
        h_lin[i] -= q_ii / 2.0
        h_const += q_ii / 2.0
        for j in range(i + 1, N):
            q_ij = qubo.Q[i, j]
            if q_ij == 0.0:
                continue
            h_quad[(i, j)] = q_ij / 4.0
            h_lin[i] -= q_ij / 4.0
            h_lin[j] -= q_ij / 4.0
            h_const += q_ij / 4.0
    return IsingModel(h_quad=h_quad, h_lin=h_lin, h_const=h_const, num_qubits=N)


# ---------------------------------------------------------------------------
# oracles


def brute_force_solve(qubo: QuboProblem, cap: int = BRUTE_FORCE_CAP) -> SolveReport:
    """Enumerate every bitstring and collect all minimizers (tolerance 1e-9)."""
    N = qubo.num_vars
    if N > cap:
        raise ValueError(f"{N} variables exceed the enumeration cap of {cap}")
    total = 1 << N
    chunk = min(total, 1 << 18)
    best = np.inf
    for start in range(0, total, chunk):
        best = min(best, qubo_cost_vector(qubo, start, min(start + chunk, total)).min())
    minimizers: list[int] = []
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        costs = qubo_cost_vector(qubo, start, stop)
        keep = np.nonzero(costs <= best + _ATOL)[0]
        minimizers.extend(int(start + k) for k in keep)
    return SolveReport(
        optimal_cost=float(best),
        optimal_set=[bits_to_str(int_to_bits(v, N)) for v in minimizers],
        evaluations=total,
    )


def min_penalty(
    qcio: QcioProblem,
    enc: BinaryEncoding,
    step: float = 0.1,
    ceiling: float = 50.0,
    cap: int = BRUTE_FORCE_CAP,
) -> float:
    """Smallest grid penalty weight whose QUBO optima all solve the constrained problem.

    Scans rho = 0, step, 2*step, ... and brute-forces the penalized problem at
    every grid point; returns the first rho for which every minimizer decodes
    to a feasible integer vector attaining the constrained optimum.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    N = enc.num_bits
    if N > cap:
        raise ValueError(f"{N} bits exceed the enumeration cap of {cap}")
    bits = all_bitstrings(N)
    xs = bits @ enc.B.T
    base = ((xs @ qcio.M) * xs).sum(axis=1) + xs @ qcio.l + qcio.c
    residual = xs @ qcio.A.T - qcio.r
    penalty = (residual * residual).sum(axis=1)
    feasible = penalty <= _ATOL
    if not np.any(feasible):
        raise ValueError("no encodable point satisfies the constraints")
    c_star = base[feasible].min()
    k = 0
    while True:
        rho = k * step
        if rho > ceiling + _ATOL:
            raise ValueError(f"no valid penalty weight found up to ceiling {ceiling}")
        total = base + rho * penalty
        lo = total.min()
        opt = total <= lo + _ATOL
        if np.all(feasible[opt]) and np.all(np.abs(base[opt] - c_star) <= _ATOL):
            return rho
        k += 1
