"""QAOA and two-local VQE ansatz construction plus the p=1 cost landscape.

Parameter vector conventions:
  * QAOA: ``concat(betas, gammas)`` — 2p entries for p layers.
  * VQE: one RY angle per (layer, qubit), n(L+1) entries; layer-major order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .model import IsingModel
from .simulator import Circuit, Gate, StateVector, apply_gate, expectation_diagonal, run_circuit

_TWO_PI = 2.0 * np.pi


@dataclass
class QaoaParams:
    betas: np.ndarray
    gammas: np.ndarray
    layers: int

    def __post_init__(self):
        self.betas = np.asarray(self.betas, dtype=float).reshape(-1)
        self.gammas = np.asarray(self.gammas, dtype=float).reshape(-1)
        if len(self.betas) != self.layers or len(self.gammas) != self.layers:
            raise ValueError(
                f"need {self.layers} betas and gammas, got "
                f"{len(self.betas)} and {len(self.gammas)}"
            )

    @property
    def num_params(self) -> int:
        return 2 * self.layers

    @classmethod
    def from_vector(cls, vector) -> "QaoaParams":
        vector = np.asarray(vector, dtype=float).reshape(-1)
        if len(vector) % 2:
            raise ValueError("QAOA parameter vector must have even length")
        p = len(vector) // 2
        return cls(vector[:p], vector[p:], p)

    def to_vector(self) -> np.ndarray:
        return np.concatenate([self.betas, self.gammas])


@dataclass
class VqeParams:
    thetas: np.ndarray
    layers: int
    num_qubits: int

    def __post_init__(self):
        self.thetas = np.asarray(self.thetas, dtype=float).reshape(-1)
        want = self.num_qubits * (self.layers + 1)
        if len(self.thetas) != want:
            raise ValueError(f"need {want} angles, got {len(self.thetas)}")

    @property
    def num_params(self) -> int:
        return len(self.thetas)


@dataclass
class Landscape:
    grid: np.ndarray
    beta_axis: np.ndarray
    gamma_axis: np.ndarray

    def __post_init__(self):
        self.grid = np.asarray(self.grid, dtype=float)
        self.beta_axis = np.asarray(self.beta_axis, dtype=float).reshape(-1)
        self.gamma_axis = np.asarray(self.gamma_axis, dtype=float).reshape(-1)
        if self.grid.shape != (len(self.beta_axis), len(self.gamma_axis)):
            raise ValueError("grid shape does not match axes")


@dataclass
class ParametricCircuit:
    """Circuit template whose rotation angles may reference a parameter.

    Each op's angle is either None (fixed gate), a float (fixed rotation), or
    a ``(param_index, coefficient)`` pair meaning angle = coefficient * param.
    """

    num_qubits: int
    num_params: int
    ops: list = field(default_factory=list)

    def add(self, kind, qubits, angle=None):
        if isinstance(angle, tuple):
            idx, coef = angle
            if not 0 <= idx < self.num_params:
                raise ValueError(f"parameter index {idx} out of range")
            angle = (int(idx), float(coef))
        self.ops.append((kind, tuple(qubits), angle))
        return self

    def bind(self, vector) -> Circuit:
        vector = np.asarray(vector, dtype=float).reshape(-1)
        if len(vector) != self.num_params:
            raise ValueError(
                f"expected {self.num_params} parameters, got {len(vector)}"
            )
        circ = Circuit(self.num_qubits)
        for kind, qubits, angle in self.ops:
            if isinstance(angle, tuple):
                angle = angle[1] * vector[angle[0]]
            circ.append(Gate(kind, qubits, angle))
        return circ


def qaoa_circuit(ising: IsingModel, p: int) -> ParametricCircuit:
    """Gate-level QAOA ansatz: Hadamard wall, then p alternating phase/mixer
    layers. Parameters are ``concat(betas, gammas)``; phase angles carry the
    Ising coefficients (RZ_i(2 gamma h'_i), RZZ_ij(2 gamma h_ij))."""
    if p < 1:
        raise ValueError("need at least one layer")
    n = ising.num_qubits
    circ = ParametricCircuit(n, 2 * p)
    for q in range(n):
        circ.add("H", (q,))
    couplings = sorted(ising.h_quad.items())
    for layer in range(p):
        beta_idx, gamma_idx = layer, p + layer
        for i, h in enumerate(ising.h_lin):
            if h != 0.0:
                circ.add("RZ", (i,), (gamma_idx, 2.0 * h))
        for (i, j), h in couplings:
            if h != 0.0:
                circ.add("RZZ", (i, j), (gamma_idx, 2.0 * h))
        for q in range(n):
            circ.add("RX", (q,), (beta_idx, 2.0))
    return circ


def qaoa_state_fast(ising: IsingModel, params: QaoaParams) -> StateVector:
    """Diagonal-phase QAOA evolution: multiply amplitudes by
    exp(-i gamma * cost(b)) per layer, then mix with RX(2 beta).

    Differs from the gate-level circuit only by a global phase (the constant
    term h'' enters here but not there)."""
    n = ising.num_qubits
    cost = ising.cost_vector()
    state = StateVector.plus_state(n)
    for beta, gamma in zip(params.betas, params.gammas):
        amps = state.amplitudes * np.exp(-1j * gamma * cost)
        state = StateVector(amps, n)
        for q in range(n):
            state = apply_gate(state, Gate("RX", (q,), 2.0 * beta))
    return state


def vqe_circuit(num_qubits: int, layers: int) -> ParametricCircuit:
    """Two-local ansatz: L blocks of [RY wall, CX chain], then a closing RY
    wall; n(L+1) parameters, layer-major."""
    if num_qubits < 2:
        raise ValueError("need at least two qubits")
    if layers < 1:
        raise ValueError("need at least one layer")
    circ = ParametricCircuit(num_qubits, num_qubits * (layers + 1))
    for layer in range(layers):
        for q in range(num_qubits):
            circ.add("RY", (q,), (layer * num_qubits + q, 1.0))
        for q in range(num_qubits - 1):
            circ.add("CX", (q, q + 1))
    for q in range(num_qubits):
        circ.add("RY", (q,), (layers * num_qubits + q, 1.0))
    return circ


def _sampled_mean(state: StateVector, cost: np.ndarray, shots: int, rng) -> float:
    probs = state.probabilities()
    draws = rng.multinomial(shots, probs / probs.sum())
    return float(draws @ cost) / shots


def qaoa_expectation(
    ising: IsingModel,
    params: QaoaParams,
    shots: int | None = None,
    rng=None,
) -> float:
    """<H_C> in the QAOA state; exact by default, empirical when shots given."""
    state = qaoa_state_fast(ising, params)
    cost = ising.cost_vector()
    if shots is None:
        return expectation_diagonal(state, cost)
    rng = np.random.default_rng(rng)
    return _sampled_mean(state, cost, shots, rng)


def cost_landscape(
    ising: IsingModel,
    resolution: int = 50,
    shots: int | None = None,
    seed: int | None = None,
) -> Landscape:
    """p=1 QAOA energy over the [0, pi]^2 grid; grid[i][j] = E(beta_i, gamma_j)."""
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    axis = np.linspace(0.0, np.pi, resolution)
    n = ising.num_qubits
    cost = ising.cost_vector()
    rng = np.random.default_rng(seed)
    grid = np.empty((resolution, resolution))
    plus = StateVector.plus_state(n)
    for j, gamma in enumerate(axis):
        phased = StateVector(plus.amplitudes * np.exp(-1j * gamma * cost), n)
        for i, beta in enumerate(axis):
            state = phased
            for q in range(n):
                state = apply_gate(state, Gate("RX", (q,), 2.0 * beta))
            if shots is None:
                grid[i, j] = expectation_diagonal(state, cost)
            else:
                grid[i, j] = _sampled_mean(state, cost, shots, rng)
    return Landscape(grid, axis.copy(), axis.copy())


def qaoa_objective(ising: IsingModel, shots: int | None = None, seed: int | None = None):
    """Objective over ``concat(betas, gammas)`` vectors, for the optimizer."""
    rng = np.random.default_rng(seed)

    def objective(vector) -> float:
        return qaoa_expectation(
            ising, QaoaParams.from_vector(vector), shots=shots, rng=rng
        )

    return objective


def vqe_objective(
    ising: IsingModel,
    layers: int,
    shots: int | None = None,
    seed: int | None = None,
):
    """Objective over two-local RY angle vectors, for the optimizer."""
    template = vqe_circuit(ising.num_qubits, layers)
    cost = ising.cost_vector()
    rng = np.random.default_rng(seed)

    def objective(vector) -> float:
        state = run_circuit(template.bind(vector))
        if shots is None:
            return expectation_diagonal(state, cost)
        return _sampled_mean(state, cost, shots, rng)

    return objective
