"""Two annealing backends: a Metropolis simulated-annealing QUBO sampler
(classical stand-in for hardware reads) and a first-order Trotterized
Schroedinger evolution of H(t) = -a(t)/2 * sum X_i + b(t)/2 * H_C at tiny
scale. Trotter times are abstract units, never hardware microseconds.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import IsingModel, QuboProblem, bits_to_str
from .quality import solution_rates
from .simulator import Gate, SampleSet, StateVector, apply_gate

TROTTER_QUBIT_CAP = 12
_BOUNDARY_ATOL = 1e-12


@dataclass
class AnnealSchedule:
    """Annealing functions a(t), b(t) on [0, T] with fixed boundary values."""

    total_time: float
    a: callable
    b: callable

    def __post_init__(self):
        if self.total_time <= 0.0:
            raise ValueError("total_time must be positive")
        T = self.total_time
        for name, value, want in [
            ("a(0)", self.a(0.0), 1.0),
            ("b(0)", self.b(0.0), 0.0),
            ("a(T)", self.a(T), 0.0),
            ("b(T)", self.b(T), 1.0),
        ]:
            if abs(value - want) > _BOUNDARY_ATOL:
                raise ValueError(f"schedule boundary {name} = {value}, want {want}")
        ts = np.linspace(0.0, T, 33)
        a_vals = [self.a(t) for t in ts]
        b_vals = [self.b(t) for t in ts]
        if np.any(np.diff(a_vals) > _BOUNDARY_ATOL) or np.any(
            np.diff(b_vals) < -_BOUNDARY_ATOL
        ):
            raise ValueError("schedule functions must be monotone")

    @classmethod
    def linear(cls, total_time: float) -> "AnnealSchedule":
        T = float(total_time)
        return cls(T, lambda t: 1.0 - t / T, lambda t: t / T)


@dataclass
class SaConfig:
    num_reads: int
    sweeps: int = 1000
    t_hot: float | None = None
    t_cold: float | None = None
    seed: int = 0

    def __post_init__(self):
        if self.num_reads < 1:
            raise ValueError("num_reads must be >= 1")
        if self.sweeps < 1:
            raise ValueError("sweeps must be >= 1")
        if self.t_hot is not None and self.t_cold is not None:
            if not self.t_hot > self.t_cold > 0.0:
                raise ValueError("need t_hot > t_cold > 0")

    def temperatures(self, qubo: QuboProblem) -> np.ndarray:
        """Geometric ladder; defaults scale with the largest QUBO entry so
        initial single-bit flips are usually accepted."""
        hot = self.t_hot
        if hot is None:
            hot = float(np.max(np.abs(qubo.Q))) or 1.0
        cold = 0.01 * hot if self.t_cold is None else self.t_cold
        if not hot > cold > 0.0:
            raise ValueError("need t_hot > t_cold > 0")
        if self.sweeps == 1:
            return np.array([hot])
        return hot * (cold / hot) ** (np.arange(self.sweeps) / (self.sweeps - 1))


def sa_sample(qubo: QuboProblem, cfg: SaConfig) -> SampleSet:
    """Metropolis chains over bitstrings, all reads advanced in lockstep.

    Single-bit flip energies come from incrementally maintained local fields,
    so a sweep costs O(reads * n) after the initial O(reads * n^2) setup.
    """
    n = qubo.num_vars
    rng = np.random.default_rng(cfg.seed)
    temps = cfg.temperatures(qubo)
    reads = cfg.num_reads
    sym = qubo.Q + qubo.Q.T
    np.fill_diagonal(sym, 0.0)
    diag = np.diag(qubo.Q).copy()
    states = rng.integers(0, 2, size=(reads, n)).astype(float)
    field = states @ sym  # field[r, k] = sum_j sym[k, j] * b[r, j]
    for temp in temps:
        for k in range(n):
            flip = 1.0 - 2.0 * states[:, k]
            d_energy = flip * (diag[k] + field[:, k])
            accept = (d_energy <= 0.0) | (
                rng.random(reads) < np.exp(np.minimum(-d_energy / temp, 0.0))
            )
            delta = np.where(accept, flip, 0.0)
            states[:, k] += delta
            field += np.outer(delta, sym[k])
    counts = {}
    for row in states.astype(int):
        key = bits_to_str(row)
        counts[key] = counts.get(key, 0) + 1
    return SampleSet(counts, reads)


def qa_trotter(ising: IsingModel, schedule: AnnealSchedule, dt: float) -> StateVector:
    """First-order Trotter evolution from |+...+>, midpoint-sampled schedule:
    per step, RX(-a(t_k) dt) on every qubit, then the diagonal phase
    exp(-i b(t_k) dt/2 * cost(b))."""
    n = ising.num_qubits
    if n > TROTTER_QUBIT_CAP:
        raise ValueError(f"dense Trotter evolution capped at {TROTTER_QUBIT_CAP} qubits")
    if dt <= 0.0:
        raise ValueError("dt must be positive")
    steps = int(round(schedule.total_time / dt))
    state = StateVector.plus_state(n)
    if steps == 0:
        return state
    dt_eff = schedule.total_time / steps
    cost = ising.cost_vector()
    for k in range(steps):
        t_k = (k + 0.5) * dt_eff
        a_k, b_k = schedule.a(t_k), schedule.b(t_k)
        for q in range(n):
            state = apply_gate(state, Gate("RX", (q,), -a_k * dt_eff))
        amps = state.amplitudes * np.exp(-0.5j * b_k * dt_eff * cost)
        state = StateVector(amps, n)
    return state


@dataclass
class SweepRow:
    axis_value: float
    feasible_pct: float
    optimal_pct: float
    reads: int


def sweep(
    axis: str,
    values,
    family,
    decoder,
    optimal_cost: float,
    cfg: SaConfig,
) -> list:
    """SA solution-rate scan along a penalty-weight or annealing-time axis.

    axis="penalty": ``family`` maps each value to a QuboProblem.
    axis="time": ``family`` is a fixed QuboProblem and each value replaces the
    sweep count (the classical analog of a longer anneal).
    Rows come back ordered by axis value.
    """
    if axis not in ("penalty", "time"):
        raise ValueError(f"unknown sweep axis {axis!r}")
    rows = []
    for value in sorted(values):
        if axis == "penalty":
            qubo = family(value)
            run_cfg = cfg
        else:
            qubo = family
            run_cfg = SaConfig(
                cfg.num_reads, int(value), cfg.t_hot, cfg.t_cold, cfg.seed
            )
        samples = sa_sample(qubo, run_cfg)
        feasible, optimal = solution_rates(samples, decoder, optimal_cost)
        rows.append(SweepRow(float(value), feasible, optimal, run_cfg.num_reads))
    return rows
