"""JSON and CSV interchange for every workbench object.

JSON documents carry the exact field names of their in-memory types, matrices
as row-major nested arrays, a "type" tag, and a schema version. CSV exports
start with a ``# schema_version=N`` comment line so plot files stay
self-describing.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .annealer import SweepRow
from .model import (
    BinaryEncoding,
    IsingModel,
    QcioProblem,
    QuboProblem,
    QuioProblem,
    SolveReport,
)
from .quality import Distribution, QualityReport
from .simulator import Circuit, Gate, SampleSet
from .transpiler import CouplingMap, ErrorMap, Layout
from .usecases import LamaSpec, Route, Schedule, TrpSpec
from .variational import Landscape

SCHEMA_VERSION = 1


def _mat(x) -> list:
    return np.asarray(x).tolist()


def to_dict(obj) -> dict:
    """Tagged JSON-ready dict for any serializable workbench object."""
    if isinstance(obj, QcioProblem):
        body = {
            "dim_n": obj.dim_n,
            "M": _mat(obj.M),
            "l": _mat(obj.l),
            "c": obj.c,
            "A": _mat(obj.A),
            "r": _mat(obj.r),
            "lower": _mat(obj.lower),
            "upper": _mat(obj.upper),
        }
    elif isinstance(obj, QuioProblem):
        body = {
            "M_rho": _mat(obj.M_rho),
            "l_rho": _mat(obj.l_rho),
            "c_rho": obj.c_rho,
            "rho": obj.rho,
        }
    elif isinstance(obj, BinaryEncoding):
        body = {"B": _mat(obj.B), "bits_per_var": obj.bits_per_var}
    elif isinstance(obj, QuboProblem):
        body = {"Q": _mat(obj.Q), "constant": obj.constant, "num_vars": obj.num_vars}
    elif isinstance(obj, IsingModel):
        body = {
            "h_quad": {f"{i},{j}": v for (i, j), v in sorted(obj.h_quad.items())},
            "h_lin": _mat(obj.h_lin),
            "h_const": obj.h_const,
            "num_qubits": obj.num_qubits,
        }
    elif isinstance(obj, SolveReport):
        body = {
            "optimal_cost": obj.optimal_cost,
            "optimal_set": list(obj.optimal_set),
            "evaluations": obj.evaluations,
        }
    elif isinstance(obj, LamaSpec):
        body = {
            "num_timeslots": obj.num_timeslots,
            "num_cars": obj.num_cars,
            "availability": [list(w) for w in obj.availability],
            "required_energy": list(obj.required_energy),
            "num_levels": obj.num_levels,
        }
    elif isinstance(obj, TrpSpec):
        body = {
            "num_cities": obj.num_cities,
            "distances": _mat(obj.distances),
            "layout": obj.layout,
            "rho": obj.rho,
        }
    elif isinstance(obj, Schedule):
        body = {"levels": _mat(obj.levels)}
    elif isinstance(obj, Route):
        body = {"order": list(obj.order)}
    elif isinstance(obj, Circuit):
        body = {
            "num_qubits": obj.num_qubits,
            "gates": [
                {"kind": g.kind, "qubits": list(g.qubits), "angle": g.angle}
                for g in obj.gates
            ],
        }
    elif isinstance(obj, SampleSet):
        body = {"counts": dict(obj.counts), "shots": obj.shots}
    elif isinstance(obj, CouplingMap):
        body = {"num_qubits": obj.num_qubits, "edges": [list(e) for e in obj.edges]}
    elif isinstance(obj, ErrorMap):
        body = {
            "single": {str(q): e for q, e in sorted(obj.single.items())},
            "two": {f"{a},{b}": e for (a, b), e in sorted(obj.two.items())},
            "measure": {str(q): e for q, e in sorted(obj.measure.items())},
        }
    elif isinstance(obj, Layout):
        body = {"assignment": list(obj.assignment)}
    elif isinstance(obj, Distribution):
        body = {"probs": dict(obj.probs)}
    elif isinstance(obj, QualityReport):
        body = {
            "fidelity": obj.fidelity,
            "relative_error": obj.relative_error,
            "random_baseline": obj.random_baseline,
            "feasible_pct": obj.feasible_pct,
            "optimal_pct": obj.optimal_pct,
        }
    elif isinstance(obj, Landscape):
        body = {
            "grid": _mat(obj.grid),
            "beta_axis": _mat(obj.beta_axis),
            "gamma_axis": _mat(obj.gamma_axis),
        }
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return {
        "schema_version": SCHEMA_VERSION,
        "type": type(obj).__name__,
        **body,
    }


def from_dict(data: dict):
    """Inverse of :func:`to_dict`."""
    kind = data.get("type")
    if kind == "QcioProblem":
        return QcioProblem(
            dim_n=data["dim_n"],
            M=np.array(data["M"], dtype=float),
            l=np.array(data["l"], dtype=float),
            c=float(data["c"]),
            A=np.array(data["A"], dtype=float),
            r=np.array(data["r"], dtype=float),
            lower=np.array(data["lower"], dtype=int),
            upper=np.array(data["upper"], dtype=int),
        )
    if kind == "QuioProblem":
        return QuioProblem(
            M_rho=np.array(data["M_rho"], dtype=float),
            l_rho=np.array(data["l_rho"], dtype=float),
            c_rho=float(data["c_rho"]),
            rho=float(data["rho"]),
        )
    if kind == "BinaryEncoding":
        return BinaryEncoding(
            B=np.array(data["B"], dtype=float), bits_per_var=data["bits_per_var"]
        )
    if kind == "QuboProblem":
        return QuboProblem(
            Q=np.array(data["Q"], dtype=float), constant=float(data["constant"])
        )
    if kind == "IsingModel":
        quad = {
            tuple(int(t) for t in key.split(",")): float(v)
            for key, v in data["h_quad"].items()
        }
        return IsingModel(
            h_quad=quad,
            h_lin=np.array(data["h_lin"], dtype=float),
            h_const=float(data["h_const"]),
            num_qubits=int(data["num_qubits"]),
        )
    if kind == "SolveReport":
        return SolveReport(
            optimal_cost=float(data["optimal_cost"]),
            optimal_set=list(data["optimal_set"]),
            evaluations=int(data["evaluations"]),
        )
    if kind == "LamaSpec":
        return LamaSpec(
            num_timeslots=data["num_timeslots"],
            num_cars=data["num_cars"],
            availability=[tuple(w) for w in data["availability"]],
            required_energy=list(data["required_energy"]),
            num_levels=data["num_levels"],
        )
    if kind == "TrpSpec":
        return TrpSpec(
            num_cities=data["num_cities"],
            distances=np.array(data["distances"], dtype=float),
            layout=data["layout"],
            rho=float(data["rho"]),
        )
    if kind == "Schedule":
        return Schedule(levels=np.array(data["levels"], dtype=int))
    if kind == "Route":
        return Route(order=list(data["order"]))
    if kind == "Circuit":
        circ = Circuit(data["num_qubits"])
        for g in data["gates"]:
            circ.append(Gate(g["kind"], tuple(g["qubits"]), g["angle"]))
        return circ
    if kind == "SampleSet":
        return SampleSet(counts=data["counts"], shots=data["shots"])
    if kind == "CouplingMap":
        return CouplingMap(data["num_qubits"], [tuple(e) for e in data["edges"]])
    if kind == "ErrorMap":
        return ErrorMap(
            single={int(q): v for q, v in data["single"].items()},
            two={
                tuple(int(t) for t in key.split(",")): v
                for key, v in data["two"].items()
            },
            measure={int(q): v for q, v in data["measure"].items()},
        )
    if kind == "Layout":
        return Layout(data["assignment"])
    if kind == "Distribution":
        return Distribution(data["probs"])
    if kind == "QualityReport":
        return QualityReport(
            fidelity=data["fidelity"],
            relative_error=data["relative_error"],
            random_baseline=data["random_baseline"],
            feasible_pct=data["feasible_pct"],
            optimal_pct=data["optimal_pct"],
        )
    if kind == "Landscape":
        return Landscape(
            grid=np.array(data["grid"], dtype=float),
            beta_axis=np.array(data["beta_axis"], dtype=float),
            gamma_axis=np.array(data["gamma_axis"], dtype=float),
        )
    raise ValueError(f"unknown document type {kind!r}")


def dumps(obj) -> str:
    return json.dumps(to_dict(obj), sort_keys=True, indent=2)


def save_json(path, obj):
    Path(path).write_text(dumps(obj) + "\n")


def load_json(path):
    return from_dict(json.loads(Path(path).read_text()))


# ---------------------------------------------------------------------------
# CSV exports

_CSV_HEADER = f"# schema_version={SCHEMA_VERSION}\n"


def landscape_to_csv(scape: Landscape, path):
    """Matrix layout: first column beta, remaining columns one per gamma."""
    lines = [_CSV_HEADER.rstrip("\n")]
    gamma_cells = ",".join(repr(float(g)) for g in scape.gamma_axis)
    lines.append("beta\\gamma," + gamma_cells)
    for i, beta in enumerate(scape.beta_axis):
        row = ",".join(repr(float(v)) for v in scape.grid[i])
        lines.append(f"{float(beta)!r},{row}")
    Path(path).write_text("\n".join(lines) + "\n")


def traces_to_csv(traces, path):
    """One row per objective evaluation: run, iteration, cost."""
    lines = [_CSV_HEADER.rstrip("\n"), "run,iteration,cost"]
    for run, trace in enumerate(traces):
        for it, (_, cost) in enumerate(trace.iterates):
            lines.append(f"{run},{it},{float(cost)!r}")
    Path(path).write_text("\n".join(lines) + "\n")


def sweeps_to_csv(rows, path):
    lines = [_CSV_HEADER.rstrip("\n"), "axis,feasible_pct,optimal_pct,reads"]
    for row in rows:
        if not isinstance(row, SweepRow):
            raise TypeError("sweeps_to_csv expects SweepRow entries")
        lines.append(
            f"{float(row.axis_value)!r},{float(row.feasible_pct)!r},"
            f"{float(row.optimal_pct)!r},{row.reads}"
        )
    Path(path).write_text("\n".join(lines) + "\n")


def schedule_to_csv(schedule: Schedule, path):
    """Decoded charging schedule: one row per (car, timeslot)."""
    lines = [_CSV_HEADER.rstrip("\n"), "car,timeslot,level"]
    cars, slots = schedule.levels.shape
    for c in range(cars):
        for t in range(slots):
            lines.append(f"{c},{t},{int(schedule.levels[c, t])}")
    Path(path).write_text("\n".join(lines) + "\n")


def route_to_csv(route: Route, path):
    lines = [_CSV_HEADER.rstrip("\n"), "position,city"]
    for pos, city in enumerate(route.order):
        lines.append(f"{pos},{city}")
    Path(path).write_text("\n".join(lines) + "\n")


def scatter_to_csv(records, path):
    """Per-seed transpilation scatter: seed, two_qubit_count, circuit_score."""
    lines = [_CSV_HEADER.rstrip("\n"), "seed,two_qubit_count,circuit_score"]
    for rec in records:
        lines.append(
            f"{rec['seed']},{rec['two_qubit_count']},{float(rec['circuit_score'])!r}"
        )
    Path(path).write_text("\n".join(lines) + "\n")
