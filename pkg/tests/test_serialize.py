"""JSON round-trips and CSV export format checks."""

from __future__ import annotations

import json

import numpy as np
import pytest

from qubolab.annealer import SweepRow
from qubolab.model import (
    IsingModel,
    QuboProblem,
    SolveReport,
    build_quio,
    encode_binary,
    to_ising,
)
from qubolab.optimizer import OptTrace
from qubolab.quality import Distribution, QualityReport
from qubolab.serialize import (
    SCHEMA_VERSION,
    dumps,
    from_dict,
    landscape_to_csv,
    load_json,
    route_to_csv,
    save_json,
    scatter_to_csv,
    schedule_to_csv,
    sweeps_to_csv,
    to_dict,
    traces_to_csv,
)
from qubolab.simulator import Circuit, SampleSet
from qubolab.transpiler import CouplingMap, ErrorMap, Layout
from qubolab.usecases import Route, Schedule, build_lama, example_series, gen_cities
from qubolab.variational import Landscape


def roundtrip(obj):
    return from_dict(json.loads(dumps(obj)))


def test_qcio_and_encoding_roundtrip():
    spec = example_series()["Ex0p1"]
    qcio, enc = build_lama(spec)
    back = roundtrip(qcio)
    np.testing.assert_array_equal(back.M, qcio.M)
    np.testing.assert_array_equal(back.A, qcio.A)
    np.testing.assert_array_equal(back.upper, qcio.upper)
    enc_back = roundtrip(enc)
    np.testing.assert_array_equal(enc_back.B, enc.B)
    quio = build_quio(qcio, 2.0)
    quio_back = roundtrip(quio)
    np.testing.assert_array_equal(quio_back.M_rho, quio.M_rho)
    assert quio_back.rho == 2.0


def test_qubo_ising_solve_report_roundtrip():
    spec = example_series()["Ex0p1"]
    qcio, enc = build_lama(spec)
    qubo = encode_binary(build_quio(qcio, 2.0), enc)
    back = roundtrip(qubo)
    np.testing.assert_array_equal(back.Q, qubo.Q)
    assert back.constant == qubo.constant
    ising = to_ising(qubo)
    ising_back = roundtrip(ising)
    assert ising_back.h_quad == ising.h_quad
    np.testing.assert_array_equal(ising_back.h_lin, ising.h_lin)
    report = SolveReport(optimal_cost=2.0, optimal_set=["100100"], evaluations=64)
    assert roundtrip(report) == report


def test_ising_quad_keys_are_comma_strings():
    ising = IsingModel({(0, 2): 0.25}, np.zeros(3), 0.0, 3)
    doc = to_dict(ising)
    assert doc["h_quad"] == {"0,2": 0.25}
    assert doc["schema_version"] == SCHEMA_VERSION
    assert doc["type"] == "IsingModel"


def test_usecase_spec_roundtrips():
    spec = example_series()["Ex2p1"]
    back = roundtrip(spec)
    assert back.availability == spec.availability
    assert back.required_energy == spec.required_energy
    trp = gen_cities(4, "asymmetric", seed=3, rho=1.5)
    trp_back = roundtrip(trp)
    np.testing.assert_array_equal(trp_back.distances, trp.distances)
    assert trp_back.layout == "asymmetric"
    assert trp_back.rho == 1.5


def test_circuit_and_sampleset_roundtrip():
    circ = Circuit(3).h(0).rzz(0, 2, 0.7).cx(1, 2).measure(0, 1, 2)
    back = roundtrip(circ)
    assert back.gates == circ.gates
    samples = SampleSet({"010": 7, "000": 3}, shots=10)
    back = roundtrip(samples)
    assert back.counts == samples.counts and back.shots == 10


def test_topology_and_errmap_roundtrip():
    cmap = CouplingMap.heavy_hex_27()
    back = roundtrip(cmap)
    assert back.edges == cmap.edges
    errmap = ErrorMap.uniform(CouplingMap.line(3), 0.001, 0.01, 0.02)
    err_back = roundtrip(errmap)
    assert err_back.single == errmap.single
    assert err_back.two == errmap.two
    layout = Layout([2, 0, 1])
    assert roundtrip(layout).assignment == [2, 0, 1]


def test_quality_and_distribution_roundtrip():
    dist = Distribution({"00": 0.5, "11": 0.5})
    assert roundtrip(dist).probs == dist.probs
    report = QualityReport(0.97, 0.12, 0.9, 80.0, 20.0)
    assert roundtrip(report) == report


def test_schedule_and_route_roundtrip():
    sched = Schedule(levels=np.array([[0, 2, 1]]))
    np.testing.assert_array_equal(roundtrip(sched).levels, sched.levels)
    route = Route(order=[2, 0, 1])
    assert roundtrip(route).order == [2, 0, 1]


def test_landscape_roundtrip():
    scape = Landscape(np.arange(6.0).reshape(2, 3), np.zeros(2), np.zeros(3))
    back = roundtrip(scape)
    np.testing.assert_array_equal(back.grid, scape.grid)


def test_save_and_load_json(tmp_path):
    qubo = QuboProblem(Q=[[1.0, -2.0], [0.0, 0.5]], constant=3.0)
    path = tmp_path / "qubo.json"
    save_json(path, qubo)
    raw = json.loads(path.read_text())
    assert raw["schema_version"] == SCHEMA_VERSION
    assert raw["Q"] == [[1.0, -2.0], [0.0, 0.5]]
    loaded = load_json(path)
    np.testing.assert_array_equal(loaded.Q, qubo.Q)


def test_dumps_is_deterministic():
    qubo = QuboProblem(Q=[[1.0]], constant=0.0)
    assert dumps(qubo) == dumps(qubo)


def test_unknown_types_rejected():
    with pytest.raises(TypeError):
        to_dict(object())
    with pytest.raises(ValueError):
        from_dict({"type": "Mystery"})


# ---------------------------------------------------------------------------
# CSV


def test_landscape_csv_layout(tmp_path):
    scape = Landscape(
        np.array([[1.0, 2.0], [3.0, 4.0]]),
        np.array([0.0, 1.0]),
        np.array([0.0, 2.0]),
    )
    path = tmp_path / "scape.csv"
    landscape_to_csv(scape, path)
    lines = path.read_text().splitlines()
    assert lines[0] == f"# schema_version={SCHEMA_VERSION}"
    assert lines[1].startswith("beta\\gamma,")
    assert lines[2].split(",")[0] == "0.0"
    grid = np.loadtxt(path, delimiter=",", skiprows=2, usecols=(1, 2))
    np.testing.assert_array_equal(grid, scape.grid)


def test_traces_csv(tmp_path):
    traces = [
        OptTrace([(np.zeros(1), 3.0), (np.ones(1), 1.0)], 1.0, "tolerance"),
        OptTrace([(np.zeros(1), 2.0)], 2.0, "max_iter"),
    ]
    path = tmp_path / "traces.csv"
    traces_to_csv(traces, path)
    lines = path.read_text().splitlines()
    assert lines[1] == "run,iteration,cost"
    assert lines[2] == "0,0,3.0"
    assert lines[-1] == "1,0,2.0"


def test_sweeps_csv(tmp_path):
    rows = [SweepRow(0.5, 40.0, 10.0, 400), SweepRow(1.0, 90.0, 55.0, 400)]
    path = tmp_path / "sweep.csv"
    sweeps_to_csv(rows, path)
    lines = path.read_text().splitlines()
    assert lines[1] == "axis,feasible_pct,optimal_pct,reads"
    assert lines[2] == "0.5,40.0,10.0,400"
    with pytest.raises(TypeError):
        sweeps_to_csv([(1, 2, 3, 4)], path)


def test_schedule_route_scatter_csv(tmp_path):
    schedule_to_csv(Schedule(np.array([[0, 3]])), tmp_path / "sched.csv")
    lines = (tmp_path / "sched.csv").read_text().splitlines()
    assert lines[1] == "car,timeslot,level"
    assert lines[3] == "0,1,3"
    route_to_csv(Route([1, 0]), tmp_path / "route.csv")
    assert (tmp_path / "route.csv").read_text().splitlines()[2] == "0,1"
    scatter_to_csv(
        [{"seed": 3, "two_qubit_count": 12, "circuit_score": 0.75}],
        tmp_path / "scatter.csv",
    )
    lines = (tmp_path / "scatter.csv").read_text().splitlines()
    assert lines[1] == "seed,two_qubit_count,circuit_score"
    assert lines[2] == "3,12,0.75"
