import json

import pytest

from ecsumprod import (
    RECORD_FIELDS,
    ExperimentRecord,
    TooLarge,
    parse_config,
    records_from_json,
    render_csv,
    render_json,
    run_sweep,
)
from ecsumprod.residue import euler_phi, units_of
from ecsumprod.sampling import sample_unit_subset

BASE = {"mode": "theorem2", "p_list": [5, 7], "master_seed": 42}


def config(**overrides):
    return parse_config({**BASE, **overrides})


def test_sample_unit_subset_examples():
    assert sample_unit_subset(9, 6, 123) == (1, 2, 4, 5, 7, 8)
    assert sample_unit_subset(9, 0, 1) == ()
    got = sample_unit_subset(100, 10, 7)
    assert len(got) == 10 and got == tuple(sorted(got))
    assert set(got) <= set(units_of(100))
    assert sample_unit_subset(100, 10, 7) == got  # same seed, same draw
    assert sample_unit_subset(100, 10, 8) != got  # different seed moves it


def test_sample_unit_subset_guards():
    with pytest.raises(TooLarge):
        sample_unit_subset(9, 7, 0)  # phi(9) = 6
    with pytest.raises(ValueError):
        sample_unit_subset(9, -1, 0)


def test_parse_config_defaults():
    cfg = config()
    assert cfg.mode == "theorem2"
    assert cfg.p_list == (5, 7)
    assert cfg.p_range is None
    assert cfg.curves_per_p == 1
    assert cfg.sets_per_curve == 1
    assert cfg.set_size_rule == ("fraction", 0.5)
    assert cfg.nu == 1
    assert cfg.master_seed == 42


def test_parse_config_rejections():
    bad = [
        {**BASE, "surprise": 1},
        {**BASE, "mode": "theorem9"},
        {k: v for k, v in BASE.items() if k != "mode"},
        {**BASE, "p_range": [5, 40]},  # both p sources
        {"mode": "theorem2", "master_seed": 42},  # neither p source
        {**BASE, "p_list": [6]},
        {**BASE, "p_list": [3]},
        {**BASE, "p_list": "5,7"},
        {**BASE, "curves_per_p": 0},
        {**BASE, "curves_per_p": True},
        {**BASE, "sets_per_curve": -2},
        {**BASE, "set_size_rule": {"fixed": 0}},
        {**BASE, "set_size_rule": {"fraction": 0.0}},
        {**BASE, "set_size_rule": {"fraction": 1.5}},
        {**BASE, "set_size_rule": {"weird": 1}},
        {**BASE, "set_size_rule": {"fixed": 2, "fraction": 0.5}},
        {**BASE, "master_seed": -1},
        {**BASE, "master_seed": 1 << 64},
        {**BASE, "master_seed": True},
        {**BASE, "nu": 0},
        {**BASE, "enumeration_cap": 4},
        "not a dict",
    ]
    for data in bad:
        with pytest.raises(ValueError):
            parse_config(data)


def test_parse_config_p_range():
    cfg = parse_config({"mode": "identities", "p_range": [1, 20]})
    assert cfg.primes() == (5, 7, 11, 13, 17, 19)
    with pytest.raises(ValueError):
        parse_config({"mode": "identities", "p_range": [20, 1]})


def test_set_size_rule():
    cfg = config(set_size_rule={"fixed": 4})
    assert cfg.set_size(6) == 4
    assert cfg.set_size(2) == 2  # clamped to phi
    cfg = config(set_size_rule={"fraction": 0.5})
    assert cfg.set_size(6) == 3
    assert cfg.set_size(1) == 1  # floor would give 0, clamped up


def test_sweep_deterministic():
    cfg = config(curves_per_p=2, sets_per_curve=2)
    first = run_sweep(cfg)
    second = run_sweep(cfg)
    assert first == second
    assert render_csv(first) == render_csv(second)
    assert [r.experiment_id for r in first] == list(range(8))


def test_sweep_rows_populated():
    rows = run_sweep(config())
    assert len(rows) == 2
    for rec in rows:
        assert rec.error == ""
        assert rec.J is not None and rec.J >= rec.J_lower
        assert rec.N == rec.p + 1 - rec.t
        assert rec.T is not None and rec.N % rec.T == 0
        assert rec.seed is not None


def test_sweep_crash_isolation():
    # p = 101 cannot be enumerated under a cap of 50; p = 5 still succeeds
    cfg = parse_config({
        "mode": "theorem2", "p_list": [101, 5],
        "master_seed": 1, "enumeration_cap": 50,
    })
    rows = run_sweep(cfg)
    assert len(rows) == 2
    assert rows[0].p == 101 and rows[0].error == "CapExceeded"
    assert rows[0].a4 is None
    assert rows[1].p == 5 and rows[1].error == ""
    assert [r.experiment_id for r in rows] == [0, 1]


def test_sweep_identities_mode():
    cfg = parse_config({
        "mode": "identities", "p_list": [5, 7, 11],
        "curves_per_p": 3, "master_seed": 9,
    })
    rows = run_sweep(cfg)
    assert len(rows) == 9
    assert all(r.error == "" for r in rows)


def test_sweep_theorem1_columns():
    rows = run_sweep(config(mode="theorem1", p_list=[11, 13]))
    for rec in rows:
        assert rec.error == ""
        assert rec.thm_lhs is not None and rec.thm_rhs is not None
        assert rec.ratio == pytest.approx(rec.thm_lhs / rec.thm_rhs)
        assert rec.J is None  # not a counting mode


def test_sweep_theorem3_columns():
    rows = run_sweep(config(mode="theorem3", p_list=[101, 151]))
    for rec in rows:
        assert rec.H is not None
        assert rec.predicted_sizeA is not None
        phi = euler_phi(rec.T)
        assert rec.sizeT <= phi
        if rec.error == "":
            assert rec.sizeA_over_predicted == pytest.approx(
                rec.sizeA / rec.predicted_sizeA)


def test_empty_p_list():
    # p_list may be empty: zero records, header-only CSV
    cfg = parse_config({"mode": "theorem2", "p_list": []})
    rows = run_sweep(cfg)
    assert rows == []
    assert render_csv(rows) == ",".join(RECORD_FIELDS) + "\n"


def test_csv_shape():
    rows = run_sweep(config())
    text = render_csv(rows)
    lines = text.split("\n")
    assert lines[0] == ",".join(RECORD_FIELDS)
    assert lines[0].startswith("experiment_id,p,a4,a6,N,t,T,Px,Py,nu,")
    assert len(lines) == len(rows) + 2 and lines[-1] == ""
    # None renders empty, floats carry 17 significant digits
    cells = lines[1].split(",")
    delta_cell = cells[RECORD_FIELDS.index("Delta")]
    assert delta_cell == format(rows[0].Delta, ".17g")
    assert cells[RECORD_FIELDS.index("H")] == ""


def test_json_round_trip():
    rows = run_sweep(config(mode="theorem3", p_list=[101]))
    text = render_json(rows)
    assert records_from_json(text) == rows
    parsed = json.loads(text)
    assert list(parsed[0].keys()) == list(RECORD_FIELDS)


def test_record_field_order():
    assert RECORD_FIELDS == (
        "experiment_id", "p", "a4", "a6", "N", "t", "T", "Px", "Py", "nu",
        "sizeA", "sizeB", "sizeS", "sizeT", "sizeH", "J", "J_lower", "Delta",
        "thm_lhs", "thm_rhs", "ratio", "seed", "H", "predicted_sizeA",
        "sizeA_over_predicted", "error",
    )
    assert ExperimentRecord(experiment_id=0, p=5).error == ""
