"""Deterministic experiment sweeps and their CSV/JSON serialization.

A sweep walks (prime, curve, set-sample) combinations from a JSON config,
runs one mode-specific experiment per combination, and emits flat records.
Reproducibility contract: identical configs produce byte-identical output.
Experiments are seeded independently via derive_seed(master, experiment_id)
and failures are isolated into the record's error column, so one bad cell
never poisons the rest of the sweep.
"""

import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, fields

from .charsum import SCAN_CAP, bilinear_ratio_scan
from .curve import ENUMERATION_CAP, enumerate_points
from .errors import EcsumprodError
from .extremal import extremal_report
from .field import is_prime
from .orbit import build_orbit
from .residue import euler_phi
from .rng import SplitMix64, derive_seed
from .sampling import max_order_point, random_curve, sample_unit_subset
from .sumprod import sum_product_report
from .verify import run_identity_suite

MODES = ("theorem1", "theorem2", "theorem3", "identities")

_CONFIG_KEYS = {
    "mode", "p_list", "p_range", "curves_per_p", "sets_per_curve",
    "set_size_rule", "nu", "master_seed", "enumeration_cap", "scan_cap",
}


@dataclass(frozen=True)
class SweepConfig:
    """Validated sweep parameters; see parse_config for the JSON schema."""

    mode: str
    p_list: tuple[int, ...] | None
    p_range: tuple[int, int] | None
    curves_per_p: int
    sets_per_curve: int
    set_size_rule: tuple[str, float]  # ("fixed", k) or ("fraction", f)
    nu: int
    master_seed: int
    enumeration_cap: int
    scan_cap: int

    def primes(self) -> tuple[int, ...]:
        if self.p_list is not None:
            return self.p_list
        lo, hi = self.p_range
        return tuple(p for p in range(max(lo, 5), hi + 1) if is_prime(p))

    def set_size(self, phi: int) -> int:
        kind, value = self.set_size_rule
        if kind == "fixed":
            k = int(value)
        else:
            k = math.floor(value * phi)
        return max(1, min(k, phi))


def parse_config(data: dict) -> SweepConfig:
    """Validate a config mapping; unknown keys are rejected.

    Schema (JSON object):
      mode            required, one of theorem1|theorem2|theorem3|identities
      p_list          list of primes >= 5  (exactly one of p_list/p_range)
      p_range         [lo, hi], inclusive; primes >= 5 inside are used
      curves_per_p    int >= 1, default 1
      sets_per_curve  int >= 1, default 1
      set_size_rule   {"fixed": k>=1} or {"fraction": 0<f<=1}, default fraction 0.5
      nu              int >= 1, default 1
      master_seed     int in [0, 2^64), default 0
      enumeration_cap int >= 5, default 10^7 (desk-scale point enumeration)
      scan_cap        int >= 5, default 10^5 (full character scans)
    """
    if not isinstance(data, dict):
        raise ValueError("config must be a JSON object")
    unknown = set(data) - _CONFIG_KEYS
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    mode = data.get("mode")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if ("p_list" in data) == ("p_range" in data):
        raise ValueError("exactly one of p_list / p_range is required")

    p_list = p_range = None
    if "p_list" in data:
        raw = data["p_list"]
        if not isinstance(raw, list) or not all(isinstance(p, int) for p in raw):
            raise ValueError("p_list must be a list of ints")
        for p in raw:
            if p < 5 or not is_prime(p):
                raise ValueError(f"p_list entries must be primes >= 5, got {p}")
        p_list = tuple(raw)
    else:
        raw = data["p_range"]
        if (not isinstance(raw, list) or len(raw) != 2
                or not all(isinstance(v, int) for v in raw) or raw[0] > raw[1]):
            raise ValueError("p_range must be [lo, hi] with lo <= hi")
        p_range = (raw[0], raw[1])

    def _positive_int(key, default, minimum=1):
        v = data.get(key, default)
        if not isinstance(v, int) or isinstance(v, bool) or v < minimum:
            raise ValueError(f"{key} must be an int >= {minimum}, got {v!r}")
        return v

    rule_raw = data.get("set_size_rule", {"fraction": 0.5})
    if (not isinstance(rule_raw, dict) or len(rule_raw) != 1
            or next(iter(rule_raw)) not in ("fixed", "fraction")):
        raise ValueError('set_size_rule must be {"fixed": k} or {"fraction": f}')
    kind, value = next(iter(rule_raw.items()))
    if kind == "fixed":
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ValueError("fixed set size must be an int >= 1")
    else:
        if not isinstance(value, (int, float)) or not 0 < value <= 1:
            raise ValueError("fraction must satisfy 0 < f <= 1")

    master_seed = data.get("master_seed", 0)
    if not isinstance(master_seed, int) or isinstance(master_seed, bool) \
            or not 0 <= master_seed < 1 << 64:
        raise ValueError("master_seed must be an int in [0, 2^64)")

    return SweepConfig(
        mode=mode,
        p_list=p_list,
        p_range=p_range,
        curves_per_p=_positive_int("curves_per_p", 1),
        sets_per_curve=_positive_int("sets_per_curve", 1),
        set_size_rule=(kind, float(value)),
        nu=_positive_int("nu", 1),
        master_seed=master_seed,
        enumeration_cap=_positive_int("enumeration_cap", ENUMERATION_CAP, minimum=5),
        scan_cap=_positive_int("scan_cap", SCAN_CAP, minimum=5),
    )


def load_config(path) -> SweepConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(json.load(fh))


@dataclass(frozen=True)
class ExperimentRecord:
    """One flat output row. Field order is the wire format: the CSV header
    matches these names exactly, and JSON objects carry the same keys.
    Fields that a mode does not produce stay None (empty in CSV)."""

    experiment_id: int
    p: int
    a4: int | None = None
    a6: int | None = None
    N: int | None = None
    t: int | None = None
    T: int | None = None
    Px: int | None = None
    Py: int | None = None
    nu: int | None = None
    sizeA: int | None = None
    sizeB: int | None = None
    sizeS: int | None = None
    sizeT: int | None = None
    sizeH: int | None = None
    J: int | None = None
    J_lower: int | None = None
    Delta: float | None = None
    thm_lhs: float | None = None
    thm_rhs: float | None = None
    ratio: float | None = None
    seed: int | None = None
    H: int | None = None
    predicted_sizeA: float | None = None
    sizeA_over_predicted: float | None = None
    error: str = ""


RECORD_FIELDS = tuple(f.name for f in fields(ExperimentRecord))


def _instance_columns(curve, summary, table) -> dict:
    return {
        "a4": curve.a4, "a6": curve.a6,
        "N": summary.n_points, "t": summary.trace,
        "T": table.order, "Px": table.px, "Py": table.py,
    }


def _run_experiment(config: SweepConfig, exp_id: int, seed: int,
                    curve, summary, table) -> ExperimentRecord:
    base = dict(experiment_id=exp_id, p=curve.p, seed=seed, nu=config.nu,
                **_instance_columns(curve, summary, table))
    phi = euler_phi(table.order)
    k = config.set_size(phi)

    if config.mode == "theorem2":
        a_set = sample_unit_subset(table.order, k, derive_seed(seed, 1))
        b_set = sample_unit_subset(table.order, k, derive_seed(seed, 2))
        rep = sum_product_report(table, a_set, b_set)
        return ExperimentRecord(
            **base,
            sizeA=rep.size_a, sizeB=rep.size_b, sizeS=rep.size_s,
            sizeT=rep.size_t, sizeH=rep.size_h,
            J=rep.solutions, J_lower=rep.solutions_lower, Delta=rep.delta,
            thm_lhs=float(rep.lhs), thm_rhs=rep.rhs, ratio=rep.ratio,
        )

    if config.mode == "theorem1":
        k_set = sample_unit_subset(table.order, k, derive_seed(seed, 1))
        m_set = sample_unit_subset(table.order, k, derive_seed(seed, 2))
        rep = bilinear_ratio_scan(table, k_set, m_set, config.nu, cap=config.scan_cap)
        return ExperimentRecord(
            **base,
            sizeA=len(k_set), sizeB=len(m_set),
            thm_lhs=rep.value, thm_rhs=rep.rhs, ratio=rep.ratio,
        )

    if config.mode == "theorem3":
        rep = extremal_report(table)
        thm_rhs = math.sqrt(curve.p * rep.size_a) if rep.size_a else None
        return ExperimentRecord(
            **base,
            sizeA=rep.size_a, sizeB=rep.size_a, sizeS=rep.size_s, sizeT=rep.size_t,
            thm_lhs=float(max(rep.size_s, rep.size_t)), thm_rhs=thm_rhs,
            ratio=rep.ratio, H=rep.h_window,
            predicted_sizeA=rep.predicted_size_a,
            sizeA_over_predicted=(rep.size_a / rep.predicted_size_a
                                  if rep.predicted_size_a > 0 else None),
            error="" if rep.size_a else "EmptyConstruction",
        )

    # identities mode
    checks = run_identity_suite(table, summary.n_points, seed)
    failed = [c.name for c in checks if not c.ok]
    return ExperimentRecord(
        **base,
        error="IdentityViolation:" + ",".join(failed) if failed else "",
    )


def run_sweep(config: SweepConfig) -> list[ExperimentRecord]:
    """Run every (p, curve, set-sample) cell; never aborts on a cell error.

    Records come back sorted by experiment_id (ids are assigned in p-list
    x curve x set order). A cell that raises a package error contributes
    a record whose error column names the exception class.
    """
    records = []
    exp_id = 0
    for p in config.primes():
        for c_idx in range(config.curves_per_p):
            curve = summary = table = None
            prep_error = ""
            try:
                rng = SplitMix64(derive_seed(config.master_seed, p, c_idx))
                curve, summary = random_curve(p, rng, require_ordinary=True,
                                              cap=config.enumeration_cap)
                _, points = enumerate_points(curve, cap=config.enumeration_cap)
                point, order = max_order_point(curve, points, summary.n_points, rng)
                table = build_orbit(curve, point, order)
            except EcsumprodError as exc:
                prep_error = type(exc).__name__
            for _ in range(config.sets_per_curve):
                seed = derive_seed(config.master_seed, exp_id)
                if prep_error:
                    rec = ExperimentRecord(experiment_id=exp_id, p=p, seed=seed,
                                           nu=config.nu, error=prep_error)
                else:
                    try:
                        rec = _run_experiment(config, exp_id, seed, curve, summary, table)
                    except EcsumprodError as exc:
                        rec = ExperimentRecord(
                            experiment_id=exp_id, p=p, seed=seed, nu=config.nu,
                            **_instance_columns(curve, summary, table),
                            error=type(exc).__name__,
                        )
                records.append(rec)
                exp_id += 1
    return records


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".17g")  # 17 significant digits round-trip doubles
    return str(value)


def render_csv(records, field_names=RECORD_FIELDS) -> str:
    """CSV text: exact header, \\n line ends, floats at 17 significant digits."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(field_names)
    for rec in records:
        row = rec if isinstance(rec, dict) else asdict(rec)
        writer.writerow([_csv_cell(row[name]) for name in field_names])
    return buf.getvalue()


def render_json(records, field_names=RECORD_FIELDS) -> str:
    """JSON array of flat objects; floats serialize via repr and round-trip."""
    rows = []
    for rec in records:
        row = rec if isinstance(rec, dict) else asdict(rec)
        rows.append({name: row[name] for name in field_names})
    return json.dumps(rows, indent=2) + "\n"


def records_from_json(text: str) -> list[ExperimentRecord]:
    """Inverse of render_json for ExperimentRecord rows."""
    return [ExperimentRecord(**row) for row in json.loads(text)]


def emit(records, fmt: str, out=None, field_names=RECORD_FIELDS) -> str:
    """Serialize records ('csv' or 'json') and write them to out.

    out may be None / '-' for stdout, a path, or a file-like object.
    Returns the rendered text either way.
    """
    if fmt == "csv":
        text = render_csv(records, field_names)
    elif fmt == "json":
        text = render_json(records, field_names)
    else:
        raise ValueError(f"format must be csv or json, got {fmt!r}")
    if out is None or out == "-":
        sys.stdout.write(text)
    elif hasattr(out, "write"):
        out.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return text
