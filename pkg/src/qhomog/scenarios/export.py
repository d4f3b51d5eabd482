"""
CSV / JSON export.

Usage series (figure4, sweep) use the columns in ``USAGE_COLUMNS``.
Figure-3 collision traces get their own per-collision table,
``TRACE_COLUMNS``. All reals are written with 12 significant digits.
"""

import csv
import json
import math
import os

from qhomog.constructor import DELTA_CAP
from qhomog.homogeniser import CollisionTrace

USAGE_COLUMNS = ("scenario_id", "direction", "mode", "eta", "N", "gamma",
                 "n", "epsilon", "steadiness", "delta", "overflow_flag")
TRACE_COLUMNS = ("scenario_id", "direction", "eta", "N", "gamma", "k", "rho00", "rho11", "epsilon")


def fmt(x):
    return f"{float(x):.12g}"


def cap_delta(delta):
    """(value written, overflow flag)."""
    if math.isnan(delta) or delta > DELTA_CAP:
        return DELTA_CAP, True
    return delta, False


def usage_rows(result):
    for cfg, series in result.records:
        for n, eps, s, d in zip(series.n, series.epsilon, series.steadiness, series.delta):
            d, overflow = cap_delta(d)
            yield {
                "scenario_id": cfg.scenario_id, "direction": cfg.direction, "mode": cfg.mode,
                "eta": fmt(cfg.eta), "N": str(cfg.N), "gamma": fmt(cfg.gamma), "n": str(n),
                "epsilon": fmt(eps), "steadiness": fmt(s), "delta": fmt(d),
                "overflow_flag": "true" if overflow else "false",
            }


def trace_rows(result):
    for cfg, trace in result.records:
        pops = trace.populations()
        for k, (p, eps) in enumerate(zip(pops, trace.errors)):
            yield {
                "scenario_id": f"{cfg.direction}_eta{cfg.eta:.12g}_N{cfg.N}_g{cfg.gamma:.12g}",
                "direction": cfg.direction, "eta": fmt(cfg.eta), "N": str(cfg.N),
                "gamma": fmt(cfg.gamma), "k": str(k),
                "rho00": fmt(p[0]), "rho11": fmt(p[1]), "epsilon": fmt(eps),
            }


def is_trace_result(result):
    return bool(result.records) and isinstance(result.records[0][1], CollisionTrace)


def table(result):
    if is_trace_result(result):
        return TRACE_COLUMNS, list(trace_rows(result))
    return USAGE_COLUMNS, list(usage_rows(result))


def _typed(column, value):
    if column in ("N", "n", "k"):
        return int(value)
    if column == "overflow_flag":
        return value == "true"
    if column in ("scenario_id", "direction", "mode"):
        return value
    return float(value)


def write_csv(result, path):
    columns, rows = table(result)
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return path


def write_json(result, path):
    columns, rows = table(result)
    doc = {
        "metadata": dict(result.metadata, columns=list(columns)),
        "rows": [{c: _typed(c, row[c]) for c in columns} for row in rows],
    }
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")
    return path


def export(result, out_dir, fmt_name="csv"):
    """Write ``<kind>.<fmt>`` into ``out_dir``; returns the list of paths written."""
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"{result.kind}.{fmt_name}")
    if fmt_name == "csv":
        return [write_csv(result, path)]
    if fmt_name == "json":
        return [write_json(result, path)]
    raise ValueError(f"unknown export format {fmt_name!r}")


def read_csv(path):
    """Parse an exported CSV back into typed row dicts."""
    with open(path, newline="") as fh:
        return [{c: _typed(c, v) for c, v in row.items()} for row in csv.DictReader(fh)]


def read_json(path):
    with open(path) as fh:
        return json.load(fh)
