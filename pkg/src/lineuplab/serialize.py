"""JSON documents for lineup bundles and answer keys.

The bundle document carries the spec, panel payloads, and creation time,
and never any key material. The key travels in its own document. Field
order is pinned so a fixed bundle serializes to identical bytes.
"""

from __future__ import annotations

import json
from datetime import datetime

import numpy as np

from .diagnostics import (
    BinnedResidualPoints,
    BinPoint,
    BoxplotStats,
    EmpiricalLogitPoints,
    GroupBox,
    LogitPoint,
    QQPoints,
    ScatterPoints,
)
from .errors import SchemaError
from .lineup import AnswerKey, LineupBundle, LineupSpec, ModelParams, PanelData
from .nullgen import (
    NullMethod,
    ParametricBootstrapLM,
    PermuteGroups,
    SimulateLogistic,
    SimulateNormal,
)

BUNDLE_FORMAT = "lineup-bundle/1"
KEY_FORMAT = "lineup-key/1"


def _null_method_doc(nm: NullMethod) -> dict:
    if isinstance(nm, PermuteGroups):
        return {"kind": "permute_groups", "response": nm.response, "group": nm.group}
    if isinstance(nm, ParametricBootstrapLM):
        return {"kind": "parametric_bootstrap_lm", "response": nm.response, "predictor": nm.predictor}
    if isinstance(nm, SimulateLogistic):
        return {
            "kind": "simulate_logistic",
            "response": nm.response,
            "predictor": nm.predictor,
            "degree": nm.degree,
        }
    return {"kind": "simulate_normal", "column": nm.column}


def _null_method_from_doc(doc: dict) -> NullMethod:
    kind = doc.get("kind")
    if kind == "permute_groups":
        return PermuteGroups(doc["response"], doc["group"])
    if kind == "parametric_bootstrap_lm":
        return ParametricBootstrapLM(doc["response"], doc["predictor"])
    if kind == "simulate_logistic":
        return SimulateLogistic(doc["response"], doc["predictor"], doc["degree"])
    if kind == "simulate_normal":
        return SimulateNormal(doc["column"])
    raise SchemaError(f"unknown null method kind {kind!r}")


def _payload_doc(payload) -> dict:
    if isinstance(payload, BoxplotStats):
        return {
            "groups": [
                {
                    "level": g.level,
                    "q1": g.q1,
                    "median": g.median,
                    "q3": g.q3,
                    "whisker_lo": g.whisker_lo,
                    "whisker_hi": g.whisker_hi,
                    "outliers": list(g.outliers),
                    "mean": g.mean,
                }
                for g in payload.groups
            ]
        }
    if isinstance(payload, ScatterPoints):
        return {"x": payload.x.tolist(), "y": payload.y.tolist()}
    if isinstance(payload, BinnedResidualPoints):
        return {
            "n_bins": payload.n_bins,
            "points": [
                {"bin_center": p.bin_center, "mean_residual": p.mean_residual, "bin_count": p.bin_count}
                for p in payload.points
            ],
        }
    if isinstance(payload, EmpiricalLogitPoints):
        return {
            "g": payload.g,
            "points": [
                {"mean_x": p.mean_x, "adj_logit": p.adj_logit, "successes": p.successes, "cases": p.cases}
                for p in payload.points
            ],
        }
    if isinstance(payload, QQPoints):
        return {"theoretical": payload.theoretical.tolist(), "sample": payload.sample.tolist()}
    raise SchemaError(f"cannot serialize payload of type {type(payload).__name__}")


def _payload_from_doc(kind: str, doc: dict):
    if kind == "boxplot":
        return BoxplotStats(
            tuple(
                GroupBox(
                    level=g["level"],
                    q1=g["q1"],
                    median=g["median"],
                    q3=g["q3"],
                    whisker_lo=g["whisker_lo"],
                    whisker_hi=g["whisker_hi"],
                    outliers=tuple(g["outliers"]),
                    mean=g["mean"],
                )
                for g in doc["groups"]
            )
        )
    if kind == "scatter_residual":
        return ScatterPoints(np.asarray(doc["x"], dtype=np.float64), np.asarray(doc["y"], dtype=np.float64))
    if kind == "binned_residual":
        return BinnedResidualPoints(
            tuple(BinPoint(p["bin_center"], p["mean_residual"], p["bin_count"]) for p in doc["points"]),
            doc["n_bins"],
        )
    if kind == "empirical_logit":
        return EmpiricalLogitPoints(
            tuple(LogitPoint(p["mean_x"], p["adj_logit"], p["successes"], p["cases"]) for p in doc["points"]),
            doc["g"],
        )
    if kind == "qq":
        return QQPoints(
            np.asarray(doc["theoretical"], dtype=np.float64),
            np.asarray(doc["sample"], dtype=np.float64),
        )
    raise SchemaError(f"unknown panel kind {kind!r}")


def spec_to_doc(spec: LineupSpec) -> dict:
    mp = spec.model_params
    return {
        "plot_kind": spec.plot_kind,
        "m": spec.m,
        "seed": spec.seed,
        "rorschach": spec.rorschach,
        "claim": spec.claim,
        "model_params": {
            "response": mp.response,
            "predictor": mp.predictor,
            "group": mp.group,
            "degree": mp.degree,
            "g": mp.g,
            "n_bins": mp.n_bins,
            "axis": mp.axis,
        },
        "null_method": _null_method_doc(spec.null_method),
    }


def spec_from_doc(doc: dict) -> LineupSpec:
    try:
        mp_doc = doc["model_params"]
        mp = ModelParams(
            response=mp_doc.get("response"),
            predictor=mp_doc.get("predictor"),
            group=mp_doc.get("group"),
            degree=mp_doc.get("degree", 1),
            g=mp_doc.get("g", 5),
            n_bins=mp_doc.get("n_bins"),
            axis=mp_doc.get("axis", "fitted"),
        )
        return LineupSpec(
            plot_kind=doc["plot_kind"],
            null_method=_null_method_from_doc(doc["null_method"]),
            model_params=mp,
            m=doc.get("m", 20),
            seed=doc.get("seed", 0),
            rorschach=doc.get("rorschach", False),
            claim=doc.get("claim"),
        )
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed spec document: {exc}") from exc


def bundle_to_json(bundle: LineupBundle) -> str:
    doc = {
        "format": BUNDLE_FORMAT,
        "created": bundle.created.isoformat(),
        "spec": spec_to_doc(bundle.spec),
        "panels": [
            {"panel": p.panel_number, "kind": p.kind, "payload": _payload_doc(p.payload)}
            for p in bundle.panels
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def bundle_from_json(text: str) -> LineupBundle:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    if doc.get("format") != BUNDLE_FORMAT:
        raise SchemaError(f"unexpected bundle format {doc.get('format')!r}")
    try:
        spec = spec_from_doc(doc["spec"])
        panels = tuple(
            PanelData(p["kind"], _payload_from_doc(p["kind"], p["payload"]), p["panel"])
            for p in doc["panels"]
        )
        created = datetime.fromisoformat(doc["created"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed bundle document: {exc}") from exc
    # The answer key is not part of the document; rebuild the public half
    # as an empty digest so reveal() must go through a real key file.
    key = AnswerKey(spec.seed, None, "")
    return LineupBundle(spec, panels, key, created)


def key_to_json(key: AnswerKey) -> str:
    doc = {
        "format": KEY_FORMAT,
        "seed": key.seed,
        "data_panel": key.data_panel,
        "digest": key.digest,
    }
    return json.dumps(doc, indent=2) + "\n"


def key_from_json(text: str) -> AnswerKey:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    if doc.get("format") != KEY_FORMAT:
        raise SchemaError(f"unexpected key format {doc.get('format')!r}")
    try:
        return AnswerKey(doc["seed"], doc["data_panel"], doc["digest"])
    except KeyError as exc:
        raise SchemaError(f"malformed key document: {exc}") from exc
