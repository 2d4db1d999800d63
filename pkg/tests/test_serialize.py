import json
from datetime import datetime, timezone

import numpy as np
import pytest

from lineuplab import build_lineup, simulate_demo_logistic, spec_for_kind
from lineuplab.errors import SchemaError
from lineuplab.serialize import (
    bundle_from_json,
    bundle_to_json,
    key_from_json,
    key_to_json,
    spec_from_doc,
    spec_to_doc,
)

from helpers import grouped_dataset, linear_dataset, normal_dataset

WHEN = datetime(2026, 8, 24, 12, 0, 0, tzinfo=timezone.utc)


def _bundles():
    yield build_lineup(
        grouped_dataset(8),
        spec_for_kind("boxplot", response="score", group="motivation", m=4, seed=1),
        created=WHEN,
    )
    yield build_lineup(
        linear_dataset(30),
        spec_for_kind("scatter_residual", response="y", predictor="x", m=4, seed=2),
        created=WHEN,
    )
    demo = simulate_demo_logistic(60, (0.1, 0.7, 0.0), (-2.0, 2.0), 3)
    yield build_lineup(
        demo,
        spec_for_kind("binned_residual", response="y", predictor="x", m=4, seed=3),
        created=WHEN,
    )
    yield build_lineup(
        demo,
        spec_for_kind("empirical_logit", response="y", predictor="x", g=5, m=4, seed=4),
        created=WHEN,
    )
    yield build_lineup(
        normal_dataset(20),
        spec_for_kind("qq", response="v", m=4, seed=5),
        created=WHEN,
    )


class TestBundleRoundTrip:
    def test_all_kinds(self):
        for bundle in _bundles():
            text = bundle_to_json(bundle)
            again = bundle_from_json(text)
            assert again.spec == bundle.spec
            assert again.created == bundle.created
            assert len(again.panels) == len(bundle.panels)
            assert bundle_to_json(again) == text

    def test_serialization_deterministic(self):
        bundle = next(_bundles())
        assert bundle_to_json(bundle) == bundle_to_json(bundle)

    def test_created_rfc3339(self):
        bundle = next(_bundles())
        doc = json.loads(bundle_to_json(bundle))
        parsed = datetime.fromisoformat(doc["created"])
        assert parsed == WHEN
        assert "T" in doc["created"]

    def test_field_order_pinned(self):
        doc_text = bundle_to_json(next(_bundles()))
        doc = json.loads(doc_text)
        assert list(doc.keys()) == ["format", "created", "spec", "panels"]
        assert list(doc["spec"].keys()) == [
            "plot_kind",
            "m",
            "seed",
            "rorschach",
            "claim",
            "model_params",
            "null_method",
        ]
        assert list(doc["panels"][0].keys()) == ["panel", "kind", "payload"]

    def test_no_key_material_in_bundle(self):
        for bundle in _bundles():
            text = bundle_to_json(bundle)
            assert bundle.key.digest not in text
            assert "data_panel" not in text
            assert "digest" not in text
            assert "admin" not in text

    def test_panel_schema_identical_for_observed_and_null(self):
        # byte-diff of payload schemas: key sets and value types match
        for bundle in _bundles():
            doc = json.loads(bundle_to_json(bundle))
            shapes = {json.dumps(_shape(p["payload"])) for p in doc["panels"]}
            assert len(shapes) == 1


def _shape(obj):
    if isinstance(obj, dict):
        return {k: _shape(v) for k, v in sorted(obj.items())}
    if isinstance(obj, list):
        # length varies with the data (outlier lists may be empty), so a
        # list of scalars collapses to one token
        if obj and isinstance(obj[0], dict):
            return [_shape(obj[0])]
        return "leaf[]"
    return type(obj).__name__


class TestKeyRoundTrip:
    def test_round_trip(self):
        bundle = next(_bundles())
        text = key_to_json(bundle.key)
        key = key_from_json(text)
        assert key == bundle.key

    def test_rorschach_key(self):
        bundle = build_lineup(
            normal_dataset(20),
            spec_for_kind("qq", response="v", m=4, seed=5, rorschach=True),
            created=WHEN,
        )
        key = key_from_json(key_to_json(bundle.key))
        assert key.data_panel is None

    def test_format_tag_checked(self):
        with pytest.raises(SchemaError):
            key_from_json('{"format": "other/1"}')
        with pytest.raises(SchemaError):
            bundle_from_json('{"format": "other/1"}')

    def test_invalid_json(self):
        with pytest.raises(SchemaError):
            key_from_json("{nope")
        with pytest.raises(SchemaError):
            bundle_from_json("{nope")


class TestSpecDoc:
    def test_round_trip_every_kind(self):
        for bundle in _bundles():
            doc = spec_to_doc(bundle.spec)
            assert spec_from_doc(doc) == bundle.spec

    def test_unknown_null_method(self):
        with pytest.raises(SchemaError):
            spec_from_doc(
                {
                    "plot_kind": "qq",
                    "model_params": {"response": "v"},
                    "null_method": {"kind": "witchcraft"},
                }
            )

    def test_missing_fields(self):
        with pytest.raises(SchemaError):
            spec_from_doc({"plot_kind": "qq"})
