import re
import xml.etree.ElementTree as ET
from datetime import datetime, timezone

import numpy as np
import pytest

from lineuplab import (
    BoxplotStats,
    build_lineup,
    boxplot_stats,
    common_scales,
    render_lineup,
    render_panel,
    spec_for_kind,
)
from lineuplab.errors import KindMismatch
from lineuplab.lineup import PanelData
from lineuplab.render import PanelGeom, Scales
from lineuplab.diagnostics import ScatterPoints

from helpers import grouped_dataset, make_grouped, normal_dataset

WHEN = datetime(2026, 8, 24, 12, 0, 0, tzinfo=timezone.utc)


def _scatter_panel(x, y, number=1):
    return PanelData("scatter_residual", ScatterPoints(np.asarray(x, float), np.asarray(y, float)), number)


class TestCommonScales:
    def test_union_then_pad(self):
        panels = [
            _scatter_panel([0.0, 1.0], [0.0, 1.0], 1),
            _scatter_panel([0.0, 1.0], [-1.0, 2.0], 2),
        ]
        s = common_scales(panels)
        assert s.y == pytest.approx((-1.15, 2.15), abs=1e-12)

    def test_constant_axis_expands_to_unit(self):
        panels = [_scatter_panel([1.0, 2.0], [3.0, 3.0], 1)]
        s = common_scales(panels)
        assert s.y == (2.0, 4.0)

    def test_permutation_invariant(self):
        a = _scatter_panel([0.0, 5.0], [1.0, 2.0], 1)
        b = _scatter_panel([-2.0, 3.0], [0.0, 9.0], 2)
        assert common_scales([a, b]) == common_scales([b, a])

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            common_scales([])

    def test_mixed_kinds_rejected(self):
        ds = make_grouped({"a": [1.0, 2.0, 3.0], "b": [2.0, 3.0, 4.0]})
        box = PanelData("boxplot", boxplot_stats(ds, "y", "grp"), 1)
        with pytest.raises(KindMismatch):
            common_scales([box, _scatter_panel([0.0], [0.0], 2)])

    def test_boxplot_extent_covers_outliers(self):
        ds = make_grouped({"a": [1.0, 2.0, 3.0, 4.0, 100.0]})
        box = PanelData("boxplot", boxplot_stats(ds, "y", "grp"), 1)
        s = common_scales([box])
        assert s.y[1] > 100.0


class TestRenderPanel:
    def test_boxplot_marks_at_data_positions(self):
        ds = make_grouped({"a": [1.0, 2.0, 3.0, 4.0, 5.0]})
        stats = boxplot_stats(ds, "y", "grp")
        panel = PanelData("boxplot", stats, 1)
        # identity-friendly scales: y in [0,6] over a 60px-high panel
        s = Scales((0.5, 1.5), (0.0, 6.0))
        geom = PanelGeom(100.0, 60.0)
        svg = render_panel(panel, s, geom)

        def ypx(v):
            return 60.0 - v / 6.0 * 60.0

        rect = re.search(r'<rect x="[\d.]+" y="([\d.]+)" width="[\d.]+" height="([\d.]+)"', svg)
        assert float(rect.group(1)) == pytest.approx(ypx(4.0), abs=0.01)
        assert float(rect.group(2)) == pytest.approx(ypx(2.0) - ypx(4.0), abs=0.01)
        assert f'y1="{ypx(3.0):.2f}"' in svg  # median line
        accent = re.search(r'cy="([\d.]+)" r="2.50" fill="#d95f02"', svg)
        assert float(accent.group(1)) == pytest.approx(ypx(3.0), abs=0.01)

    def test_no_outliers_no_extra_circles(self):
        ds = make_grouped({"a": [1.0, 2.0, 3.0, 4.0, 5.0]})
        panel = PanelData("boxplot", boxplot_stats(ds, "y", "grp"), 1)
        svg = render_panel(panel, Scales((0.5, 1.5), (0.0, 6.0)), PanelGeom(100.0, 60.0))
        assert svg.count("<circle") == 1  # just the mean dot

    def test_byte_identical_re_render(self):
        panel = _scatter_panel([0.0, 1.0, 2.0], [0.5, -0.5, 0.25], 1)
        s = Scales((-0.1, 2.1), (-0.6, 0.6))
        geom = PanelGeom(120.0, 90.0)
        assert render_panel(panel, s, geom) == render_panel(panel, s, geom)

    def test_zero_line_present_when_zero_in_range(self):
        panel = _scatter_panel([0.0, 1.0], [-1.0, 1.0], 1)
        svg = render_panel(panel, Scales((0.0, 1.0), (-1.0, 1.0)), PanelGeom(100.0, 100.0))
        assert 'stroke="#999999"' in svg

    def test_zero_line_absent_when_zero_outside(self):
        panel = _scatter_panel([0.0, 1.0], [1.0, 2.0], 1)
        svg = render_panel(panel, Scales((0.0, 1.0), (0.5, 2.5)), PanelGeom(100.0, 100.0))
        assert 'stroke="#999999"' not in svg

    def test_two_decimal_formatting_only(self):
        panel = _scatter_panel([1.0 / 3.0, 2.0 / 3.0], [1.0 / 7.0, 2.0 / 7.0], 1)
        svg = render_panel(panel, Scales((0.0, 1.0), (0.0, 1.0)), PanelGeom(100.0, 100.0))
        for value in re.findall(r'(?:cx|cy|x1|x2|y1|y2)="(-?\d+\.\d+)"', svg):
            assert re.fullmatch(r"-?\d+\.\d\d", value)


class TestRenderLineup:
    def _bundle(self, m=20, seed=42):
        return build_lineup(
            grouped_dataset(10),
            spec_for_kind("boxplot", response="score", group="motivation", m=m, seed=seed),
            created=WHEN,
        )

    def test_well_formed_and_panel_count(self):
        svg = render_lineup(self._bundle())
        root = ET.fromstring(svg)
        assert root.tag.endswith("svg")
        assert svg.count('class="panel"') == 20

    def test_row_major_order(self):
        svg = render_lineup(self._bundle(), cols=5)
        # panel 1 top-left, panel 20 bottom-right
        pos = {}
        for match in re.finditer(
            r'id="panel-(\d+)" transform="translate\(([\d.]+), ([\d.]+)\)"', svg
        ):
            pos[int(match.group(1))] = (float(match.group(3)), float(match.group(2)))
        assert len(pos) == 20
        assert pos[1] == min(pos.values())
        assert pos[20] == max(pos.values())
        assert pos[5][0] == pos[1][0]  # same row
        assert pos[6][0] > pos[5][0]  # next row

    def test_byte_determinism(self):
        b1 = self._bundle()
        b2 = self._bundle()
        assert render_lineup(b1) == render_lineup(b2)

    def test_no_leakage(self):
        bundle = self._bundle()
        svg = render_lineup(bundle)
        assert "observed" not in svg
        assert "data_panel" not in svg
        assert bundle.key.digest not in svg
        assert "seed" not in svg

    def test_coordinates_inside_viewport(self):
        svg = render_lineup(self._bundle(m=6))
        width = float(re.search(r'viewBox="0 0 ([\d.]+) ([\d.]+)"', svg).group(1))
        height = float(re.search(r'viewBox="0 0 ([\d.]+) ([\d.]+)"', svg).group(2))
        bound = max(width, height)
        for value in re.findall(r'(?:x|y|cx|cy|x1|x2|y1|y2|width|height|r)="(-?[\d.]+)"', svg):
            assert -0.01 <= float(value) <= bound + 0.01

    def test_panel_titles_one_to_m(self):
        svg = render_lineup(self._bundle(m=7))
        titles = re.findall(r"<text[^>]*>(\d+)</text>", svg)
        assert [int(t) for t in titles] == list(range(1, 8))

    def test_nonstandard_cols(self):
        svg = render_lineup(self._bundle(m=6), cols=3)
        pos = {
            int(match.group(1)): (float(match.group(2)), float(match.group(3)))
            for match in re.finditer(
                r'id="panel-(\d+)" transform="translate\(([\d.]+), ([\d.]+)\)"', svg
            )
        }
        assert pos[4][0] == pos[1][0]  # second row starts under the first column
        assert pos[4][1] > pos[1][1]

    def test_qq_identity_line(self):
        bundle = build_lineup(
            normal_dataset(25),
            spec_for_kind("qq", response="v", m=4, seed=1),
            created=WHEN,
        )
        svg = render_lineup(bundle)
        assert 'stroke="#999999"' in svg
