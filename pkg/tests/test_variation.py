import pytest

from conftest import complete_graph, cycle_graph, path_graph, star_graph
from lapmatch.errors import DomainError
from lapmatch.graphs import Graph, write_graph6
from lapmatch.variation import (
    applicable_obstructions,
    detect_one_place,
    detect_two_place,
    scan_graph,
    scan_record,
    summarize_scan,
    variation_report,
)


class TestDetectors:
    def test_one_place_p3(self):
        assert detect_one_place(path_graph(3), (0, 2)) is False

    def test_one_place_c4(self):
        assert detect_one_place(cycle_graph(4), (0, 2)) is False

    def test_two_place_p3(self):
        assert detect_two_place(path_graph(3), (0, 2)) is False

    def test_two_place_star_leaves(self):
        assert detect_two_place(star_graph(4), (1, 2)) is False

    def test_two_place_c5_chord(self):
        g = cycle_graph(5)
        assert detect_two_place(g, (0, 2)) is False
        tags = [o.tag for o in applicable_obstructions(g, (0, 2))]
        assert "GIRTH_RATIO_7_6" in tags

    def test_rejects_existing_edge(self):
        with pytest.raises(DomainError):
            detect_one_place(cycle_graph(4), (0, 1))

    def test_rejects_disconnected(self):
        g = Graph(4, [(0, 1), (2, 3)])
        with pytest.raises(DomainError):
            detect_two_place(g, (0, 2))


class TestObstructions:
    def test_tree(self):
        tags = [o.tag for o in applicable_obstructions(path_graph(4), (0, 3))]
        assert tags == ["TREE", "DEGSUM_LE_3"]

    def test_c6_long_diagonal(self):
        tags = [o.tag for o in applicable_obstructions(cycle_graph(6), (0, 3))]
        assert tags == ["BOTH_DEG_2", "GIRTH_RATIO_7_6"]

    def test_k4_minus_edge(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
        tags = [o.tag for o in applicable_obstructions(g, (1, 3))]
        assert tags == ["BOTH_DEG_2", "GIRTH_RATIO_7_6"]

    def test_pendant_on_triangle(self):
        g = Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
        tags = {o.tag for o in applicable_obstructions(g, (0, 3))}
        assert "DEG1_GIRTH_RATIO" in tags and "GIRTH_RATIO_7_6" in tags

    def test_ratio_borderline_excluded(self):
        # girth 3 with cycle dimension 3: 6*3 <= 7*3, so the 7/6 tag must not fire
        g = complete_graph(4)
        extended = Graph(5, list(g.edges) + [(0, 4)])
        tags = {o.tag for o in applicable_obstructions(extended, (3, 4))}
        assert "GIRTH_RATIO_7_6" not in tags


class TestReport:
    def test_p3_to_c3(self):
        report = variation_report(path_graph(3), (0, 2))
        assert report.sum_increment == 2 and report.interlacing_ok
        assert report.deltas == ("1.0", "0.732050808", "0.267949192")
        assert report.near_miss == "0.267949192"
        assert not report.one_place and not report.two_place

    def test_c4_diagonal(self):
        report = variation_report(cycle_graph(4), (0, 2))
        assert report.sum_increment == 2
        assert not report.one_place and not report.two_place

    def test_star_leaf_edge_interlaces(self):
        report = variation_report(star_graph(4), (1, 2))
        assert report.interlacing_ok

    def test_json_shape(self):
        d = variation_report(path_graph(3), (0, 2)).to_json_dict()
        assert set(d) == {
            "graph", "edge", "degrees", "deltas", "interlacing_ok",
            "sum_increment", "one_place", "two_place", "obstructions", "near_miss",
        }


class TestScan:
    def test_scan_graph_order(self):
        g = cycle_graph(6)
        reports = scan_graph(g)
        assert [r.edge for r in reports] == g.non_edges()

    def test_scan_record_parse_error(self):
        rec = scan_record(7, "!!!")
        assert rec["notice"].startswith("parse error") and rec["reports"] == []

    def test_scan_record_disconnected(self):
        g6 = write_graph6(Graph(4, [(0, 1), (2, 3)]))
        rec = scan_record(1, g6)
        assert rec["notice"] == "skipped: not connected"

    def test_summary_counts(self):
        records = [scan_record(1, write_graph6(cycle_graph(5)))]
        summary = summarize_scan(records)
        assert summary["graphs"] == 1 and summary["pairs"] == 5
        assert summary["one_place"] == 0 and summary["two_place"] == 0
        assert summary["obstructed_false"] == 5 and summary["unobstructed_false"] == 0
        assert summary["min_near_miss"] is not None

    def test_empty_summary(self):
        summary = summarize_scan([])
        assert summary["graphs"] == 0 and summary["pairs"] == 0
        assert summary["min_near_miss"] is None

    def test_all_connected_n4(self, atlas):
        records = []
        for k, g in enumerate(g for g in atlas if g.n == 4):
            records.append(scan_record(k + 1, write_graph6(g)))
        summary = summarize_scan(records)
        assert summary["graphs"] == 6
        assert summary["one_place"] == 0 and summary["two_place"] == 0
