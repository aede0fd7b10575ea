import pytest

from khovlap import (
    EmptyDiagramError,
    LinkDiagram,
    PDSyntaxError,
    mirror_diagram,
    parse_knot_table,
    parse_pd,
    r1_twist,
    serialize_pd,
)
from khovlap.errors import DiagramError, UnknownEdgeError

from conftest import FIGURE_EIGHT, TREFOIL


class TestParsing:
    def test_roundtrip(self):
        d = parse_pd(TREFOIL)
        assert serialize_pd(d) == TREFOIL
        assert parse_pd(serialize_pd(d)) == d

    def test_comments_and_separators(self):
        text = "X[1,4,2,5], X[3,6,4,1]  # trailing comment\nX[5,2,6,3]"
        assert serialize_pd(parse_pd(text)) == TREFOIL

    def test_whitespace_inside_brackets(self):
        assert parse_pd("X[ 1 , 2 ,2, 1 ]").n == 1

    def test_syntax_error_reports_offset(self):
        with pytest.raises(PDSyntaxError) as exc:
            parse_pd("X[1,4,2,5] Y[3,6,4,1]")
        assert exc.value.offset == 11

    def test_zero_label_rejected(self):
        with pytest.raises(PDSyntaxError):
            parse_pd("X[0,1,1,2]")

    def test_empty_input(self):
        with pytest.raises(EmptyDiagramError):
            parse_pd("   # only a comment\n")

    def test_label_gap_rejected(self):
        with pytest.raises(DiagramError):
            parse_pd("X[1,4,2,7] X[3,6,4,1] X[7,2,6,3]")

    def test_duplicate_labels_rejected(self):
        with pytest.raises(DiagramError):
            parse_pd("X[1,1,1,1]")


class TestDiagram:
    def test_trefoil_is_all_positive(self, trefoil):
        assert trefoil.signs == (1, 1, 1)
        assert (trefoil.n_plus, trefoil.n_minus) == (3, 0)

    def test_figure_eight_is_balanced(self, figure_eight):
        assert (figure_eight.n_plus, figure_eight.n_minus) == (2, 2)

    def test_single_component(self, trefoil):
        assert trefoil.components == ((1, 6),)

    def test_hopf_link_two_components(self):
        d = parse_pd("X[4,1,3,2] X[2,3,1,4]")
        assert len(d.components) == 2
        assert d.signs == (1, 1)

    def test_successor_wraps_per_component(self, trefoil):
        assert trefoil.successor(3) == 4
        assert trefoil.successor(6) == 1
        with pytest.raises(UnknownEdgeError):
            trefoil.successor(7)

    def test_positive_kink_unknot(self):
        d = parse_pd("X[1,2,2,1]")
        assert d.signs == (1,)

    def test_negative_kink_unknot(self):
        d = parse_pd("X[2,2,1,1]")
        assert d.signs == (-1,)


class TestMirror:
    def test_mirror_swaps_sign_counts(self, trefoil):
        m = mirror_diagram(trefoil)
        assert (m.n_plus, m.n_minus) == (trefoil.n_minus, trefoil.n_plus)

    def test_mirror_is_involutive(self, figure_eight):
        assert mirror_diagram(mirror_diagram(figure_eight)) == figure_eight

    def test_mirror_stays_valid(self, knot_table):
        for name in ("6_2", "8_5", "8_19"):
            m = mirror_diagram(knot_table[name])
            assert isinstance(m, LinkDiagram)
            assert m.n == knot_table[name].n


class TestR1Twist:
    def test_adds_one_crossing(self, trefoil):
        t = r1_twist(trefoil, 2, 1)
        assert t.n == trefoil.n + 1
        assert len(t.components) == 1

    def test_handedness_controls_sign(self, trefoil):
        assert sum(r1_twist(trefoil, 2, 1).signs) == 4
        assert sum(r1_twist(trefoil, 2, -1).signs) == 2

    def test_unknown_edge(self, trefoil):
        with pytest.raises(UnknownEdgeError):
            r1_twist(trefoil, 99, 1)

    def test_twist_every_edge_stays_valid(self, figure_eight):
        for e in figure_eight.edge_labels():
            for h in (1, -1):
                t = r1_twist(figure_eight, e, h)
                assert t.n == 5
                assert parse_pd(serialize_pd(t)) == t


class TestKnotTable:
    def test_parse_lines(self):
        table = parse_knot_table(f"# comment\n3_1: {TREFOIL}\n4_1: {FIGURE_EIGHT}\n")
        assert [name for name, _ in table] == ["3_1", "4_1"]

    def test_missing_colon(self):
        with pytest.raises(PDSyntaxError):
            parse_knot_table("3_1 X[1,4,2,5]")

    def test_bundled_table_loads(self, knot_table):
        assert len(knot_table) >= 35
        assert all(len(d.components) == 1 for d in knot_table.values())
        eight_crossings = [n for n in knot_table if n.startswith("8_")]
        assert len(eight_crossings) == 21
