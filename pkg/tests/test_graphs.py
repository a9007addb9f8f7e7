import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonsep.graphs import (
    InadmissibleSequenceError,
    Multigraph,
    cut_vertices,
    degree_sequence,
    is_connected,
    is_nonseparable,
    realize_nonseparable,
    to_dot,
    to_json_dict,
)
from nonsep.partitions import nonseparable_sequences

from .oracles import brute_cut_vertices, brute_is_nonseparable, iter_multigraphs

TRIANGLE = Multigraph(3, [(0, 1), (1, 2), (0, 2)])
PATH3 = Multigraph(3, [(0, 1), (1, 2)])
SINGLE_EDGE = Multigraph(2, [(0, 1)])
# Two triangles sharing vertex 4.
BOWTIE = Multigraph(5, [(0, 1), (0, 4), (1, 4), (2, 3), (2, 4), (3, 4)])


class TestMultigraph:
    def test_normalizes_and_sorts_edges(self):
        g = Multigraph(3, [(2, 1), (1, 0), (2, 0)])
        assert g.edges == ((0, 1), (0, 2), (1, 2))
        assert g == TRIANGLE

    def test_rejects_loop(self):
        with pytest.raises(ValueError):
            Multigraph(2, [(1, 1)])

    def test_rejects_out_of_range_edge(self):
        with pytest.raises(ValueError):
            Multigraph(2, [(0, 2)])

    def test_rejects_empty_vertex_set(self):
        with pytest.raises(ValueError):
            Multigraph(0)

    def test_parallel_edges_kept(self):
        g = Multigraph(2, [(0, 1), (0, 1), (0, 1)])
        assert len(g.edges) == 3
        assert degree_sequence(g) == (3, 3)


class TestDegreeAndConnectivity:
    def test_degree_sequence_sorted(self):
        assert degree_sequence(BOWTIE) == (4, 2, 2, 2, 2)
        assert degree_sequence(Multigraph(3, [(0, 1)])) == (1, 1, 0)

    def test_connectivity(self):
        assert is_connected(TRIANGLE)
        assert is_connected(Multigraph(1))
        assert not is_connected(Multigraph(2))
        assert not is_connected(Multigraph(4, [(0, 1), (2, 3)]))


class TestCutVertices:
    def test_path_center(self):
        assert cut_vertices(PATH3) == {1}

    def test_cycle_has_none(self):
        assert cut_vertices(TRIANGLE) == frozenset()

    def test_bowtie_center(self):
        assert cut_vertices(BOWTIE) == {4}

    def test_single_edge_convention(self):
        """A graph with fewer than 2 edges has no cut-vertices."""
        assert cut_vertices(SINGLE_EDGE) == frozenset()
        assert cut_vertices(Multigraph(3)) == frozenset()

    def test_parallel_edges_are_back_edges(self):
        doubled = Multigraph(2, [(0, 1), (0, 1)])
        assert cut_vertices(doubled) == frozenset()
        dumbbell = Multigraph(3, [(0, 1), (0, 1), (1, 2), (1, 2)])
        assert cut_vertices(dumbbell) == {1}
        lollipop = Multigraph(3, [(0, 1), (0, 1), (1, 2)])
        assert cut_vertices(lollipop) == {1}

    def test_agrees_with_deletion_oracle_small(self):
        for g in iter_multigraphs(4, 5):
            assert cut_vertices(g) == brute_cut_vertices(g), g

    @settings(deadline=None, max_examples=300)
    @given(st.data())
    def test_agrees_with_deletion_oracle_random(self, data):
        r = data.draw(st.integers(1, 6))
        edges = []
        if r >= 2:
            pair = st.tuples(st.integers(0, r - 1), st.integers(0, r - 1)).filter(
                lambda e: e[0] != e[1]
            )
            edges = data.draw(st.lists(pair, max_size=9))
        g = Multigraph(r, edges)
        assert cut_vertices(g) == brute_cut_vertices(g)
        assert is_nonseparable(g) == brute_is_nonseparable(g)


class TestNonseparable:
    def test_examples(self):
        assert is_nonseparable(TRIANGLE)
        assert is_nonseparable(SINGLE_EDGE)
        assert not is_nonseparable(PATH3)
        assert not is_nonseparable(BOWTIE)
        assert not is_nonseparable(Multigraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))


class TestRealize:
    def test_triangle(self):
        result = realize_nonseparable((2, 2, 2))
        assert result.certified
        assert result.graph == TRIANGLE

    def test_two_vertices_use_parallel_edges(self):
        result = realize_nonseparable((3, 3))
        assert result.certified
        assert result.graph.vertex_count == 2
        assert len(result.graph.edges) == 3

    def test_mixed_sequence(self):
        result = realize_nonseparable((3, 3, 2))
        assert result.certified
        assert degree_sequence(result.graph) == (3, 3, 2)
        assert len(result.graph.edges) == 4

    def test_input_order_ignored(self):
        assert realize_nonseparable((2, 3, 3)).graph == realize_nonseparable((3, 3, 2)).graph

    @pytest.mark.parametrize(
        "seq, reason",
        [
            ((2,), "length"),
            ((), "length"),
            ((3, 1, 2), "min_part"),
            ((3, 2, 2), "parity"),
            ((4, 2, 2, 2), "inequality"),
            ((9, 3, 2), "inequality"),
        ],
    )
    def test_inadmissible_reasons(self, seq, reason):
        with pytest.raises(InadmissibleSequenceError) as excinfo:
            realize_nonseparable(seq)
        assert excinfo.value.reason == reason

    @pytest.mark.parametrize("n", range(2, 13))
    def test_every_enumerated_sequence_realizes(self, n):
        for seq in nonseparable_sequences(n):
            result = realize_nonseparable(seq)
            assert result.certified, seq
            assert degree_sequence(result.graph) == seq
            assert brute_is_nonseparable(result.graph), seq
            assert len(result.graph.edges) == n


class TestRendering:
    def test_json_dict_is_one_based(self):
        assert to_json_dict(TRIANGLE) == {
            "vertices": 3,
            "edges": [[1, 2], [1, 3], [2, 3]],
        }

    def test_dot_lists_every_edge_instance(self):
        g = Multigraph(2, [(0, 1), (0, 1)])
        assert to_dot(g) == "graph {\n  1 -- 2;\n  1 -- 2;\n}"

    def test_dot_names_isolated_vertices(self):
        g = Multigraph(3, [(0, 1)])
        assert to_dot(g) == "graph {\n  3;\n  1 -- 2;\n}"
