"""Graph generators, distances, coordinate codecs, and the text format."""

import pytest
from hypothesis import given, strategies as st

from isopath import (
    FormatError,
    Graph,
    HammingSpec,
    InvalidPairingError,
    InvalidSpecError,
    OutOfRangeError,
    PartiteSpec,
    all_pairs_distances,
    decode_coordinates,
    encode_coordinates,
    format_graph,
    make_augmented_multipartite,
    make_complete_multipartite,
    make_hamming,
    parse_graph,
)

from conftest import sorted_partitions, spec_pairings


def cross_part_pairs(sizes):
    # independent count of inter-part pairs, straight from the definition
    total = 0
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            total += sizes[i] * sizes[j]
    return total


class TestPartiteSpec:
    def test_sorts_sizes_non_increasing(self):
        spec = PartiteSpec((2, 3, 3))
        assert spec.sizes == (3, 3, 2)
        assert spec.input_sizes == (2, 3, 3)

    def test_derived_quantities(self):
        spec = PartiteSpec((3, 3, 2))
        assert (spec.n, spec.r, spec.alpha) == (8, 3, 2)

    def test_rejects_empty_and_nonpositive(self):
        with pytest.raises(InvalidSpecError):
            PartiteSpec(())
        with pytest.raises(InvalidSpecError):
            PartiteSpec((3, 0))


class TestHammingSpec:
    def test_rejects_unit_factor(self):
        with pytest.raises(InvalidSpecError):
            HammingSpec((1, 3))

    def test_rejects_too_many_factors(self):
        with pytest.raises(InvalidSpecError):
            HammingSpec((2, 2, 2, 2))

    def test_derived_quantities(self):
        spec = HammingSpec((2, 3, 5))
        assert (spec.n, spec.r) == (30, 3)


class TestCompleteMultipartite:
    def test_two_singletons_is_an_edge(self):
        g = make_complete_multipartite(PartiteSpec((1, 1)))
        assert (g.n, g.m) == (2, 1)

    def test_2_2_is_the_4_cycle(self):
        g = make_complete_multipartite(PartiteSpec((2, 2)))
        assert (g.n, g.m) == (4, 4)
        assert all(g.degree(v) == 2 for v in range(4))

    def test_3_3_2_edge_count(self):
        g = make_complete_multipartite(PartiteSpec((3, 3, 2)))
        assert g.n == 8
        assert g.m == cross_part_pairs((3, 3, 2)) == 21

    def test_part_blocks_and_labels(self):
        g = make_complete_multipartite(PartiteSpec((3, 2)))
        assert g.labels == ("0:0", "0:1", "0:2", "1:0", "1:1")
        assert not g.has_edge(0, 1)
        assert g.has_edge(0, 3)

    def test_single_part_rejected(self):
        with pytest.raises(InvalidSpecError):
            make_complete_multipartite(PartiteSpec((4,)))


class TestAugmentedMultipartite:
    def test_size2_parts_add_nothing(self):
        plain = make_complete_multipartite(PartiteSpec((2, 2)))
        augmented = make_augmented_multipartite(
            PartiteSpec((2, 2)), [[(0, 1)], [(0, 1)]]
        )
        assert list(plain.edges()) == list(augmented.edges())

    def test_4_2_gains_the_non_matching_edges(self):
        g = make_augmented_multipartite(PartiteSpec((4, 2)), [[(0, 1), (2, 3)], [(0, 1)]])
        assert g.m == 12
        for extra in ((0, 2), (0, 3), (1, 2), (1, 3)):
            assert g.has_edge(*extra)
        assert not g.has_edge(0, 1)
        assert not g.has_edge(2, 3)

    def test_3_2_gains_two_edges(self):
        g = make_augmented_multipartite(PartiteSpec((3, 2)), [[(0, 1)], [(0, 1)]])
        assert g.m == 6 + 2
        assert g.has_edge(0, 2) and g.has_edge(1, 2)
        assert not g.has_edge(0, 1)

    def test_designated_pairs_at_distance_2_rest_at_1(self):
        for sizes in ((4, 2), (5, 3), (3, 3, 2)):
            for pairings in spec_pairings(sizes, 3):
                spec = PartiteSpec(sizes)
                g = make_augmented_multipartite(spec, pairings)
                d = all_pairs_distances(g)
                offsets = spec.part_offsets()
                designated = {
                    (offsets[i] + a, offsets[i] + b)
                    for i, pairs in enumerate(pairings)
                    for a, b in pairs
                }
                for u in range(g.n):
                    for v in range(u + 1, g.n):
                        want = 2 if (u, v) in designated else 1
                        assert d[u][v] == want

    def test_pairing_validation(self):
        spec = PartiteSpec((4, 2))
        with pytest.raises(InvalidPairingError):
            make_augmented_multipartite(spec, [[(0, 1)], [(0, 1)]])
        with pytest.raises(InvalidPairingError):
            make_augmented_multipartite(spec, [[(0, 1), (1, 2)], [(0, 1)]])
        with pytest.raises(InvalidPairingError):
            make_augmented_multipartite(spec, [[(0, 1), (2, 4)], [(0, 1)]])
        with pytest.raises(InvalidPairingError):
            make_augmented_multipartite(spec, [[(0, 1), (2, 3)]])


class TestHamming:
    def test_2_2_is_the_4_cycle(self):
        g = make_hamming(HammingSpec((2, 2)))
        assert (g.n, g.m) == (4, 4)

    def test_2_2_2_is_the_3_cube(self):
        g = make_hamming(HammingSpec((2, 2, 2)))
        assert (g.n, g.m) == (8, 12)
        assert all(g.degree(v) == 3 for v in range(8))

    def test_3_3_degrees(self):
        g = make_hamming(HammingSpec((3, 3)))
        assert (g.n, g.m) == (9, 18)
        assert all(g.degree(v) == 4 for v in range(9))

    def test_labels_are_coordinate_tuples(self):
        g = make_hamming(HammingSpec((2, 3)))
        assert g.labels[0] == "(0,0)"
        assert g.labels[5] == "(1,2)"

    def test_adjacency_is_single_coordinate_change(self):
        spec = HammingSpec((2, 3, 4))
        g = make_hamming(spec)
        for u in range(g.n):
            cu = decode_coordinates(spec, u)
            for v in range(u + 1, g.n):
                cv = decode_coordinates(spec, v)
                differ = sum(1 for a, b in zip(cu, cv) if a != b)
                assert g.has_edge(u, v) == (differ == 1)


class TestCoordinates:
    def test_examples(self):
        spec = HammingSpec((2, 3, 5))
        assert encode_coordinates(spec, (0, 0, 0)) == 0
        assert encode_coordinates(spec, (1, 2, 4)) == 29
        assert encode_coordinates(spec, (0, 1, 2)) == 7

    def test_out_of_range(self):
        spec = HammingSpec((2, 3, 5))
        with pytest.raises(OutOfRangeError):
            encode_coordinates(spec, (0, 3, 0))
        with pytest.raises(OutOfRangeError):
            decode_coordinates(spec, 30)

    @given(st.lists(st.integers(min_value=2, max_value=6), min_size=1, max_size=3), st.data())
    def test_round_trip(self, factors, data):
        spec = HammingSpec(tuple(factors))
        index = data.draw(st.integers(min_value=0, max_value=spec.n - 1))
        assert encode_coordinates(spec, decode_coordinates(spec, index)) == index
        coords = tuple(
            data.draw(st.integers(min_value=0, max_value=f - 1)) for f in factors
        )
        assert decode_coordinates(spec, encode_coordinates(spec, coords)) == coords


class TestDistances:
    def test_multipartite_distances(self):
        spec = PartiteSpec((3, 3, 2))
        g = make_complete_multipartite(spec)
        d = all_pairs_distances(g)
        offsets = spec.part_offsets()
        for u in range(g.n):
            for v in range(g.n):
                if u == v:
                    assert d[u][v] == 0
                elif any(
                    off <= u < off + size and off <= v < off + size
                    for off, size in zip(offsets, spec.sizes)
                ):
                    assert d[u][v] == 2
                else:
                    assert d[u][v] == 1

    def test_hamming_distance_is_differing_coordinates(self):
        for factors in ((2, 2), (3, 4), (2, 2, 2), (2, 3, 4), (3, 3, 3)):
            spec = HammingSpec(factors)
            g = make_hamming(spec)
            d = all_pairs_distances(g)
            for u in range(g.n):
                cu = decode_coordinates(spec, u)
                for v in range(g.n):
                    cv = decode_coordinates(spec, v)
                    assert d[u][v] == sum(1 for a, b in zip(cu, cv) if a != b)

    def test_single_vertex(self):
        d = all_pairs_distances(Graph(1))
        assert d[0][0] == 0

    def test_unreachable_sentinel(self):
        d = all_pairs_distances(Graph(2))
        assert d[0][1] == -1
        assert not d.connected

    def test_generated_families_are_connected(self):
        for sizes in sorted_partitions(6):
            g = make_complete_multipartite(PartiteSpec(sizes))
            assert all_pairs_distances(g).connected

    def test_matrix_invariants(self):
        g = make_hamming(HammingSpec((2, 3, 4)))
        d = all_pairs_distances(g)
        for u in range(g.n):
            assert d[u][u] == 0
            for v in range(g.n):
                assert d[u][v] == d[v][u]
                assert (d[u][v] == 1) == g.has_edge(u, v)
                for w in range(g.n):
                    assert d[u][w] <= d[u][v] + d[v][w]


class TestGraphTextFormat:
    def test_round_trip_is_byte_identical(self):
        for g in (
            make_complete_multipartite(PartiteSpec((3, 3, 2))),
            make_hamming(HammingSpec((2, 3, 4))),
            Graph(1),
        ):
            text = format_graph(g)
            again = format_graph(parse_graph(text))
            assert text == again
            assert text.endswith("\n")

    def test_format_shape(self):
        g = make_complete_multipartite(PartiteSpec((1, 1)))
        assert format_graph(g) == "p 2 1\ne 0 1\n"

    def test_comments_tolerated(self):
        g = parse_graph("c hello\np 2 1\nc mid\ne 0 1\n")
        assert (g.n, g.m) == (2, 1)

    @pytest.mark.parametrize(
        "text",
        [
            "e 0 1\n",
            "p 2\n",
            "p 2 1\ne 0 5\n",
            "p 2 2\ne 0 1\n",
            "p 2 1\nx 0 1\n",
            "p 2 1\ne 0 one\n",
        ],
    )
    def test_malformed_rejected(self, text):
        with pytest.raises(FormatError):
            parse_graph(text)


class TestGraphInvariants:
    def test_adjacency_symmetric_sorted_loop_free(self):
        g = make_complete_multipartite(PartiteSpec((3, 2, 2)))
        for u in range(g.n):
            nbrs = g.neighbors(u)
            assert list(nbrs) == sorted(set(nbrs))
            assert u not in nbrs
            for v in nbrs:
                assert u in g.neighbors(v)

    def test_rejects_self_loop_and_bad_edge(self):
        with pytest.raises(InvalidSpecError):
            Graph(2, [(0, 0)])
        with pytest.raises(OutOfRangeError):
            Graph(2, [(0, 2)])
