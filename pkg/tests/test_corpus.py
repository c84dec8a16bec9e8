import random
from itertools import combinations

import pytest

from conftest import (
    brute_isomorphic,
    prufer_class_codes,
    relabel,
    tree_oracle_code,
    trees_of_order,
)
from steinerkit import (
    BadSpec,
    MalformedGraph6,
    NotATree,
    TooLarge,
    Tree,
    canonical_code,
    enumerate_trees,
    graph6_decode,
    graph6_encode,
    tree_from_graph6,
    validate,
)

# OEIS A000055 shifted to rooted-at-nothing free trees, n = 1..12
KNOWN_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]


class TestEnumeration:
    def test_known_counts(self):
        for n, want in enumerate(KNOWN_COUNTS, start=1):
            assert sum(1 for _ in enumerate_trees(n)) == want, n

    def test_trees_validate_and_have_order(self):
        for n in range(1, 10):
            for t in enumerate_trees(n):
                validate(t)
                assert t.n == n

    def test_pairwise_nonisomorphic(self):
        for n in range(1, 9):
            trees = trees_of_order(n)
            for a, b in combinations(trees, 2):
                assert not brute_isomorphic(a, b)

    def test_matches_prufer_oracle(self):
        for n in range(1, 8):
            oracle_codes, _ = prufer_class_codes(n)
            ours = {tree_oracle_code(t) for t in trees_of_order(n)}
            assert ours == oracle_codes, n

    def test_deterministic_stream(self):
        first = [t.edges() for t in enumerate_trees(8)]
        second = [t.edges() for t in enumerate_trees(8)]
        assert first == second

    def test_guards(self):
        with pytest.raises(BadSpec):
            list(enumerate_trees(0))
        with pytest.raises(TooLarge):
            list(enumerate_trees(17))


class TestCanonicalCode:
    def test_relabeling_invariant(self):
        rng = random.Random(23)
        for n in range(2, 9):
            for t in trees_of_order(n):
                code = canonical_code(t)
                for _ in range(4):
                    perm = list(range(n))
                    rng.shuffle(perm)
                    assert canonical_code(relabel(t, perm)) == code

    def test_distinct_across_classes(self):
        for n in range(1, 10):
            trees = trees_of_order(n)
            assert len({canonical_code(t) for t in trees}) == len(trees)

    def test_iff_isomorphism(self):
        rng = random.Random(41)
        for n in range(2, 8):
            trees = trees_of_order(n)
            for a, b in combinations(trees, 2):
                assert canonical_code(a) != canonical_code(b)
                assert not brute_isomorphic(a, b)
            for t in trees:
                perm = list(range(n))
                rng.shuffle(perm)
                other = relabel(t, perm)
                assert canonical_code(other) == canonical_code(t)
                assert brute_isomorphic(t, other)


class TestGraph6:
    def test_encode_single_edge(self):
        assert graph6_encode(Tree(2, [(0, 1)])) == "A_"

    def test_decode_k4(self):
        g = graph6_decode("C~")
        assert g.n == 4 and g.edge_count() == 6

    def test_round_trip_corpus(self):
        for n in range(1, 11):
            for t in enumerate_trees(n):
                s = graph6_encode(t)
                back = tree_from_graph6(s)
                assert back.n == t.n and back.edges() == t.edges()

    def test_header_skipped(self):
        s = graph6_encode(Tree(3, [(0, 1), (1, 2)]))
        assert tree_from_graph6(">>graph6<<" + s).edges() == ((0, 1), (1, 2))

    def test_large_order_header(self):
        t = Tree(100, [(i, i + 1) for i in range(99)])
        s = graph6_encode(t)
        assert s.startswith("~")
        assert tree_from_graph6(s).edges() == t.edges()

    def test_malformed_inputs(self):
        for bad in ("", "C", "C~~~~", "A" + chr(30), "~~A"):
            with pytest.raises(MalformedGraph6):
                graph6_decode(bad)

    def test_offset_reported(self):
        try:
            graph6_decode("A" + chr(30))
        except MalformedGraph6 as e:
            assert e.offset == 1
            assert "offset 1" in str(e)
        else:
            pytest.fail("expected MalformedGraph6")

    def test_nonzero_padding_rejected(self):
        good = graph6_encode(Tree(2, [(0, 1)]))
        assert good == "A_"
        corrupted = good[0] + chr(63 + ((ord(good[1]) - 63) | 1))
        with pytest.raises(MalformedGraph6, match="padding"):
            graph6_decode(corrupted)

    def test_non_tree_rejected_by_tree_reader(self):
        with pytest.raises(NotATree):
            tree_from_graph6("C~")

    def test_decode_windows_line_ending(self):
        s = graph6_encode(Tree(2, [(0, 1)]))
        assert tree_from_graph6(s + "\r\n").edges() == ((0, 1),)
