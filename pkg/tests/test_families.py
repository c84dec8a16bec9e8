from fractions import Fraction
from math import ceil

import pytest

from steinerkit import (
    BadK,
    BadSpec,
    FamilySpec,
    Graph,
    Tree,
    UnsupportedKind,
    bound_value,
    center_profile,
    format_spec,
    generate,
    parse_spec,
    sd_k,
    sd_k_formula,
    sr_k,
    sr_k2_fast,
    sr_k3_fast,
    sr_kk_brute,
    sr_kk_formula,
    validate,
)
from steinerkit.oracle import brute_sd_k, brute_sr_kk


class TestSpecParsing:
    def test_round_trip(self):
        for text in (
            "complete:n=6",
            "path:n=9",
            "multipartite:parts=2,3,3",
            "star:m=5",
            "starlike:m=4,l=3",
            "p2ab:l=2,a=2,b=2,x=3",
            "p3ab:l=3,a=1,b=2,x=2",
        ):
            spec = parse_spec(text)
            assert format_spec(spec) == text
            assert parse_spec(format_spec(spec)) == spec

    def test_orders(self):
        assert parse_spec("path:n=9").order() == 9
        assert parse_spec("star:m=5").order() == 6
        assert parse_spec("starlike:m=4,l=3").order() == 13
        assert parse_spec("p2ab:l=2,a=2,b=2,x=3").order() == 14
        assert parse_spec("multipartite:parts=2,3,3").order() == 8

    def test_unknown_kind(self):
        with pytest.raises(UnsupportedKind):
            parse_spec("ring:n=5")

    def test_bad_specs(self):
        for text in (
            "path:n=0",
            "path:m=5",
            "multipartite:parts=3,2",
            "multipartite:parts=4",
            "starlike:m=2,l=2",
            "p2ab:l=3,a=1,b=1,x=1",
            "p2ab:l=2,a=1,b=1",
            "path:n=5,extra=1",
            "path",
        ):
            with pytest.raises(BadSpec):
                parse_spec(text)

    def test_embedded_l_token(self):
        assert parse_spec("p5ab:l=5,a=1,b=1,x=2").kind == "p_l_abx"
        with pytest.raises(BadSpec):
            parse_spec("p5ab:l=4,a=1,b=1,x=2")


class TestGenerate:
    def test_path_labeling(self):
        t = generate(parse_spec("path:n=5"))
        assert isinstance(t, Tree)
        assert t.edges() == ((0, 1), (1, 2), (2, 3), (3, 4))

    def test_star_hub_zero(self):
        t = generate(parse_spec("star:m=5"))
        assert t.degree(0) == 5 and t.n == 6

    def test_starlike_shape(self):
        t = generate(parse_spec("starlike:m=3,l=2"))
        validate(t)
        assert t.n == 7
        branching = [v for v in range(t.n) if t.degree(v) >= 3]
        assert branching == [0]
        assert len(t.leaves()) == 3

    def test_p2ab_shape(self):
        t = generate(parse_spec("p2ab:l=2,a=2,b=2,x=3"))
        validate(t)
        assert t.n == 14
        prof = center_profile(t)
        assert prof.diameter == 7
        assert set(prof.centers) == {0, 1}

    def test_complete_and_multipartite_graphs(self):
        g = generate(parse_spec("complete:n=5"))
        assert isinstance(g, Graph)
        assert g.edge_count() == 10
        m = generate(parse_spec("multipartite:parts=2,3"))
        assert isinstance(m, Graph)
        assert m.edge_count() == 6

    def test_deterministic(self):
        spec = parse_spec("p3ab:l=3,a=2,b=1,x=2")
        assert generate(spec).edges() == generate(spec).edges()


def _partitions_ascending(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total // parts + 1):
        for rest in _partitions_ascending(total - first, parts - 1):
            if rest[0] >= first:
                yield (first,) + rest


class TestFormulaExamples:
    def test_sd_examples(self):
        assert sd_k_formula(parse_spec("complete:n=8"), 5) == 4
        assert sd_k_formula(parse_spec("path:n=10"), 4) == 9
        assert sd_k_formula(parse_spec("multipartite:parts=2,3"), 3) == 3

    def test_sr_examples(self):
        assert sr_kk_formula(parse_spec("path:n=7"), 4, 3) == 4
        assert sr_kk_formula(parse_spec("path:n=9"), 6, 2) == 8
        assert sr_kk_formula(parse_spec("multipartite:parts=3,3,3"), 4, 1) == 3

    def test_unsupported_kind(self):
        with pytest.raises(UnsupportedKind):
            sd_k_formula(parse_spec("star:m=4"), 3)
        with pytest.raises(UnsupportedKind):
            sr_kk_formula(parse_spec("starlike:m=3,l=1"), 3, 2)

    def test_bad_k(self):
        with pytest.raises(BadK):
            sd_k_formula(parse_spec("path:n=5"), 6)
        with pytest.raises(BadK):
            sr_kk_formula(parse_spec("path:n=5"), 3, 4)


class TestFormulaOracleAgreement:
    def test_complete(self):
        for n in range(2, 7):
            g = generate(FamilySpec(kind="complete", n=n))
            for k in range(2, n + 1):
                assert sd_k_formula(FamilySpec(kind="complete", n=n), k) == brute_sd_k(g, k)
                for kp in range(1, k + 1):
                    assert sr_kk_formula(
                        FamilySpec(kind="complete", n=n), k, kp
                    ) == brute_sr_kk(g, k, kp)

    def test_path(self):
        for n in range(2, 9):
            spec = FamilySpec(kind="path", n=n)
            t = generate(spec)
            g = Graph(t.n, t.edges())
            for k in range(2, n + 1):
                assert sd_k_formula(spec, k) == brute_sd_k(g, k)
                for kp in range(1, k + 1):
                    assert sr_kk_formula(spec, k, kp) == brute_sr_kk(g, k, kp), (
                        n,
                        k,
                        kp,
                    )

    def test_multipartite(self):
        for total in range(2, 8):
            for r in range(2, total + 1):
                for parts in _partitions_ascending(total, r):
                    spec = FamilySpec(kind="multipartite", parts=parts)
                    g = generate(spec)
                    for k in range(2, total + 1):
                        assert sd_k_formula(spec, k) == brute_sd_k(g, k)
                        for kp in range(1, k + 1):
                            assert sr_kk_formula(spec, k, kp) == brute_sr_kk(
                                g, k, kp
                            ), (parts, k, kp)


class TestPathParitySplit:
    def test_gap_one_expression(self):
        for n in range(2, 41):
            for kp in range(1, min(n, 9)):
                single = ceil((n + kp - 2) / 2)
                if n % 2 == 1:
                    split = ceil((kp - 1) / 2) + (n - 1) // 2
                else:
                    split = ceil((kp - 2) / 2) + n // 2
                assert single == split
                if kp + 1 <= n:
                    assert (
                        sr_kk_formula(FamilySpec(kind="path", n=n), kp + 1, kp)
                        == single
                    )


class TestBoundValue:
    def test_exact_rationals(self):
        assert bound_value("thm_k2", 4, 2, 7) == Fraction(13)
        assert bound_value("thm_k3", 4, 3, 4) == Fraction(10)
        assert bound_value("conjecture", 5, 1, 8) == Fraction(10)
        assert bound_value("conjecture", 5, 3, 4) == Fraction(7)
        assert bound_value("tree_k1", 3, 1, 2) == Fraction(3)
        assert bound_value("thm34", 5, 2, 6) == Fraction(10)
        assert bound_value("general_hos", 3, 1, 5) == Fraction(8)
        assert bound_value("general_reiswig", 5, 1, 3) == Fraction(4)

    def test_types(self):
        for name, k, kp in (
            ("thm34", 5, 2),
            ("thm_k2", 5, 2),
            ("thm_k3", 5, 3),
            ("conjecture", 5, 2),
            ("tree_k1", 5, 1),
            ("general_hos", 3, 1),
            ("general_reiswig", 6, 1),
        ):
            out = bound_value(name, k, kp, 7)
            assert isinstance(out, Fraction)

    def test_hypothesis_guards(self):
        with pytest.raises(BadK):
            bound_value("thm_k2", 2, 2, 5)
        with pytest.raises(BadK):
            bound_value("thm_k3", 3, 3, 5)
        with pytest.raises(BadK):
            bound_value("thm34", 3, 3, 5)
        with pytest.raises(BadK):
            bound_value("general_reiswig", 4, 1, 5)
        with pytest.raises(Exception):
            bound_value("nonsense", 4, 1, 5)


class TestEqualityCertification:
    def test_star_family(self):
        for m in range(3, 7):
            t = generate(FamilySpec(kind="star", m=m))
            for k in range(2, m + 1):
                sd = sd_k(t, k)[0]
                sr = sr_k(t, k)[0]
                assert Fraction(sd) == Fraction(k, k - 1) * sr

    def test_starlike_family(self):
        for m, length in ((4, 2), (5, 1), (6, 3)):
            t = generate(FamilySpec(kind="starlike", m=m, l=length))
            for k in range(3, m + 1):
                sd = sd_k(t, k)[0]
                for kp in range(1, k - 1):
                    if k - kp < 2:
                        continue
                    assert Fraction(sd) == Fraction(k, k - kp) * sd_k(t, k - kp)[0]

    def test_p2_family(self):
        for a, b, x in ((2, 2, 3), (1, 3, 2), (2, 3, 1)):
            t = generate(FamilySpec(kind="p_l_abx", l=2, a=a, b=b, x=x))
            for k in range(3, a + b + 1):
                sd = sd_k(t, k)[0]
                sr = sr_k2_fast(t, k)
                assert Fraction(sd) == Fraction(k, k - 2) * sr - Fraction(2, k - 2)

    def test_p3_family(self):
        for a, b, x in ((2, 2, 2), (1, 3, 2), (2, 3, 1)):
            t = generate(FamilySpec(kind="p_l_abx", l=3, a=a, b=b, x=x))
            for k in range(4, a + b + 1):
                sd = sd_k(t, k)[0]
                sr = sr_k3_fast(t, k)
                assert Fraction(sd) == Fraction(k, k - 3) * sr - Fraction(6, k - 3)
                assert sr == sr_kk_brute(t, k, 3)[0]
