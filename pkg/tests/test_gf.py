from math import comb

import pytest

from pogp import gf
from pogp.oracle import avoider_series, mnd_distribution
from pogp.pattern import parse_pattern
from pogp.series import Series

a12 = gf.known_provider("12")
a21 = gf.known_provider("21")


def oracle(text, k, N, order="incomparable"):
    return list(avoider_series(parse_pattern(text, order), k, N).counts)


class TestShuffle121ClosedForm:
    def test_unary(self):
        assert gf.gf_eq1(1, 4) == [1, 1, 1, 1, 1]

    def test_binary(self):
        assert gf.gf_eq1(2, 3) == [1, 2, 4, 7]

    @pytest.mark.parametrize("k", range(2, 6))
    def test_second_order_recurrence(self, k):
        c, prev = gf.gf_eq1(k, 12).as_ints(), gf.gf_eq1(k - 1, 12).as_ints()
        assert c[:2] == [1, k]
        for n in range(2, 13):
            assert c[n] - 2 * c[n - 1] + c[n - 2] == prev[n]

    def test_needs_positive_k(self):
        with pytest.raises(ValueError):
            gf.gf_eq1(0, 3)


class TestKnown:
    def test_12(self):
        assert gf.gf_known("12", 2, 4) == [1, 2, 3, 4, 5]

    def test_122_unary(self):
        assert gf.gf_known("122", 1, 3) == [1, 1, 1, 1]

    def test_1_12(self):
        assert gf.gf_known("1-1'2'", 2, 2) == [1, 2, 4]

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_1_12_closed_count(self, k):
        got = gf.gf_known("1-1'2'", k, 8).as_ints()
        assert got[1:] == [k * comb(n + k - 2, n - 1) for n in range(1, 9)]

    @pytest.mark.parametrize("name", sorted(gf.KNOWN))
    def test_empty_alphabet(self, name):
        assert gf.gf_known(name, 0, 3) == [1, 0, 0, 0]

    def test_unknown(self):
        with pytest.raises(KeyError):
            gf.gf_known("132", 2, 3)

    @pytest.mark.parametrize("name", sorted(gf.KNOWN))
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_against_oracle(self, name, k):
        assert gf.gf_known(name, k, 7).as_ints() == oracle(name, k, 7)


class TestQuasiTransform:
    def test_12(self):
        assert gf.quasi_transform(gf.gf_known("12", 2, 4), 2)[2] == 1

    @pytest.mark.parametrize("k", [1, 2, 5])
    def test_everything_avoids(self, k):
        A = (1 - k * Series.x(6)).inverse()
        assert gf.quasi_transform(A, k) == Series.zero(6)

    @pytest.mark.parametrize("name", ["12", "122", "212", "123"])
    def test_constant_term(self, name):
        assert gf.quasi_transform(gf.gf_known(name, 3, 5), 3)[0] == 0


class TestShuffle:
    def test_unary(self):
        assert gf.shuffle_same(gf.unit_provider, 1, 4) == [1, 1, 1, 1, 1]

    def test_binary(self):
        assert gf.shuffle_same(gf.unit_provider, 2, 3) == gf.gf_eq1(2, 3)

    @pytest.mark.parametrize("tau", [gf.unit_provider, a12])
    def test_empty_alphabet(self, tau):
        assert gf.shuffle_same(tau, 0, 4) == Series.one(4)
        assert gf.shuffle_general(tau, a21, 0, 4) == Series.one(4)

    def test_general_reduces_to_same(self):
        assert gf.shuffle_general(gf.unit_provider, gf.unit_provider, 2, 3) == [1, 2, 4, 7]
        for k in range(4):
            assert gf.shuffle_general(a12, a12, k, 8) == gf.shuffle_same(a12, k, 8)

    @pytest.mark.parametrize("k", range(4))
    def test_symmetry(self, k):
        assert gf.shuffle_general(a12, gf.unit_provider, k, 8) == gf.shuffle_general(gf.unit_provider, a12, k, 8)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_against_oracle(self, k):
        got = gf.shuffle_general(a12, gf.unit_provider, k, 6).as_ints()
        assert got == oracle("1'2'-3-1''", k, 6, "shuffle")

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_oracle_provider_feeds_recurrence(self, k):
        tau = gf.oracle_provider(parse_pattern("11"))
        got = gf.shuffle_same(tau, k, 6).as_ints()
        assert got == oracle("1'1'-2-1''1''", k, 6, "shuffle")


class TestMulti:
    def test_single_block(self):
        assert gf.multipattern([a12], 3, 6) == gf.gf_known("12", 3, 6)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_against_oracle(self, k):
        assert gf.multipattern([a12, a12], k, 6).as_ints() == oracle("12-1'2'", k, 6)

    @pytest.mark.parametrize("k", [1, 2, 3])
    @pytest.mark.parametrize("s", [1, 2, 3])
    def test_descent_closed_form(self, k, s):
        blocks = [a12 if i % 2 else a21 for i in range(s)]
        assert gf.descent_multipattern(k, s, 8) == gf.multipattern(blocks, k, 8)

    def test_descent_single_block(self):
        assert gf.descent_multipattern(4, 1, 8) == gf.gf_known("12", 4, 8)

    def test_descent_unary(self):
        assert gf.descent_multipattern(1, 3, 4) == [1, 1, 1, 1, 1]

    def test_descent_needs_blocks(self):
        with pytest.raises(ValueError):
            gf.descent_multipattern(2, 0, 4)

    def test_prefix_decomposition(self):
        zero = lambda k, N: Series.zero(N)
        assert gf.prefix_decomposition(a12, zero, 2, 6) == gf.gf_known("12", 2, 6)
        assert gf.prefix_decomposition(a12, a12, 2, 6) == gf.multipattern([a12, a12], 2, 6)
        assert gf.prefix_decomposition(a12, a12, 0, 6) == Series.one(6)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_prefix_decomposition_with_multi_tail(self, k):
        phi = gf.resolve_provider(parse_pattern("21-1'2'"))
        got = gf.prefix_decomposition(gf.known_provider("122"), phi, k, 6)
        assert got.as_ints() == oracle("122-2'1'-1''2''", k, 6)


class TestMndGf:
    def test_12_binary(self):
        Y = gf.mnd_gf(gf.gf_known("12", 2, 6), 2, S=6)
        assert Y.histogram(2) == {0: 3, 1: 1}

    @pytest.mark.parametrize("name", ["12", "212"])
    def test_collapse_and_base_slice(self, name):
        A = gf.gf_known(name, 3, 8)
        Y = gf.mnd_gf(A, 3, S=8)
        assert Y.at_y(1) == [3**n for n in range(9)]
        assert Y.slice(0) == A

    @pytest.mark.parametrize("name", ["12", "122", "212", "123"])
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_displayed_forms(self, name, k):
        Y = gf.mnd_gf(gf.gf_known(name, k, 10), k, S=10)
        assert Y == gf.mnd_closed_form(name, k, 10, S=10)

    @pytest.mark.parametrize("name", ["21", "122"])
    def test_against_oracle(self, name):
        p = parse_pattern(name)
        Y = gf.mnd_gf(gf.gf_known(name, 3, 6), 3, S=6)
        for n in range(7):
            assert Y.histogram(n) == mnd_distribution(p, 3, n).histogram


class TestResolve:
    @pytest.mark.parametrize(
        "text, order",
        [("12", "incomparable"), ("221", "incomparable"), ("211", "incomparable"), ("1", "incomparable"),
         ("12-1'2'", "incomparable"), ("1'-2-1''", "shuffle"), ("2'1'-3-1''2''", "shuffle"),
         ("1-1'2'", "incomparable"), ("3'2'1'-4-1''", "shuffle")],
    )
    def test_resolves_and_matches_oracle(self, text, order):
        provide = gf.resolve_provider(parse_pattern(text, order))
        assert provide is not None
        for k in range(4):
            assert provide(k, 6).as_ints() == oracle(text, k, 6, order)

    @pytest.mark.parametrize("text, order", [("132", "incomparable"), ("12-3-1", "incomparable"), ("1'-3-1''-2-1'''", "shuffle")])
    def test_unresolved(self, text, order):
        assert gf.resolve_provider(parse_pattern(text, order)) is None
