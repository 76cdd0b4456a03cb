import random
from itertools import product

import pytest
from hypothesis import given

from conftest import pseudomonomials, random_pm
from neuralhoms.errors import (
    AmbientMismatch,
    AmbientTooLarge,
    IndexOutOfRange,
    LengthMismatch,
    OverlappingFactors,
    ParseError,
)
from neuralhoms.pseudo import (
    MultilinearPoly,
    Pseudomonomial,
    enumerate_pseudomonomials,
    indicator,
    mlp_expand,
    mlp_sum,
    parse_pm,
    pm_divides,
    pm_eval,
    pm_expand_indicators,
    pm_make,
)
from oracles import all_pms, pm_value


def w(s):
    return sum(1 << k for k, ch in enumerate(s) if ch == "1")


class TestMake:
    def test_example_generator(self):
        f = pm_make(3, {1, 2}, {3})
        assert str(f) == "x1*x2*(1-x3)"
        assert f.sigma_indices == (1, 2) and f.tau_indices == (3,)
        assert f.degree == 3

    def test_constant_one(self):
        f = pm_make(2)
        assert f.is_one() and str(f) == "1" and f.degree == 0

    def test_overlap_rejected(self):
        with pytest.raises(OverlappingFactors):
            pm_make(2, {1}, {1})

    @pytest.mark.parametrize("sigma,tau", [({0}, ()), ({3}, ()), ((), {5})])
    def test_index_range(self, sigma, tau):
        with pytest.raises(IndexOutOfRange):
            pm_make(2, sigma, tau)

    def test_structural_equality(self):
        assert pm_make(3, [2, 1], [3]) == pm_make(3, {1, 2}, {3})
        assert hash(pm_make(3, [2, 1])) == hash(pm_make(3, [1, 2]))


class TestEval:
    f = pm_make(3, {1, 2}, {3})

    def test_examples(self):
        assert pm_eval(self.f, "110") == 1
        assert pm_eval(self.f, "111") == 0
        assert all(pm_eval(pm_make(3), w) == 1 for w in ("000", "101", "111"))

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            pm_eval(self.f, "11")
        with pytest.raises(LengthMismatch):
            pm_eval(self.f, 1 << 3)

    def test_matches_oracle_exhaustively(self):
        for n in range(1, 4):
            for (sigma, tau), word in product(all_pms(n), ["".join(b) for b in product("01", repeat=n)]):
                assert pm_eval(pm_make(n, sigma, tau), word) == pm_value((sigma, tau), word)


class TestDivides:
    def test_examples(self):
        g = pm_make(3, {1, 2}, {3})
        assert pm_divides(pm_make(3, {2}), g)
        assert not pm_divides(pm_make(3, {1}), pm_make(3, {3}, {1}))
        assert pm_divides(g, g)

    def test_ambient_mismatch(self):
        with pytest.raises(AmbientMismatch):
            pm_divides(pm_make(2, {1}), pm_make(3, {1}))

    def test_division_soundness_exhaustive(self):
        # f | g  <=>  mlp(f) * mlp(h) == mlp(g) for the quotient candidate h
        for n in (1, 2, 3):
            pms = enumerate_pseudomonomials(n)
            for f, g in product(pms, pms):
                h_sigma, h_tau = g.sigma & ~f.sigma, g.tau & ~f.tau
                if h_sigma & h_tau or (h_sigma | h_tau) & f.support:
                    assert not pm_divides(f, g)
                    continue
                h = Pseudomonomial(n, h_sigma, h_tau)
                assert pm_divides(f, g) == (mlp_expand(f) * mlp_expand(h) == mlp_expand(g))


class TestIndicator:
    @pytest.mark.parametrize(
        "word,text", [("10", "x1*(1-x2)"), ("111", "x1*x2*x3"), ("00", "(1-x1)*(1-x2)")]
    )
    def test_examples(self, word, text):
        f = indicator(w(word), len(word))
        assert str(f) == text and f.degree == len(word)

    def test_is_one_exactly_at_v(self):
        for n in (1, 2, 3, 4):
            for v in range(1 << n):
                f = indicator(v, n)
                assert [f(u) for u in range(1 << n)] == [int(u == v) for u in range(1 << n)]


class TestExpandIndicators:
    def test_examples(self):
        assert pm_expand_indicators(pm_make(2, {1})) == {w("10"), w("11")}
        assert pm_expand_indicators(pm_make(1)) == {0, 1}
        rho = indicator(w("0110"), 4)
        assert pm_expand_indicators(rho) == {w("0110")}

    def test_is_support_of_f(self):
        for f in enumerate_pseudomonomials(3):
            assert pm_expand_indicators(f) == {v for v in range(8) if f(v)}


class TestMlp:
    def test_examples(self):
        assert mlp_expand(pm_make(1, (), {1})).coeffs == {(): 1, (1,): 1}
        assert mlp_expand(pm_make(2, {1}, {2})).coeffs == {(1,): 1, (1, 2): 1}

    def test_indicator_sum_for_example(self):
        f = pm_make(3, {1, 2}, {3})
        total = mlp_sum((mlp_expand(indicator(v, 3)) for v in pm_expand_indicators(f)), 3)
        assert total == mlp_expand(f)
        # frozen from the oracle: x1x2(1+x3) = x1x2 + x1x2x3
        assert total.coeffs == {(1, 2): 1, (1, 2, 3): 1}

    def test_one_is_sum_of_two_indicators(self):
        assert mlp_expand(indicator(0, 1)) + mlp_expand(indicator(1, 1)) == MultilinearPoly.constant(1)

    def test_bound(self):
        with pytest.raises(AmbientTooLarge):
            mlp_expand(pm_make(17, {1}))
        assert len(mlp_expand(pm_make(16, (), range(1, 5))).terms) == 16

    def test_product_needs_disjoint_variables(self):
        with pytest.raises(ValueError):
            mlp_expand(pm_make(2, {1})) * mlp_expand(pm_make(2, {1}))

    def test_evaluation_consistency_exhaustive(self):
        for n in range(1, 5):
            pms = enumerate_pseudomonomials(n)
            assert len(pms) == 3**n
            for f in pms:
                p = mlp_expand(f)
                assert all(p(v) == pm_eval(f, v) for v in range(1 << n))

    @given(pseudomonomials(max_n=8))
    def test_indicator_sum_identity(self, f):
        parts = (mlp_expand(indicator(v, f.n)) for v in pm_expand_indicators(f))
        assert mlp_sum(parts, f.n) == mlp_expand(f)


class TestEnumeration:
    def test_order(self):
        pms = [str(f) for f in enumerate_pseudomonomials(2)]
        # degree, then sigma as a sorted tuple, then tau
        assert pms == [
            "1",
            "(1-x1)",
            "(1-x2)",
            "x1",
            "x2",
            "(1-x1)*(1-x2)",
            "x1*(1-x2)",
            "x1*x2",
            "(1-x1)*x2",
        ]

    def test_degree_bound(self):
        rng = random.Random(3)
        for _ in range(200):
            n = rng.randint(1, 10)
            assert random_pm(rng, n).degree <= n


class TestParse:
    @pytest.mark.parametrize("text", ["1", "x1*x2*(1-x3)", "(1-x1)*x3", "x2"])
    def test_round_trip(self, text):
        assert str(parse_pm(text, 3)) == text

    def test_whitespace_and_order(self):
        assert parse_pm(" x3 * (1 - x1) ", 3) == pm_make(3, {3}, {1})

    @pytest.mark.parametrize("text", ["", "x0", "x4", "y1", "x1**x2", "x1*x1", "2"])
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_pm(text, 3)

    def test_overlap(self):
        with pytest.raises(OverlappingFactors):
            parse_pm("x1*(1-x1)", 2)
