"""Exact Walsh-Hadamard layer and the covering-bound numerical replay."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codebounds.bounds import new_upper, vol
from codebounds.cyclic import build_code, encode
from codebounds.fourier import (
    ChainViolation,
    DimensionMismatch,
    adjacency_apply,
    convolve,
    covering_replay,
    degree_function,
    distance_check,
    identity_suite,
    indicator,
    inner,
    wht,
    wht_unnormalized,
)
from codebounds.spectrum import ball_operator, top_eigenvalue

int_funcs = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.integers(-20, 20),
                       min_size=1 << n, max_size=1 << n))


def paired_funcs(n_max=6):
    return st.integers(1, n_max).flatmap(
        lambda n: st.tuples(
            st.lists(st.integers(-9, 9), min_size=1 << n, max_size=1 << n),
            st.lists(st.integers(-9, 9), min_size=1 << n, max_size=1 << n)))


class TestTransform:
    def test_point_mass(self):
        # the indicator of 00 spreads evenly over the dual
        assert wht(indicator([0], 2)) == [Fraction(1, 4)] * 4

    def test_character_concentrates(self):
        n = 3
        for z in range(1 << n):
            chi = [(-1) ** (x & z).bit_count() for x in range(1 << n)]
            ft = wht(chi)
            assert ft[z] == 1
            assert all(ft[i] == 0 for i in range(1 << n) if i != z)

    @given(int_funcs)
    def test_unnormalized_involution(self, f):
        size = len(f)
        assert wht_unnormalized(wht_unnormalized(f)) == \
            [size * v for v in f]

    @given(int_funcs)
    def test_normalized_double_transform(self, f):
        size = len(f)
        assert wht(wht(f)) == [Fraction(v, size) for v in f]

    @given(int_funcs)
    def test_parseval(self, f):
        ft = wht(f)
        assert inner(f, f) == sum(w * w for w in ft)

    @given(int_funcs)
    def test_zeroth_coefficient_is_mean(self, f):
        assert wht(f)[0] == Fraction(sum(f), len(f))

    def test_rejects_non_power_of_two(self):
        with pytest.raises(DimensionMismatch):
            wht([1, 2, 3])
        with pytest.raises(DimensionMismatch):
            inner([1, 2], [1, 2, 3, 4])


class TestConvolution:
    @given(int_funcs)
    def test_point_mass_is_scaled_identity(self, f):
        size = len(f)
        delta = [1] + [0] * (size - 1)
        assert convolve(delta, f) == [Fraction(v, size) for v in f]

    @given(paired_funcs())
    def test_transform_multiplies(self, fg):
        f, g = fg
        lhs = wht(convolve(f, g))
        rhs = [a * b for a, b in zip(wht(f), wht(g))]
        assert lhs == rhs

    @given(paired_funcs(5))
    @settings(max_examples=40)
    def test_commutes(self, fg):
        f, g = fg
        assert convolve(f, g) == convolve(g, f)


class TestAdjacency:
    def test_degree_transform(self):
        n = 3
        lhat = wht(degree_function(n))
        assert lhat == [n - 2 * z.bit_count() for z in range(1 << n)]
        assert lhat[0] == 3 and lhat[7] == -3

    @given(int_funcs)
    @settings(max_examples=50)
    def test_adjacency_is_convolution_by_degree(self, f):
        n = len(f).bit_length() - 1
        lhs = adjacency_apply(f)
        rhs = convolve(f, degree_function(n))
        assert [Fraction(v) for v in lhs] == rhs

    def test_row_sums(self):
        n = 4
        ones = [1] * (1 << n)
        assert adjacency_apply(ones) == [n] * (1 << n)


class TestDistanceCheck:
    def test_two_word_code(self):
        assert distance_check([0, 7], 3, 3) is True
        assert distance_check([0, 7], 3, 4) is False

    def test_whole_cube(self):
        assert distance_check(list(range(8)), 3, 1) is True
        assert distance_check(list(range(8)), 3, 2) is False

    def test_constructed_code(self):
        spec = build_code(4, 1)
        words = [encode(spec, msg).bits for msg in range(1 << spec.k)]
        assert distance_check(words, spec.n, 6) is True
        assert distance_check(words, spec.n, 7) is False

    def test_cap(self):
        with pytest.raises(DimensionMismatch):
            distance_check([0], 17, 1)


class TestCoveringReplay:
    def test_two_point_code(self):
        rep = covering_replay([0, 7], r=1)
        assert set(rep) == {"n", "r", "d", "lambda", "code_size",
                            "ball_size", "bound", "steps", "pass"}
        assert rep["n"] == 3 and rep["d"] == 3 and rep["code_size"] == 2
        assert rep["lambda"] == pytest.approx(math.sqrt(3), abs=1e-11)
        assert rep["ball_size"] == 4
        # n/(lambda - (n - 2d)) * |B| = 3/(sqrt(3) + 3) * 4
        assert rep["bound"] == pytest.approx(12 / (math.sqrt(3) + 3),
                                             abs=1e-9)
        assert rep["pass"] is True
        names = [s["name"] for s in rep["steps"]]
        assert names == ["perron_pointwise", "support_cauchy",
                         "phi_moment_ratio", "AF_lower_estimate",
                         "EF_product_identity", "EF2_product_lower",
                         "two_estimates", "final_bound"]
        assert all(s["pass"] for s in rep["steps"])

    def test_single_word_moment_ratio(self):
        rep = covering_replay([0], r=1, n=3)
        ratio = next(s for s in rep["steps"]
                     if s["name"] == "phi_moment_ratio")
        assert ratio["lhs"] == pytest.approx(1.0, abs=1e-12)
        assert ratio["rhs"] == 1.0

    def test_agrees_with_certified_bound(self):
        rep = covering_replay([0, 7], r=1)
        bv = new_upper(3, 3, 1)
        # the certified evaluator floors the same quantity
        assert bv.value_exact == math.floor(rep["bound"] + 1e-9)
        assert rep["code_size"] <= bv.value_exact

    def test_lambda_matches_operator(self):
        rep = covering_replay([0, 3, 12, 15], r=2, n=6)
        assert rep["lambda"] == pytest.approx(
            top_eigenvalue(ball_operator(6, 2)), abs=1e-11)
        assert rep["ball_size"] == vol(2, 6)

    def test_requires_zero_word(self):
        with pytest.raises(ValueError):
            covering_replay([1, 2], r=1, n=3)
        with pytest.raises(ValueError):
            covering_replay([], r=1, n=3)

    def test_dimension_cap(self):
        with pytest.raises(DimensionMismatch):
            covering_replay([0, 1], r=1, n=16)

    def test_radius_cap(self):
        with pytest.raises(ValueError):
            covering_replay([0, 7], r=2, n=3)


class TestIdentitySuite:
    def test_small_run(self):
        out = identity_suite(3, count=25, seed=1)
        assert out == {"n": 3, "count": 25, "pass": True}

    def test_seed_dependence_is_benign(self):
        assert identity_suite(2, count=10, seed=7)["pass"] is True

    @pytest.mark.parametrize("n", [0, 17])
    def test_range(self, n):
        with pytest.raises(DimensionMismatch):
            identity_suite(n, count=1)

    def test_detects_broken_adjacency(self, monkeypatch):
        import codebounds.fourier as fr

        real = fr.adjacency_apply

        def broken(f):
            out = real(f)
            out[0] += 1
            return out

        monkeypatch.setattr(fr, "adjacency_apply", broken)
        with pytest.raises(ChainViolation, match="adjacency"):
            fr.identity_suite(3, count=5)

    def test_detects_broken_transform(self, monkeypatch):
        import codebounds.fourier as fr

        real = fr.wht_unnormalized

        def broken(f):
            out = real(f)
            out[-1] += 1
            return out

        monkeypatch.setattr(fr, "wht_unnormalized", broken)
        with pytest.raises(ChainViolation):
            fr.identity_suite(2, count=5)
