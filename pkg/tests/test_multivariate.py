"""Vector-valued series through every measure, plus corridor/oracle checks."""

import math

import numpy as np
import pytest

from timewarp import (
    CostParams,
    KernelId,
    KernelParams,
    TimeSeries,
    dtw,
    erp,
    euclid_dot,
    path_sum_oracle,
    stwk_me,
    twed,
    twip1,
    twip2,
)
from timewarp.kernels import MATCH, local_costs

from oracles import dtw_cost, min_path_cost, twed_cost


def rand_kd(rng, n=None, k=2, lo=1, hi=5):
    n = int(rng.integers(lo, hi + 1)) if n is None else n
    return rng.normal(size=(n, k))


def test_dtw_matches_bruteforce_kd(rng):
    for _ in range(15):
        a, b = rand_kd(rng), rand_kd(rng)
        for norm in (1, 2):
            got = dtw(TimeSeries(a), TimeSeries(b), CostParams(norm=norm))
            want = min_path_cost(a.shape[0], b.shape[0], dtw_cost(a, b, norm),
                                 anchored=True)
            assert got == pytest.approx(want, rel=1e-12)


def test_erp_vector_gap_constant(rng):
    g = np.array([0.5, -0.5])
    for _ in range(15):
        a, b = rand_kd(rng), rand_kd(rng)
        got = erp(TimeSeries(a), TimeSeries(b), CostParams(norm=1, g=g))

        def cost(op, i, j):
            if op == "delete":
                return float(np.abs(a[i - 1] - g).sum())
            if op == "insert":
                return float(np.abs(g - b[j - 1]).sum())
            return float(np.abs(a[i - 1] - b[j - 1]).sum())

        want = min_path_cost(a.shape[0], b.shape[0], cost)
        assert got == pytest.approx(want, rel=1e-12)


def test_twed_matches_bruteforce_kd(rng):
    for _ in range(15):
        a, b = rand_kd(rng), rand_kd(rng)
        ta = np.arange(1.0, a.shape[0] + 1)
        tb = np.arange(1.0, b.shape[0] + 1)
        got = twed(TimeSeries(a, ta), TimeSeries(b, tb),
                   CostParams(norm=2, lam=0.4, nu=0.25))
        want = min_path_cost(a.shape[0], b.shape[0],
                             twed_cost(a, ta, b, tb, 0.4, 0.25, p_norm=2))
        assert got == pytest.approx(want, rel=1e-12)


def test_twip_kd_uses_vector_dot(rng):
    for _ in range(10):
        n = int(rng.integers(1, 5))
        a, b = TimeSeries(rand_kd(rng, n)), TimeSeries(rand_kd(rng, n))
        assert twip2(a, b, 100.0) == pytest.approx(
            float(np.sum(a.values * b.values)), abs=1e-6
        )
        assert euclid_dot(a, b) == pytest.approx(float(np.sum(a.values * b.values)))


def test_stwk_me_kd_matches_oracle(rng):
    cp = CostParams(norm=2, lam=0.5, nu=0.1)
    for family in ("stwk_erp", "stwk_twed"):
        kid = KernelId(family, KernelParams(nu_prime=0.9, base_cost_params=cp))
        for _ in range(6):
            a = TimeSeries(rand_kd(rng, k=3, hi=4))
            b = TimeSeries(rand_kd(rng, k=3, hi=4))
            cost = local_costs(kid, a, b)
            local = lambda op, i, j: math.exp(-0.9 * cost(op, i, j))
            want = path_sum_oracle(a, b, local, "multiply", 1.0, normalizer=1.0 / 3.0)
            assert stwk_me(a, b, kid) == pytest.approx(want, rel=1e-12)


def test_stwk_me_narrow_corridor_matches_oracle(rng):
    cp = CostParams(norm=1)
    for _ in range(8):
        n = int(rng.integers(2, 5))
        a = TimeSeries(rng.normal(size=n))
        b = TimeSeries(rng.normal(size=n))
        kid = KernelId("stwk_erp",
                       KernelParams(nu_prime=0.7, base_cost_params=cp,
                                    corridor_halfwidth=1))
        cost = local_costs(kid, a, b)
        local = lambda op, i, j: math.exp(-0.7 * cost(op, i, j))
        want = path_sum_oracle(a, b, local, "multiply", 1.0,
                               normalizer=1.0 / 3.0, corridor=1)
        assert stwk_me(a, b, kid) == pytest.approx(want, rel=1e-12)


def test_twip_narrow_corridor_matches_oracle(rng):
    for variant, fn in ((1, twip1), (2, twip2)):
        e = math.exp(-0.4)
        if variant == 1:
            normalizer, cd = 1.0 / 3.0, 1.0
        else:
            normalizer, cd = 1.0 / (1.0 + 2.0 * e), e
        for _ in range(8):
            n = int(rng.integers(2, 5))
            a = TimeSeries(rng.normal(size=n))
            b = TimeSeries(rng.normal(size=n))

            def local(op, i, j):
                if op != MATCH:
                    return 0.0
                w = math.exp(-0.4 * abs(a.timestamps[i - 1] - b.timestamps[j - 1]))
                return w * float(a.values[i - 1] @ b.values[j - 1])

            want = path_sum_oracle(a, b, local, "add", 0.0, normalizer=normalizer,
                                   branch_multiplier=lambda op, i, j: 1.0 if op == MATCH else cd,
                                   corridor=1)
            assert fn(a, b, 0.4, corridor=1) == pytest.approx(want, rel=1e-12, abs=1e-15)


def test_length_one_series_everywhere(rng):
    a = TimeSeries([2.0])
    b = TimeSeries([-1.0])
    assert dtw(a, b) == 3.0
    assert erp(a, b, CostParams(norm=1, g=0.0)) == 3.0
    assert twed(a, b, CostParams(norm=1, lam=0.0, nu=1.0)) == 3.0
    assert twip2(a, b, 100.0) == pytest.approx(-2.0, abs=1e-6)
    kid = KernelId("stwk_dtw", KernelParams(nu_prime=1.0))
    assert stwk_me(a, b, kid) == pytest.approx(math.exp(-3.0) / 3.0)
