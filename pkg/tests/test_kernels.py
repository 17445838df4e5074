import math

import numpy as np
import pytest

from timewarp import (
    CostParams,
    EMPTY,
    KernelId,
    KernelParams,
    TimeSeries,
    add,
    euclid_dot,
    path_sum_oracle,
    scale,
    stwk_me,
    stwk_me_log,
    stwk_recursion,
    twip1,
    twip2,
    twip_distance,
    two_spike_pair,
)
from timewarp.errors import (
    CorridorTooNarrowError,
    EmptyParamsError,
    LengthMismatchError,
    TooLargeError,
)
from timewarp.kernels import DELETE, INSERT, MATCH, dtw_branch_valid, local_costs

from oracles import erp_cost, min_path_cost

TWED_CP = CostParams(norm=1, lam=0.5, nu=0.1)


def random_local_table(rng, p, q):
    return {
        (op, i, j): float(rng.uniform(0.05, 2.0))
        for op in (DELETE, MATCH, INSERT)
        for i in range(p + 1)
        for j in range(q + 1)
    }


# ---------------------------------------------------------------------------
# generic recursion and its path-enumeration oracle
# ---------------------------------------------------------------------------


def test_recursion_empty_pair_returns_xi():
    for star in ("add", "multiply"):
        assert stwk_recursion([], [], lambda op, i, j: 1.0, star, 2.5) == 2.5
        assert path_sum_oracle([], [], lambda op, i, j: 1.0, star, 2.5) == 2.5


def test_recursion_single_delete_hand_expanded():
    local = lambda op, i, j: 0.7
    assert stwk_recursion([1], [], local, "multiply", 1.0) == pytest.approx(0.7)
    assert stwk_recursion([1], [], local, "add", 0.0) == pytest.approx(0.7)


def test_oracle_single_path_case():
    # |a| = n, |b| = 0 admits exactly one editing sequence
    local = lambda op, i, j: 0.5
    assert path_sum_oracle([1, 2, 3], [], local, "multiply", 2.0) == pytest.approx(
        2.0 * 0.5 ** 3
    )
    assert path_sum_oracle([1, 2, 3], [], local, "add", 1.0) == pytest.approx(
        1.0 + 3 * 0.5
    )


def test_oracle_size_cap():
    with pytest.raises(TooLargeError):
        path_sum_oracle(list(range(7)), [], lambda op, i, j: 1.0, "add", 0.0)


def test_recursion_equals_oracle_random_kernels(rng):
    for star in ("add", "multiply"):
        for _ in range(20):
            p, q = rng.integers(0, 5, size=2)
            table = random_local_table(rng, p, q)
            local = lambda op, i, j: table[(op, i, j)]
            xi = float(rng.uniform(0.2, 3.0))
            got = stwk_recursion(list(range(p)), list(range(q)), local, star, xi)
            want = path_sum_oracle(list(range(p)), list(range(q)), local, star, xi)
            assert got == pytest.approx(want, rel=1e-12)


def test_recursion_equals_oracle_with_corridor(rng):
    for star in ("add", "multiply"):
        for _ in range(10):
            n = int(rng.integers(2, 5))
            table = random_local_table(rng, n, n)
            local = lambda op, i, j: table[(op, i, j)]
            got = stwk_recursion(list(range(n)), list(range(n)), local, star, 1.0,
                                 corridor=1)
            want = path_sum_oracle(list(range(n)), list(range(n)), local, star, 1.0,
                                   corridor=1)
            assert got == pytest.approx(want, rel=1e-12)


# ---------------------------------------------------------------------------
# multiplicative exponentiated kernels
# ---------------------------------------------------------------------------


def me_kid(family, nup=0.8):
    return KernelId(family, KernelParams(nu_prime=nup, base_cost_params=TWED_CP))


def test_me_kernel_empty_pair_is_xi():
    assert stwk_me(EMPTY, EMPTY, me_kid("stwk_erp")) == 1.0
    assert stwk_me("", "", me_kid("stwk_lev")) == 1.0


def test_me_kernel_singleton_vs_empty_hand_expanded():
    a = TimeSeries([2.0])
    kid = me_kid("stwk_erp", nup=0.5)
    # one editing sequence: delete the only sample, cost |2 - 0|
    assert stwk_me(a, EMPTY, kid) == pytest.approx((1.0 / 3.0) * math.exp(-0.5 * 2.0))


def test_me_kernel_symmetry(rng):
    for family in ("stwk_dtw", "stwk_erp", "stwk_twed"):
        kid = me_kid(family)
        for _ in range(25):
            a = TimeSeries(rng.normal(size=rng.integers(1, 8)))
            b = TimeSeries(rng.normal(size=rng.integers(1, 8)))
            assert stwk_me(a, b, kid) == pytest.approx(stwk_me(b, a, kid), rel=1e-12)
    kid = me_kid("stwk_lev")
    for _ in range(25):
        a = "".join(rng.choice(list("abc"), size=rng.integers(1, 6)))
        b = "".join(rng.choice(list("abc"), size=rng.integers(1, 6)))
        assert stwk_me(a, b, kid) == pytest.approx(stwk_me(b, a, kid), rel=1e-12)


def test_me_kernel_positive(rng):
    kid = me_kid("stwk_twed", nup=2.0)
    for _ in range(20):
        a = TimeSeries(rng.normal(size=rng.integers(1, 8)))
        b = TimeSeries(rng.normal(size=rng.integers(1, 8)))
        assert stwk_me(a, b, kid) > 0.0


def test_me_kernel_equals_oracle_all_families(rng):
    for family in ("stwk_lev", "stwk_dtw", "stwk_erp", "stwk_twed"):
        kid = me_kid(family, nup=0.6)
        for _ in range(8):
            if family == "stwk_lev":
                a = "".join(rng.choice(list("abc"), size=rng.integers(0, 5)))
                b = "".join(rng.choice(list("abc"), size=rng.integers(0, 5)))
                sa, sb = a, b
            else:
                sa = TimeSeries(rng.normal(size=rng.integers(1, 5)))
                sb = TimeSeries(rng.normal(size=rng.integers(1, 5)))
            cost = local_costs(kid, sa, sb)
            local = lambda op, i, j: math.exp(-0.6 * cost(op, i, j))
            valid = dtw_branch_valid if family == "stwk_dtw" else None
            want = path_sum_oracle(sa, sb, local, "multiply", 1.0,
                                   normalizer=1.0 / 3.0, branch_valid=valid)
            got = stwk_me(sa, sb, kid)
            assert got == pytest.approx(want, rel=1e-12, abs=1e-300)


def test_me_kernel_log_domain_bit_agreement(rng):
    for family in ("stwk_lev", "stwk_dtw", "stwk_erp", "stwk_twed"):
        kid = me_kid(family, nup=1.7)
        for _ in range(10):
            if family == "stwk_lev":
                a = "".join(rng.choice(list("ab"), size=rng.integers(1, 7)))
                b = "".join(rng.choice(list("ab"), size=rng.integers(1, 7)))
            else:
                a = TimeSeries(rng.normal(size=rng.integers(1, 8)))
                b = TimeSeries(rng.normal(size=rng.integers(1, 8)))
            direct = stwk_me(a, b, kid, method="direct")
            logged = stwk_me(a, b, kid, method="log")
            assert logged == pytest.approx(direct, rel=1e-12)


def test_me_kernel_log_domain_survives_long_series(rng):
    a = TimeSeries(rng.normal(size=300))
    b = TimeSeries(rng.normal(size=300))
    kid = KernelId("stwk_dtw", KernelParams(nu_prime=10.0, base_cost_params=CostParams(norm=2)))
    assert stwk_me(a, b, kid, method="direct") == 0.0  # underflows
    lv = stwk_me_log(a, b, kid)
    assert np.isfinite(lv) and lv < 0.0


def test_me_kernel_selectivity_decreases_to_best_path(rng):
    for _ in range(10):
        p, q = rng.integers(2, 5, size=2)
        a, b = rng.normal(size=p), rng.normal(size=q)
        A, B = TimeSeries(a), TimeSeries(b)
        best = min_path_cost(p, q, erp_cost(a, b, 0.0, 1))
        grid = [0.01, 0.1, 0.5, 1.0, 5.0, 10.0, 100.0, 1e6]
        vals = []
        for nup in grid:
            kid = KernelId("stwk_erp",
                           KernelParams(nu_prime=nup, base_cost_params=CostParams(norm=1)))
            vals.append(-stwk_me_log(A, B, kid) / nup)
        for prev, cur in zip(vals, vals[1:]):
            assert cur <= prev + 1e-12
        assert vals[-1] <= best + 1e-3


def test_me_kernel_needs_twed_params():
    with pytest.raises(EmptyParamsError):
        stwk_me(TimeSeries([1.0]), TimeSeries([2.0]),
                KernelId("stwk_twed", KernelParams(nu_prime=1.0)))


def test_kernel_id_validation():
    with pytest.raises(ValueError):
        KernelId("nope")
    with pytest.raises(ValueError):
        KernelId("stwk_dtw", KernelParams(xi=0.0))
    with pytest.raises(ValueError):
        KernelId("twip1", KernelParams(xi=1.0))
    with pytest.raises(ValueError):
        KernelParams(nu_prime=0.0)


def test_me_kernel_corridor_consistency(rng):
    kid_full = KernelId("stwk_erp", KernelParams(nu_prime=0.5, corridor_halfwidth=8))
    kid_none = KernelId("stwk_erp", KernelParams(nu_prime=0.5))
    for _ in range(10):
        n = int(rng.integers(2, 8))
        a, b = TimeSeries(rng.normal(size=n)), TimeSeries(rng.normal(size=n))
        assert stwk_me(a, b, kid_full) == stwk_me(a, b, kid_none)
    with pytest.raises(CorridorTooNarrowError):
        stwk_me(TimeSeries([1.0]), TimeSeries(rng.normal(size=5)),
                KernelId("stwk_erp", KernelParams(nu_prime=0.5, corridor_halfwidth=1)))


# ---------------------------------------------------------------------------
# time-warp inner products
# ---------------------------------------------------------------------------


def twip_oracle(a, b, nu, variant):
    e = math.exp(-nu)
    if variant == 1:
        normalizer, cd = 1.0 / 3.0, 1.0
    else:
        normalizer, cd = 1.0 / (1.0 + 2.0 * e), e
    av, at = a.values, a.timestamps
    bv, bt = b.values, b.timestamps

    def local(op, i, j):
        if op != MATCH:
            return 0.0
        return math.exp(-nu * abs(at[i - 1] - bt[j - 1])) * float(av[i - 1] @ bv[j - 1])

    def mult(op, i, j):
        return 1.0 if op == MATCH else cd

    return path_sum_oracle(a, b, local, "add", 0.0,
                           normalizer=normalizer, branch_multiplier=mult)


def test_twip_equals_oracle(rng):
    for variant, fn in ((1, twip1), (2, twip2)):
        for _ in range(12):
            a = TimeSeries(rng.normal(size=rng.integers(1, 5)))
            b = TimeSeries(rng.normal(size=rng.integers(1, 5)))
            nu = float(rng.uniform(0.05, 2.0))
            assert fn(a, b, nu) == pytest.approx(twip_oracle(a, b, nu, variant), rel=1e-12)


def test_twip_symmetry(rng):
    for fn in (twip1, twip2):
        for _ in range(40):
            a = TimeSeries(rng.normal(size=rng.integers(1, 9)))
            b = TimeSeries(rng.normal(size=rng.integers(1, 9)))
            assert fn(a, b, 0.3) == pytest.approx(fn(b, a, 0.3), rel=1e-12)


def test_twip_zero_series_annihilates(rng):
    a = TimeSeries(rng.normal(size=6))
    zero = scale(0.0, a)
    assert twip1(a, zero, 0.1) == 0.0
    assert twip2(a, zero, 0.1) == 0.0


def test_twip_bilinearity(rng):
    for fn in (twip1, twip2):
        for _ in range(25):
            n = int(rng.integers(1, 7))
            a = TimeSeries(rng.normal(size=n))
            b = TimeSeries(rng.normal(size=n))
            c = TimeSeries(rng.normal(size=n))
            alpha = float(rng.uniform(-3, 3))
            lhs = fn(add(scale(alpha, a), b), c, 0.4)
            rhs = alpha * fn(a, c, 0.4) + fn(b, c, 0.4)
            assert lhs == pytest.approx(rhs, abs=1e-9 * max(1.0, abs(rhs)))


def test_twip2_euclidean_limit(rng):
    worst = 0.0
    for _ in range(50):
        n = int(rng.integers(1, 12))
        a = TimeSeries(rng.normal(size=n))
        b = TimeSeries(rng.normal(size=n))
        worst = max(worst, abs(twip2(a, b, 100.0) - euclid_dot(a, b)))
    assert worst <= 1e-6


def test_spike_pair_values():
    a, b = two_spike_pair()
    assert euclid_dot(a, b) == 0.0
    # frozen values of the implemented recursions at nu = 0.1
    assert twip1(a, b, 0.1) == pytest.approx(0.8832030034510006, rel=1e-12)
    assert twip2(a, b, 0.1) == pytest.approx(0.9168820597664158, rel=1e-12)
    assert abs(twip1(a, b, 100.0)) < 1e-6
    assert abs(twip2(a, b, 100.0)) < 1e-6


def test_twip_distance_basics(rng):
    for _ in range(20):
        n = int(rng.integers(1, 8))
        a = TimeSeries(rng.normal(size=n))
        b = TimeSeries(rng.normal(size=n))
        assert twip_distance(a, a, 0.5) == 0.0
        d = twip_distance(a, b, 0.5)
        assert d >= 0.0
        assert d == pytest.approx(twip_distance(b, a, 0.5), rel=1e-12)


def test_twip_distance_euclidean_limit(rng):
    for _ in range(20):
        n = int(rng.integers(1, 10))
        a = TimeSeries(rng.normal(size=n))
        b = TimeSeries(rng.normal(size=n))
        euclid = math.sqrt(float(np.sum((a.values - b.values) ** 2)))
        assert twip_distance(a, b, 100.0, variant=2) == pytest.approx(euclid, abs=1e-6)


def test_twip_distance_triangle(rng):
    for _ in range(100):
        n = int(rng.integers(1, 7))
        a, b, c = (TimeSeries(rng.normal(size=n)) for _ in range(3))
        assert twip_distance(a, c, 0.3) <= (
            twip_distance(a, b, 0.3) + twip_distance(b, c, 0.3) + 1e-9
        )


def test_twip_distance_length_mismatch():
    with pytest.raises(LengthMismatchError):
        twip_distance(TimeSeries([1.0]), TimeSeries([1.0, 2.0]), 0.5)
    with pytest.raises(LengthMismatchError):
        euclid_dot(TimeSeries([1.0]), TimeSeries([1.0, 2.0]))


# ---------------------------------------------------------------------------
# PSD smoke test (full battery lives in the acceptance suite)
# ---------------------------------------------------------------------------


def test_twip_corridor_consistency(rng):
    for fn in (twip1, twip2):
        for _ in range(10):
            n = int(rng.integers(2, 8))
            a = TimeSeries(rng.normal(size=n))
            b = TimeSeries(rng.normal(size=n))
            assert fn(a, b, 0.3, corridor=n) == fn(a, b, 0.3)
    with pytest.raises(CorridorTooNarrowError):
        twip1(TimeSeries([1.0]), TimeSeries(rng.normal(size=4)), 0.3, corridor=1)


def test_random_grams_are_psd_smoke(rng):
    series = [TimeSeries(rng.normal(size=int(rng.integers(4, 10)))) for _ in range(10)]
    kid = me_kid("stwk_twed", nup=1.0)
    g = np.array([[stwk_me(x, y, kid) for y in series] for x in series])
    assert np.linalg.eigvalsh(g).min() >= -1e-9 * np.abs(g).max()
    g1 = np.array([[twip1(x, y, 0.1) for y in series] for x in series])
    assert np.linalg.eigvalsh(g1).min() >= -1e-9 * np.abs(g1).max()
