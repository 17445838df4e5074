"""Golden-value and self-consistency checks runnable from the CLI.

Each check recomputes a quantity with the library and compares it against
a frozen expectation: the reference fixture matrices and their quadratic
forms and spectra, the two-spike inner-product demo values, recursion
versus path-enumeration oracle agreement, log- versus direct-domain
kernel evaluation, a PSD spot check, and the metric spot checks.  A
failing check means the implementation drifted from the recorded
behaviour.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import datasets
from .distances import BOUNDARY_ANCHORED, CostParams, dtw, erp, levenshtein, twed
from .gram import (
    build_gram,
    definiteness_report,
    eigen_symmetric,
    indefiniteness_witness_search,
    quadratic_form,
)
from .kernels import (
    DELETE,
    INSERT,
    MATCH,
    KernelId,
    KernelParams,
    dtw_branch_valid,
    euclid_dot,
    local_costs,
    path_sum_oracle,
    stwk_me,
    stwk_recursion,
    twip1,
    twip2,
)
from .series import TimeSeries

#: Frozen library values of the two-spike demo inner products at nu=0.1.
#: These are what the implemented recursions produce; the checks exist to
#: catch regressions, not to reproduce externally reported numbers.
SPIKES_TWIP1_NU01 = 0.8832030034510006
SPIKES_TWIP2_NU01 = 0.9168820597664158

class CheckFailure(AssertionError):
    pass


def _close(got, want, tol, label):
    if not np.all(np.abs(np.asarray(got) - np.asarray(want)) <= tol):
        raise CheckFailure(f"{label}: got {got!r}, expected {want!r} (tol {tol})")


def _equal_matrix(got, want, label):
    got = np.asarray(got)
    want = np.asarray(want)
    if got.shape != want.shape or not np.array_equal(got, want):
        bad = np.argwhere(got != want)[:4] if got.shape == want.shape else []
        raise CheckFailure(f"{label}: matrices differ (first mismatches {bad})")


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------


def check_lev_matrix():
    sets = datasets.reference_sequence_sets()
    g = build_gram(sets.lev_strings, levenshtein, kernel="lev")
    _equal_matrix(g.entries, datasets.LEV_MATRIX, "unit-cost edit distance matrix")


def check_lev_quadratic_forms():
    _close(quadratic_form(datasets.LEV_MATRIX, datasets.LEV_WITNESS_C), 2.0 / 3.0,
           1e-12, "witness C form")
    _close(quadratic_form(datasets.LEV_MATRIX, datasets.LEV_WITNESS_D), -4.0 / 3.0,
           1e-12, "witness D form")


def check_lev_witness_search():
    pair = indefiniteness_witness_search(datasets.LEV_MATRIX, trials=10_000, seed=0)
    if pair is None:
        raise CheckFailure("no zero-sum witness pair found on the edit-distance matrix")


def check_erp_matrix():
    sets = datasets.reference_sequence_sets()
    params = CostParams(norm=1, g=0.0)
    g = build_gram(
        sets.three_digit,
        lambda a, b: erp(a, b, params, boundary=BOUNDARY_ANCHORED),
        kernel="erp",
    )
    _equal_matrix(g.entries, datasets.ERP_MATRIX, "gap-constant edit distance matrix")


def check_erp_spectrum():
    rep = definiteness_report(datasets.ERP_MATRIX)
    if rep.pev_count not in (2, 3):
        raise CheckFailure(f"expected 2-3 positive eigenvalues, got {rep.pev_count}")
    if rep.pev_count == 3:
        third = sorted(rep.eigenvalues, reverse=True)[2]
        scale = np.abs(datasets.ERP_MATRIX).max()
        if third >= 1e-12 * scale:
            raise CheckFailure(f"third positive eigenvalue too large: {third}")


def check_twed_matrix():
    sets = datasets.reference_sequence_sets()
    params = CostParams(norm=1, lam=0.0, nu=1.0)
    g = build_gram(
        sets.three_digit,
        lambda a, b: twed(a, b, params, boundary=BOUNDARY_ANCHORED),
        kernel="twed",
    )
    _equal_matrix(g.entries, datasets.TWED_MATRIX, "timestamped edit distance matrix")


def check_twed_spectrum():
    rep = definiteness_report(datasets.TWED_MATRIX)
    if rep.pev_count != 2:
        raise CheckFailure(f"expected exactly 2 positive eigenvalues, got {rep.pev_count}")


def check_dtw_ladder_matrix():
    sets = datasets.reference_sequence_sets()
    g = build_gram(sets.digit_ladder, lambda a, b: dtw(a, b, CostParams(norm=1)),
                   kernel="dtw")
    want = np.array([[0, 1, 3, 6], [1, 0, 1, 3], [3, 1, 0, 1], [6, 3, 1, 0]], float)
    _equal_matrix(g.entries, want, "warping distance ladder matrix")


def check_dtw_printed_forms():
    _close(quadratic_form(datasets.DTW_MATRIX_PRINTED, datasets.DTW_WITNESS_C),
           2.0 / 32.0, 1e-12, "printed matrix witness C")
    _close(quadratic_form(datasets.DTW_MATRIX_PRINTED, datasets.DTW_WITNESS_D),
           -0.5, 1e-12, "printed matrix witness D")


def check_spike_dot():
    a, b = datasets.two_spike_pair()
    _close(euclid_dot(a, b), 0.0, 0.0, "spike pair dot product")


def check_spike_twip_values():
    a, b = datasets.two_spike_pair()
    _close(twip1(a, b, 0.1), SPIKES_TWIP1_NU01, 1e-9 * SPIKES_TWIP1_NU01, "twip1 nu=0.1")
    _close(twip2(a, b, 0.1), SPIKES_TWIP2_NU01, 1e-9 * SPIKES_TWIP2_NU01, "twip2 nu=0.1")


def check_spike_twip_stiff_limit():
    a, b = datasets.two_spike_pair()
    if abs(twip1(a, b, 100.0)) >= 1e-6 or abs(twip2(a, b, 100.0)) >= 1e-6:
        raise CheckFailure("stiff inner products should vanish on the spike pair")


def check_recursion_vs_oracle():
    rng = np.random.default_rng(42)
    for star in ("add", "multiply"):
        for rep in range(5):
            p, q = rng.integers(0, 4, size=2)
            table = {
                (op, i, j): float(rng.uniform(0.1, 2.0))
                for op in (DELETE, MATCH, INSERT)
                for i in range(p + 1)
                for j in range(q + 1)
            }
            local = lambda op, i, j: table[(op, i, j)]
            xi = float(rng.uniform(0.5, 2.0))
            a, b = list(range(p)), list(range(q))
            got = stwk_recursion(a, b, local, star, xi)
            want = path_sum_oracle(a, b, local, star, xi)
            _close(got, want, 1e-12 * max(1.0, abs(want)), f"{star} recursion vs oracle")


def check_me_kernel_vs_oracle():
    rng = np.random.default_rng(7)
    a = TimeSeries(rng.normal(size=4))
    b = TimeSeries(rng.normal(size=3))
    for family in ("stwk_dtw", "stwk_erp", "stwk_twed"):
        kid = KernelId(family, KernelParams(nu_prime=0.7,
                                            base_cost_params=CostParams(norm=1, lam=0.5, nu=0.1)))
        cost = local_costs(kid, a, b)
        local = lambda op, i, j: float(np.exp(-0.7 * cost(op, i, j)))
        valid = dtw_branch_valid if family == "stwk_dtw" else None
        want = path_sum_oracle(a, b, local, "multiply", 1.0,
                               normalizer=1.0 / 3.0, branch_valid=valid)
        got = stwk_me(a, b, kid)
        _close(got, want, 1e-12 * max(abs(want), 1e-30), f"{family} vs oracle")


def check_log_domain_agreement():
    rng = np.random.default_rng(3)
    a = TimeSeries(rng.normal(size=6))
    b = TimeSeries(rng.normal(size=5))
    for family in ("stwk_dtw", "stwk_erp", "stwk_twed"):
        kid = KernelId(family, KernelParams(nu_prime=1.3,
                                            base_cost_params=CostParams(norm=2, lam=0.25, nu=0.01)))
        direct = stwk_me(a, b, kid, method="direct")
        logged = stwk_me(a, b, kid, method="log")
        _close(logged, direct, 1e-12 * abs(direct), f"{family} log vs direct")


def check_psd_sample():
    rng = np.random.default_rng(5)
    series = [TimeSeries(rng.normal(size=int(rng.integers(4, 9)))) for _ in range(8)]
    kid = KernelId("stwk_dtw", KernelParams(nu_prime=0.5, base_cost_params=CostParams(norm=2)))
    g = build_gram(series, lambda x, y: stwk_me(x, y, kid), kernel="stwk_dtw")
    vals = eigen_symmetric(g.entries)
    if vals.min() < -1e-9 * np.abs(g.entries).max():
        raise CheckFailure(f"kernel Gram has negative eigenvalue {vals.min()}")


def check_metric_spot():
    rng = np.random.default_rng(11)
    params = CostParams(norm=1, lam=0.5, nu=0.1)
    for _ in range(50):
        x = TimeSeries(rng.normal(size=5))
        y = TimeSeries(rng.normal(size=4))
        z = TimeSeries(rng.normal(size=6))
        if twed(x, z, params) > twed(x, y, params) + twed(y, z, params) + 1e-9:
            raise CheckFailure("triangle inequality violated for the timestamped distance")
        if erp(x, z, params) > erp(x, y, params) + erp(y, z, params) + 1e-9:
            raise CheckFailure("triangle inequality violated for the gap-constant distance")


CHECKS = (
    ("fixtures:lev-matrix", check_lev_matrix),
    ("fixtures:lev-quadratic-forms", check_lev_quadratic_forms),
    ("fixtures:lev-witness-search", check_lev_witness_search),
    ("fixtures:erp-matrix", check_erp_matrix),
    ("fixtures:erp-spectrum", check_erp_spectrum),
    ("fixtures:twed-matrix", check_twed_matrix),
    ("fixtures:twed-spectrum", check_twed_spectrum),
    ("fixtures:dtw-ladder-matrix", check_dtw_ladder_matrix),
    ("fixtures:dtw-printed-forms", check_dtw_printed_forms),
    ("spikes:dot-product", check_spike_dot),
    ("spikes:twip-values", check_spike_twip_values),
    ("spikes:twip-stiff-limit", check_spike_twip_stiff_limit),
    ("oracle:generic-recursion", check_recursion_vs_oracle),
    ("oracle:exponentiated-kernels", check_me_kernel_vs_oracle),
    ("oracle:log-domain", check_log_domain_agreement),
    ("psd:sample-gram", check_psd_sample),
    ("metric:triangle-spot", check_metric_spot),
)


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    seconds: float
    detail: str = ""


def run_checks(only: Optional[str] = None, out: Callable = print):
    """Run the named checks, print one line each, return the outcomes."""
    outcomes = []
    for name, fn in CHECKS:
        if only and only not in name:
            continue
        t0 = time.perf_counter()
        try:
            fn()
            outcome = CheckOutcome(name, True, time.perf_counter() - t0)
        except Exception as exc:  # noqa: BLE001 - reported as failure
            outcome = CheckOutcome(name, False, time.perf_counter() - t0, str(exc))
        outcomes.append(outcome)
        status = "PASS" if outcome.passed else "FAIL"
        line = f"[{status}] {outcome.name} ({outcome.seconds:.3f}s)"
        if outcome.detail:
            line += f" -- {outcome.detail}"
        out(line)
    return outcomes
