import numpy as np
import pytest

from timewarp import TimeSeries


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def random_series(rng, n=None, lo=3, hi=8, dim=1):
    n = int(rng.integers(lo, hi + 1)) if n is None else n
    vals = rng.normal(size=(n, dim))
    return TimeSeries(vals)


@pytest.fixture(scope="session", autouse=True)
def _warm_compiled_kernels():
    # touch every jitted loop once so per-test timings exclude compilation
    import timewarp as tw

    a = TimeSeries([0.0, 1.0, 2.0])
    b = TimeSeries([1.0, 0.5])
    tw.dtw(a, b)
    tw.erp(a, b)
    tw.twed(a, b)
    tw.levenshtein("ab", "ba")
    tw.twip1(a, b, 0.5)
    tw.twip2(a, b, 0.5)
    kid = tw.KernelId("stwk_dtw", tw.KernelParams(nu_prime=0.5))
    tw.stwk_me(a, b, kid)
    tw.stwk_me(a, b, kid, method="log")
    for fam in ("stwk_erp", "stwk_lev"):
        arg = ("ab", "ba") if fam == "stwk_lev" else (a, b)
        tw.stwk_me(*arg, tw.KernelId(fam, tw.KernelParams(nu_prime=0.5)))
    tw.stwk_me(a, b, tw.KernelId(
        "stwk_twed",
        tw.KernelParams(nu_prime=0.5, base_cost_params=tw.CostParams(lam=0.5, nu=0.1)),
    ))
