"""Summative time-warp kernels: the edit recursion with min replaced by a sum.

Replacing the minimum of the delete/match/insert recursion by a sum turns
an elastic distance into a kernel that aggregates every alignment path
instead of keeping only the best one.  Two concrete families are provided:

* multiplicative exponentiated kernels (one per elastic distance), where
  each recursion cell multiplies the accumulated value by
  ``exp(-nu_prime * cost)`` and averages the three branches; these are
  positive definite and become increasingly selective around the optimal
  paths as ``nu_prime`` grows;
* additive time-warp inner products ``twip1``/``twip2``, bilinear forms on
  equal-length series; ``twip2`` converges to the Euclidean dot product as
  its stiffness goes to infinity.

``path_sum_oracle`` evaluates the same quantities by exhaustively
enumerating alignment paths.  It is exponential and size-capped, and it is
the independent reference the recursion implementations are tested
against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from numba import njit

from .distances import CostParams, _band, _lp, _symbol_codes
from .errors import (
    EmptyParamsError,
    LengthMismatchError,
    TooLargeError,
)
from .series import SymbolSequence, TimeSeries, add, as_series, scale

MULTIPLICATIVE_FAMILIES = ("stwk_lev", "stwk_dtw", "stwk_erp", "stwk_twed")
ADDITIVE_FAMILIES = ("twip1", "twip2")
FAMILIES = MULTIPLICATIVE_FAMILIES + ADDITIVE_FAMILIES + ("euclid_dot",)

DELETE, MATCH, INSERT = "delete", "match", "insert"
_OPS = (DELETE, MATCH, INSERT)


@dataclass(frozen=True)
class KernelParams:
    """Parameters shared by the kernel families.

    nu_prime : stiffness of the multiplicative exponentiated kernels (> 0).
    nu : stiffness of the additive inner products (>= 0).
    xi : initialisation of the recursion at the empty pair; ``None`` picks
        the family default (1 for multiplicative, 0 for additive).
    base_cost_params : elastic-distance parameters the local costs read.
    corridor_halfwidth : optional symmetric band on |i - j|.
    """

    nu_prime: float = 1.0
    nu: float = 1.0
    xi: Optional[float] = None
    base_cost_params: Optional[CostParams] = None
    corridor_halfwidth: Optional[int] = None

    def __post_init__(self):
        if self.nu_prime <= 0:
            raise ValueError("nu_prime must be > 0")
        if self.nu < 0:
            raise ValueError("nu must be >= 0")
        if self.corridor_halfwidth is not None and self.corridor_halfwidth < 1:
            raise ValueError("corridor_halfwidth must be >= 1")


@dataclass(frozen=True)
class KernelId:
    """A kernel family plus the parameters it reads."""

    family: str
    params: KernelParams = KernelParams()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown kernel family {self.family!r}")
        xi = self.params.xi
        if xi is not None:
            if self.family in MULTIPLICATIVE_FAMILIES and xi <= 0:
                raise ValueError("multiplicative kernels need xi > 0")
            if self.family in ADDITIVE_FAMILIES and xi != 0:
                raise ValueError("additive inner products need xi = 0")

    @property
    def xi(self) -> float:
        if self.params.xi is not None:
            return self.params.xi
        return 1.0 if self.family in MULTIPLICATIVE_FAMILIES else 0.0

    def cost_params(self) -> CostParams:
        cp = self.params.base_cost_params
        if cp is None:
            if self.family == "stwk_twed":
                raise EmptyParamsError("stwk_twed needs base_cost_params with lam and nu")
            cp = CostParams()
        return cp


# ---------------------------------------------------------------------------
# generic summative recursion (Python, arbitrary local kernel)
# ---------------------------------------------------------------------------


def stwk_recursion(a, b, local_kernel: Callable, star: str, xi: float,
                   corridor: Optional[int] = None) -> float:
    """Summative recursion with an arbitrary local kernel.

    ``local_kernel(op, i, j)`` returns the local value for the given edit
    operation at 1-based positions ``i`` (in ``a``) and ``j`` (in ``b``);
    for a delete ``j`` is the number of consumed ``b`` samples (possibly
    0), symmetrically for inserts.  ``star`` is ``"add"`` or
    ``"multiply"``.  Recursion terms that would index a negative position
    are absent from the sum.
    """
    p, q = len(a), len(b)
    h = _band(p, q, corridor)
    if star not in ("add", "multiply"):
        raise ValueError("star must be 'add' or 'multiply'")
    mul = star == "multiply"
    V = np.zeros((p + 1, q + 1))
    V[0, 0] = xi
    inband = lambda i, j: h < 0 or abs(i - j) <= h
    for i in range(1, p + 1):
        if inband(i, 0):
            loc = local_kernel(DELETE, i, 0)
            V[i, 0] = V[i - 1, 0] * loc if mul else V[i - 1, 0] + loc
    for j in range(1, q + 1):
        if inband(0, j):
            loc = local_kernel(INSERT, 0, j)
            V[0, j] = V[0, j - 1] * loc if mul else V[0, j - 1] + loc
    for i in range(1, p + 1):
        lo = 1 if h < 0 else max(1, i - h)
        hi = q if h < 0 else min(q, i + h)
        for j in range(lo, hi + 1):
            total = 0.0
            if inband(i - 1, j):
                loc = local_kernel(DELETE, i, j)
                total += V[i - 1, j] * loc if mul else V[i - 1, j] + loc
            loc = local_kernel(MATCH, i, j)
            total += V[i - 1, j - 1] * loc if mul else V[i - 1, j - 1] + loc
            if inband(i, j - 1):
                loc = local_kernel(INSERT, i, j)
                total += V[i, j - 1] * loc if mul else V[i, j - 1] + loc
            V[i, j] = total
    return float(V[p, q])


def path_sum_oracle(a, b, local_kernel: Callable, star: str, xi: float, *,
                    corridor: Optional[int] = None,
                    normalizer: float = 1.0,
                    branch_multiplier: Optional[Callable] = None,
                    branch_valid: Optional[Callable] = None,
                    max_len: int = 6) -> float:
    """Evaluate a summative kernel by exhaustive path enumeration.

    Every editing sequence (monotone delete/match/insert path from the
    empty pair to the full pair) is enumerated explicitly; no dynamic
    programming is involved.  With the default ``normalizer`` 1 and no
    branch multipliers this is the plain path-sum decomposition of the
    summative recursion.  The per-cell normalizer of the concrete kernel
    instances is replicated by weighting each recursion step with it, and
    for additive kernels every local term is weighted by the normalized
    propagation of all paths from its introduction cell to the end.
    """
    p, q = len(a), len(b)
    if p > max_len or q > max_len:
        raise TooLargeError(f"path enumeration capped at length {max_len}")
    h = _band(p, q, corridor)
    mul = star == "multiply"
    if star not in ("add", "multiply"):
        raise ValueError("star must be 'add' or 'multiply'")
    valid = branch_valid if branch_valid is not None else (lambda op, i, j: True)
    coeff = branch_multiplier if branch_multiplier is not None else (lambda op, i, j: 1.0)
    inband = lambda i, j: h < 0 or abs(i - j) <= h

    def steps_from(i, j):
        if i < p and inband(i + 1, j) and valid(DELETE, i + 1, j):
            yield DELETE, i + 1, j
        if i < p and j < q and valid(MATCH, i + 1, j + 1):
            yield MATCH, i + 1, j + 1
        if j < q and inband(i, j + 1) and valid(INSERT, i, j + 1):
            yield INSERT, i, j + 1

    def product_paths(i, j, acc):
        # multiplicative: sum over paths of the product of weighted locals
        if i == p and j == q:
            return acc
        total = 0.0
        for op, ni, nj in steps_from(i, j):
            total += product_paths(ni, nj, acc * normalizer * local_kernel(op, ni, nj))
        return total

    def propagation(i, j):
        # additive: sum over paths of the product of step weights
        if i == p and j == q:
            return 1.0
        total = 0.0
        for op, ni, nj in steps_from(i, j):
            total += normalizer * coeff(op, ni, nj) * propagation(ni, nj)
        return total

    if mul:
        return xi * product_paths(0, 0, 1.0)
    value = xi * propagation(0, 0)
    for i in range(0, p + 1):
        for j in range(0, q + 1):
            if not inband(i, j):
                continue
            for op in _OPS:
                ok = (
                    (op == DELETE and i >= 1 and inband(i - 1, j))
                    or (op == MATCH and i >= 1 and j >= 1)
                    or (op == INSERT and j >= 1 and inband(i, j - 1))
                )
                if ok and valid(op, i, j):
                    value += normalizer * local_kernel(op, i, j) * propagation(i, j)
    return value


# ---------------------------------------------------------------------------
# multiplicative exponentiated kernels (numba)
# ---------------------------------------------------------------------------


@njit(cache=True, nogil=True)
def _stwk_dtw(av, bv, nup, p_norm, band, xi, logdom):
    p, q = av.shape[0], bv.shape[0]
    third = 1.0 / 3.0
    if logdom:
        L = np.full((p + 1, q + 1), -np.inf)
        L[0, 0] = np.log(xi)
        for i in range(1, p + 1):
            lo = 1 if band < 0 else max(1, i - band)
            hi = q if band < 0 else min(q, i + band)
            for j in range(lo, hi + 1):
                t1, t2, t3 = L[i - 1, j], L[i - 1, j - 1], L[i, j - 1]
                m = max(t1, max(t2, t3))
                if m == -np.inf:
                    continue
                s = np.exp(t1 - m) + np.exp(t2 - m) + np.exp(t3 - m)
                L[i, j] = np.log(third) - nup * _lp(av[i - 1], bv[j - 1], p_norm) + m + np.log(s)
        return L[p, q]
    V = np.zeros((p + 1, q + 1))
    V[0, 0] = xi
    for i in range(1, p + 1):
        lo = 1 if band < 0 else max(1, i - band)
        hi = q if band < 0 else min(q, i + band)
        for j in range(lo, hi + 1):
            loc = np.exp(-nup * _lp(av[i - 1], bv[j - 1], p_norm))
            V[i, j] = third * loc * (V[i - 1, j] + V[i - 1, j - 1] + V[i, j - 1])
    return V[p, q]


@njit(cache=True, nogil=True)
def _stwk_erp(av, bv, g, nup, p_norm, band, xi, logdom):
    p, q = av.shape[0], bv.shape[0]
    third = 1.0 / 3.0
    if logdom:
        L = np.full((p + 1, q + 1), -np.inf)
        L[0, 0] = np.log(xi)
        for i in range(1, p + 1):
            if band < 0 or i <= band:
                L[i, 0] = L[i - 1, 0] + np.log(third) - nup * _lp(av[i - 1], g, p_norm)
        for j in range(1, q + 1):
            if band < 0 or j <= band:
                L[0, j] = L[0, j - 1] + np.log(third) - nup * _lp(g, bv[j - 1], p_norm)
        for i in range(1, p + 1):
            lo = 1 if band < 0 else max(1, i - band)
            hi = q if band < 0 else min(q, i + band)
            for j in range(lo, hi + 1):
                t1 = L[i - 1, j] - nup * _lp(av[i - 1], g, p_norm)
                t2 = L[i - 1, j - 1] - nup * _lp(av[i - 1], bv[j - 1], p_norm)
                t3 = L[i, j - 1] - nup * _lp(g, bv[j - 1], p_norm)
                m = max(t1, max(t2, t3))
                if m == -np.inf:
                    continue
                s = np.exp(t1 - m) + np.exp(t2 - m) + np.exp(t3 - m)
                L[i, j] = np.log(third) + m + np.log(s)
        return L[p, q]
    V = np.zeros((p + 1, q + 1))
    V[0, 0] = xi
    for i in range(1, p + 1):
        if band < 0 or i <= band:
            V[i, 0] = third * V[i - 1, 0] * np.exp(-nup * _lp(av[i - 1], g, p_norm))
    for j in range(1, q + 1):
        if band < 0 or j <= band:
            V[0, j] = third * V[0, j - 1] * np.exp(-nup * _lp(g, bv[j - 1], p_norm))
    for i in range(1, p + 1):
        lo = 1 if band < 0 else max(1, i - band)
        hi = q if band < 0 else min(q, i + band)
        for j in range(lo, hi + 1):
            V[i, j] = third * (
                V[i - 1, j] * np.exp(-nup * _lp(av[i - 1], g, p_norm))
                + V[i - 1, j - 1] * np.exp(-nup * _lp(av[i - 1], bv[j - 1], p_norm))
                + V[i, j - 1] * np.exp(-nup * _lp(g, bv[j - 1], p_norm))
            )
    return V[p, q]


@njit(cache=True, nogil=True)
def _stwk_twed(av, at, bv, bt, nup, lam, nu, p_norm, band, xi, logdom):
    # index 0 of av/at/bv/bt is the virtual sample (zero vector, t=0)
    p, q = av.shape[0] - 1, bv.shape[0] - 1
    third = 1.0 / 3.0
    if logdom:
        L = np.full((p + 1, q + 1), -np.inf)
        L[0, 0] = np.log(xi)
        for i in range(1, p + 1):
            if band < 0 or i <= band:
                cost = _lp(av[i], av[i - 1], p_norm) + nu * abs(at[i] - at[i - 1]) + lam
                L[i, 0] = L[i - 1, 0] + np.log(third) - nup * cost
        for j in range(1, q + 1):
            if band < 0 or j <= band:
                cost = _lp(bv[j], bv[j - 1], p_norm) + nu * abs(bt[j] - bt[j - 1]) + lam
                L[0, j] = L[0, j - 1] + np.log(third) - nup * cost
        for i in range(1, p + 1):
            del_a = _lp(av[i], av[i - 1], p_norm) + nu * abs(at[i] - at[i - 1]) + lam
            lo = 1 if band < 0 else max(1, i - band)
            hi = q if band < 0 else min(q, i + band)
            for j in range(lo, hi + 1):
                match = (
                    _lp(av[i], bv[j], p_norm) + nu * abs(at[i] - bt[j])
                    + _lp(av[i - 1], bv[j - 1], p_norm) + nu * abs(at[i - 1] - bt[j - 1])
                )
                del_b = _lp(bv[j], bv[j - 1], p_norm) + nu * abs(bt[j] - bt[j - 1]) + lam
                t1 = L[i - 1, j] - nup * del_a
                t2 = L[i - 1, j - 1] - nup * match
                t3 = L[i, j - 1] - nup * del_b
                m = max(t1, max(t2, t3))
                if m == -np.inf:
                    continue
                s = np.exp(t1 - m) + np.exp(t2 - m) + np.exp(t3 - m)
                L[i, j] = np.log(third) + m + np.log(s)
        return L[p, q]
    V = np.zeros((p + 1, q + 1))
    V[0, 0] = xi
    for i in range(1, p + 1):
        if band < 0 or i <= band:
            cost = _lp(av[i], av[i - 1], p_norm) + nu * abs(at[i] - at[i - 1]) + lam
            V[i, 0] = third * V[i - 1, 0] * np.exp(-nup * cost)
    for j in range(1, q + 1):
        if band < 0 or j <= band:
            cost = _lp(bv[j], bv[j - 1], p_norm) + nu * abs(bt[j] - bt[j - 1]) + lam
            V[0, j] = third * V[0, j - 1] * np.exp(-nup * cost)
    for i in range(1, p + 1):
        del_a = _lp(av[i], av[i - 1], p_norm) + nu * abs(at[i] - at[i - 1]) + lam
        lo = 1 if band < 0 else max(1, i - band)
        hi = q if band < 0 else min(q, i + band)
        for j in range(lo, hi + 1):
            match = (
                _lp(av[i], bv[j], p_norm) + nu * abs(at[i] - bt[j])
                + _lp(av[i - 1], bv[j - 1], p_norm) + nu * abs(at[i - 1] - bt[j - 1])
            )
            del_b = _lp(bv[j], bv[j - 1], p_norm) + nu * abs(bt[j] - bt[j - 1]) + lam
            V[i, j] = third * (
                V[i - 1, j] * np.exp(-nup * del_a)
                + V[i - 1, j - 1] * np.exp(-nup * match)
                + V[i, j - 1] * np.exp(-nup * del_b)
            )
    return V[p, q]


@njit(cache=True, nogil=True)
def _stwk_lev(ca, cb, nup, band, xi, logdom):
    p, q = ca.shape[0], cb.shape[0]
    third = 1.0 / 3.0
    gap = np.exp(-nup)
    if logdom:
        L = np.full((p + 1, q + 1), -np.inf)
        L[0, 0] = np.log(xi)
        for i in range(1, p + 1):
            if band < 0 or i <= band:
                L[i, 0] = L[i - 1, 0] + np.log(third) - nup
        for j in range(1, q + 1):
            if band < 0 or j <= band:
                L[0, j] = L[0, j - 1] + np.log(third) - nup
        for i in range(1, p + 1):
            lo = 1 if band < 0 else max(1, i - band)
            hi = q if band < 0 else min(q, i + band)
            for j in range(lo, hi + 1):
                mc = 0.0 if ca[i - 1] == cb[j - 1] else nup
                t1 = L[i - 1, j] - nup
                t2 = L[i - 1, j - 1] - mc
                t3 = L[i, j - 1] - nup
                m = max(t1, max(t2, t3))
                if m == -np.inf:
                    continue
                s = np.exp(t1 - m) + np.exp(t2 - m) + np.exp(t3 - m)
                L[i, j] = np.log(third) + m + np.log(s)
        return L[p, q]
    V = np.zeros((p + 1, q + 1))
    V[0, 0] = xi
    for i in range(1, p + 1):
        if band < 0 or i <= band:
            V[i, 0] = third * V[i - 1, 0] * gap
    for j in range(1, q + 1):
        if band < 0 or j <= band:
            V[0, j] = third * V[0, j - 1] * gap
    for i in range(1, p + 1):
        lo = 1 if band < 0 else max(1, i - band)
        hi = q if band < 0 else min(q, i + band)
        for j in range(lo, hi + 1):
            em = 1.0 if ca[i - 1] == cb[j - 1] else gap
            V[i, j] = third * (V[i - 1, j] * gap + V[i - 1, j - 1] * em + V[i, j - 1] * gap)
    return V[p, q]


def _twed_arrays(s: TimeSeries):
    av = np.vstack([np.zeros((1, s.dim)), s.values])
    at = np.concatenate([[0.0], s.timestamps])
    return av, at


def stwk_me_log(a, b, kernel_id: KernelId) -> float:
    """Natural log of the multiplicative exponentiated kernel value.

    Stable for long series, where the direct product of per-cell factors
    underflows double precision.
    """
    return _stwk_dispatch(a, b, kernel_id, logdom=True)


def stwk_me(a, b, kernel_id: KernelId, *, method: str = "direct") -> float:
    """Multiplicative exponentiated summative kernel.

    ``method="log"`` evaluates in the log domain and exponentiates, which
    agrees with the direct product to near machine precision on short
    series and stays finite on long ones.
    """
    if method == "direct":
        return _stwk_dispatch(a, b, kernel_id, logdom=False)
    if method == "log":
        return math.exp(stwk_me_log(a, b, kernel_id))
    raise ValueError("method must be 'direct' or 'log'")


def _stwk_dispatch(a, b, kernel_id: KernelId, logdom: bool) -> float:
    fam = kernel_id.family
    if fam not in MULTIPLICATIVE_FAMILIES:
        raise ValueError(f"{fam!r} is not a multiplicative exponentiated family")
    kp = kernel_id.params
    cp = kernel_id.cost_params()
    xi = kernel_id.xi
    if fam == "stwk_lev":
        ca, cb = _symbol_codes(a, b)
        h = _band(ca.shape[0], cb.shape[0], kp.corridor_halfwidth)
        return float(_stwk_lev(ca, cb, kp.nu_prime, h, xi, logdom))
    a, b = as_series(a), as_series(b)
    h = _band(len(a), len(b), kp.corridor_halfwidth)
    if fam == "stwk_dtw":
        return float(_stwk_dtw(a.values, b.values, kp.nu_prime, cp.norm, h, xi, logdom))
    if fam == "stwk_erp":
        dim = a.dim if len(a) else (b.dim if len(b) else 1)
        g = cp.g_vector(dim)
        av = a.values if len(a) else np.empty((0, dim))
        bv = b.values if len(b) else np.empty((0, dim))
        return float(_stwk_erp(av, bv, g, kp.nu_prime, cp.norm, h, xi, logdom))
    av, at = _twed_arrays(a)
    bv, bt = _twed_arrays(b)
    return float(
        _stwk_twed(av, at, bv, bt, kp.nu_prime, cp.lam, cp.nu, cp.norm, h, xi, logdom)
    )


def local_costs(kernel_id: KernelId, a, b) -> Callable:
    """Return ``cost(op, i, j)`` -- the elastic edit cost the family reads.

    Exposed so the path-enumeration oracle can weight steps with exactly
    the same local quantities as the recursion.
    """
    fam = kernel_id.family
    cp = kernel_id.cost_params()
    if fam == "stwk_lev":
        sa = a.symbols if isinstance(a, SymbolSequence) else tuple(a)
        sb = b.symbols if isinstance(b, SymbolSequence) else tuple(b)

        def cost(op, i, j):
            if op == MATCH:
                return 0.0 if sa[i - 1] == sb[j - 1] else 1.0
            return 1.0

        return cost
    a, b = as_series(a), as_series(b)
    if fam == "stwk_dtw":
        def cost(op, i, j):
            return _lp(a.values[i - 1], b.values[j - 1], cp.norm)

        return cost
    if fam == "stwk_erp":
        g = cp.g_vector(a.dim if len(a) else 1)

        def cost(op, i, j):
            if op == DELETE:
                return _lp(a.values[i - 1], g, cp.norm)
            if op == INSERT:
                return _lp(g, b.values[j - 1], cp.norm)
            return _lp(a.values[i - 1], b.values[j - 1], cp.norm)

        return cost
    if fam == "stwk_twed":
        av, at = _twed_arrays(a)
        bv, bt = _twed_arrays(b)

        def cost(op, i, j):
            if op == DELETE:
                return _lp(av[i], av[i - 1], cp.norm) + cp.nu * abs(at[i] - at[i - 1]) + cp.lam
            if op == INSERT:
                return _lp(bv[j], bv[j - 1], cp.norm) + cp.nu * abs(bt[j] - bt[j - 1]) + cp.lam
            return (
                _lp(av[i], bv[j], cp.norm) + cp.nu * abs(at[i] - bt[j])
                + _lp(av[i - 1], bv[j - 1], cp.norm) + cp.nu * abs(at[i - 1] - bt[j - 1])
            )

        return cost
    raise ValueError(f"no local costs for family {fam!r}")


def dtw_branch_valid(op, i, j):
    """DTW has no gap cost against the empty prefix, so paths never ride
    row or column zero."""
    if op == DELETE:
        return j >= 1
    if op == INSERT:
        return i >= 1
    return True


# ---------------------------------------------------------------------------
# additive time-warp inner products (numba)
# ---------------------------------------------------------------------------


@njit(cache=True, nogil=True)
def _twip(av, at, bv, bt, nu, variant, band):
    p, q = av.shape[0], bv.shape[0]
    e = np.exp(-nu)
    if variant == 1:
        norm = 1.0 / 3.0
        cd = 1.0
    else:
        norm = 1.0 / (1.0 + 2.0 * e)
        cd = e
    V = np.zeros((p + 1, q + 1))
    for i in range(1, p + 1):
        lo = 1 if band < 0 else max(1, i - band)
        hi = q if band < 0 else min(q, i + band)
        for j in range(lo, hi + 1):
            dot = 0.0
            for m in range(av.shape[1]):
                dot += av[i - 1, m] * bv[j - 1, m]
            w = np.exp(-nu * abs(at[i - 1] - bt[j - 1])) * dot
            V[i, j] = norm * (cd * V[i - 1, j] + V[i - 1, j - 1] + w + cd * V[i, j - 1])
    return V[p, q]


def _twip_call(a, b, nu: float, variant: int, corridor: Optional[int] = None) -> float:
    a, b = as_series(a), as_series(b)
    if len(a) == 0 or len(b) == 0:
        return 0.0
    if a.dim != b.dim:
        from .errors import DimensionMismatchError

        raise DimensionMismatchError(f"value dims {a.dim} vs {b.dim}")
    h = _band(len(a), len(b), corridor)
    return float(_twip(a.values, a.timestamps, b.values, b.timestamps, nu, variant, h))


def twip1(a, b, nu: float, corridor: Optional[int] = None) -> float:
    """First additive time-warp inner product (uniform branch weights)."""
    return _twip_call(a, b, nu, 1, corridor)


def twip2(a, b, nu: float, corridor: Optional[int] = None) -> float:
    """Second additive time-warp inner product.

    Delete/insert branches are damped by ``exp(-nu)``; as ``nu`` grows the
    value converges to the Euclidean dot product on equal-length,
    uniformly sampled series.
    """
    return _twip_call(a, b, nu, 2, corridor)


def twip_distance(a, b, nu: float, variant: int = 2) -> float:
    """Norm distance induced by a time-warp inner product.

    Formed on the difference series, so both inputs must share length and
    timestamps.
    """
    a, b = as_series(a), as_series(b)
    diff = add(a, scale(-1.0, b))
    fn = twip1 if variant == 1 else twip2
    val = fn(diff, diff, nu)
    return math.sqrt(max(val, 0.0))


def euclid_dot(a, b) -> float:
    """Euclidean inner product of two equal-length series."""
    a, b = as_series(a), as_series(b)
    if len(a) != len(b):
        raise LengthMismatchError(f"|a|={len(a)} but |b|={len(b)}")
    return float(np.sum(a.values * b.values))


def kernel_value(a, b, kernel_id: KernelId) -> float:
    """Evaluate any kernel family on a pair of sequences."""
    fam = kernel_id.family
    if fam in MULTIPLICATIVE_FAMILIES:
        return stwk_me(a, b, kernel_id)
    if fam == "twip1":
        return twip1(a, b, kernel_id.params.nu, kernel_id.params.corridor_halfwidth)
    if fam == "twip2":
        return twip2(a, b, kernel_id.params.nu, kernel_id.params.corridor_halfwidth)
    return euclid_dot(a, b)
