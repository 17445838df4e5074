"""Gram matrices, symmetric eigendecomposition and definiteness diagnostics.

A Gram matrix collects pairwise kernel or distance values over a finite
dataset.  Definiteness is judged from the spectrum: the number of positive
eigenvalues beyond a relative threshold (``pev_count``) and the percentage
weight of the positive eigenvalues other than the largest (``delta_p``).
A matrix of pairwise distances whose negation is conditionally positive
definite shows exactly one positive eigenvalue, so ``pev_count == 1`` with
``delta_p == 0`` is the "well-behaved distance" signature.

Eigenvalues come from a cyclic Jacobi rotation sweep, which is simple,
unconditionally stable on symmetric input, and O(n^3) -- fine for the
matrix sizes this library targets.  The test suite cross-checks it against
an independent eigensolver and against ``Q diag Q^T`` reconstruction.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import DimensionMismatchError, GramBuildError, NotSymmetricError


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric pairwise-value matrix with provenance."""

    entries: np.ndarray
    kernel: str = "unknown"
    params: dict = field(default_factory=dict)
    item_ids: tuple = ()

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=np.float64)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatchError(f"Gram matrix must be square, got {m.shape}")
        object.__setattr__(self, "entries", m)
        if not self.item_ids:
            object.__setattr__(self, "item_ids", tuple(str(i) for i in range(m.shape[0])))

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class SpectrumReport:
    """Spectral definiteness diagnostics of one Gram matrix."""

    eigenvalues: tuple
    pev_count: int
    delta_p: float
    verdict: str
    threshold: float

    def to_dict(self) -> dict:
        return {
            "eigenvalues": list(self.eigenvalues),
            "pev_count": self.pev_count,
            "delta_p": self.delta_p,
            "verdict": self.verdict,
            "threshold": self.threshold,
        }


def build_gram(items: Sequence, measure: Callable, *, kernel: str = "unknown",
               params: Optional[dict] = None, item_ids: Optional[Sequence[str]] = None,
               threads: int = 1) -> GramMatrix:
    """Fill the symmetric matrix ``measure(items[i], items[j])``.

    Each upper-triangle entry is computed once and mirrored.  Measure
    failures are re-raised with the offending item pair attached.  With
    ``threads > 1`` the upper-triangle cells are evaluated by a thread
    pool; worthwhile only when the measure releases the GIL (the compiled
    distance/kernel loops do).
    """
    n = len(items)
    m = np.zeros((n, n))
    pairs = [(i, j) for i in range(n) for j in range(i, n)]

    def cell(ij):
        i, j = ij
        try:
            return i, j, float(measure(items[i], items[j]))
        except Exception as exc:  # noqa: BLE001 - rewrapped with context
            raise GramBuildError(i, j, exc) from exc

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(cell, pairs))
    else:
        results = [cell(ij) for ij in pairs]
    for i, j, v in results:
        m[i, j] = v
        m[j, i] = v
    ids = tuple(item_ids) if item_ids is not None else tuple(str(i) for i in range(n))
    return GramMatrix(m, kernel=kernel, params=dict(params or {}), item_ids=ids)


# ---------------------------------------------------------------------------
# cyclic Jacobi eigendecomposition
# ---------------------------------------------------------------------------


def eigen_symmetric(m, *, want_vectors: bool = False, sym_tol: float = 1e-12,
                    off_tol: float = 1e-12, max_sweeps: int = 64):
    """Full real spectrum of a symmetric matrix, sorted descending.

    Cyclic Jacobi: sweep all (p, q) pairs, rotating each to zero until the
    off-diagonal Frobenius norm falls below ``off_tol`` relative to the
    matrix Frobenius norm.  Returns the eigenvalues, or ``(values, Q)``
    with orthogonal ``Q`` (columns are eigenvectors) when requested.
    """
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"matrix must be square, got {a.shape}")
    n = a.shape[0]
    scale = max(np.abs(a).max(), 1.0) if n else 1.0
    if n and np.abs(a - a.T).max() > sym_tol * scale:
        raise NotSymmetricError("matrix is not symmetric within tolerance")
    a = (a + a.T) / 2.0
    q = np.eye(n)
    fro = np.linalg.norm(a)
    if fro == 0.0 or n < 2:
        vals = np.sort(np.diag(a))[::-1]
        return (vals, q) if want_vectors else vals
    target = off_tol * fro
    for _ in range(max_sweeps):
        off = math.sqrt(max(np.sum(a * a) - np.sum(np.diag(a) ** 2), 0.0))
        if off <= target:
            break
        for p in range(n - 1):
            for r in range(p + 1, n):
                apr = a[p, r]
                if abs(apr) <= target / n:
                    continue
                app, arr = a[p, p], a[r, r]
                theta = 0.5 * math.atan2(2.0 * apr, app - arr)
                c, s = math.cos(theta), math.sin(theta)
                rot_p = c * a[p, :] + s * a[r, :]
                rot_r = -s * a[p, :] + c * a[r, :]
                a[p, :], a[r, :] = rot_p, rot_r
                col_p = c * a[:, p] + s * a[:, r]
                col_r = -s * a[:, p] + c * a[:, r]
                a[:, p], a[:, r] = col_p, col_r
                a[p, r] = a[r, p] = 0.0
                qp = c * q[:, p] + s * q[:, r]
                qr = -s * q[:, p] + c * q[:, r]
                q[:, p], q[:, r] = qp, qr
    vals = np.diag(a).copy()
    order = np.argsort(vals)[::-1]
    vals = vals[order]
    if want_vectors:
        return vals, q[:, order]
    return vals


def quadratic_form(m, c) -> float:
    """``c^T m c`` in double precision."""
    a = np.asarray(m, dtype=np.float64)
    v = np.asarray(c, dtype=np.float64).ravel()
    if a.shape[0] != v.shape[0]:
        raise DimensionMismatchError(f"matrix n={a.shape[0]} vs vector dim {v.shape[0]}")
    return float(v @ a @ v)


def definiteness_report(g, tau: float = 1e-9) -> SpectrumReport:
    """Spectral verdict plus the ``pev_count`` / ``delta_p`` diagnostics.

    ``tau`` is relative: an eigenvalue is counted positive when it exceeds
    ``tau * max|G|``.  ``delta_p`` is the percentage weight of the positive
    eigenvalues other than the largest, and is 0 whenever at most one
    eigenvalue is positive.  The verdict is ``CPD-candidate`` for the
    single-positive-eigenvalue signature that conditionally negative
    definite matrices (negated CPD kernels) exhibit; the spectrum alone
    cannot prove conditional definiteness, hence "candidate".
    """
    entries = g.entries if isinstance(g, GramMatrix) else np.asarray(g, dtype=np.float64)
    vals = eigen_symmetric(entries)
    scale = max(np.abs(entries).max(), 0.0)
    thr = tau * scale if scale > 0 else tau
    pos = vals[vals > thr]
    pev = int(pos.size)
    if pev <= 1:
        delta = 0.0
    else:
        total = float(np.sum(pos))
        delta = 100.0 * (total - float(pos.max())) / total
    if vals.size == 0 or vals.min() >= -thr:
        verdict = "PSD"
    elif vals.max() <= thr:
        verdict = "NSD"
    elif pev == 1:
        verdict = "CPD-candidate"
    else:
        verdict = "indefinite"
    return SpectrumReport(
        eigenvalues=tuple(float(v) for v in vals),
        pev_count=pev,
        delta_p=float(delta),
        verdict=verdict,
        threshold=float(thr),
    )


@dataclass(frozen=True)
class WitnessPair:
    """Zero-sum coefficient vectors with opposite-sign quadratic forms."""

    positive: np.ndarray
    negative: np.ndarray
    positive_form: float
    negative_form: float


def indefiniteness_witness_search(g, trials: int = 10_000, seed: int = 0,
                                  tau: float = 1e-9) -> Optional[WitnessPair]:
    """Search for zero-sum vectors refuting conditional definiteness.

    Tries the zero-sum projections of the eigenvectors first, then random
    zero-sum vectors.  Returns a pair with ``c^T G c > tau_abs`` and
    ``d^T G d < -tau_abs`` if both signs are found; ``None`` otherwise.
    Absence of a witness is not a proof of conditional definiteness.
    """
    entries = g.entries if isinstance(g, GramMatrix) else np.asarray(g, dtype=np.float64)
    n = entries.shape[0]
    if n < 2:
        return None
    thr = tau * max(np.abs(entries).max(), 1e-300)
    pos = neg = None

    def consider(c):
        nonlocal pos, neg
        c = c - c.mean()
        norm = np.linalg.norm(c)
        if norm < 1e-14:
            return
        c = c / norm
        f = quadratic_form(entries, c)
        if f > thr and pos is None:
            pos = (c, f)
        elif f < -thr and neg is None:
            neg = (c, f)

    _, vecs = eigen_symmetric(entries, want_vectors=True)
    for k in range(n):
        consider(vecs[:, k].copy())
        if pos and neg:
            break
    rng = np.random.default_rng(seed)
    t = 0
    while (pos is None or neg is None) and t < trials:
        consider(rng.normal(size=n))
        t += 1
    if pos is None or neg is None:
        return None
    return WitnessPair(pos[0], neg[0], pos[1], neg[1])


# ---------------------------------------------------------------------------
# persistence
# ---------------------------------------------------------------------------


def sidecar_path(csv_path) -> Path:
    return Path(str(csv_path) + ".json")


def save_gram(g: GramMatrix, csv_path) -> None:
    """Write entries as plain comma-separated decimals plus a JSON sidecar."""
    csv_path = Path(csv_path)
    with csv_path.open("w") as fh:
        for row in g.entries:
            fh.write(",".join(repr(float(x)) for x in row))
            fh.write("\n")
    meta = {"kernel": g.kernel, "params": g.params, "items": list(g.item_ids), "n": g.n}
    sidecar_path(csv_path).write_text(json.dumps(meta, indent=2) + "\n")


def load_gram(csv_path) -> GramMatrix:
    csv_path = Path(csv_path)
    rows = []
    with csv_path.open() as fh:
        for line in fh:
            line = line.strip()
            if line:
                rows.append([float(tok) for tok in line.split(",")])
    meta = json.loads(sidecar_path(csv_path).read_text())
    return GramMatrix(
        np.array(rows),
        kernel=meta.get("kernel", "unknown"),
        params=meta.get("params", {}),
        item_ids=tuple(meta.get("items", [])),
    )
