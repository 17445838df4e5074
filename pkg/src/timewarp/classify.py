"""Nearest-neighbour and SVM classification protocols over elastic measures.

Two pipelines:

* 1-NN with leave-one-out selection of the measure's meta-parameters on
  the training set;
* a from-scratch SMO-trained SVM with one-vs-one multiclass voting, using
  a Gaussian RBF kernel on a per-measure distance, with C / sigma^2 (and
  measure parameters) chosen by stratified cross-validated grid search.

Every measure is reduced to a pairwise distance:

* elastic and rigid distances are used as-is;
* inner-product families use their induced norm distance;
* multiplicative summative kernels use the feature-space distance
  ``sqrt(2 - 2 k~)`` where ``k~`` is the cosine-normalised kernel,
  evaluated in the log domain so long series cannot underflow.

That makes the Gaussian wrapper uniform across measures: distances with
no definiteness guarantee give the plain distance-substituting kernel,
while kernel-induced distances keep the SVM problem convex.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .datasets import LabeledDataset
from .distances import BOUNDARY_GAPS, CostParams, dtw, erp, euclidean, twed
from .errors import TimewarpError
from .kernels import (
    KernelId,
    KernelParams,
    MULTIPLICATIVE_FAMILIES,
    stwk_me_log,
    twip_distance,
)

DISTANCE_MEASURES = ("ed", "dtw", "erp", "twed", "twip1", "twip2")
KERNEL_MEASURES = MULTIPLICATIVE_FAMILIES + ("euclid_dot",)
MEASURES = DISTANCE_MEASURES + KERNEL_MEASURES

#: Powers of two used for the SVM regularisation and bandwidth grids.
POW2_GRID = tuple(float(2.0 ** e) for e in range(-5, 11))

#: Default per-measure meta-parameter grids.
MEASURE_GRIDS = {
    "ed": {},
    "euclid_dot": {},
    "dtw": {},
    "stwk_dtw": {"nu_prime": tuple(1.0 / x for x in
                                   (1e-5, 1e-4, 1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0))},
    "stwk_lev": {"nu_prime": tuple(1.0 / x for x in
                                   (1e-5, 1e-4, 1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0))},
    "erp": {"g": tuple(round(-3.0 + 0.01 * k, 2) for k in range(601))},
    "stwk_erp": {"nu_prime": tuple(1.0 / x for x in
                                   (1e-5, 1e-4, 1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0))},
    "twed": {"nu": (1e-5, 1e-4, 1e-3, 1e-2, 1e-1, 1.0),
             "lam": (0.0, 0.25, 0.5, 0.75, 1.0)},
    "stwk_twed": {"nu_prime": tuple(1.0 / x for x in
                                    (1e-5, 1e-4, 1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0))},
    "twip1": {"nu": (100.0, 10.0, 1.0, 0.1, 0.01, 1e-3, 1e-4, 1e-5)},
    "twip2": {"nu": (100.0, 10.0, 1.0, 0.1, 0.01, 1e-3, 1e-4, 1e-5)},
}


@dataclass(frozen=True)
class GridSpec:
    """Search grids for the classification protocols."""

    c_grid: tuple = POW2_GRID
    sigma2_grid: tuple = POW2_GRID
    measure_grid: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.c_grid or not self.sigma2_grid:
            raise ValueError("C and sigma2 grids must be non-empty")

    @classmethod
    def default_for(cls, measure: str, **overrides) -> "GridSpec":
        if measure not in MEASURES:
            raise ValueError(f"unknown measure {measure!r}")
        grid = dict(MEASURE_GRIDS.get(measure, {}))
        grid.update({k: tuple(v) for k, v in overrides.pop("measure_grid", {}).items()})
        return cls(measure_grid=grid, **overrides)

    @classmethod
    def from_json(cls, path) -> "GridSpec":
        data = json.loads(Path(path).read_text())
        return cls(
            c_grid=tuple(data.get("C", POW2_GRID)),
            sigma2_grid=tuple(data.get("sigma2", POW2_GRID)),
            measure_grid={k: tuple(v) for k, v in data.get("measure", {}).items()},
        )

    def measure_points(self) -> list:
        """Cartesian product of the measure grid, in declaration order."""
        if not self.measure_grid:
            return [{}]
        keys = list(self.measure_grid.keys())
        return [dict(zip(keys, combo))
                for combo in itertools.product(*(self.measure_grid[k] for k in keys))]


# ---------------------------------------------------------------------------
# measures as pairwise distances
# ---------------------------------------------------------------------------


def _cost_params(params: dict) -> CostParams:
    return CostParams(
        norm=int(params.get("norm", 1)),
        g=params.get("g"),
        lam=float(params.get("lam", 1.0)),
        nu=float(params.get("nu", 1.0)),
        corridor_halfwidth=params.get("corridor"),
    )


def _kernel_id(measure: str, params: dict) -> KernelId:
    return KernelId(
        measure,
        KernelParams(
            nu_prime=float(params.get("nu_prime", 1.0)),
            nu=float(params.get("nu", 1.0)),
            base_cost_params=_cost_params(params),
            corridor_halfwidth=params.get("corridor"),
        ),
    )


def pair_distance(measure: str, a, b, params: Optional[dict] = None) -> float:
    """Distance between two series under any supported measure."""
    params = params or {}
    if measure == "ed" or measure == "euclid_dot":
        return euclidean(a, b)
    if measure == "dtw":
        return dtw(a, b, _cost_params({"norm": 2, **params}))
    if measure == "erp":
        return erp(a, b, _cost_params(params), boundary=params.get("boundary", BOUNDARY_GAPS))
    if measure == "twed":
        return twed(a, b, _cost_params(params), boundary=params.get("boundary", BOUNDARY_GAPS))
    if measure in ("twip1", "twip2"):
        return twip_distance(a, b, float(params.get("nu", 1.0)),
                             variant=1 if measure == "twip1" else 2)
    if measure in MULTIPLICATIVE_FAMILIES:
        kid = _kernel_id(measure, params)
        laa = stwk_me_log(a, a, kid)
        lbb = stwk_me_log(b, b, kid)
        lab = stwk_me_log(a, b, kid)
        return math.sqrt(max(0.0, 2.0 - 2.0 * math.exp(lab - 0.5 * (laa + lbb))))
    raise ValueError(f"unknown measure {measure!r}")


def cross_distances(measure: str, items_a: Sequence, items_b: Optional[Sequence] = None,
                    params: Optional[dict] = None) -> np.ndarray:
    """Pairwise distance matrix; symmetric fast path when ``items_b`` is None."""
    params = params or {}
    if measure in MULTIPLICATIVE_FAMILIES:
        return _stwk_cross(measure, items_a, items_b, params)
    if items_b is None:
        n = len(items_a)
        d = np.zeros((n, n))
        for i in range(n):
            for j in range(i + 1, n):
                d[i, j] = d[j, i] = pair_distance(measure, items_a[i], items_a[j], params)
        return d
    d = np.zeros((len(items_a), len(items_b)))
    for i, a in enumerate(items_a):
        for j, b in enumerate(items_b):
            d[i, j] = pair_distance(measure, a, b, params)
    return d


def _stwk_cross(measure, items_a, items_b, params):
    # feature-space distance from the cosine-normalised kernel, log domain
    kid = _kernel_id(measure, params)
    if items_b is None:
        n = len(items_a)
        self_log = np.array([stwk_me_log(x, x, kid) for x in items_a])
        d = np.zeros((n, n))
        for i in range(n):
            for j in range(i + 1, n):
                lab = stwk_me_log(items_a[i], items_a[j], kid)
                khat = math.exp(lab - 0.5 * (self_log[i] + self_log[j]))
                d[i, j] = d[j, i] = math.sqrt(max(0.0, 2.0 - 2.0 * khat))
        return d
    log_a = np.array([stwk_me_log(x, x, kid) for x in items_a])
    log_b = np.array([stwk_me_log(x, x, kid) for x in items_b])
    d = np.zeros((len(items_a), len(items_b)))
    for i, a in enumerate(items_a):
        for j, b in enumerate(items_b):
            lab = stwk_me_log(a, b, kid)
            khat = math.exp(lab - 0.5 * (log_a[i] + log_b[j]))
            d[i, j] = math.sqrt(max(0.0, 2.0 - 2.0 * khat))
    return d


def rbf_kernel(measure_value: float, sigma2: float) -> float:
    """Gaussian radial basis wrapper ``exp(-d^2 / (2 sigma^2))``."""
    if sigma2 <= 0:
        raise ValueError("sigma2 must be > 0")
    return math.exp(-(measure_value ** 2) / (2.0 * sigma2))


def _rbf_matrix(d: np.ndarray, sigma2: float) -> np.ndarray:
    if sigma2 <= 0:
        raise ValueError("sigma2 must be > 0")
    return np.exp(-(d ** 2) / (2.0 * sigma2))


# ---------------------------------------------------------------------------
# 1-NN with leave-one-out meta-parameter search
# ---------------------------------------------------------------------------


def knn1_classify(train: LabeledDataset, query, measure: str,
                  params: Optional[dict] = None) -> int:
    """Label of the nearest training item; ties go to the lowest index."""
    dists = [pair_distance(measure, item, query, params) for item in train.items]
    return train.labels[int(np.argmin(dists))]


def _loo_error(d: np.ndarray, labels: Sequence[int]) -> float:
    n = d.shape[0]
    wrong = 0
    masked = d.copy()
    np.fill_diagonal(masked, np.inf)
    for i in range(n):
        j = int(np.argmin(masked[i]))
        if labels[j] != labels[i]:
            wrong += 1
    return wrong / n


@dataclass(frozen=True)
class LooResult:
    params: dict
    error_rate: float
    table: tuple = ()


def loo_metaparam_search(train: LabeledDataset, measure: str,
                         grid: Optional[GridSpec] = None) -> LooResult:
    """Exhaustive grid scan minimising the leave-one-out 1-NN error.

    Ties between grid points with equal error: for ``twed`` the point with
    the highest ``nu`` wins, then the highest ``lam``; every other measure
    keeps the first point in grid order.
    """
    if len(train) < 2:
        raise TimewarpError("leave-one-out needs at least two training items")
    grid = grid or GridSpec.default_for(measure)
    points = grid.measure_points()
    best = None
    rows = []
    for idx, point in enumerate(points):
        d = cross_distances(measure, train.items, None, point)
        err = _loo_error(d, train.labels)
        rows.append((dict(point), err))
        if measure == "twed":
            key = (-err, point.get("nu", 0.0), point.get("lam", 0.0))
            better = best is None or key > best[0]
        else:
            key = (-err,)
            better = best is None or key > best[0]
        if better:
            best = (key, dict(point), err)
    return LooResult(params=best[1], error_rate=best[2], table=tuple(rows))


# ---------------------------------------------------------------------------
# SMO binary solver
# ---------------------------------------------------------------------------


@dataclass
class BinaryMachine:
    """One trained binary sub-problem (labels +1 for the lower class id)."""

    indices: np.ndarray
    alpha: np.ndarray
    y: np.ndarray
    bias: float
    converged: bool
    iterations: int
    dual_objective: float
    objective_history: Optional[list] = None

    @property
    def support_indices(self) -> np.ndarray:
        return self.indices[self.alpha > 0]

    def coefficients(self) -> np.ndarray:
        return self.alpha * self.y


def smo_train_binary(kernel: np.ndarray, y: Sequence[int], c_reg: float,
                     tol: float = 1e-3, max_iter: int = 1_000_000,
                     record_objective: bool = False) -> BinaryMachine:
    """Sequential minimal optimisation with maximal-violating-pair selection.

    Solves ``min 1/2 a^T Q a - e^T a`` with ``0 <= a <= C`` and
    ``y^T a = 0``, ``Q_ij = y_i y_j K_ij``.  On positive semidefinite
    kernels every pair update increases the (maximised) dual objective;
    on indefinite kernels the curvature is clamped and convergence is not
    guaranteed, in which case the best iterate is returned with
    ``converged=False``.
    """
    y = np.asarray(y, dtype=np.float64)
    n = y.shape[0]
    if c_reg <= 0:
        raise ValueError("C must be > 0")
    k = np.asarray(kernel, dtype=np.float64)
    alpha = np.zeros(n)
    grad = -np.ones(n)  # gradient of the minimised objective at alpha = 0
    history = [] if record_objective else None
    it = 0
    converged = False
    while it < max_iter:
        neg_yg = -y * grad
        up_mask = ((y > 0) & (alpha < c_reg)) | ((y < 0) & (alpha > 0))
        low_mask = ((y > 0) & (alpha > 0)) | ((y < 0) & (alpha < c_reg))
        if not up_mask.any() or not low_mask.any():
            converged = True
            break
        i = int(np.flatnonzero(up_mask)[np.argmax(neg_yg[up_mask])])
        j = int(np.flatnonzero(low_mask)[np.argmin(neg_yg[low_mask])])
        violation = neg_yg[i] - neg_yg[j]
        if violation <= tol:
            converged = True
            break
        quad = k[i, i] + k[j, j] - 2.0 * k[i, j]
        if quad <= 1e-12:
            quad = 1e-12
        # unconstrained step along the feasible pair direction
        step = violation / quad
        # box constraints for the pair (in terms of y*alpha coordinates)
        if y[i] > 0:
            step = min(step, c_reg - alpha[i])
        else:
            step = min(step, alpha[i])
        if y[j] > 0:
            step = min(step, alpha[j])
        else:
            step = min(step, c_reg - alpha[j])
        if step <= 0:
            converged = True
            break
        alpha[i] += y[i] * step
        alpha[j] -= y[j] * step
        grad += step * y * (k[:, i] - k[:, j])
        it += 1
        if history is not None:
            dual = -(0.5 * float(alpha @ grad) - 0.5 * float(alpha.sum()))
            history.append(dual)
    dual = -(0.5 * float(alpha @ grad) - 0.5 * float(alpha.sum()))
    neg_yg = -y * grad
    up_mask = ((y > 0) & (alpha < c_reg)) | ((y < 0) & (alpha > 0))
    low_mask = ((y > 0) & (alpha > 0)) | ((y < 0) & (alpha < c_reg))
    hi = neg_yg[up_mask].max() if up_mask.any() else 0.0
    lo = neg_yg[low_mask].min() if low_mask.any() else 0.0
    # at optimality every free vector has -y*grad equal to the bias
    bias = (hi + lo) / 2.0
    return BinaryMachine(
        indices=np.arange(n),
        alpha=alpha,
        y=y,
        bias=bias,
        converged=converged,
        iterations=it,
        dual_objective=dual,
        objective_history=history,
    )


def machine_decision(machine: BinaryMachine, kernel_cols: np.ndarray) -> np.ndarray:
    """Decision values given kernel columns against the machine's items."""
    return kernel_cols @ (machine.alpha * machine.y) + machine.bias


# ---------------------------------------------------------------------------
# one-vs-one SVM
# ---------------------------------------------------------------------------


@dataclass
class SvmModel:
    measure: str
    params: dict
    c_reg: float
    sigma2: float
    train: LabeledDataset
    machines: dict
    converged: bool

    def export(self) -> dict:
        out = {
            "measure": self.measure,
            "params": self.params,
            "C": self.c_reg,
            "sigma2": self.sigma2,
            "classes": sorted(set(self.train.labels)),
            "machines": {},
        }
        for (a, b), mach in self.machines.items():
            sv = mach.alpha > 0
            out["machines"][f"{a}|{b}"] = {
                "support_indices": mach.indices[sv].tolist(),
                "coefficients": mach.coefficients()[sv].tolist(),
                "bias": mach.bias,
                "converged": mach.converged,
            }
        return out


def _train_machines(kernel: np.ndarray, labels: Sequence[int], c_reg: float,
                    tol: float, max_iter: int) -> dict:
    classes = sorted(set(labels))
    labels = np.asarray(labels)
    machines = {}
    for a, b in itertools.combinations(classes, 2):
        idx = np.flatnonzero((labels == a) | (labels == b))
        y = np.where(labels[idx] == a, 1.0, -1.0)
        sub = kernel[np.ix_(idx, idx)]
        mach = smo_train_binary(sub, y, c_reg, tol=tol, max_iter=max_iter)
        mach.indices = idx
        machines[(a, b)] = mach
    return machines


def _vote(machines: dict, kernel_rows: np.ndarray, classes: Sequence[int]) -> np.ndarray:
    n = kernel_rows.shape[0]
    votes = np.zeros((n, max(classes) + 1), dtype=np.int64)
    for (a, b), mach in machines.items():
        dec = machine_decision(mach, kernel_rows[:, mach.indices])
        winner = np.where(dec >= 0, a, b)
        for r in range(n):
            votes[r, winner[r]] += 1
    # ties resolved toward the lowest class id by argmax over class order
    order = np.array(sorted(classes))
    return order[np.argmax(votes[:, order], axis=1)]


def svm_train(train: LabeledDataset, measure: str, params: dict, c_reg: float,
              sigma2: float, tol: float = 1e-3, max_iter: int = 1_000_000,
              distances: Optional[np.ndarray] = None) -> SvmModel:
    """Train one-vs-one RBF SVMs over a measure-induced distance."""
    if train.n_classes < 2:
        raise TimewarpError("svm needs at least two classes")
    d = distances if distances is not None else cross_distances(measure, train.items, None, params)
    kernel = _rbf_matrix(d, sigma2)
    machines = _train_machines(kernel, train.labels, c_reg, tol, max_iter)
    return SvmModel(
        measure=measure,
        params=dict(params),
        c_reg=c_reg,
        sigma2=sigma2,
        train=train,
        machines=machines,
        converged=all(m.converged for m in machines.values()),
    )


def svm_predict(model: SvmModel, items: Sequence,
                distances: Optional[np.ndarray] = None) -> np.ndarray:
    """Predict labels for ``items`` (rows) against the model's train set."""
    d = distances if distances is not None else cross_distances(
        model.measure, items, model.train.items, model.params
    )
    kernel = _rbf_matrix(d, model.sigma2)
    return _vote(model.machines, kernel, sorted(set(model.train.labels)))


def evaluate(predicted: Sequence[int], actual: Sequence[int]) -> float:
    """Error rate in percent, reported to two decimals."""
    predicted = np.asarray(predicted)
    actual = np.asarray(actual)
    if predicted.shape != actual.shape:
        raise ValueError("prediction/label length mismatch")
    if predicted.size == 0:
        return 0.0
    return round(100.0 * float(np.mean(predicted != actual)), 2)


# ---------------------------------------------------------------------------
# stratified cross-validated grid search
# ---------------------------------------------------------------------------


def stratified_folds(labels: Sequence[int], folds: int, seed: int = 0) -> np.ndarray:
    """Fold id per item; each class spread round-robin after a seeded shuffle."""
    labels = np.asarray(labels)
    rng = np.random.default_rng(seed)
    assignment = np.zeros(labels.shape[0], dtype=np.int64)
    for cls in sorted(set(labels.tolist())):
        idx = np.flatnonzero(labels == cls)
        rng.shuffle(idx)
        for pos, item in enumerate(idx):
            assignment[item] = pos % folds
    return assignment


@dataclass(frozen=True)
class CvResult:
    params: dict
    c_reg: float
    sigma2: float
    cv_error: float
    folds: int


def crossval_grid_search(train: LabeledDataset, measure: str,
                         grid: Optional[GridSpec] = None, folds: int = 5,
                         seed: int = 0, tol: float = 1e-3,
                         max_iter: int = 1_000_000) -> CvResult:
    """Average-fold-error minimisation over (measure params, C, sigma2).

    Folds are stratified with a fixed seed.  If some class has fewer
    members than ``folds``, the fold count drops to that class count.
    Ties prefer smaller C, then smaller sigma2, then earlier measure
    points.
    """
    grid = grid or GridSpec.default_for(measure)
    min_class = min(train.class_counts().values())
    folds = max(2, min(folds, min_class))
    fold_of = stratified_folds(train.labels, folds, seed)
    labels = np.asarray(train.labels)
    best = None
    for point in grid.measure_points():
        d = cross_distances(measure, train.items, None, point)
        for sigma2 in grid.sigma2_grid:
            kernel = _rbf_matrix(d, sigma2)
            for c_reg in grid.c_grid:
                errs = []
                for f in range(folds):
                    tr = np.flatnonzero(fold_of != f)
                    te = np.flatnonzero(fold_of == f)
                    if len(set(labels[tr].tolist())) < 2 or te.size == 0:
                        continue
                    machines = _train_machines(
                        kernel[np.ix_(tr, tr)], labels[tr], c_reg, tol, max_iter
                    )
                    pred = _vote(machines, kernel[np.ix_(te, tr)],
                                 sorted(set(labels[tr].tolist())))
                    errs.append(float(np.mean(pred != labels[te])))
                cv_err = float(np.mean(errs)) if errs else 1.0
                key = (cv_err, c_reg, sigma2)
                if best is None or key < best[0]:
                    best = (key, dict(point), c_reg, sigma2, cv_err)
    return CvResult(params=best[1], c_reg=best[2], sigma2=best[3],
                    cv_error=round(100.0 * best[4], 2), folds=folds)


# ---------------------------------------------------------------------------
# end-to-end protocols and result reporting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProtocolResult:
    classifier: str
    measure: str
    params: dict
    c_reg: Optional[float]
    sigma2: Optional[float]
    train_score: float
    test_score: float
    extra: dict = field(default_factory=dict)


def run_knn_protocol(train: LabeledDataset, test: LabeledDataset, measure: str,
                     grid: Optional[GridSpec] = None) -> ProtocolResult:
    """LOO meta-parameter search, then 1-NN evaluation on the test split."""
    if len(train) >= 2:
        search = loo_metaparam_search(train, measure, grid)
        params, train_err = search.params, round(100.0 * search.error_rate, 2)
    else:
        grid = grid or GridSpec.default_for(measure)
        params, train_err = grid.measure_points()[0], float("nan")
    d = cross_distances(measure, test.items, train.items, params)
    nearest = np.argmin(d, axis=1)
    pred = np.asarray(train.labels)[nearest]
    return ProtocolResult(
        classifier="1nn", measure=measure, params=params, c_reg=None, sigma2=None,
        train_score=train_err, test_score=evaluate(pred, np.asarray(test.labels)),
    )


def run_svm_protocol(train: LabeledDataset, test: LabeledDataset, measure: str,
                     grid: Optional[GridSpec] = None, folds: int = 5, seed: int = 0,
                     tol: float = 1e-3, max_iter: int = 1_000_000) -> ProtocolResult:
    """CV grid search, final training, and test evaluation.

    The train-side score reported is the cross-validation error of the
    selected point; the resubstitution (training) error of the final
    model is included under ``extra["train_error"]`` since conventions
    differ on which of the two a "train score" means.
    """
    cv = crossval_grid_search(train, measure, grid, folds=folds, seed=seed,
                              tol=tol, max_iter=max_iter)
    d_train = cross_distances(measure, train.items, None, cv.params)
    model = svm_train(train, measure, cv.params, cv.c_reg, cv.sigma2,
                      tol=tol, max_iter=max_iter, distances=d_train)
    train_pred = svm_predict(model, train.items, distances=d_train)
    d_test = cross_distances(measure, test.items, train.items, cv.params)
    pred = svm_predict(model, test.items, distances=d_test)
    return ProtocolResult(
        classifier="svm", measure=measure, params=cv.params, c_reg=cv.c_reg,
        sigma2=cv.sigma2, train_score=cv.cv_error,
        test_score=evaluate(pred, np.asarray(test.labels)),
        extra={
            "train_error": evaluate(train_pred, np.asarray(train.labels)),
            "converged": model.converged,
            "folds": cv.folds,
        },
    )


RESULTS_HEADER = "# timewarp results v1: dataset,classifier,measure,params,C,sigma2,train_score,test_score,seed"


def append_result_row(path, dataset: str, result: ProtocolResult, seed: int = 0) -> str:
    """Append one CSV row (creating the file with its header comment)."""
    path = Path(path)
    row = ",".join([
        dataset,
        result.classifier,
        result.measure,
        json.dumps(result.params, sort_keys=True).replace(",", ";"),
        "" if result.c_reg is None else f"{result.c_reg:g}",
        "" if result.sigma2 is None else f"{result.sigma2:g}",
        f"{result.train_score:.2f}",
        f"{result.test_score:.2f}",
        str(seed),
    ])
    new = not path.exists()
    with path.open("a") as fh:
        if new:
            fh.write(RESULTS_HEADER + "\n")
        fh.write(row + "\n")
    return row


def export_model_json(model: SvmModel, path) -> None:
    Path(path).write_text(json.dumps(model.export(), indent=2) + "\n")
