"""Command-line interface.

Four subcommands:

* ``distance``  -- evaluate one measure on two series given inline;
* ``gram``      -- build (or reuse) a Gram matrix over a dataset or a
  built-in fixture set, and write the spectrum report;
* ``classify``  -- run the 1-NN or SVM protocol on train/test data and
  append a results CSV row;
* ``verify``    -- run the golden/property check suite.

Series arguments accept a bare digit token (``012`` becomes the numeric
series 0,1,2 with timestamps 1..3), a comma-separated float list, or
``spikes:A`` / ``spikes:B`` for the built-in two-spike demo pair.  Symbol
measures (``lev``) treat bare tokens as character sequences.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import datasets
from .classify import (
    GridSpec,
    MEASURES,
    append_result_row,
    run_knn_protocol,
    run_svm_protocol,
)
from .datasets import LabeledDataset, parse_ucr, reference_sequence_sets, two_spike_pair
from .distances import BOUNDARY_ANCHORED, BOUNDARY_GAPS, CostParams, dtw, erp, levenshtein, twed
from .errors import TimewarpError
from .gram import (
    GramMatrix,
    build_gram,
    definiteness_report,
    load_gram,
    save_gram,
    sidecar_path,
)
from .kernels import KernelId, KernelParams, kernel_value, twip1, twip2, twip_distance, euclid_dot
from .series import SymbolSequence, TimeSeries


def _parse_series(token: str) -> TimeSeries:
    if token == "spikes:A":
        return two_spike_pair()[0]
    if token == "spikes:B":
        return two_spike_pair()[1]
    if "," in token:
        return TimeSeries([float(t) for t in token.split(",") if t != ""])
    return TimeSeries([float(c) for c in token])


def _cost_params(args) -> CostParams:
    return CostParams(
        norm=args.norm,
        g=args.g,
        lam=args.lam,
        nu=args.nu if args.nu is not None else 1.0,
        corridor_halfwidth=args.corridor,
    )


def _kernel_id(args) -> KernelId:
    return KernelId(
        args.measure,
        KernelParams(
            nu_prime=args.nu_prime if args.nu_prime is not None else 1.0,
            nu=args.nu if args.nu is not None else 1.0,
            base_cost_params=_cost_params(args),
            corridor_halfwidth=args.corridor,
        ),
    )


def cmd_distance(args) -> int:
    measure = args.measure
    if measure == "lev":
        value = levenshtein(SymbolSequence(args.series_a), SymbolSequence(args.series_b),
                            corridor=args.corridor)
    else:
        a = _parse_series(args.series_a)
        b = _parse_series(args.series_b)
        boundary = BOUNDARY_ANCHORED if args.anchored else BOUNDARY_GAPS
        if measure == "dtw":
            value = dtw(a, b, _cost_params(args))
        elif measure == "erp":
            value = erp(a, b, _cost_params(args), boundary=boundary)
        elif measure == "twed":
            value = twed(a, b, _cost_params(args), boundary=boundary)
        elif measure == "twip1":
            nu = args.nu if args.nu is not None else 1.0
            value = twip_distance(a, b, nu, 1) if args.as_distance else twip1(a, b, nu)
        elif measure == "twip2":
            nu = args.nu if args.nu is not None else 1.0
            value = twip_distance(a, b, nu, 2) if args.as_distance else twip2(a, b, nu)
        elif measure == "euclid_dot":
            value = euclid_dot(a, b)
        elif measure.startswith("stwk_"):
            value = kernel_value(a, b, _kernel_id(args))
        else:
            raise TimewarpError(f"unknown measure {measure!r}")
    print(f"{value:.12g}")
    return 0


_FIXTURE_MEASURES = {
    "lev-strings": ("lev", "lev_strings"),
    "digit-ladder": ("dtw", "digit_ladder"),
    "three-digit-twed": ("twed", "three_digit"),
    "three-digit-erp": ("erp", "three_digit"),
}


def _fixture_gram(name: str, args) -> GramMatrix:
    measure, attr = _FIXTURE_MEASURES[name]
    items = getattr(reference_sequence_sets(), attr)
    if measure == "lev":
        fn = levenshtein
    elif measure == "dtw":
        fn = lambda a, b: dtw(a, b, CostParams(norm=1))
    elif measure == "erp":
        fn = lambda a, b: erp(a, b, CostParams(norm=1, g=0.0), boundary=BOUNDARY_ANCHORED)
    else:
        fn = lambda a, b: twed(a, b, CostParams(norm=1, lam=0.0, nu=1.0),
                               boundary=BOUNDARY_ANCHORED)
    return build_gram(items, fn, kernel=measure, params={"fixture": name})


def cmd_gram(args) -> int:
    out_csv = Path(args.out)
    if out_csv.exists() and sidecar_path(out_csv).exists() and not args.force:
        gram = load_gram(out_csv)
        print(f"cache hit: reusing {out_csv}")
    else:
        if args.fixture:
            gram = _fixture_gram(args.fixture, args)
        else:
            ds = parse_ucr(args.data)
            if args.measure.startswith("stwk_") or args.measure in ("twip1", "twip2", "euclid_dot"):
                kid = _kernel_id(args)
                fn = lambda a, b: kernel_value(a, b, kid)
            else:
                from .classify import pair_distance

                params = {"norm": args.norm, "g": args.g, "lam": args.lam}
                if args.nu is not None:
                    params["nu"] = args.nu
                if args.nu_prime is not None:
                    params["nu_prime"] = args.nu_prime
                fn = lambda a, b: pair_distance(args.measure, a, b, params)
            gram = build_gram(ds.items, fn, kernel=args.measure,
                              params={"norm": args.norm}, threads=args.threads)
        save_gram(gram, out_csv)
    report = definiteness_report(gram, tau=args.tau)
    report_path = Path(str(out_csv) + ".report.json")
    report_path.write_text(json.dumps(report.to_dict(), indent=2) + "\n")
    print(f"n={gram.n} kernel={gram.kernel} pev={report.pev_count} "
          f"delta_p={report.delta_p:.2f}% verdict={report.verdict}")
    print(f"wrote {out_csv} and {report_path}")
    return 0


def _load_split(spec: str, split: str, seed: int) -> LabeledDataset:
    if spec.startswith("synth:"):
        kv = dict(part.split("=") for part in spec[len("synth:"):].split(",") if part)
        return datasets.synth_gaussian_classes(
            classes=int(kv.get("classes", 3)),
            per_class=int(kv.get("per_class", 20)),
            length=int(kv.get("length", 40)),
            noise=float(kv.get("noise", 0.1)),
            seed=int(kv.get("seed", seed)),
            split=split,
            spike_prob=float(kv.get("spike_prob", 0.0)),
            spike_amp=float(kv.get("spike_amp", 2.5)),
        )
    return parse_ucr(spec, split=split)


def cmd_classify(args) -> int:
    train = _load_split(args.train, "train", args.seed)
    test = _load_split(args.test, "test", args.seed + 1)
    if args.grid:
        grid = GridSpec.from_json(args.grid)
    else:
        grid = GridSpec.default_for(args.measure)
    if args.c_reg is not None or args.sigma2 is not None:
        # fixed hyper-parameters collapse the search to a single point
        grid = GridSpec(
            c_grid=(args.c_reg,) if args.c_reg is not None else grid.c_grid,
            sigma2_grid=(args.sigma2,) if args.sigma2 is not None else grid.sigma2_grid,
            measure_grid=grid.measure_grid,
        )
    if args.classifier == "1nn":
        result = run_knn_protocol(train, test, args.measure, grid)
    else:
        result = run_svm_protocol(train, test, args.measure, grid,
                                  folds=args.folds, seed=args.seed)
    row = append_result_row(args.out, args.dataset_name, result, seed=args.seed)
    print(row)
    return 0


def cmd_verify(args) -> int:
    from .verify import run_checks

    outcomes = run_checks(only=args.only)
    failed = [o for o in outcomes if not o.passed]
    print(f"{len(outcomes) - len(failed)}/{len(outcomes)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="timewarp",
                                     description="Elastic distances and time-warp kernels")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_measure_args(p, default="dtw"):
        p.add_argument("--measure", default=default, choices=sorted(set(MEASURES + ("lev", "ed"))))
        p.add_argument("--nu", type=float, default=None, help="stiffness (twed/twip)")
        p.add_argument("--nu-prime", dest="nu_prime", type=float, default=None,
                       help="stiffness of exponentiated kernels")
        p.add_argument("--lambda", dest="lam", type=float, default=1.0, help="gap penalty")
        p.add_argument("--g", type=float, default=None, help="gap constant")
        p.add_argument("--norm", type=int, default=1, choices=(1, 2))
        p.add_argument("--corridor", type=int, default=None, help="band half-width")

    p_dist = sub.add_parser("distance", help="evaluate a measure on two series")
    p_dist.add_argument("series_a")
    p_dist.add_argument("series_b")
    add_measure_args(p_dist)
    p_dist.add_argument("--anchored", action="store_true",
                        help="forbid edits against the empty prefix (fixture convention)")
    p_dist.add_argument("--as-distance", action="store_true",
                        help="report the induced distance instead of the inner product")
    p_dist.set_defaults(fn=cmd_distance)

    p_gram = sub.add_parser("gram", help="build a Gram matrix and its spectrum report")
    src = p_gram.add_mutually_exclusive_group(required=True)
    src.add_argument("--data", help="labelled series file")
    src.add_argument("--fixture", choices=sorted(_FIXTURE_MEASURES))
    add_measure_args(p_gram)
    p_gram.add_argument("--out", required=True, help="output CSV path")
    p_gram.add_argument("--tau", type=float, default=1e-9)
    p_gram.add_argument("--threads", type=int, default=1)
    p_gram.add_argument("--force", action="store_true", help="recompute even on cache hit")
    p_gram.set_defaults(fn=cmd_gram)

    p_cls = sub.add_parser("classify", help="run a classification protocol")
    p_cls.add_argument("--train", required=True,
                       help="file path or a synth:k=v,... generator string")
    p_cls.add_argument("--test", required=True)
    p_cls.add_argument("--classifier", choices=("1nn", "svm"), default="1nn")
    add_measure_args(p_cls)
    p_cls.add_argument("--grid", help="JSON grid file")
    p_cls.add_argument("--C", dest="c_reg", type=float, default=None,
                       help="fix the SVM trade-off instead of searching")
    p_cls.add_argument("--sigma2", type=float, default=None,
                       help="fix the RBF bandwidth instead of searching")
    p_cls.add_argument("--folds", type=int, default=5)
    p_cls.add_argument("--seed", type=int, default=0)
    p_cls.add_argument("--out", default="results.csv")
    p_cls.add_argument("--dataset-name", default="dataset")
    p_cls.set_defaults(fn=cmd_classify)

    p_ver = sub.add_parser("verify", help="run the golden/property checks")
    p_ver.add_argument("--only", default=None, help="substring filter on check names")
    p_ver.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (TimewarpError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
