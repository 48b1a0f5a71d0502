"""Command-line harness: generate instances, run suites, cross-check oracles.

Commands
--------
verify   run an inequality suite on random hypothesis-satisfying instances
compute  evaluate one operator expression on matrices from files
hh       emit the refined Hermite-Hadamard record and its grid verdict
oracle   compare the matrix pipeline against scalar closed forms on
         simultaneously diagonal inputs

Exit status: 0 when every check passes, 1 on a chain/oracle failure, 2 on
usage or domain errors.  Reports are byte-reproducible for fixed flags;
seeds are explicit flags only.
"""

from __future__ import annotations

import argparse
import dataclasses
import itertools
import json
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__
from .bounds import (
    BOUND_KINDS,
    SUITE_NAMES,
    SUITES,
    ChainParams,
    bound,
    chain_check,
    scalar_generator,
)
from .entropy import (
    geo_mean,
    rel_entropy,
    rel_entropy_alpha,
    rel_entropy_alpha_beta,
    weighted_means,
)
from .gen import GenConfig, random_diag_pair, random_partner, random_spd
from .hermite import grid_verify, hh_record
from .matcore import DEFAULT_LOEWNER_TOL, OperatorError
from .matio import load_matrix, matrix_to_obj

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

ORACLE_CONTRACT = 1e-10


def _parse_dims(text: str) -> list[int]:
    dims: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part[1:]:
            lo_s, hi_s = part.split("-", 1)
            lo, hi = int(lo_s), int(hi_s)
            if hi < lo:
                raise OperatorError(f"bad dim range {part!r}")
            dims.extend(range(lo, hi + 1))
        elif part:
            dims.append(int(part))
    if not dims:
        raise OperatorError(f"no dims in {text!r}")
    return dims


def _parse_floats(text: str) -> list[float]:
    vals = [float(p) for p in text.split(",") if p.strip()]
    if not vals:
        raise OperatorError(f"no values in {text!r}")
    return vals


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Resolved flags for ``verify`` / ``oracle`` runs."""

    suite: str = ""
    trials: int = 100
    tol: float = DEFAULT_LOEWNER_TOL
    dims: tuple[int, ...] = (4,)
    field: str = "real"
    seed: int = 0
    spectrum_lo: float = 0.1
    spectrum_hi: float = 10.0
    alphas: tuple[float, ...] = (0.0,)
    betas: tuple[float, ...] = (1.0,)
    deltas: tuple[float, ...] = (1.0,)
    lams: tuple[float, ...] = (0.5,)
    jobs: int = 1

    def combos(self):
        return list(itertools.product(self.dims, self.alphas, self.betas,
                                      self.deltas, self.lams))

    def to_json_dict(self) -> dict:
        out = dataclasses.asdict(self)
        for key in ("dims", "alphas", "betas", "deltas", "lams"):
            out[key] = list(out[key])
        del out["jobs"]  # execution detail; reports are thread-count invariant
        return out


def _config_from_args(args, suite: str = "") -> RunConfig:
    return RunConfig(
        suite=suite,
        trials=args.trials,
        tol=args.tol,
        dims=tuple(_parse_dims(args.dim)),
        field=args.field,
        seed=args.seed,
        spectrum_lo=args.spec_lo,
        spectrum_hi=args.spec_hi,
        alphas=tuple(_parse_floats(args.alpha)),
        betas=tuple(_parse_floats(args.beta)),
        deltas=tuple(_parse_floats(args.delta)),
        lams=tuple(_parse_floats(args.lam)),
        jobs=args.jobs,
    )


def _run_trial(cfg: RunConfig, trial: int):
    spec = SUITES[cfg.suite]
    dim, alpha, beta, delta, lam = cfg.combos()[trial % len(cfg.combos())]
    gcfg = GenConfig(dim=dim, field=cfg.field, spectrum_lo=cfg.spectrum_lo,
                     spectrum_hi=cfg.spectrum_hi, master_seed=cfg.seed)
    params = ChainParams(alpha=alpha, beta=beta, delta=delta, lam=lam)
    eff = spec.effective(params)
    a = random_spd(gcfg, trial)
    if spec.relation == "none":
        b = random_spd(gcfg, trial, salt=1)
    else:
        b = random_partner(a, eff.beta, eff.delta, spec.relation, gcfg, trial)
    return chain_check(spec, a, b, params, tol=cfg.tol, trial_seed=trial)


def run_suite(cfg: RunConfig) -> dict:
    """Run ``cfg.trials`` instances through one suite; aggregate a report.

    Trials are pure functions of ``(seed, trial index)``; with ``jobs > 1``
    they are evaluated on a thread pool and reassembled by index, so the
    report does not depend on scheduling.
    """
    indices = range(cfg.trials)
    if cfg.jobs > 1 and cfg.trials > 1:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            reports = list(pool.map(lambda t: _run_trial(cfg, t), indices))
    else:
        reports = [_run_trial(cfg, t) for t in indices]

    passed = sum(1 for r in reports if r.passed)
    worst: dict[str, float] = {}
    for r in reports:
        for link in r.links:
            key = f"{link.lhs} <= {link.rhs}"
            if key not in worst or link.margin < worst[key]:
                worst[key] = link.margin
    summary = {
        "suite": cfg.suite,
        "trials": cfg.trials,
        "passed": passed,
        "failed": cfg.trials - passed,
        "worst_margins": worst,
        "all_pass": passed == cfg.trials,
    }
    if cfg.trials == 0:
        summary["note"] = "0 trials requested; vacuous pass"
    return {
        "tool_version": __version__,
        "config": cfg.to_json_dict(),
        "summary": summary,
        "trials": [r.to_json_dict() for r in reports],
    }


# ---------------------------------------------------------------------------
# oracle: diagonal pairs, matrix pipeline vs scalar closed forms

_ORACLE_ENTROPIES = ("S", "S_a", "S_ab", "geomean")


def _scalar_means(a: float, b: float, lam: float):
    return (1.0 / ((1.0 - lam) / a + lam / b),
            a ** (1.0 - lam) * b ** lam,
            (1.0 - lam) * a + lam * b)


def _oracle_deviation(mat, expected: np.ndarray) -> float:
    diff = np.max(np.abs(mat.data - np.diag(expected).astype(mat.data.dtype)))
    return float(diff / max(1.0, float(np.max(np.abs(expected)))))


def _oracle_trial(cfg: RunConfig, trial: int) -> dict:
    dim, alpha, beta, delta, lam = cfg.combos()[trial % len(cfg.combos())]
    if delta < 1.0:
        delta = 1.0 / delta  # primed generators only need delta > 0
    gcfg = GenConfig(dim=dim, field=cfg.field, spectrum_lo=cfg.spectrum_lo,
                     spectrum_hi=cfg.spectrum_hi, master_seed=cfg.seed)
    a, b = random_diag_pair(gcfg, trial)
    avals = np.diagonal(a.data).real
    bvals = np.diagonal(b.data).real
    x = bvals / avals ** beta
    devs: dict[str, float] = {}
    for kind in BOUND_KINDS:
        g = scalar_generator(kind, alpha=alpha, delta=delta, lam=lam)
        expected = avals ** beta * g(x)
        got = bound(kind, a, b, alpha=alpha, beta=beta, delta=delta, lam=lam)
        devs[kind] = _oracle_deviation(got, expected)
    devs["S_ab"] = _oracle_deviation(
        rel_entropy_alpha_beta(a, b, alpha, beta),
        avals ** beta * scalar_generator("S", alpha=alpha)(x))
    devs["S_a"] = _oracle_deviation(
        rel_entropy_alpha(a, b, alpha),
        avals * scalar_generator("S", alpha=alpha)(bvals / avals))
    devs["S"] = _oracle_deviation(rel_entropy(a, b),
                                  avals * np.log(bvals / avals))
    devs["geomean"] = _oracle_deviation(geo_mean(a, b, alpha, beta),
                                        avals ** beta * x ** alpha)
    har, geo, ari = weighted_means(a, b, lam)
    eh, eg, ea = _scalar_means(avals, bvals, lam)
    devs["harmonic_mean"] = _oracle_deviation(har, eh)
    devs["geometric_mean"] = _oracle_deviation(geo, eg)
    devs["arithmetic_mean"] = _oracle_deviation(ari, ea)
    return {
        "trial_seed": trial,
        "params": {"alpha": alpha, "beta": beta, "delta": delta,
                   "lambda": lam, "dim": dim},
        "max_rel_dev": max(devs.values()),
        "deviations": devs,
    }


def _reference_table() -> dict:
    # scalar bound values at a=1, b=4, alpha=0, beta=1 (x = 4)
    table = {}
    for kind in ("I", "II", "S", "III", "V"):
        table[kind] = float(scalar_generator(kind, alpha=0.0)(np.array([4.0]))[0])
    return {"a": 1.0, "b": 4.0, "alpha": 0.0, "beta": 1.0, "terms": table}


def oracle_compare(cfg: RunConfig) -> dict:
    """Diagonal-pair oracle: matrix path vs scalar closed forms."""
    trials = [_oracle_trial(cfg, t) for t in range(cfg.trials)]
    max_dev = max((t["max_rel_dev"] for t in trials), default=0.0)
    return {
        "tool_version": __version__,
        "config": cfg.to_json_dict(),
        "summary": {
            "trials": cfg.trials,
            "max_rel_dev": max_dev,
            "contract": ORACLE_CONTRACT,
            "all_pass": max_dev <= ORACLE_CONTRACT,
        },
        "reference_table": _reference_table(),
        "trials": trials,
    }


# ---------------------------------------------------------------------------
# compute

COMPUTE_EXPRS = ("S", "S_a", "S_ab", "geomean", "means",
                 "perspective") + BOUND_KINDS


def _compute(args) -> dict:
    a = load_matrix(args.A)
    b = load_matrix(args.B)
    alpha, beta = args.alpha_f, args.beta_f
    delta, lam = args.delta_f, args.lam_f
    expr = args.expr
    if expr == "S":
        return matrix_to_obj(rel_entropy(a, b))
    if expr == "S_a":
        return matrix_to_obj(rel_entropy_alpha(a, b, alpha))
    if expr == "S_ab":
        return matrix_to_obj(rel_entropy_alpha_beta(a, b, alpha, beta))
    if expr == "geomean":
        return matrix_to_obj(geo_mean(a, b, alpha, beta))
    if expr == "means":
        har, geo, ari = weighted_means(a, b, lam)
        return {"harmonic": matrix_to_obj(har), "geometric": matrix_to_obj(geo),
                "arithmetic": matrix_to_obj(ari)}
    if expr == "perspective":
        if args.f is None:
            raise OperatorError("--expr perspective needs --f KIND "
                                "(a registry generator; h is t**beta)")
        return matrix_to_obj(bound(args.f, a, b, alpha=alpha, beta=beta,
                                   delta=delta, lam=lam))
    return matrix_to_obj(bound(expr, a, b, alpha=alpha, beta=beta,
                               delta=delta, lam=lam))


# ---------------------------------------------------------------------------
# wiring

def _emit(payload: dict, out_path: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _print_verify_summary(report: dict) -> None:
    s = report["summary"]
    print(f"suite {s['suite']}: {s['passed']}/{s['trials']} trials pass "
          f"(tol {report['config']['tol']:.0e})")
    if "note" in s:
        print(f"  note: {s['note']}")
    for key in sorted(s["worst_margins"]):
        print(f"  worst {key:<32s} {s['worst_margins'][key]:+.6e}")


def _add_gen_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--dim", default="4",
                   help="dimension list: '4', '1-8', or '2,4,8'")
    p.add_argument("--field", choices=("real", "complex"), default="real")
    p.add_argument("--seed", type=int, default=0,
                   help="master seed (explicit; no environment fallback)")
    p.add_argument("--spec-lo", type=float, default=0.1, dest="spec_lo")
    p.add_argument("--spec-hi", type=float, default=10.0, dest="spec_hi")
    p.add_argument("--tol", type=float, default=DEFAULT_LOEWNER_TOL)
    p.add_argument("--alpha", default="0")
    p.add_argument("--beta", default="1")
    p.add_argument("--delta", default="1")
    p.add_argument("--lam", "--lambda", default="0.5", dest="lam")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None, help="write the JSON report here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opentropy",
        description="Verify operator entropy inequality chains in the "
                    "Loewner order on random positive definite matrices.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run an inequality suite")
    p_verify.add_argument("--suite", required=True, choices=SUITE_NAMES)
    _add_gen_flags(p_verify)

    p_compute = sub.add_parser("compute", help="evaluate one expression")
    p_compute.add_argument("--expr", required=True, choices=COMPUTE_EXPRS)
    p_compute.add_argument("--A", required=True, help="matrix file")
    p_compute.add_argument("--B", required=True, help="matrix file")
    p_compute.add_argument("--alpha", type=float, default=0.0, dest="alpha_f")
    p_compute.add_argument("--beta", type=float, default=1.0, dest="beta_f")
    p_compute.add_argument("--delta", type=float, default=1.0, dest="delta_f")
    p_compute.add_argument("--lam", "--lambda", type=float, default=0.5,
                           dest="lam_f")
    p_compute.add_argument("--f", default=None,
                           help="generator kind for --expr perspective")
    p_compute.add_argument("--out", default=None)

    p_hh = sub.add_parser("hh", help="refined Hermite-Hadamard record")
    p_hh.add_argument("--alpha", type=float, required=True)
    p_hh.add_argument("--x", type=float, required=True)
    p_hh.add_argument("--grid", type=int, default=1001)
    p_hh.add_argument("--out", default=None)

    p_oracle = sub.add_parser("oracle", help="diagonal scalar-oracle check")
    _add_gen_flags(p_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return EXIT_OK if code in (0, None) else int(code)
    try:
        if args.command == "verify":
            cfg = _config_from_args(args, suite=args.suite)
            report = run_suite(cfg)
            _print_verify_summary(report)
            if args.out:
                _emit(report, args.out)
            return EXIT_OK if report["summary"]["all_pass"] else EXIT_FAIL
        if args.command == "compute":
            payload = _compute(args)
            _emit(payload, args.out)
            return EXIT_OK
        if args.command == "hh":
            rec = hh_record(args.alpha, args.x)
            verdict = grid_verify(args.alpha, args.x, args.grid)
            payload = {"record": rec.to_json_dict(),
                       "grid": verdict.to_json_dict()}
            _emit(payload, args.out)
            return EXIT_OK if verdict.passed else EXIT_FAIL
        if args.command == "oracle":
            cfg = _config_from_args(args)
            report = oracle_compare(cfg)
            s = report["summary"]
            print(f"oracle: {s['trials']} diagonal trials, max relative "
                  f"deviation {s['max_rel_dev']:.3e} "
                  f"(contract {s['contract']:.0e})")
            if args.out:
                _emit(report, args.out)
            return EXIT_OK if s["all_pass"] else EXIT_FAIL
    except OperatorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    raise AssertionError("unreachable command")


if __name__ == "__main__":
    sys.exit(main())
