"""Command-line front end.  Every command prints (or writes) a JSON report.

Exit codes: 0 success, 2 a strict hypothesis or guarantee was violated,
1 any other error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import bounds, constructions, cyclotomy
from .errors import ParseError, RSInsdelError, StrictViolation
from .evalset import MODES, STRICT, DifferenceSetT, EvaluationSet
from .field import build_field
from .insdel import BRUTEFORCE_CAP, code_min_distance_bruteforce, rs2_min_distance
from .intersections import FULLSCAN_CAP, max_intersection
from .ntheory import prime_power

ENV_PREFIX = "RSINSDEL_"
CHECKS = ("distance", "profile", "bounds", "diffmult")


class GuaranteeViolated(RSInsdelError):
    pass


def _env(name: str, default):
    raw = os.environ.get(ENV_PREFIX + name.upper())
    if raw is None:
        return default
    return type(default)(raw) if default is not None else raw


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("caps must be positive")
    return value


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def load_artifact(path: str):
    """Read an EvaluationSet or DifferenceSetT JSON file."""
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise ParseError(f"{path}: expected a JSON object")
    if "field" in data:
        return EvaluationSet.from_json(data)
    if "f" in data:
        return DifferenceSetT.from_json(data)
    raise ParseError(f"{path}: neither an evaluation set nor a difference set")


# --------------------------------------------------------------------------
# commands


def cmd_construct(args) -> dict:
    kind = args.kind
    if kind == "lemma4":
        return constructions.lemma4_set(args.p, args.t1, args.t2, args.mode, args.seed).to_json()
    if kind == "theorem2":
        return constructions.theorem2_set(args.p, args.t, args.mode, args.seed).to_json()
    if kind == "theorem3":
        return constructions.theorem3_set(args.p, args.s, args.f, args.mode, args.seed).to_json()
    if kind == "singer":
        return constructions.singer_set(args.r, args.seed).to_json()
    raise ValueError(f"unknown construction {kind!r}")


def _guarantee(name: str, value, bound, holds: bool, enforced: bool) -> dict:
    return {"name": name, "value": value, "bound": bound, "holds": holds, "enforced": enforced}


def _construction_guarantees(S: EvaluationSet, d_min, max_size) -> list[dict]:
    prov = S.provenance
    kind = prov.get("construction")
    strict = S.guarantee_status == STRICT
    n = S.n
    out = []
    if kind == "lemma4":
        cap = n // 2 + 1
        if max_size is not None:
            out.append(_guarantee("max_intersection <= n/2 + 1", max_size, cap, max_size <= cap, strict))
        if d_min is not None:
            out.append(_guarantee("d_min >= n - 2", d_min, n - 2, d_min >= n - 2, strict))
    elif kind == "theorem2":
        cap = prov["overlap_bound"]
        if max_size is not None:
            out.append(_guarantee("max_intersection <= recursive union bound", max_size, cap, max_size <= cap, strict))
    elif kind == "theorem3":
        if max_size is not None:
            out.append(_guarantee("max_intersection <= 2", max_size, 2, max_size <= 2, strict))
        if d_min is not None and n >= 3:
            out.append(_guarantee("d_min == 2n - 4", d_min, 2 * n - 4, d_min == 2 * n - 4, strict))
    return out


def verify_set(S: EvaluationSet, checks) -> dict:
    report: dict = {
        "n": S.n,
        "q": S.field.q,
        "construction": S.provenance.get("construction", "manual"),
        "guarantee_status": S.guarantee_status,
    }
    guarantees = []
    d_min = max_size = None
    if "distance" in checks:
        dist = rs2_min_distance(S)
        d_min = dist.d_min
        report["distance"] = dist.to_json()
    if "profile" in checks:
        prof = max_intersection(S, "candidates")
        max_size = prof.max_size
        report["profile"] = prof.to_json()
        if d_min is not None:
            lower = 2 * S.n - 2 * max_size
            guarantees.append(_guarantee("d_min >= 2n - 2*max_intersection", d_min, lower, d_min >= lower, True))
    if "bounds" in checks:
        br = bounds.bound_report(S.n, 2, S.field.q, d_min) if S.n >= 2 else None
        if br is not None:
            report["bounds"] = br.to_json()
            if d_min is not None:
                guarantees.append(_guarantee("d_min <= binding bound", d_min, br.binding, br.compliant, True))
    guarantees += _construction_guarantees(S, d_min, max_size)
    report["guarantees"] = guarantees
    report["compliant"] = all(g["holds"] for g in guarantees if g["enforced"])
    return report


def verify_difference_set(D: DifferenceSetT) -> dict:
    mult = constructions.verify_difference_multiplicity(D.elements, D.f)
    ok = mult == D.max_diff_multiplicity
    return {
        "f": D.f,
        "size": len(D),
        "max_diff_multiplicity": mult,
        "guarantees": [_guarantee("certified multiplicity reproduces", mult, D.max_diff_multiplicity, ok, True)],
        "compliant": ok,
    }


def cmd_verify(args) -> dict:
    art = load_artifact(args.file)
    checks = args.checks or list(CHECKS)
    if isinstance(art, DifferenceSetT):
        report = verify_difference_set(art)
    else:
        report = verify_set(art, checks)
    return report


def cmd_distance(args) -> dict:
    S = load_artifact(args.file)
    if args.method == "bruteforce" or args.k != 2:
        return code_min_distance_bruteforce(S, args.k, args.cap_bruteforce).to_json()
    return rs2_min_distance(S).to_json()


def cmd_profile(args) -> dict:
    S = load_artifact(args.file)
    return max_intersection(S, args.scan, cap=args.cap_fullscan).to_json()


def _field_from_args(args):
    if args.q is not None:
        p, s = prime_power(args.q)
    else:
        p, s = args.p, args.s
    return build_field(p, s, seed=args.seed)


def cmd_cyclotomic(args):
    field = _field_from_args(args)
    e, f = args.e, args.f
    if e is None and f is not None:
        e = (field.q - 1) // f
    if f is None and e is not None:
        f = (field.q - 1) // e
    if e is None:
        raise ValueError("give --e or --f")
    report = cyclotomy.verify_lemma8(field, e, f)
    if args.format == "csv":
        return report.table.to_csv()
    out = report.to_json()
    out["row_sums"] = [sum(row) for row in report.table.values]
    out["row_sums_expected"] = [report.table.row_sum_expected(a) for a in range(e)]
    return out


def cmd_condition(args) -> dict:
    return cyclotomy.condition_i(args.p, args.f).to_json()


def cmd_bounds(args) -> dict:
    return bounds.bound_report(args.n, args.k, args.q, args.d).to_json()


def cmd_singer(args) -> dict:
    return constructions.singer_set(args.r, args.seed).to_json()


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=MODES, default=_env("mode", STRICT))
    common.add_argument("--seed", type=int, default=_env("seed", 0))
    common.add_argument("--cap-bruteforce", type=_positive, default=_env("cap_bruteforce", BRUTEFORCE_CAP))
    common.add_argument("--cap-fullscan", type=_positive, default=_env("cap_fullscan", FULLSCAN_CAP))
    common.add_argument("--out", default=_env("out", None))
    common.add_argument("--format", choices=("json", "csv"), default=_env("format", "json"))

    parser = argparse.ArgumentParser(
        prog="rsinsdel",
        description="Evaluation sets for 2-dimensional Reed-Solomon insdel codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build an evaluation set or difference set")
    p.add_argument("kind", choices=("lemma4", "theorem2", "theorem3", "singer"))
    p.add_argument("--p", type=int)
    p.add_argument("--t1", type=int)
    p.add_argument("--t2", type=int)
    p.add_argument("--t", type=int, nargs="+", help="degree list for theorem2")
    p.add_argument("--s", type=int)
    p.add_argument("--f", type=int)
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check distance, profile and bounds of a set file")
    p.add_argument("file")
    p.add_argument("--checks", nargs="+", choices=CHECKS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("distance", parents=[common], help="exact minimum insdel distance")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--method", choices=("affine", "bruteforce"), default="affine")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("profile", parents=[common], help="max |delta*S ∩ (S+gamma)|")
    p.add_argument("file")
    p.add_argument("--scan", choices=("candidates", "full_scan"), default="candidates")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("cyclotomic", parents=[common], help="table of cyclotomic numbers")
    p.add_argument("--q", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--e", type=int)
    p.add_argument("--f", type=int)
    p.set_defaults(func=cmd_cyclotomic)

    p = sub.add_parser("condition", parents=[common], help="exact check of 14^f < p^(2 ord_f(p))")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    p.set_defaults(func=cmd_condition)

    p = sub.add_parser("bounds", parents=[common], help="Singleton-type bounds and capability")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("singer", parents=[common], help="planar difference set in Z_{r^2+r+1}")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_singer)
    return parser


def _require(args, *names) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise ValueError(f"{args.kind} needs {' '.join(missing)}")


_CONSTRUCT_PARAMS = {
    "lemma4": ("p", "t1", "t2"),
    "theorem2": ("p", "t"),
    "theorem3": ("p", "s", "f"),
    "singer": ("r",),
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "construct":
            _require(args, *_CONSTRUCT_PARAMS[args.kind])
        result = args.func(args)
        _emit(result if isinstance(result, str) else dumps(result), args.out)
        if isinstance(result, dict) and result.get("compliant") is False:
            raise GuaranteeViolated("a checked guarantee does not hold; see the report")
    except (StrictViolation, GuaranteeViolated) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RSInsdelError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
