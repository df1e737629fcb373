"""Command-line driver: one subcommand per invocation.

Exit codes: 0 success, 2 usage or parse error, 3 precondition violated
(non-maximal model handed to a consistency analysis).
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import random
import sys

from . import io as sio
from .atlas import SplitModelSpec, berezinian, build_projective_atlas, classify_maximal, super_jacobian
from .audit import paper_check
from .consistency import consistency_classify, prop46_type_analysis
from .families import TYPE_NAMES, random_field, seed_from_env
from .lagrangian import Superfield, good_field_residual
from .laurent import LaurentFn
from .scalars import ComplexScalar, parse_complex

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION = 0, 2, 3

CLASSIFY_COLUMNS = ("model", "lambda1", "lambda2", "maximal", "computed_maximal", "reasons", "berezinian")
PAPER_CHECK_COLUMNS = ("item", "status", "layer", "layer_status", "terms")
CONSISTENCY_COLUMNS = ("name", "model", "policy", "good_residual", "necessary_ok", "consistent", "must_vanish")
GOODFIELD_COLUMNS = ("name", "model", "policy", "pair", "good", "good_residual")
SCAN_COLUMNS = ("index", "model", "policy", "types", "necessary_ok", "consistent", "must_vanish")


class UsageError(Exception):
    pass


class PreconditionError(Exception):
    pass


# -- argument parsing ----------------------------------------------------------------


def _model(text):
    try:
        k1, k2 = (int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"model must be 'k1,k2', got {text!r}") from None
    return k1, k2


def _complex(text):
    try:
        return parse_complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _types(text):
    parts = text.split(",")
    if len(parts) != 2 or any(p not in TYPE_NAMES for p in parts):
        raise argparse.ArgumentTypeError(f"types must be two of {sorted(TYPE_NAMES)}, got {text!r}")
    return tuple(parts)


def _common(p, model_required=True):
    p.add_argument("--model", type=_model, required=model_required, help="k1,k2")
    p.add_argument("--lambda1", type=_complex, default=ComplexScalar(0, 1), help="a+bi (default i)")
    p.add_argument("--lambda2", type=_complex, default=ComplexScalar(0, 1), help="a+bi (default i)")
    p.add_argument("--alpha", help="JSON file with the Laurent odd shift alpha(x)")


def _output(p, default_format="json"):
    p.add_argument("--policy", choices=("fix", "negate"), default="fix")
    p.add_argument("--out", help="write here instead of stdout")
    p.add_argument("--format", choices=("json", "csv"), default=default_format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="maximality table over a range of models")
    _common(p, model_required=False)
    p.add_argument("--k1-range", type=int, nargs=2, metavar=("LO", "HI"),
                   help="inclusive; k2 = degree_sum - k1")
    p.add_argument("--degree-sum", type=int, default=2)
    _output(p)

    p = sub.add_parser("paper-check", help="recompute the quoted closed forms and diff them")
    p.add_argument("--item", action="append", help="restrict to these audit items")
    _output(p)

    for name, text in (("consistency", "classify fields from a file"),
                       ("goodfield", "good-field residual of fields from a file")):
        p = sub.add_parser(name, help=text)
        _common(p)
        p.add_argument("--fields", required=True, help="JSON field file")
        _output(p)

    p = sub.add_parser("scan", help="classify a seeded random field family")
    _common(p)
    p.add_argument("--types", type=_types, default=("Re", "Im"), help="psi1,psi2 types from Re, Im, 0, C")
    p.add_argument("--bose", type=_types, default=("Re", "Re"), help="phi,F types")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--seed", type=int, help="defaults to SUPERKIT_SEED, then 0")
    _output(p, default_format="csv")
    return parser


def _spec(args) -> SplitModelSpec:
    alpha = sio.load_alpha(args.alpha) if args.alpha else LaurentFn()
    return SplitModelSpec(args.model[0], args.model[1], args.lambda1, args.lambda2, alpha)


def _require_maximal(spec):
    verdict = classify_maximal(spec)
    if not verdict["maximal"]:
        raise PreconditionError(f"{spec.label()} is not maximal: " + "; ".join(verdict["reasons"]))


# -- commands ------------------------------------------------------------------------


def _berezinian_str(spec):
    try:
        ber = berezinian(super_jacobian(build_projective_atlas(spec).transition("U", "V")))
    except (ValueError, ZeroDivisionError) as exc:
        return f"undefined: {exc}"
    names = ("", " e1", " e2", " e12")
    terms = [f"[{c}]{n}" if n else str(c) for c, n in zip(ber.coeffs, names) if not c.is_zero()]
    return " + ".join(terms) or "0"


def cmd_classify(args):
    if args.k1_range is not None:
        lo, hi = args.k1_range
        if lo > hi:
            raise UsageError("empty k1 range")
        models = [(k1, args.degree_sum - k1) for k1 in range(lo, hi + 1)]
    elif args.model is not None:
        models = [args.model]
    else:
        raise UsageError("give --model or --k1-range")
    alpha = sio.load_alpha(args.alpha) if args.alpha else LaurentFn()
    rows = []
    for k1, k2 in models:
        spec = SplitModelSpec(k1, k2, args.lambda1, args.lambda2, alpha)
        verdict = classify_maximal(spec)
        rows.append({
            "model": [k1, k2],
            "lambda1": str(spec.lambda1),
            "lambda2": str(spec.lambda2),
            "maximal": verdict["maximal"],
            "computed_maximal": verdict["computed_maximal"],
            "reasons": verdict["reasons"],
            "berezinian": _berezinian_str(spec),
        })
    return rows, CLASSIFY_COLUMNS


def cmd_paper_check(args):
    report = paper_check(args.policy, args.item)
    if args.format == "json":
        return report, None
    rows = []
    for item in report["items"]:
        for layer, data in item["layers"].items():
            rows.append({"item": item["item"], "status": item["status"], "layer": layer,
                         "layer_status": data["status"], "terms": len(data["diff"])})
    return rows, PAPER_CHECK_COLUMNS


def _psi_kind(values):
    kind = []
    for f in ("psi1", "psi2"):
        u = values[f]
        if u.is_zero() or u.is_real():
            kind.append("Re")
        elif u.is_imaginary():
            kind.append("Im")
        else:
            return None
    return tuple(kind)


def _must_vanish(spec, record, policy):
    from .consistency import circle_fields

    kind = _psi_kind(circle_fields(record.components))
    if kind is None:
        return None
    return prop46_type_analysis(record.components, kind, policy, spec)["must_vanish"]


def _paper_diff(spec, policy):
    label = spec.label()
    report = paper_check(policy, ["cocycle_closed_form", "circle_general", "real_imag_parts"])
    out = []
    for item in report["items"]:
        for layer, data in item["layers"].items():
            out += [{"item": item["item"], "layer": layer, **row}
                    for row in data["diff"] if str(row.get("at", "")).startswith(label)]
    return out


def cmd_consistency(args):
    spec = _spec(args)
    _require_maximal(spec)
    records = sio.load_fields(args.fields)
    paper_diff = _paper_diff(spec, args.policy) if args.format == "json" else []
    rows = []
    for record in records:
        report = consistency_classify(spec, record.components, args.policy)
        must = _must_vanish(spec, record, args.policy)
        if args.format == "json":
            rows.append({"name": record.name, "field": sio.field_to_json(record), **report.to_json(),
                         "must_vanish": must, "paper_diff": paper_diff})
        else:
            rows.append({"name": record.name, "model": f"{spec.k1},{spec.k2}", "policy": args.policy,
                         "good_residual": "" if report.good is None else report.good_residual_norm,
                         "necessary_ok": report.necessary_ok, "consistent": report.consistent,
                         "must_vanish": "" if must is None else " ".join(must)})
    return rows, CONSISTENCY_COLUMNS


def cmd_goodfield(args):
    spec = _spec(args)
    atlas = build_projective_atlas(spec)
    rows = []
    for record in sio.load_fields(args.fields):
        if record.domain != "laurent":
            # circle data has no chart representative, so the coboundary is undefined
            rows.append({"name": record.name, "model": f"{spec.k1},{spec.k2}", "policy": args.policy,
                         "pair": "", "good": None, "good_residual": None})
            continue
        phi = Superfield.global_from("V", record.components, atlas)
        for pair, residual in sorted(good_field_residual(phi, atlas, args.policy).items()):
            norm = residual.max_abs_coefficient()
            rows.append({"name": record.name, "model": f"{spec.k1},{spec.k2}", "policy": args.policy,
                         "pair": "->".join(pair), "good": norm == 0.0, "good_residual": norm,
                         **({"residual": residual.to_json()} if args.format == "json" else {})})
    return rows, GOODFIELD_COLUMNS


def cmd_scan(args):
    spec = _spec(args)
    _require_maximal(spec)
    if args.count < 1:
        raise UsageError("--count must be positive")
    seed = args.seed if args.seed is not None else seed_from_env()
    rng = random.Random(seed)
    types = dict(zip(("psi1", "psi2"), (TYPE_NAMES[t] for t in args.types)))
    types.update(zip(("phi", "F"), (TYPE_NAMES[t] for t in args.bose)))
    rows = []
    for index in range(args.count):
        values = random_field(rng, types, args.degree)
        report = consistency_classify(spec, values, args.policy)
        record = sio.FieldRecord(f"scan{index}", "circle", values)
        must = _must_vanish(spec, record, args.policy)
        rows.append({"index": index, "model": f"{spec.k1},{spec.k2}", "policy": args.policy,
                     "types": ",".join(args.types), "necessary_ok": report.necessary_ok,
                     "consistent": report.consistent, "must_vanish": "" if must is None else " ".join(must)})
    return rows, SCAN_COLUMNS


COMMANDS = {
    "classify": cmd_classify,
    "paper-check": cmd_paper_check,
    "consistency": cmd_consistency,
    "goodfield": cmd_goodfield,
    "scan": cmd_scan,
}


# -- output --------------------------------------------------------------------------


def _csv_cell(key, v):
    if key == "model" and isinstance(v, (list, tuple)):
        return ",".join(str(x) for x in v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return "; ".join(str(x) for x in v)
    return v


def render(payload, columns, fmt) -> str:
    if fmt == "json" or columns is None:
        return json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n"
    buf = _io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in payload:
        writer.writerow({k: _csv_cell(k, row.get(k, "")) for k in columns})
    return buf.getvalue()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, columns = COMMANDS[args.command](args)
    except (UsageError, sio.InputError) as exc:
        print(f"superkit {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"superkit {args.command}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    text = render(payload, columns, args.format)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
