"""Command-line front end.

    nullsatz radical --algebra ALG --ideal GENS [--nvars N] [--dmax D] [--certificate OUT]
    nullsatz oracle  --algebra ALG --ideal GENS [--nvars N] [--dmax D]
    nullsatz check   --algebra ALG --ideal GENS [--nvars N] [--dmax D]
    nullsatz algebra-info --algebra ALG
    nullsatz demo sqrt2 | weyl [--max-degree K]

ALG is a preset name (``M2(3)``, ``dual_numbers(5)``, ``F_5[u]/(u^2-2)``,
``group:C2(5)``, ``upper_triangular:2(5)``, ``M2(Q)``) or a JSON file.  GENS
is a file with one generator per line, or the generators as literal text.
Output is canonical JSON on stdout; errors go to stderr with exit code 2
(bad input), 3 (unsupported regime) or 1 (mathematical disagreement).
"""

import argparse
import json
import os
import re
import sys

from .errors import InputError, NullsatzError

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_UNSUPPORTED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message, "cli", "parse_args")


def load_algebra(source):
    from .findim import algebra_from_json, preset

    if os.path.isfile(source):
        try:
            with open(source) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read algebra file: {exc}", "cli", "load_algebra") from exc
        return algebra_from_json(data)
    return preset(source)


def infer_nvars(text):
    n = 1
    for m in re.finditer(r"\b(x\d+|x|y|z)\b", text):
        name = m.group(1)
        n = max(n, {"x": 1, "y": 2, "z": 3}.get(name) or int(name[1:]))
    return n


def load_ideal(A, source, nvars=None):
    from .leftideal import LeftIdeal, parse_algpolys

    if os.path.isfile(source):
        with open(source) as fh:
            text = fh.read()
    else:
        text = source.replace(";", "\n")
    n = nvars or infer_nvars(text)
    gens = parse_algpolys(text, A, n)
    return LeftIdeal.generate(A, n, gens)


def dump(obj, pretty=False):
    if pretty:
        return _table(obj)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _table(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_table(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, ensure_ascii=False)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.append(_table(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{obj}")
    return "\n".join(lines)


def _ideal_args(p):
    p.add_argument("--algebra", required=True)
    p.add_argument("--ideal", required=True)
    p.add_argument("--nvars", type=int)
    p.add_argument("--dmax", type=int)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--pretty", action="store_true")
    parser = _Parser(prog="nullsatz", description="Radicals of left ideals in A[x1..xn].")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    p = sub.add_parser("radical", parents=[common])
    _ideal_args(p)
    p.add_argument("--certificate")
    _ideal_args(sub.add_parser("oracle", parents=[common]))
    _ideal_args(sub.add_parser("check", parents=[common]))
    p = sub.add_parser("algebra-info", parents=[common])
    p.add_argument("--algebra", required=True)
    p = sub.add_parser("demo", parents=[common])
    p.add_argument("name", choices=["sqrt2", "weyl"])
    p.add_argument("--max-degree", type=int, default=8)
    return parser


def _algebra_info(A, seed):
    from .findim import is_semisimple, radical, wedderburn, xi_preimage

    F = A.field
    out = {"algebra": A.label or "custom", "field": str(F), "dim": A.dim, "names": A.names,
           "radical": [A.format(v) for v in radical(A)], "semisimple": is_semisimple(A)}
    W = wedderburn(A, seed)
    out["factors"] = [{"k": f.k, "degree": f.m, "field": str(f.field),
                       "central_idempotent": A.format(f.idempotent)} for f in W.factors]
    try:
        D = xi_preimage(A)
        ok, info = D.check()
        out["xi"] = {"kind": D.kind, "functionals": len(D.vectors), "identity_holds": ok}
    except NullsatzError as exc:
        out["xi"] = {"error": type(exc).__name__, "message": str(exc)}
    return out


def run(argv=None, out=None):
    """Run the CLI and return the exit code."""
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise InputError("a subcommand is required", "cli", "parse_args")
        code, result = _dispatch(args)
        print(dump(result, args.pretty), file=out)
        return code
    except NullsatzError as exc:
        err = {"error": type(exc).__name__, "where": exc.where(), "message": str(exc)}
        if hasattr(exc, "offset"):
            err["offset"] = exc.offset
        print(json.dumps(err, sort_keys=True), file=sys.stderr)
        return exc.exit_code
    except Exception as exc:  # never let a traceback escape
        err = {"error": type(exc).__name__, "where": "nullsatz", "message": str(exc)}
        print(json.dumps(err, sort_keys=True), file=sys.stderr)
        return EXIT_MISMATCH


def _dispatch(args):
    from .radical import geometric_oracle, rad_pipeline, sqrt2_demo

    if args.command == "demo":
        if args.name == "sqrt2":
            rep = sqrt2_demo()
            return (EXIT_OK if rep["strict"] else EXIT_MISMATCH), rep
        from .weyl import weyl_demo

        rep = weyl_demo(max_degree=args.max_degree, seed=args.seed)
        return (EXIT_OK if rep["pass"] else EXIT_MISMATCH), rep
    A = load_algebra(args.algebra)
    if args.command == "algebra-info":
        return EXIT_OK, _algebra_info(A, args.seed)
    I = load_ideal(A, args.ideal, args.nvars)
    if args.command == "radical":
        res = rad_pipeline(I, dmax=args.dmax, seed=args.seed)
        report = {"command": "radical", "nvars": I.nvars, "input": I.gb_strings(),
                  "radical": res.output.gb_strings(), "points": len(res.certificate)}
        if args.certificate:
            with open(args.certificate, "w") as fh:
                fh.write(dump(res.to_json()) + "\n")
        return EXIT_OK, report
    if args.command == "oracle":
        O = geometric_oracle(I, dmax=args.dmax, seed=args.seed)
        return EXIT_OK, {"command": "oracle", "nvars": I.nvars, "input": I.gb_strings(),
                         "radical": O.gb_strings()}
    res = rad_pipeline(I, dmax=args.dmax, seed=args.seed)
    O = geometric_oracle(I, dmax=args.dmax, seed=args.seed)
    equal = res.output == O
    report = {"command": "check", "nvars": I.nvars, "input": I.gb_strings(),
              "pipeline": res.output.gb_strings(), "oracle": O.gb_strings(), "equal": equal}
    return (EXIT_OK if equal else EXIT_MISMATCH), report


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
