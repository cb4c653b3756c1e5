"""Command-line interface.

Subcommands:
  verify     run check suites and emit a canonical report
  weyl       dimension of one irreducible module
  decompose  empirical Casimir decomposition of Lambda^k
  form       operations on a structure form given as JSON
"""

from __future__ import annotations

import argparse
import json
import sys

from .report import SUITES, SuiteConfig, run_suite, emit_report, exit_code


def _cmd_verify(args) -> int:
    suites = tuple(SUITES) if "all" in args.suite else tuple(args.suite)
    cfg = SuiteConfig(n=args.n, suites=suites, seed=args.seed,
                      mode=args.mode, output_path=args.out)
    reports = run_suite(cfg)
    text = emit_report(reports, args.format, args.out)
    if not args.out:
        sys.stdout.write(text)
    else:
        fails = sum(1 for r in reports if r.verdict == "FAIL")
        print(f"{len(reports)} checks, {fails} failures -> {args.out}")
    return exit_code(reports)


def _cmd_weyl(args) -> int:
    from . import rep
    d = rep.weyl_dim(args.p, args.q, args.n)
    mu = rep.weight_of(args.p, args.q, args.n)
    print(json.dumps({"p": args.p, "q": args.q, "n": args.n,
                      "weight": list(mu) if mu else None, "dim": d},
                     sort_keys=True))
    return 0


def _cmd_decompose(args) -> int:
    from . import rep
    dec = rep.casimir_decompose(args.k, args.n)
    doc = {"k": args.k, "n": args.n, "total": dec.total,
           "blocks": dec.as_dict(),
           "unidentified": dec.unidentified_dim()}
    print(json.dumps(doc, sort_keys=True, indent=2))
    return 0


def _cmd_form(args) -> int:
    from .engine import StructureForm, StructureContext
    from .exterior import KForm
    with open(args.file) as fh:
        doc = json.load(fh)
    if "pieces" in doc:
        phi = StructureForm.from_json_dict(doc)
    else:
        phi = StructureForm.single(KForm.from_json_dict(doc))
    ctx = StructureContext(phi)
    if args.op == "isotropy":
        out = {"ambient_dim": phi.N, "degrees": list(phi.degrees()),
               "isotropy_dim": ctx.g.dim}
    elif args.op == "rank":
        out = {"ambient_dim": phi.N, "k": args.k,
               "rank_ak": ctx.ek(args.k).dim,
               "dim_gk": ctx.gk(args.k).dim,
               "dim_pk": ctx.pk(args.k).dim}
    else:
        raise ValueError(f"unknown op {args.op}")
    print(json.dumps(out, sort_keys=True, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qkverify")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run check suites")
    v.add_argument("--n", type=int, default=3)
    v.add_argument("--suite", nargs="+", default=["all"],
                   choices=list(SUITES) + ["all"])
    v.add_argument("--seed", type=int, default=7)
    v.add_argument("--mode", choices=["assert", "observe"], default="assert")
    v.add_argument("--format", choices=["json", "markdown"], default="json")
    v.add_argument("--out", default=None)
    v.set_defaults(func=_cmd_verify)

    w = sub.add_parser("weyl", help="irreducible module dimension")
    w.add_argument("--n", type=int, default=3)
    w.add_argument("--p", type=int, required=True)
    w.add_argument("--q", type=int, required=True)
    w.set_defaults(func=_cmd_weyl)

    d = sub.add_parser("decompose", help="Casimir decomposition of Lambda^k")
    d.add_argument("--n", type=int, default=3)
    d.add_argument("--k", type=int, required=True)
    d.set_defaults(func=_cmd_decompose)

    f = sub.add_parser("form", help="operate on a JSON structure form")
    f.add_argument("--file", required=True)
    f.add_argument("--op", choices=["isotropy", "rank"], default="isotropy")
    f.add_argument("--k", type=int, default=1)
    f.set_defaults(func=_cmd_form)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
