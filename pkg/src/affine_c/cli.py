"""Command line entry point: ``affine-c <subcommand> [options]``.

Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import coproduct, nilcoxeter, schubert, verify, zee
from .golden import GoldenError
from .symfunc import format_partition
from .weyl import CapacityError, WeylElement, from_word

DOMAIN_ERRORS = (ValueError, IndexError, ArithmeticError, CapacityError, GoldenError)


def _element(args) -> WeylElement:
    return from_word(args.n, args.word)


def _word(w: WeylElement) -> str:
    return w.word_str()


def _sum_text(terms: list[tuple[str, int]], one: str | None = None) -> str:
    if not terms:
        return "0"
    out = ""
    for label, c in terms:
        mag = abs(c)
        body = label if label != one else ""
        text = str(mag) if not body else body if mag == 1 else f"{mag} {body}"
        if out:
            out += (" - " if c < 0 else " + ") + text
        else:
            out = ("-" if c < 0 else "") + text
    return out


def _partition_label(prefix: str, lam) -> str:
    s = format_partition(lam)
    return f"{prefix}_{{{s}}}" if "," in s else f"{prefix}_{s}"


def cmd_zee(args):
    z = zee.build_zee(args.n)
    layers = [args.length] if args.length is not None else sorted(z.layers)
    data = {str(r): [{"word": _word(w), "c": z.c(w)} for w in z.layer(r)] for r in layers}
    lines = [f"{r}: " + " ".join(f"{e['word']}({e['c']})" for e in data[str(r)]) for r in layers]
    return data, "\n".join(lines)


def cmd_rho(args):
    w = zee.rho(args.n, args.i)
    return {"word": _word(w), "length": w.length}, _word(w)


def _nilcox_out(a: nilcoxeter.NilCoxElem):
    return {"terms": a.to_json()}, str(a)


def cmd_pp(args):
    return _nilcox_out(nilcoxeter.pp_generator(args.n, args.r))


def cmd_ppw(args):
    return _nilcox_out(nilcoxeter.pp_schubert(args.n, _element(args), args.cap))


def cmd_qfun(args):
    e = schubert.affine_stanley(args.n, _element(args))
    terms = [(_partition_label("M", lam), c) for lam, c in e.coeffs.items()]
    return e.to_json(), _sum_text(terms, one="M_0")


def cmd_pfun(args):
    coeffs = schubert.dual_kschur(args.n, _element(args))
    terms = [(_partition_label("P", lam), c) for lam, c in coeffs.items()]
    data = {"basis": "P", "terms": [{"partition": format_partition(lam), "coeff": c}
                                    for lam, c in coeffs.items()]}
    return data, _sum_text(terms, one="P_0")


def cmd_pieri(args):
    res = nilcoxeter.pieri(args.n, args.i, _element(args))
    data = {"terms": [{"word": _word(w), "coeff": c} for w, c in res.items()]}
    return data, _sum_text([(f"pp[{_word(w)}]", c) for w, c in res.items()])


def cmd_coproduct(args):
    res = coproduct.phi0_delta_closed(args.n, _element(args))

    def side(w):
        return "1" if w.length == 0 else f"A_{_word(w)}"
    data = {"terms": [{"left": _word(u), "right": _word(v), "coeff": c} for (u, v), c in res.items()]}
    return data, _sum_text([(f"{side(u)} (x) {side(v)}", c) for (u, v), c in res.items()])


def cmd_lee(args):
    lam = zee.lee_partition(args.n, _element(args))
    return {"partition": list(lam)}, "(" + ",".join(str(x) for x in lam) + ")"


def cmd_verify(args):
    report = verify.run_suite(args.suite, args.golden_dir)
    lines = [f"{'PASS' if c.ok else 'FAIL'}  {c.suite:<11} {c.name}" + (f"  ({c.detail})" if c.detail else "")
             for c in report.checks]
    lines += [f"WARN  {w}" for w in report.warnings]
    lines.append(f"{sum(c.ok for c in report.checks)} passed, {len(report.failures)} failed "
                 f"in {report.seconds:.2f}s")
    return report.to_json(), "\n".join(lines), (0 if report.ok else 1)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cap", type=int, default=None,
                        help="length cap for group tables used by ppw (default 12 for n <= 3, else 8)")

    def with_n(p):
        p.add_argument("--n", type=int, required=True, help="rank, at least 2")
        return p

    parser = argparse.ArgumentParser(prog="affine-c", description="Schubert calculus of the type C affine Grassmannian")
    sub = parser.add_subparsers(dest="command", required=True)

    p = with_n(sub.add_parser("zee", parents=[common], help="list the elements of Z with component counts"))
    p.add_argument("--length", type=int, default=None)
    p.set_defaults(func=cmd_zee)

    p = with_n(sub.add_parser("rho", parents=[common], help="reduced word of rho_i"))
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(func=cmd_rho)

    p = with_n(sub.add_parser("pp", parents=[common], help="special generator P_r in the A_w basis"))
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_pp)

    for name, func, desc in (
        ("ppw", cmd_ppw, "Schubert basis element for a Grassmannian word"),
        ("qfun", cmd_qfun, "affine Stanley function in the M basis"),
        ("pfun", cmd_pfun, "dual function in the Schur P basis"),
        ("coproduct", cmd_coproduct, "closed coproduct formula evaluated at zero"),
        ("lee", cmd_lee, "partition attached to a Grassmannian word"),
    ):
        p = with_n(sub.add_parser(name, parents=[common], help=desc))
        p.add_argument("--word", required=True)
        p.set_defaults(func=func)

    p = with_n(sub.add_parser("pieri", parents=[common], help="product of P_i with a Schubert class"))
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("verify", parents=[common], help="run a regression suite")
    p.add_argument("suite", choices=verify.SUITES)
    p.add_argument("--golden-dir", default=None,
                   help="directory holding the golden JSON files (else $AFFINE_C_GOLDEN_DIR)")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "n", None) is not None and args.n < 2:
        print("error: --n must be at least 2", file=err)
        return 2
    try:
        result = args.func(args)
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=err)
        return 1
    data, text, code = result if len(result) == 3 else (*result, 0)
    if args.format == "json":
        print(json.dumps(data, sort_keys=True, indent=2), file=out)
    else:
        print(text, file=out)
    return code


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
