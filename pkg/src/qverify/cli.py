"""qverify: expand series, check identities, MLDEs and conformal levels.

Exit codes: 0 equal/success, 1 verified false, 2 usage, 3 accuracy guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import levels as lv, mlde
from .qseries import InsufficientAccuracy, QSeries
from .specs import SpecError, parse_rational, parse_spec
from .verify import UnknownIdentity, Verdict, known_names, verify_named, verify_pair

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_ACCURACY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def fmt(x) -> str:
    """Canonical rational text: num/den, den omitted when 1."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _rat_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# rendering ----------------------------------------------------------------


def expand_payload(obj: str, f: QSeries) -> dict:
    return {
        "object": obj,
        "L": f.L,
        "acc": fmt(f.acc),
        "terms": [[fmt(e), fmt(c)] for e, c in f.items()],
    }


def payload_to_series(payload: dict) -> QSeries:
    terms = [(Fraction(e), Fraction(c)) for e, c in payload["terms"]]
    return QSeries.from_exponents(terms, Fraction(payload["acc"]))


def dumps(payload: dict) -> str:
    return json.dumps(payload, separators=(", ", ": "))


def render_series_text(obj: str, f: QSeries) -> str:
    lines = [f"# {obj}  (exact below q^{fmt(f.acc)}, L = {f.L})"]
    for e, c in f.items():
        lines.append(f"q^{fmt(e)}\t{fmt(c)}")
    return "\n".join(lines)


def verdict_payload(v: Verdict) -> dict:
    fm = None
    if v.result is not None and not v.result.equal:
        r = v.result
        fm = {"exp": fmt(r.exponent), "lhs": fmt(r.lhs), "rhs": fmt(r.rhs)}
    return {"name": v.name, "order": fmt(v.order), "equal": v.equal, "first_mismatch": fm}


def render_verdict_text(v: Verdict) -> str:
    if v.result is None:
        head = f"{v.name}: {'HOLDS' if v.equal else 'FAILED'}"
    elif v.equal:
        head = f"{v.name}: EQUAL up to order {fmt(v.order)}"
    elif v.result is not None and not v.result.equal:
        r = v.result
        head = (
            f"{v.name}: MISMATCH at exponent {fmt(r.exponent)}: "
            f"lhs={fmt(r.lhs)} rhs={fmt(r.rhs)}"
        )
    return head + (f" ({v.detail})" if v.detail else "")


def _emit(args, text: str) -> None:
    if not args.quiet:
        print(text)


# subcommands -----------------------------------------------------------------


def cmd_expand(args) -> int:
    spec = parse_spec(args.spec)
    f = spec.build(args.order).truncate(args.order)
    if args.json:
        print(dumps(expand_payload(args.spec, f)))
    else:
        _emit(args, render_series_text(args.spec, f))
    return EXIT_OK


def cmd_verify(args) -> int:
    verdicts = []
    if args.lhs or args.rhs:
        if not (args.lhs and args.rhs) or args.names:
            raise UsageError("use either identity names or both --lhs and --rhs")
        lhs, rhs = parse_spec(args.lhs), parse_spec(args.rhs)
        verdicts.append(
            verify_pair(lhs.build(args.order), rhs.build(args.order), args.order,
                        f"{args.lhs} == {args.rhs}")
        )
    else:
        if not args.names:
            raise UsageError("name an identity: " + ", ".join(known_names()))
        for name in args.names:
            try:
                verdicts.append(verify_named(name, args.order))
            except UnknownIdentity:
                raise UsageError(
                    f"unknown identity {name!r}; known: {', '.join(known_names())}"
                ) from None
    for v in verdicts:
        if args.json:
            print(dumps(verdict_payload(v)))
        else:
            _emit(args, render_verdict_text(v))
    return EXIT_OK if all(v.equal for v in verdicts) else EXIT_FALSE


def _render_operator(op: mlde.MLDEOperator) -> str:
    lines = [f"order {op.order} over {op.group}:"]
    for r, fr in enumerate(op.coeffs, start=1):
        lines.append(f"  f_{r} = {_render_form(fr)}")
    return "\n".join(lines)


def _render_form(fr: mlde.ModFormExpr) -> str:
    if fr.is_zero:
        return "0"
    text = ""
    for c, mono in fr.terms:
        names = "*".join(str(g) for g in mono)
        sign = "-" if c < 0 else "+"
        if text:
            text += f" {sign} "
        elif c < 0:
            text = "-"
        text += f"{fmt(abs(c))}*{names}"
    return text


def _render_search(res) -> str:
    if isinstance(res, mlde.Unique):
        return (f"Unique ({res.equations} equations, {res.unknowns} unknowns)\n"
                + _render_operator(res.operator))
    if isinstance(res, mlde.Inconsistent):
        return f"Inconsistent ({res.equations} equations, {res.unknowns} unknowns)"
    return f"Ambiguous(dim={res.dimension}) ({res.equations} equations, {res.unknowns} unknowns)"


def cmd_mlde(args) -> int:
    if args.sub.startswith("verify:"):
        try:
            n = int(args.sub.split(":", 1)[1])
            op = mlde.builtin_mlde(n)
        except (ValueError, mlde.UnsupportedN):
            raise UsageError("verify:n needs n in 2..5") from None
        rep = mlde.verify_builtin(n, args.trunc)
        lines = [f"built-in operator for ch[C_{n}]", _render_operator(op)]
        if rep.annihilates:
            lines.append(f"residual vanishes below q^{fmt(rep.trunc)}: coefficients confirmed")
            _emit(args, "\n".join(lines))
            return EXIT_OK
        head = list(rep.residual.items())[:3]
        lines.append(f"residual is nonzero below q^{fmt(rep.trunc)}; leading terms:")
        lines += [f"  q^{fmt(e)}\t{fmt(c)}" for e, c in head]
        lines.append("search at the same order and truncation: " + _render_search(rep.found))
        if isinstance(rep.found, mlde.Unique):
            for r, (a, b) in enumerate(zip(op.coeffs, rep.found.operator.coeffs), start=1):
                if a.series(rep.trunc) != b.series(rep.trunc):
                    lines.append(f"  differs in f_{r}: printed {_render_form(a)}")
        _emit(args, "\n".join(lines))
        return EXIT_FALSE
    if args.sub == "find":
        if not (args.series and args.order_k and args.group):
            raise UsageError("find needs --series, --order, --group and --trunc")
        group = {"gamma1": mlde.GAMMA1, "gamma2": mlde.GAMMA2}.get(args.group.lower())
        if group is None:
            raise UsageError("--group must be gamma1 or gamma2")
        f = parse_spec(args.series).build(args.trunc)
        res = mlde.find_mlde(f, args.order_k, group, args.trunc)
        _emit(args, _render_search(res))
        return EXIT_OK if isinstance(res, mlde.Unique) else EXIT_FALSE
    raise UsageError("mlde subcommand must be verify:n or find")


def cmd_levels(args) -> int:
    case = lv.CASES.get(args.case.lower())
    if case is None:
        raise UsageError("case must be f4 or e8")
    rep = lv.conformal_levels(case)
    roots = sorted(rep.roots)
    if args.json:
        print(dumps({
            "case": case.tag,
            "roots": [fmt(r) for r in roots],
            "multiplicity": {fmt(r): m for r, m in rep.multiplicity},
            "degree": rep.degree,
            "residual_degree": rep.residual_degree,
        }))
        return EXIT_OK
    lines = [f"{case.tag}: conformal levels k in {{{', '.join(fmt(r) for r in roots)}}}"]
    for r in roots:
        cw, cs = lv.w_charges(case, r)
        mark = "ok" if cw == cs else "MISMATCH"
        m = dict(rep.multiplicity)[r]
        mult = f" (multiplicity {m})" if m > 1 else ""
        lines.append(f"  k = {fmt(r)}{mult}: c_W = {fmt(cw)}, c_sug = {fmt(cs)} [{mark}]")
    lines.append(
        f"cleared polynomial degree {rep.degree}; residual factor degree "
        f"{rep.residual_degree}"
        + (" (no further roots)" if rep.residual_degree == 0 else " (non-rational roots remain)")
    )
    if rep.discarded_poles:
        lines.append("discarded poles: " + ", ".join(fmt(r) for r in sorted(rep.discarded_poles)))
    _emit(args, "\n".join(lines))
    return EXIT_OK


# parser -------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--quiet", action="store_true", help="only the exit status")

    p = _Parser(prog="qverify", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("expand", parents=[common], help="print a q-expansion")
    e.add_argument("spec")
    e.add_argument("--order", type=_rat_arg, default=Fraction(20))
    e.set_defaults(fn=cmd_expand)

    v = sub.add_parser("verify", parents=[common], help="check identities")
    v.add_argument("names", nargs="*")
    v.add_argument("--lhs")
    v.add_argument("--rhs")
    v.add_argument("--order", type=_rat_arg, default=Fraction(20))
    v.set_defaults(fn=cmd_verify)

    m = sub.add_parser("mlde", parents=[common], help="verify or search MLDEs")
    m.add_argument("sub", help="verify:n or find")
    m.add_argument("--series")
    m.add_argument("--order", dest="order_k", type=int, help="operator order (find)")
    m.add_argument("--group")
    m.add_argument("--trunc", type=_rat_arg, default=None)
    m.set_defaults(fn=cmd_mlde)

    lvl = sub.add_parser("levels", parents=[common], help="conformal levels")
    lvl.add_argument("case")
    lvl.set_defaults(fn=cmd_levels)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "mlde" and args.sub == "find" and args.trunc is None:
            args.trunc = Fraction(20)
        return args.fn(args)
    except (UsageError, SpecError, ValueError) as exc:
        # ValueError covers out-of-range parameters such as cp:1
        print(f"qverify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InsufficientAccuracy as exc:
        print(f"qverify: accuracy guard tripped: {exc}", file=sys.stderr)
        return EXIT_ACCURACY


if __name__ == "__main__":
    sys.exit(main())
