"""Command-line interface: `gwsym <group> <command> [options]`.

Exit status is 0 on success, 2 on malformed input and 1 on domain errors.
`batch` reads newline-delimited JSON requests {"cmd": "...", "args": {...}}
and answers each with {"status", "result", "diagnostics"}.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field

from . import gw, k0var
from .acceptance import run_all
from .applications import (
    CubicSurfaceSpec,
    cubic_chi,
    cubic_chi_computed,
    cubic_chi_alt_form,
    cubic_sym3,
    cubic_sym3_corrected,
    alt_form_agrees,
)
from .errors import GWError, ParseError
from .fields import parse_field, square_class, to_rational
from .grassmann import chi_grassmannian, chi_sym_grassmannian, grassmann_zeta, losanitsch, losanitsch_table
from .power import a_basic, a_hyperbolic, a_n, t_alpha
from .series import geom_pow, kapranov_chi_zeta


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


@dataclass
class Response:
    text: str
    result: object = None
    diagnostics: list[str] = dc_field(default_factory=list)
    ok: bool = True

    def to_json(self) -> dict:
        return {
            "status": "ok" if self.ok else "fail",
            "text": self.text,
            "result": self.result,
            "diagnostics": self.diagnostics,
        }


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}") from None


def _scalar(text: str):
    try:
        return to_rational(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected a nonzero rational, got {text!r}") from None


# ---------------------------------------------------------------- handlers


def _gw(args, F) -> Response:
    x = gw.parse(args.x, F)
    if args.command == "invariants":
        inv = gw.invariants(x)
        result = {
            "rank": inv.rank,
            "disc": inv.disc.rep,
            "signature": inv.signature,
            "hasse": None if inv.hasse is None else {str(v): h for v, h in sorted(inv.hasse.items())},
        }
        parts = [f"rank {inv.rank}", f"disc {inv.disc.rep}"]
        if inv.signature is not None:
            parts.append(f"signature {inv.signature}")
        if inv.hasse is not None:
            parts.append("hasse " + " ".join(f"{v}:{h}" for v, h in sorted(inv.hasse.items())))
        return Response(", ".join(parts), result)
    if args.y is None:
        raise ParseError(f"gw {args.command} needs --y")
    y = gw.parse(args.y, F)
    if args.command == "eq":
        verdict = gw.eq(x, y)
        return Response(str(verdict).lower(), {"equal": verdict})
    z = x + y if args.command == "add" else x * y
    return Response(str(z), z.to_json())


def _power(args, F) -> Response:
    if args.command == "an":
        if args.q is None or args.n is None:
            raise ParseError("power an needs --q and --n")
        z = a_n(gw.parse(args.q, F), args.n)
    elif args.command == "talpha":
        if args.alpha is None:
            raise ParseError("power talpha needs --alpha")
        z = t_alpha(square_class(F, _scalar(args.alpha)))
    else:
        if args.m is None or args.n is None:
            raise ParseError("power closed needs --m and --n")
        if args.i is None:
            z = a_hyperbolic(args.m, args.n, F)
        else:
            z = a_basic(args.m, args.i, args.n, F)
    return Response(str(z), z.to_json())


def _k0(args, F) -> Response:
    x = k0var.parse(args.x, F)
    if args.command == "chi":
        z = k0var.chi(x)
        return Response(str(z), z.to_json())
    if args.command == "sym":
        if args.n is None:
            raise ParseError("k0 sym needs --n")
        z = k0var.sym_power(x, args.n)
        return Response(str(z), z.to_json(), [f"chi: {k0var.chi(z)}"])
    if args.y is None:
        raise ParseError("k0 mul needs --y")
    z = x * k0var.parse(args.y, F)
    return Response(str(z), z.to_json())


def _zeta(args, F) -> Response:
    if args.command == "geom":
        if args.q is None:
            raise ParseError("zeta geom needs --q")
        s = geom_pow(gw.parse(args.q, F), args.order)
    else:
        if args.x is None:
            raise ParseError("zeta kapranov needs --x")
        s = kapranov_chi_zeta(k0var.parse(args.x, F), args.order)
    return Response(str(s), s.to_json())


def _grassmann(args, F) -> Response:
    if args.command == "losanitsch":
        if args.rows is not None:
            table = losanitsch_table(args.rows)
            text = "\n".join(" ".join(f"{e}/{o}" for e, o in row) for row in table)
            return Response(text, [[list(c) for c in row] for row in table])
        e, o = losanitsch(_need(args.d, "--d"), _need(args.r, "--r"))
        return Response(f"e = {e}, o = {o}", {"e": e, "o": o})
    d, r = _need(args.d, "--d"), _need(args.r, "--r")
    if args.command == "chi":
        z = chi_grassmannian(d, r, F)
    elif args.command == "sym":
        z = chi_sym_grassmannian(d, r, _need(args.n, "--n"), F)
    else:
        s = grassmann_zeta(d, r, args.order, F)
        return Response(str(s), s.to_json())
    return Response(str(z), z.to_json())


def _need(value, flag):
    if value is None:
        raise ParseError(f"missing {flag}")
    return value


def _delpezzo(args, F) -> Response:
    if F.kind != "Q":
        raise ParseError("delpezzo computations are over Q")
    spec = CubicSurfaceSpec.of(*(_scalar(v) for v in (args.alpha, args.beta, args.gamma)))
    if args.command == "chi":
        z = cubic_chi(spec)
        verdict = alt_form_agrees(spec)
        diags = [
            f"blow-up class gives {cubic_chi_computed(spec)}",
            f"alternative form {cubic_chi_alt_form(spec)} {'eq' if verdict else 'not eq'} this value",
        ]
        return Response(str(z), z.to_json(), diags)
    res = cubic_sym3(spec)
    corrected = cubic_sym3_corrected(spec)
    diags = [f"corrected expression eq computed: {corrected == res.computed}"]
    if not res.equal:
        diags.append(
            f"signatures: computed {gw.sign_hom(res.computed)}, printed {gw.sign_hom(res.printed)}"
        )
    text = f"computed: {res.computed}\nprinted: {res.printed}\nequal: {str(res.equal).lower()}"
    return Response(text, res.to_json(), diags)


def _selftest(args, F) -> Response:
    results = run_all()
    lines, diags = [], []
    for res in results:
        lines.append(res.line())
        if args.report or res.passed is False:
            lines.extend(f"    {d}" for d in res.detail)
    ok = all(r.passed is not False for r in results)
    return Response("\n".join(lines), [r.to_json() for r in results], diags, ok)


HANDLERS = {
    "gw": _gw,
    "power": _power,
    "k0": _k0,
    "zeta": _zeta,
    "grassmann": _grassmann,
    "delpezzo": _delpezzo,
    "selftest": _selftest,
}


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", default="Q", help="Q, R, C or Fp:<p> (default Q)")
    common.add_argument("--json", action="store_true", help="structured output")

    p = _Parser(prog="gwsym", description="Grothendieck-Witt arithmetic and symmetric powers")
    groups = p.add_subparsers(dest="group", required=True)

    def sub(group, names, *flags):
        g = groups.add_parser(group)
        cmds = g.add_subparsers(dest="command", required=True)
        for name in names:
            c = cmds.add_parser(name, parents=[common])
            for flag, kw in flags:
                c.add_argument(flag, **kw)
        return g

    text = dict(default=None)
    num = dict(type=_int, default=None)
    sub("gw", ["eq", "add", "mul", "invariants"], ("--x", dict(required=True)), ("--y", text))
    sub(
        "power",
        ["an", "talpha", "closed"],
        ("--q", text),
        ("--n", num),
        ("--alpha", text),
        ("--m", num),
        ("--i", dict(type=_int, choices=[0, 1], default=None)),
    )
    sub("k0", ["chi", "sym", "mul"], ("--x", dict(required=True)), ("--y", text), ("--n", num))
    sub("zeta", ["geom", "kapranov"], ("--q", text), ("--x", text), ("--order", dict(type=_int, default=6)))
    sub(
        "grassmann",
        ["chi", "sym", "zeta", "losanitsch"],
        ("--d", num),
        ("--r", num),
        ("--n", num),
        ("--order", dict(type=_int, default=6)),
        ("--rows", num),
    )
    sub(
        "delpezzo",
        ["chi", "sym3"],
        ("--alpha", dict(required=True)),
        ("--beta", dict(required=True)),
        ("--gamma", dict(required=True)),
    )
    st = groups.add_parser("selftest", parents=[common])
    st.add_argument("--report", action="store_true", help="print diagnostic details")
    b = groups.add_parser("batch", parents=[common])
    b.add_argument("file", nargs="?", default="-", help="NDJSON requests (default stdin)")
    return p


def execute(argv) -> tuple[int, Response | None, str | None]:
    """Run one request.  Returns (exit code, response, error message)."""
    try:
        args = build_parser().parse_args(argv)
        F = parse_field(args.field)
        resp = HANDLERS[args.group](args, F)
        return (0 if resp.ok else 1), resp, None
    except ParseError as e:
        return 2, None, f"parse error: {e}"
    except GWError as e:
        return 1, None, f"{type(e).__name__}: {e}"


def _request_argv(req: dict) -> list[str]:
    if not isinstance(req, dict) or not isinstance(req.get("cmd"), str):
        raise ParseError("request must be an object with a string 'cmd'")
    argv = req["cmd"].split()
    args = req.get("args") or {}
    if not isinstance(args, dict):
        raise ParseError("'args' must be an object")
    for key, value in args.items():
        flag = "--" + key
        if value is True:
            argv.append(flag)
        elif value is False or value is None:
            continue
        else:
            argv += [flag, str(value)]
    return argv


def run_batch(lines) -> tuple[int, list[dict]]:
    """Answer NDJSON requests in order.  Exit code is the worst seen."""
    out, worst = [], 0
    for line in lines:
        if not line.strip():
            continue
        try:
            argv = _request_argv(json.loads(line))
        except (json.JSONDecodeError, ParseError) as e:
            code, resp, err = 2, None, f"parse error: {e}"
        else:
            if argv and argv[0] == "batch":
                code, resp, err = 2, None, "parse error: nested batch"
            else:
                code, resp, err = execute(argv)
        if resp is not None:
            out.append(resp.to_json())
        else:
            out.append({"status": "error", "result": None, "diagnostics": [err]})
        worst = max(worst, code)
    return worst, out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    want_json = "--json" in argv
    if argv[:1] == ["batch"]:
        try:
            args = build_parser().parse_args(argv)
        except ParseError as e:
            print(f"parse error: {e}", file=sys.stderr)
            return 2
        stream = sys.stdin if args.file == "-" else open(args.file, encoding="utf-8")
        with stream:
            code, out = run_batch(stream)
        for item in out:
            print(json.dumps(item, ensure_ascii=False, sort_keys=True))
        return code
    code, resp, err = execute(argv)
    if resp is not None:
        if want_json:
            print(json.dumps(resp.to_json(), ensure_ascii=False, sort_keys=True, indent=2))
        else:
            print(resp.text)
            for d in resp.diagnostics:
                print(f"# {d}", file=sys.stderr)
    else:
        if want_json:
            print(json.dumps({"status": "error", "result": None, "diagnostics": [err]}, ensure_ascii=False))
        print(err, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
