"""Command-line interface: ``qrook <command> ...``.

Exit status is 0 on success, 1 when a verification or comparison fails and
2 on usage errors or malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import fqcount, llt, pitab, rook, symfunc, verify
from .qalg import LaurentPoly
from .shapes import (
    DyckPath,
    Partition,
    greene_shape,
    hessenberg,
    hessenberg_to_path,
    partition_to_path,
    partitions,
)

__all__ = ["main", "build_parser"]

DEFAULT_VERIFY_N = 5
SLOW_VERIFY_N = 6


class UsageError(Exception):
    pass


def _partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{exc} in {text!r}") from None


def _path_arg(text: str) -> DyckPath:
    try:
        return DyckPath.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list_arg(text: str) -> tuple[int, ...]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok.isdigit():
            raise argparse.ArgumentTypeError(f"bad entry {tok!r} in {text!r}")
        out.append(int(tok))
    return tuple(out)


def _max_n() -> int | None:
    raw = os.environ.get("QROOK_MAX_N")
    if not raw:
        return None
    if not raw.isdigit():
        raise UsageError(f"QROOK_MAX_N must be a nonnegative integer, got {raw!r}")
    return int(raw)


def _capped(n: int, what: str) -> int:
    cap = _max_n()
    if cap is not None and n > cap:
        print(f"warning: {what} {n} capped to QROOK_MAX_N={cap}", file=sys.stderr)
        return cap
    return n


def _check_size(n: int) -> None:
    cap = _max_n()
    if cap is not None and n > cap:
        raise UsageError(f"semilength {n} exceeds QROOK_MAX_N={cap}")


def _resolve_path(args) -> DyckPath:
    """An explicit --path wins over --shape/--semilength."""
    if getattr(args, "path", None) is not None:
        pi = args.path
    elif getattr(args, "shape", None) is not None and getattr(args, "semilength", None) is not None:
        try:
            pi = partition_to_path(args.shape, args.semilength)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        raise UsageError("give --path, or --shape together with --semilength")
    _check_size(pi.n)
    return pi


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(text)


def _add_path_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--path", type=_path_arg, help="Dyck path as an N/E word, e.g. NNNEEENNENEE or N3E3N2ENE2")
    p.add_argument("--shape", type=_partition_arg, help="partition above the path, e.g. 4,3,3")
    p.add_argument("--semilength", type=int, help="semilength used with --shape")


# ---- commands -------------------------------------------------------------


def cmd_rook(args) -> int:
    lam = args.shape
    if args.method == "brute":
        value = rook.rk_bruteforce(lam, args.k)
    elif args.method == "rec":
        value = rook.rk_recursion(lam, args.k)
    else:
        n = args.semilength if args.semilength is not None else (lam[0] + len(lam) if lam else 1)
        _check_size(n)
        value = pitab.rk_tableaux(partition_to_path(lam, n), args.k)
    _emit(args, {"shape": str(lam), "k": args.k, "method": args.method, "value": str(value)}, str(value))
    return 0


def cmd_stirling(args) -> int:
    fn = rook.q_stirling1 if args.kind == 1 else rook.q_stirling2
    value = fn(args.n, args.k)
    _emit(args, {"kind": args.kind, "n": args.n, "k": args.k, "value": str(value)}, str(value))
    return 0


def cmd_hit(args) -> int:
    value = rook.q_hit(args.shape, args.m, args.n, args.k)
    payload = {"shape": str(args.shape), "m": args.m, "n": args.n, "k": args.k, "value": str(value)}
    _emit(args, payload, str(value))
    return 0


def cmd_coeff(args) -> int:
    pi = _resolve_path(args)
    if args.kind == "c":
        table = {mu: pitab.c_coefficient(pi, mu) for mu in partitions(pi.n)}
    elif args.kind == "ctilde":
        table = llt.expand_ctilde(pi)
    else:
        table = dict(llt.expand_b(pi).coeffs)
    if args.mu is not None:
        if args.mu.size != pi.n:
            raise UsageError(f"--mu {args.mu} is not a partition of {pi.n}")
        table = {args.mu: table.get(args.mu, LaurentPoly())}
    table = {mu: v for mu, v in table.items() if not v.is_zero() or args.mu is not None}
    rows = sorted(table.items(), reverse=True)
    payload = {"path": str(pi), "kind": args.kind, "coeffs": {str(mu): str(v) for mu, v in rows}}
    _emit(args, payload, "\n".join(f"{mu}: {v}" for mu, v in rows))
    return 0


def cmd_syt(args) -> int:
    pi = _resolve_path(args)
    if args.mu.size != pi.n:
        raise UsageError(f"--mu {args.mu} is not a partition of {pi.n}")
    tabs = pitab.enumerate_pi_syt(pi, args.mu)
    words = [T.reading_word() for T in tabs]
    payload = {"path": str(pi), "mu": str(args.mu),
               "tableaux": [{"rows": w, "gamma": pitab.gamma(T), "weight": str(pitab.weight(T))}
                            for w, T in zip(words, tabs)]}
    lines = [f"{w}  gamma={pitab.gamma(T)}  wt={pitab.weight(T)}" for w, T in zip(words, tabs)]
    _emit(args, payload, "\n".join(lines) if lines else "(none)")
    return 0


def cmd_llt(args) -> int:
    pi = _resolve_path(args)
    if args.action == "chi":
        f = symfunc.to_basis(llt.chi(pi), args.basis)
        payload = {"path": str(pi), **f.to_json()}
        text = "\n".join(f"{args.basis}[{mu}]: {v}" for mu, v in f.items())
    else:
        if args.basis == "W":
            exp = llt.expand_c(pi)
            rows = list(exp.items())
        elif args.basis == "e":
            exp = llt.expand_b(pi)
            rows = list(exp.items())
        else:
            rows = sorted(llt.expand_wtilde(pi).items(), reverse=True)
        payload = {"path": str(pi), "basis": args.basis, "coeffs": {str(mu): str(v) for mu, v in rows}}
        text = "\n".join(f"{mu}: {v}" for mu, v in rows)
    _emit(args, payload, text)
    return 0


def cmd_fq(args) -> int:
    pi = _resolve_path(args)
    counts = fqcount.count_by_rank(pi, args.p)
    ks = [args.k] if args.k is not None else list(range(len(counts)))
    observed = [counts[k] if k < len(counts) else 0 for k in ks]
    formula = [fqcount.count_by_formula(pi, args.p, k) for k in ks]
    match = observed == formula
    payload = {"path": str(pi), "p": args.p, "k": ks, "counts": observed, "formula": formula, "match": match}
    text = f"counts  {observed}\nformula {formula}\n{'match' if match else 'MISMATCH'}"
    _emit(args, payload, text)
    return 0 if match else 1


def cmd_greene(args) -> int:
    pi = _resolve_path(args)
    shape = greene_shape(pi)
    _emit(args, {"path": str(pi), "greene": str(shape)}, str(shape))
    return 0


def cmd_convert(args) -> int:
    if args.hessenberg is not None and args.path is None and args.shape is None:
        try:
            pi = hessenberg_to_path(args.hessenberg)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        pi = _resolve_path(args)
    payload = {
        "path": str(pi),
        "semilength": pi.n,
        "shape": str(pi.partition),
        "hessenberg": ",".join(map(str, hessenberg(pi))),
    }
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    _emit(args, payload, text)
    return 0


def cmd_verify(args) -> int:
    n = _capped(args.n, "verification depth")
    if n >= SLOW_VERIFY_N and args.suite in ("all", "llt"):
        print(f"warning: the llt suite at n={n} may take a while", file=sys.stderr)
    reports = verify.run(args.suite, n)
    ok = all(r.ok for r in reports)
    if args.json:
        print(json.dumps({"n": n, "ok": ok, "suites": [r.to_json() for r in reports]}, ensure_ascii=False))
    else:
        for r in reports:
            print(f"{r.suite}: {r.passed} passed, {r.failed} failed")
            for c in r.cases:
                if not c.passed:
                    print(f"  FAIL {c.identity} [{c.inputs}]\n    left:  {c.left}\n    right: {c.right}")
        print("OK" if ok else "FAILED")
    return 0 if ok else 1


# ---- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="qrook", description="q-rook numbers, pi-tableaux and LLT expansions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rook", parents=[common], help="q-rook number R_k of a Ferrers board")
    p.add_argument("--shape", type=_partition_arg, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("brute", "rec", "tableaux"), default="rec")
    p.add_argument("--semilength", type=int, help="path semilength for --method tableaux")
    p.set_defaults(func=cmd_rook)

    p = sub.add_parser("stirling", parents=[common], help="q-Stirling numbers")
    p.add_argument("--kind", type=int, choices=(1, 2), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("hit", parents=[common], help="q-hit number H_k^{m,n}")
    p.add_argument("--shape", type=_partition_arg, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_hit)

    p = sub.add_parser("coeff", parents=[common], help="c, c-tilde or b coefficients of a path")
    p.add_argument("kind", choices=("c", "ctilde", "b"))
    _add_path_options(p)
    p.add_argument("--mu", type=_partition_arg)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("syt", parents=[common], help="list pi-tableaux of a shape")
    _add_path_options(p)
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.set_defaults(func=cmd_syt)

    p = sub.add_parser("llt", parents=[common], help="unicellular LLT function and its expansions")
    p.add_argument("action", choices=("chi", "expand"))
    _add_path_options(p)
    p.add_argument("--basis", default=None, help="chi: m|e|s|h|p; expand: W|e|Wtilde")
    p.set_defaults(func=cmd_llt)

    p = sub.add_parser("fq", parents=[common], help="finite-field matrix counts by rank")
    p.add_argument("action", choices=("count",))
    _add_path_options(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_fq)

    p = sub.add_parser("greene", parents=[common], help="Greene shape of the path poset")
    _add_path_options(p)
    p.set_defaults(func=cmd_greene)

    p = sub.add_parser("convert", parents=[common], help="path, shape and Hessenberg function")
    _add_path_options(p)
    p.add_argument("--hessenberg", type=_int_list_arg)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("verify", parents=[common], help="run the identity sweeps")
    p.add_argument("--n", type=int, default=DEFAULT_VERIFY_N)
    p.add_argument("--suite", choices=("all", *sorted(verify.SUITES)), default="all")
    p.set_defaults(func=cmd_verify)
    return parser


_LLT_BASES = {"chi": ("m", "e", "s", "h", "p"), "expand": ("W", "e", "Wtilde")}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "llt":
        allowed = _LLT_BASES[args.action]
        if args.basis is None:
            args.basis = allowed[0]
        elif args.basis not in allowed:
            print(f"qrook: error: basis {args.basis!r} is not one of {', '.join(allowed)}", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qrook: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"qrook: error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"qrook: verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
