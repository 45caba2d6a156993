"""Command-line interface: ``matkls compute|verify|scan|closed-form``.

Exit status is 0 when every verdict holds, 1 when an identity or conjecture
is falsified (the witness is printed), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import invariants as inv
from . import lab
from .errors import MatklsError
from .matroid import Matroid
from .polynomial import Polynomial

QUANTITIES = ("P", "Q", "Qhat", "chi")
# Identity names accepted by ``verify --identity``.
IDENTITIES = ("eq1.1", "eq1.2", "thm1.3", "prop2.4", "lemma3.1")
CLI_METHODS = ("recursion", "kls", "closed", "all")
ALL_METHOD_GROUND_LIMIT = 12


class UsageError(Exception):
    pass


def _split(value: str, allowed, what: str) -> list:
    items = [v.strip() for v in value.split(",") if v.strip()]
    bad = [v for v in items if v not in allowed]
    if bad or not items:
        raise UsageError(f"unknown {what} {bad or value!r}; choose from {', '.join(allowed)}")
    return items


def _load_matroid(args) -> Matroid:
    if bool(args.matroid) == bool(args.matroid_file):
        raise UsageError("give exactly one of --matroid or --matroid-file")
    if args.matroid_file:
        try:
            with open(args.matroid_file) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.matroid_file}: {exc}")
    else:
        text = args.matroid
    return Matroid.from_spec(text)


def _default_method(M: Matroid) -> str:
    if M.ground_size <= ALL_METHOD_GROUND_LIMIT:
        return "all"
    return "closed" if inv.has_closed_form(M) else "recursion"


def _emit(payload, pretty: bool, out, human=None):
    if pretty and human is not None:
        out.write(human(payload))
    else:
        out.write(json.dumps(payload, indent=2 if pretty else None, sort_keys=False) + "\n")


def _cmd_compute(args, out) -> int:
    M = _load_matroid(args)
    method = args.method or _default_method(M)
    if args.bundle:
        payload = inv.invariant_bundle(M, method).to_json()
    else:
        quantities = _split(args.quantity, QUANTITIES, "quantity")
        fn = {"P": inv.kl_polynomial, "Q": inv.inverse_kl_polynomial,
              "Qhat": inv.inverse_kl_hat, "chi": inv.characteristic_polynomial}
        payload = {q: fn[q](M, method).to_json() for q in quantities}

    def human(p):
        lines = []
        for k, v in p.items():
            if isinstance(v, list):
                lines.append(f"{k} = {Polynomial.from_json(v)}")
            else:
                lines.append(f"{k} = {json.dumps(v)}")
        return "\n".join(lines) + "\n"

    _emit(payload, args.pretty, out, human)
    return 0


def _verify(M: Matroid, identity: str, method: str):
    if identity == "eq1.1":
        return M.rk == 0 or inv.kl_defining_identity(M)
    if identity == "eq1.2":
        return M.rk == 0 or inv.inverse_kl_defining_identity(M)
    if identity == "thm1.3":
        if M.rk == 0:
            return None
        return inv.relations_check(M)._asdict()
    if identity == "prop2.4":
        return inv.constant_term_identity(M, method)
    # multiplicativity only speaks about direct sums
    if M.kind != "direct_sum":
        return None
    p_ok, q_ok = inv.multiplicativity_check(M.params["left"], M.params["right"], method)
    return {"P": p_ok, "Q": q_ok}


def _all_true(v) -> bool:
    if v is None:
        return True
    if isinstance(v, dict):
        return all(v.values())
    return bool(v)


def _cmd_verify(args, out) -> int:
    M = _load_matroid(args)
    identities = _split(args.identity, IDENTITIES, "identity")
    method = args.method or "recursion"
    if method == "closed":
        raise UsageError("verify needs a lattice method, not 'closed'")
    if method == "all":
        method = "recursion"
    verdicts = {name: _verify(M, name, method) for name in identities}
    payload = {"matroid": M.to_spec(), "verdicts": verdicts}

    def human(p):
        lines = []
        for k, v in p["verdicts"].items():
            status = "n/a" if v is None else ("ok" if _all_true(v) else "FALSIFIED")
            detail = f"  {json.dumps(v)}" if isinstance(v, dict) else ""
            lines.append(f"{k}: {status}{detail}")
        return "\n".join(lines) + "\n"

    _emit(payload, args.pretty, out, human)
    return 0 if all(_all_true(v) for v in verdicts.values()) else 1


def _cmd_scan(args, out) -> int:
    limits = {}
    if args.family == "graphic":
        limits["max_vertices"] = args.max_vertices
        limits["min_vertices"] = args.min_vertices
    elif args.family == "uniform":
        limits["max_md"] = args.max_md
    elif args.family == "boolean":
        limits["max_n"] = args.max_n
    else:
        limits.update(count=args.count, ground_size=args.ground_size, rank=args.rank, seed=args.seed)
    family = lab.generate_family(args.family, **limits)
    checks = _split(args.checks, lab.CHECKS, "check")
    report = lab.scan(family, checks, workers=args.workers, cache=args.cache)
    if args.pretty:
        for r in report.records:
            flags = " ".join(f"{c}={'ok' if r.get(lab._VERDICT_FIELD[c]) else 'FAIL'}"
                             for c in report.checks if lab._VERDICT_FIELD[c] in r)
            q = Polynomial.from_json(r["Q"]) if "Q" in r else r.get("error")
            out.write(f"{json.dumps(r['spec'])}\n    Q = {q}  {flags}\n")
        out.write(json.dumps({"summary": report.summary}, indent=2) + "\n")
    else:
        out.write(report.to_jsonl())
    return 0 if report.all_passed else 1


def _cmd_closed_form(args, out) -> int:
    if args.m < 1 or args.d < 1:
        raise UsageError("closed forms need m, d >= 1")
    quantities = _split(args.quantity, ("P", "Q", "chi"), "quantity")
    fn = {"P": inv.p_uniform_closed, "Q": inv.q_uniform_closed, "chi": inv.chi_uniform_closed}
    payload = {q: fn[q](args.m, args.d).to_json() for q in quantities}
    _emit(payload, args.pretty, out,
          lambda p: "".join(f"{k} = {Polynomial.from_json(v)}\n" for k, v in p.items()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matkls",
        description="Kazhdan-Lusztig and inverse Kazhdan-Lusztig polynomials of matroids.")
    sub = parser.add_subparsers(dest="command", required=True)

    def matroid_opts(p):
        p.add_argument("--matroid", help="matroid spec as inline JSON")
        p.add_argument("--matroid-file", help="path to a JSON matroid spec")
        p.add_argument("--method", choices=CLI_METHODS)
        p.add_argument("--pretty", action="store_true", help="human-readable output")

    p = sub.add_parser("compute", help="compute P, Q, Qhat, chi")
    matroid_opts(p)
    p.add_argument("--quantity", default="P,Q,chi", help="comma list from P,Q,Qhat,chi")
    p.add_argument("--bundle", action="store_true", help="emit the full invariant bundle")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("verify", help="check identities on one matroid")
    matroid_opts(p)
    p.add_argument("--identity", default=",".join(IDENTITIES),
                   help="comma list from " + ",".join(IDENTITIES))
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan", help="run conjecture checks over a family")
    p.add_argument("--family", required=True, choices=("boolean", "uniform", "graphic", "random"))
    p.add_argument("--max-vertices", type=int, default=5)
    p.add_argument("--min-vertices", type=int, default=3)
    p.add_argument("--max-md", type=int, default=4)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--ground-size", type=int, default=7)
    p.add_argument("--rank", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checks", default=",".join(lab.CHECKS))
    p.add_argument("--cache", help="append-only JSON-lines result cache")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("closed-form", help="closed forms for uniform matroids")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--quantity", default="P,Q")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_closed_form)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except inv.MethodDisagreement as exc:
        err.write(f"matkls: {exc}\n")
        return 1
    except (UsageError, MatklsError, ValueError) as exc:
        err.write(f"matkls: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
