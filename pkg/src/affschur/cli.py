"""Command-line interface: compute bases, products and structure
constant tables, and run the verification suites.

Every command emits one deterministic JSON report (sorted keys, fixed
enumeration order) and exits nonzero when a verification fails or an
input is rejected.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .laurent import LaurentPoly
from .affmat import AffMatrix
from .affweyl import AffPerm, jdelta_inv, double_coset
from .heckekl import KLCache, kl_poly, default_cache
from .schur import SchurElt, theta, mult, g_constants, canonical_expand
from . import transfer
from . import hall
from .verify import DRIVERS


class InputError(ValueError):
    """Malformed or out-of-range command input."""


def _load_matrix(spec, n):
    """A matrix argument: inline JSON or a path to a JSON file."""
    if spec is None:
        raise InputError("missing matrix argument")
    text = spec
    if not spec.lstrip().startswith("{"):
        if not os.path.exists(spec):
            raise InputError("matrix file not found: %s" % spec)
        with open(spec) as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("matrix is not valid JSON: %s" % exc)
    if "entries" not in data:
        raise InputError("matrix JSON must have an 'entries' field")
    data.setdefault("n", n)
    if data["n"] != n and n is not None:
        raise InputError("matrix n=%d does not match --n %d" % (data["n"], n))
    mat = AffMatrix.from_json(data)
    if not mat.is_nonnegative():
        raise InputError("matrix has a negative entry")
    return mat


def _require(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise InputError("--%s is required for this command" % name)


def _check_rank(n=None, r=None):
    if n is not None and n < 2:
        raise InputError("n must be >= 2")
    if r is not None and r < 2:
        raise InputError("r must be >= 2")


def _check_length_cap(a_mat, cap):
    if cap is None:
        return
    lam, d, mu = jdelta_inv(a_mat)
    _, d_plus, _ = double_coset(lam, d, mu)
    if d_plus.length() > cap:
        raise InputError(
            "longest double-coset element has length %d, above --cap-length %d"
            % (d_plus.length(), cap)
        )


def _schur_terms_json(x):
    items = sorted(x.terms.items(), key=lambda p: p[0].entries())
    return [[a.to_json(), c.to_json()] for a, c in items]


def _parse_window(text):
    try:
        return AffPerm(tuple(int(t) for t in text.split(",")))
    except Exception as exc:
        raise InputError("bad window %r: %s" % (text, exc))


def cmd_kl(args, cache):
    _check_rank(r=args.r)
    _require(args, "y", "w")
    y = _parse_window(args.y)
    w = _parse_window(args.w)
    if y.r != args.r or w.r != args.r:
        raise InputError("window length must equal r")
    p = kl_poly(y, w, cache)
    return {
        "command": "kl",
        "r": args.r,
        "y": list(y.window),
        "w": list(w.window),
        "P": p.to_json(),
        "violations": [],
    }


def cmd_theta(args, cache):
    _check_rank(args.n, args.r)
    a_mat = _load_matrix(args.a, args.n)
    if a_mat.sigma() != args.r:
        raise InputError("sigma(A) = %d != r = %d" % (a_mat.sigma(), args.r))
    _check_length_cap(a_mat, args.cap_length)
    th = theta(a_mat, args.r, cache)
    return {
        "command": "theta",
        "n": args.n,
        "r": args.r,
        "A": a_mat.to_json(),
        "theta": _schur_terms_json(th),
        "violations": [],
    }


def cmd_mult(args, cache):
    _check_rank(args.n, args.r)
    a_mat = _load_matrix(args.a, args.n)
    b_mat = _load_matrix(args.b, args.n)
    for m in (a_mat, b_mat):
        if m.sigma() != args.r:
            raise InputError("matrix sigma %d != r %d" % (m.sigma(), args.r))
        _check_length_cap(m, args.cap_length)
    if args.basis == "theta":
        x = mult(theta(a_mat, args.r, cache), theta(b_mat, args.r, cache))
    else:
        x = mult(
            SchurElt.bracket(a_mat, args.r), SchurElt.bracket(b_mat, args.r)
        )
    return {
        "command": "mult",
        "n": args.n,
        "r": args.r,
        "basis": args.basis,
        "A": a_mat.to_json(),
        "B": b_mat.to_json(),
        "product": _schur_terms_json(x),
        "violations": [],
    }


def cmd_g_table(args, cache):
    _check_rank(args.n, args.r)
    a_mat = _load_matrix(args.a, args.n)
    b_mat = _load_matrix(args.b, args.n)
    for m in (a_mat, b_mat):
        if m.sigma() != args.r:
            raise InputError("matrix sigma %d != r %d" % (m.sigma(), args.r))
        _check_length_cap(m, args.cap_length)
    return {
        "command": "g-table",
        "violations": [],
        **transfer.g_table(a_mat, b_mat, args.r).to_json(),
    }


def cmd_f_table(args, cache):
    _check_rank(args.n)
    a_mat = _load_matrix(args.a, args.n)
    b_mat = _load_matrix(args.b, args.n)
    if not (a_mat.is_upper() and b_mat.is_upper()):
        raise InputError("f-table inputs must be strictly upper matrices")
    return {
        "command": "f-table",
        "violations": [],
        **transfer.f_constants(a_mat, b_mat).to_json(),
    }


def cmd_h_table(args, cache):
    _check_rank(args.n)
    a_mat = _load_matrix(args.a, args.n)
    b_mat = _load_matrix(args.b, args.n)
    try:
        table = transfer.h_constants(a_mat, b_mat)
    except ValueError as exc:
        raise InputError(str(exc))
    return {"command": "h-table", "violations": [], **table.to_json()}


def cmd_hall(args, cache):
    _check_rank(args.n)
    a_mat = _load_matrix(args.a, args.n)
    b_mat = _load_matrix(args.b, args.n)
    c_mat = _load_matrix(args.c, args.n)
    for m in (a_mat, b_mat, c_mat):
        if not m.is_upper():
            raise InputError("hall inputs must be strictly upper matrices")
    try:
        phi = hall.hall_poly(a_mat, b_mat, c_mat, cap_dim=args.cap_dim)
    except hall.SizeCapError as exc:
        raise InputError(str(exc))
    except ValueError as exc:
        raise InputError(str(exc))
    return {
        "command": "hall",
        "n": args.n,
        "A": a_mat.to_json(),
        "B": b_mat.to_json(),
        "C": c_mat.to_json(),
        "phi": phi.to_json(),
        "violations": [],
    }


def cmd_verify(args, cache):
    name = args.target
    if name not in DRIVERS:
        raise InputError(
            "unknown verification target %r (choose from: %s)"
            % (name, ", ".join(sorted(DRIVERS)))
        )
    kwargs = {}
    if name in ("lemma-3.1", "prop-3.8"):
        kwargs["cache"] = cache
    if name in (
        "lemma-3.1",
        "lemma-3.6",
        "lemma-3.7",
        "prop-3.8",
        "cor-4.9",
        "lemma-4.6",
        "thm-4.8",
        "thm-6.3",
    ):
        if args.n is not None:
            kwargs["n"] = args.n
        if args.r is not None:
            kwargs["r"] = args.r
    if name in ("thm-5.4", "thm-5.5") and args.n is not None:
        kwargs["n"] = args.n
    if name in ("thm-4.8", "thm-4.10") and args.N is not None:
        kwargs["big_n"] = args.N
    if name == "thm-4.8" and args.k is not None:
        kwargs["ks"] = (args.k,)
    if name in ("thm-4.8", "thm-5.4", "thm-5.5") and args.samples is not None:
        kwargs["samples"] = args.samples
    if name == "zeta" and args.cap_dim is not None:
        kwargs["cap_dim"] = args.cap_dim
    _check_rank(kwargs.get("n"), kwargs.get("r"))
    report = DRIVERS[name](**kwargs)
    report["command"] = "verify"
    return report


COMMANDS = {
    "kl": cmd_kl,
    "theta": cmd_theta,
    "mult": cmd_mult,
    "g-table": cmd_g_table,
    "f-table": cmd_f_table,
    "h-table": cmd_h_table,
    "hall": cmd_hall,
    "verify": cmd_verify,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="affschur",
        description="Canonical bases and structure constants of affine "
        "quantum Schur and Hall algebras, exactly over Z[v, v^-1].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", type=int, help="number of rows per period")
        p.add_argument("--r", type=int, help="level")
        p.add_argument("--N", type=int, help="target rank for transfer maps")
        p.add_argument("--k", type=int, help="eta shift")
        p.add_argument("--cache", help="path of the persistent KL table")
        p.add_argument("--out", help="write the JSON report to this file")
        p.add_argument(
            "--cap-length",
            type=int,
            default=40,
            help="refuse double-coset computations beyond this length",
        )
        p.add_argument(
            "--cap-dim",
            type=int,
            default=10,
            help="refuse Hall counts beyond this total dimension",
        )
        p.add_argument("--samples", type=int, help="sample size for suites")

    p = sub.add_parser("kl", help="a Kazhdan-Lusztig polynomial")
    p.add_argument("--y", help="window of y, comma separated")
    p.add_argument("--w", help="window of w, comma separated")
    common(p)

    p = sub.add_parser("theta", help="a canonical basis element")
    p.add_argument("--a", help="matrix A (JSON or file)")
    common(p)

    p = sub.add_parser("mult", help="product of two basis elements")
    p.add_argument("--a", help="matrix A (JSON or file)")
    p.add_argument("--b", help="matrix B (JSON or file)")
    p.add_argument(
        "--basis", choices=("bracket", "theta"), default="bracket"
    )
    common(p)

    for name, helptext in (
        ("g-table", "canonical structure constants at fixed level"),
        ("f-table", "Hall positive-part structure constants"),
        ("h-table", "modified-algebra structure constants"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--a", help="matrix A (JSON or file)")
        p.add_argument("--b", help="matrix B (JSON or file)")
        common(p)

    p = sub.add_parser("hall", help="a Hall polynomial phi^C_{A,B}")
    p.add_argument("--a", help="matrix A (JSON or file)")
    p.add_argument("--b", help="matrix B (JSON or file)")
    p.add_argument("--c", help="matrix C (JSON or file)")
    common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("target", help="|".join(sorted(DRIVERS)))
    common(p)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    cache = KLCache(args.cache) if args.cache else default_cache()
    try:
        report = COMMANDS[args.command](args, cache)
    except InputError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    if args.cache:
        cache.save()
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return 1 if report.get("violations") else 0


if __name__ == "__main__":
    sys.exit(main())
