"""Command-line front end.

Subcommands map one-to-one onto library entry points:

    cohom    direct graded cohomology dimensions
    e1       first page of the polynomial-degree spectral sequence
    pages    E_infinity and its comparison with the graded cohomology
    koszul   regularity certificate and quotient dimensions for a
             named sequence
    hilbert  complete-intersection Hilbert series for a named model
    verify   bundled exact-check suites

JSON is the canonical output (schema "weilcoh/1"); CSV is a lossy
projection of the tables.  With a fixed seed the output is byte-identical
across runs apart from the "timing" field.

Exit codes: 0 success, 1 a verdict failed, 2 invalid arguments,
3 resource-cap abort.  A document is emitted even on failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .fock import direct_cohomology_dims, invariant_quotient_dims
from .koszul import (
    KoszulSpec,
    ci_hilbert,
    ideal_quotient_dims,
    regular_sequence_check,
)
from .linalg import ResourceCapError
from .polyring import FockRing, SkRing, q_gen
from .spectral import e1_dims, einf_and_converge, unregrade
from .verify import SUITES, run_suite

__all__ = ["main"]


def _cell(ell, degree, dim, stabilized):
    return {"ell": ell, "degree": degree, "dim": dim,
            "stabilized": bool(stabilized)}


def _parse_ell(text, n):
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if not (0 <= lo <= hi <= n):
        raise ValueError("--ell out of range 0..%d: %s" % (n, text))
    return range(lo, hi + 1)


def _sk_c_sequence(k):
    S = SkRing(k)
    seq = []
    for j in range(1, k + 1):
        f = S.zero()
        for i in range(1, k + 1):
            f = f + S.rhat_var(i, j) * S.what_var(i)
        seq.append(f)
    return S, seq


def _koszul_model(args):
    """The named sequence for `koszul`: q in P_k, or c / w in S_k."""
    if args.model == "q":
        R = FockRing(args.n, args.k)
        return KoszulSpec(R, [q_gen(R, a) for a in range(1, args.n + 1)])
    if args.model == "c":
        S, seq = _sk_c_sequence(args.k)
        return KoszulSpec(S, seq)
    if args.model == "w":
        S = SkRing(args.k)
        return KoszulSpec(S, [S.what_var(i) for i in range(1, args.k + 1)])
    raise ValueError("unknown koszul model %r" % args.model)


def _hilbert_series(args):
    """Named Hilbert-series models.

    cminus  S_k/(c_1..c_k)
    aquot   P_k/(q_1..q_n)  (free z,w variables modulo the n quadrics)
    rk      the free ring R_k on the k(k+1)/2 quadratic generators
    sk      the free ring S_k
    """
    k, D = args.k, args.max_degree
    tk = k * (k + 1) // 2
    if args.model == "cminus":
        return ci_hilbert((2,) * tk + (1,) * k, (3,) * k, D)
    if args.model == "aquot":
        n = args.n
        return ci_hilbert((1,) * (n * k + k), (2,) * n, D)
    if args.model == "rk":
        return ci_hilbert((2,) * tk, (), D)
    if args.model == "sk":
        return ci_hilbert((2,) * tk + (1,) * k, (), D)
    raise ValueError("unknown hilbert model %r" % args.model)


def _cmd_cohom(args, doc):
    ring = FockRing(args.n, args.k)
    for ell in _parse_ell(args.ell, args.n):
        rep = direct_cohomology_dims(ring, args.part, ell,
                                     args.max_degree, args.buffer)
        doc["tables"].append({
            "name": "cohomology part=%s ell=%d" % (args.part, ell),
            "cells": [_cell(ell, t, rep.dims[t], rep.stabilized[t])
                      for t in range(args.max_degree + 1)],
        })


def _cmd_e1(args, doc):
    page = e1_dims(FockRing(args.n, args.k), args.part, args.max_degree)
    cells = []
    for (p, q), dim in sorted(page.dims.items()):
        ell, t = unregrade(p, q)
        cells.append(_cell(ell, t, dim, True))
    doc["tables"].append({"name": "E1 part=%s" % args.part, "cells": cells})


def _cmd_pages(args, doc):
    rep = einf_and_converge(FockRing(args.n, args.k), args.part,
                            args.max_degree, args.buffer)
    cells = []
    for (p, q), dim in sorted(rep.einf.dims.items()):
        ell, t = unregrade(p, q)
        cells.append(_cell(ell, t, dim,
                           rep.einf_stabilized.get((p, q), False)))
    doc["tables"].append({
        "name": "Einf part=%s r=%d" % (args.part, rep.r_max),
        "cells": cells,
    })
    cells = []
    for (p, q), dim in sorted(rep.gr_dims.items()):
        ell, t = unregrade(p, q)
        cells.append(_cell(ell, t, dim,
                           rep.gr_stabilized.get((p, q), False)))
    doc["tables"].append({
        "name": "graded cohomology part=%s" % args.part,
        "cells": cells,
    })
    doc["verdicts"].append({
        "name": "Einf matches graded cohomology",
        "pass": rep.ok,
        "detail": "agreements %d, mismatches %s, inconclusive %s" % (
            len(rep.agreements), rep.mismatches, sorted(rep.inconclusive)),
    })


def _cmd_koszul(args, doc):
    spec = _koszul_model(args)
    D = args.max_degree
    cert = regular_sequence_check(spec, D)
    doc["verdicts"].append({
        "name": "regular sequence through degree %d" % D,
        "pass": cert.regular,
        "detail": "failure degrees %s" % cert.failure_degree
        if not cert.regular else "",
    })
    quo = ideal_quotient_dims(spec, D)
    doc["tables"].append({
        "name": "quotient dims model=%s" % args.model,
        "cells": [_cell(len(spec.sequence), t, quo[t], True)
                  for t in range(D + 1)],
    })


def _cmd_hilbert(args, doc):
    coeffs = _hilbert_series(args)
    doc["tables"].append({
        "name": "hilbert model=%s" % args.model,
        "cells": [_cell(0, t, c, True) for t, c in enumerate(coeffs)],
    })


def _cmd_verify(args, doc):
    doc["verdicts"].extend(run_suite(args.suite, args.n, args.k, args.seed))


def _emit(doc, fmt, elapsed, out=None):
    out = out or sys.stdout
    doc["timing"] = elapsed
    if fmt == "json":
        json.dump(doc, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        out.write("table,ell,degree,dim,stabilized\n")
        for table in doc["tables"]:
            for c in table["cells"]:
                out.write("%s,%d,%d,%d,%s\n" % (
                    table["name"].replace(",", ";"), c["ell"], c["degree"],
                    c["dim"], str(c["stabilized"]).lower()))


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="weilcoh",
        description="Exact cohomology tables for the relative cochain "
                    "complex of so(n,1) with polynomial coefficients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n=True, k=True, part=False, degree=False, buffer=False):
        if n:
            p.add_argument("--n", type=int, default=2)
        if k:
            p.add_argument("--k", type=int, default=1)
        if part:
            p.add_argument("--part", choices=("plus", "minus", "full"),
                           default="full")
        if degree:
            p.add_argument("--max-degree", type=int, default=4)
        if buffer:
            p.add_argument("--buffer", type=int, default=4)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--max-entries", type=int, default=None)

    p = sub.add_parser("cohom", help="direct graded cohomology dims")
    common(p, part=True, degree=True, buffer=True)
    p.add_argument("--ell", default="0..0",
                   help="single level or range a..b")
    p.set_defaults(func=_cmd_cohom)

    p = sub.add_parser("e1", help="first spectral page")
    common(p, part=True, degree=True)
    p.set_defaults(func=_cmd_e1)

    p = sub.add_parser("pages", help="E-infinity and convergence report")
    common(p, part=True, degree=True, buffer=True)
    p.set_defaults(func=_cmd_pages)

    p = sub.add_parser("koszul", help="regularity and quotient dims")
    common(p, degree=True)
    p.add_argument("--model", choices=("q", "c", "w"), default="q")
    p.set_defaults(func=_cmd_koszul)

    p = sub.add_parser("hilbert", help="closed-form Hilbert series")
    common(p, degree=True)
    p.add_argument("--model", choices=("cminus", "aquot", "rk", "sk"),
                   default="cminus")
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("verify", help="bundled exact-check suites")
    common(p)
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",),
                   default="all")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)
    return parser


def _validate(args):
    if not (1 <= args.n <= 8):
        raise ValueError("--n must be in 1..8")
    if not (1 <= args.k <= 8):
        raise ValueError("--k must be in 1..8")
    buf = getattr(args, "buffer", None)
    if buf is not None and (buf < 2 or buf % 2):
        raise ValueError("--buffer must be even and >= 2")
    D = getattr(args, "max_degree", None)
    if D is not None and D < 0:
        raise ValueError("--max-degree must be nonnegative")
    if args.max_entries is not None:
        if args.max_entries <= 0:
            raise ValueError("--max-entries must be positive")
        os.environ["WEILCOH_MAX_ENTRIES"] = str(args.max_entries)


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    doc = {
        "schema": "weilcoh/1",
        "command": args.command,
        "params": {
            key: value for key, value in sorted(vars(args).items())
            if key not in ("func", "format", "max_entries")
            and value is not None
        },
        "tables": [],
        "verdicts": [],
    }
    start = time.monotonic()
    try:
        _validate(args)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    try:
        args.func(args, doc)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ResourceCapError as exc:
        doc["verdicts"].append({
            "name": "resource cap", "pass": False, "detail": str(exc),
        })
        _emit(doc, args.format, time.monotonic() - start)
        return 3
    _emit(doc, args.format, time.monotonic() - start)
    if any(not v["pass"] for v in doc["verdicts"]):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
