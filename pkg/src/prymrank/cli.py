"""Command-line entry point: every operation as a subcommand with JSON output."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass
from typing import Any, Callable

from . import acceptance
from .gf import FieldCtx, make_ext
from .hasse_witt import (Genus2Curve, HWMatrix, cartier_manin_hyperelliptic, hasse_witt_hyperelliptic,
                         hasse_witt_quartic, hasse_witt_section, p_rank)
from .kummer_count import KUMMER_SCAN_LIMIT, kummer_counts, qss_scan, supersingular_congruences
from .mpoly import MPoly, format_mpoly, parse_expr
from .prym import (Plane, QuadTriple, bruin_prym_sextic, bruin_quartic, is_smooth_plane_quartic,
                   kummer_phi, kummer_surface, plane_section)
from .search import (SearchExhausted, SearchTarget, TABLE_PRIMES, analyze_section, curve_p_rank,
                     degree_in_b, det_h_alpha, find_example, fixalpha_entries, quartic_p_rank,
                     sextic_text, verify_table)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    seed: int = 0
    output: str = "json"
    modulus: tuple[int, ...] | None = None
    budget: int = 10_000
    threads: int = 1
    timing: bool = True


# ---------------------------------------------------------------------------
# input helpers
# ---------------------------------------------------------------------------

def _field(args) -> FieldCtx:
    k = getattr(args, "k", 1) or 1
    try:
        return make_ext(args.p, k, args.cfg.modulus if k > 1 else None)
    except ValueError as e:
        raise UsageError(str(e))


def _elements(F: FieldCtx, text: str, n: int | None = None) -> list[int]:
    """'1,-2,0' over a prime field; 'c0,c1;c0,c1' (';' between elements) otherwise."""
    try:
        if F.k == 1:
            out = [int(t) % F.p for t in text.split(",") if t.strip()]
        else:
            out = [F.parse(t) for t in text.split(";") if t.strip()]
    except ValueError:
        raise UsageError(f"malformed element list {text!r}")
    if n is not None and len(out) != n:
        raise UsageError(f"expected {n} elements, got {len(out)}")
    return out


def _poly(F: FieldCtx, text: str, names: list[str]) -> MPoly:
    try:
        return parse_expr(F, text, names)
    except (ValueError, IndexError) as e:
        raise UsageError(f"malformed polynomial text: {e}")


def _curve(F: FieldCtx, text: str) -> Genus2Curve:
    d = _elements(F, text)
    if len(d) > 7:
        raise UsageError("at most 7 coefficients d0..d6")
    return Genus2Curve.make(F, d)


def _matrix(H: HWMatrix) -> list[list[Any]]:
    return [[H.ctx.format(x) if H.ctx.k > 1 else x for x in r] for r in H.entries]


def _el(F: FieldCtx, x: int):
    return F.format(x) if F.k > 1 else x


# ---------------------------------------------------------------------------
# commands: each returns (result, ok)
# ---------------------------------------------------------------------------

def cmd_hw_hyper(args):
    F = _field(args)
    Z = _curve(F, args.d)
    H = hasse_witt_hyperelliptic(Z, force=args.force)
    return {"matrix": _matrix(H), "p_rank": p_rank(H, 2), "basis": H.basis,
            "cartier_manin": _matrix(cartier_manin_hyperelliptic(Z, force=args.force))}, True


def cmd_hw_quartic(args):
    F = _field(args)
    q = _poly(F, args.q, ["u", "v"])
    H = hasse_witt_quartic(q)
    return {"matrix": _matrix(H), "p_rank": p_rank(H, 3), "basis": H.basis}, True


def cmd_hw_section(args):
    F = _field(args)
    v = Plane(F, *_elements(F, args.v, 4)).form()
    h = _poly(F, args.h, ["X1", "X2", "X3", "X4"])
    pivot = None if args.pivot is None else args.pivot - 1
    hw = hasse_witt_section(v, h, pivot)
    return {"matrix": _matrix(hw.matrix), "p_rank": p_rank(hw.matrix, 3), "basis": hw.matrix.basis,
            "H0": _matrix(hw.H0), "pivot": hw.pivot + 1}, True


def cmd_prym_bruin(args):
    F = _field(args)
    Q = QuadTriple.from_qvector(F, _elements(F, args.q, 15))
    X = bruin_quartic(Q)
    Z = bruin_prym_sextic(Q)
    xs = is_smooth_plane_quartic(X, args.cfg.seed)
    return {"X_poly": format_mpoly(X, ["u", "v", "w"]), "Z_poly": "z^2 = " + sextic_text(Z),
            "f": quartic_p_rank(X), "f_prime": curve_p_rank(Z),
            "X_smooth": xs, "Z_smooth": Z.is_smooth()}, True


def cmd_prym_kummer(args):
    F = _field(args)
    K = kummer_surface(_curve(F, args.d))
    return {"kappa": format_mpoly(K.kappa)}, True


def cmd_prym_section(args):
    F = _field(args)
    K = kummer_surface(_curve(F, args.d))
    V = Plane(F, *_elements(F, args.plane, 4))
    sec = plane_section(K, V)
    if sec.through_node:
        return {"through_node": True, "ternary": format_mpoly(sec.ternary)}, True
    r = analyze_section(K, V, seed=args.cfg.seed)
    return {"H_X": _matrix(r.matrix), "f": r.f, "smooth": r.smooth, "through_node": False,
            "ternary": format_mpoly(sec.ternary, ["X1", "X2", "X3"])}, True


def cmd_prym_phi(args):
    F = _field(args)
    Z = _curve(F, args.d)
    P1 = tuple(_elements(F, args.p1, 2))
    P2 = tuple(_elements(F, args.p2, 2))
    pt = kummer_phi(Z, P1, P2)
    K = kummer_surface(Z)
    return {"point": [_el(F, x) for x in pt], "kappa_value": _el(F, K.kappa(pt))}, True


def cmd_prym_smooth(args):
    F = _field(args)
    q = _poly(F, args.f, ["u", "v", "w"])
    return {"smooth": is_smooth_plane_quartic(q, args.cfg.seed)}, True


def cmd_search_find(args):
    curve = None
    if args.curve:
        curve = tuple(_elements(make_ext(args.p, args.k), args.curve))
    t = SearchTarget(args.p, args.f, args.fp, budget=args.budget or args.cfg.budget,
                     seed=args.cfg.seed, k=args.k, curve=curve)
    try:
        rec = find_example(t, workers=args.cfg.threads)
    except SearchExhausted as e:
        return {"found": False, "samples_tried": e.tried}, False
    return {"found": True, "record": rec.to_dict()}, True


def cmd_search_verify(args):
    rows = verify_table(args.p)
    return {"rows": [r.to_dict() for r in rows]}, all(r.passed for r in rows)


def cmd_search_degree_b(args):
    d = degree_in_b(args.p, args.cfg.seed)
    s = d.summary()
    ok = (s["degree"] == s["expected_degree"] and s["lead"] == [s["lead_expected"]] * 2
          and s["sublead"] == s["sublead_expected"])
    s["det"] = d.det.c
    return s, ok


def cmd_search_det_alpha(args):
    F3 = make_ext(3)
    plane = _elements(F3, args.plane, 4)
    if plane[3] == 0:
        raise UsageError("plane passes through the node (0:0:0:1); choose d != 0")
    d = det_h_alpha(plane)
    return {"coefficients": d.poly.c, "degree": d.poly.deg,
            "factors": [{"factor": g.c, "multiplicity": m} for g, m in d.factors],
            "nodes": d.nodes, "node_field_size": d.node_field_size}, not d.poly.is_zero()


def cmd_search_fixalpha(args):
    out = []
    for x in fixalpha_entries():
        F = x.entries[0][0].ctx
        out.append({"alpha": F.format(x.alpha),
                    "entries": [[format_mpoly(e, ["a", "b", "c"]) for e in r] for r in x.entries],
                    "entry_matches": x.matches, "det_nonzero": x.det_nonzero,
                    "smooth_202": x.smooth_202, "rank_202": x.rank_202})
    ok = any(all(all(r) for r in x["entry_matches"]) for x in out)
    return {"roots": out}, ok


def _count_common(args):
    F = _field(args)
    Z = _curve(F, args.d)
    if not Z.is_smooth():
        raise UsageError("D must be squarefree of degree 5 or 6")
    q = F.q
    kc = kummer_counts(Z, q, naive=q <= KUMMER_SCAN_LIMIT)
    z = kc.zeta
    ss = curve_p_rank(Z) == 0
    cong = all(supersingular_congruences(z)) if ss else None
    res = {"n1": z.n1, "n2": z.n2, "a1": z.a1, "a2": z.a2, "jac": kc.jac,
           "kummer_naive": kc.naive, "kummer_formula": kc.formula, "congruence_ok": cong}
    ok = kc.three_way and cong is not False
    return res, ok


def cmd_count(args):
    return _count_common(args)


def cmd_count_qss(args):
    F = _field(args)
    Z = _curve(F, args.d)
    found = qss_scan(Z, F.q, args.limit)
    return {"planes_with_smooth_section": len(found),
            "divisible": [{"plane": [_el(F, x) for x in f.plane], "points": f.points}
                          for f in found if f.divisible]}, True


def cmd_verify_all(args):
    if args.p is not None:
        return cmd_search_verify(args)
    results = acceptance.run_all()
    return {"checks": [{"name": r.name, "passed": r.passed, "parts": r.parts,
                        "seconds": round(r.seconds, 3) if args.cfg.timing else None}
                       for r in results]}, all(r.passed for r in results)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_field(sp, k=True):
    sp.add_argument("--p", type=int, required=True)
    if k:
        sp.add_argument("--k", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="prymrank", description="p-ranks of plane quartics and Pryms")
    ap.add_argument("--seed", type=int, default=None, help="RNG seed (env PRYMRANK_SEED)")
    ap.add_argument("--threads", type=int, default=None, help="worker count (env PRYMRANK_THREADS)")
    ap.add_argument("--format", choices=["json", "csv", "text"], default="json")
    ap.add_argument("--modulus", default=None, help="defining polynomial 'c0,...,ck' for F_{p^k}")
    ap.add_argument("--no-timing", action="store_true", help="omit timing_ms for reproducible output")
    # the same options are accepted after the subcommand; SUPPRESS keeps
    # the leaf from clobbering a value given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=["json", "csv", "text"], default=argparse.SUPPRESS)
    common.add_argument("--modulus", default=argparse.SUPPRESS)
    common.add_argument("--no-timing", action="store_true", default=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="group")

    hw = sub.add_parser("hw").add_subparsers(dest="cmd")
    s = hw.add_parser("hyper", parents=[common]); _add_field(s); s.add_argument("--d", required=True)
    s.add_argument("--force", action="store_true"); s.set_defaults(fn=cmd_hw_hyper)
    s = hw.add_parser("quartic", parents=[common]); _add_field(s); s.add_argument("--q", required=True)
    s.set_defaults(fn=cmd_hw_quartic)
    s = hw.add_parser("section", parents=[common]); _add_field(s); s.add_argument("--v", required=True)
    s.add_argument("--h", required=True); s.add_argument("--pivot", type=int, default=None)
    s.set_defaults(fn=cmd_hw_section)

    pr = sub.add_parser("prym").add_subparsers(dest="cmd")
    s = pr.add_parser("bruin", parents=[common]); _add_field(s); s.add_argument("--q", required=True)
    s.set_defaults(fn=cmd_prym_bruin)
    s = pr.add_parser("kummer", parents=[common]); _add_field(s); s.add_argument("--d", required=True)
    s.set_defaults(fn=cmd_prym_kummer)
    s = pr.add_parser("section", parents=[common]); _add_field(s); s.add_argument("--d", required=True)
    s.add_argument("--plane", required=True); s.set_defaults(fn=cmd_prym_section)
    s = pr.add_parser("phi", parents=[common]); _add_field(s); s.add_argument("--d", required=True)
    s.add_argument("--p1", required=True, help="x,z"); s.add_argument("--p2", required=True)
    s.set_defaults(fn=cmd_prym_phi)
    s = pr.add_parser("smooth", parents=[common]); _add_field(s); s.add_argument("--f", required=True)
    s.set_defaults(fn=cmd_prym_smooth)

    se = sub.add_parser("search").add_subparsers(dest="cmd")
    s = se.add_parser("find", parents=[common]); _add_field(s)
    s.add_argument("--f", type=int, required=True); s.add_argument("--fp", type=int, required=True)
    s.add_argument("--budget", type=int, default=None)
    s.add_argument("--curve", default=None, help="fixed Z: d0,...,d6 (planes are sampled)")
    s.set_defaults(fn=cmd_search_find)
    s = se.add_parser("verify-paper", parents=[common]); _add_field(s, k=False); s.set_defaults(fn=cmd_search_verify)
    s = se.add_parser("degree-b", parents=[common]); _add_field(s, k=False); s.set_defaults(fn=cmd_search_degree_b)
    s = se.add_parser("det-alpha", parents=[common]); s.add_argument("--plane", required=True)
    s.set_defaults(fn=cmd_search_det_alpha)
    s = se.add_parser("fixalpha", parents=[common]); s.set_defaults(fn=cmd_search_fixalpha)

    co = sub.add_parser("count").add_subparsers(dest="cmd")
    for name in ("curve", "jac", "kummer"):
        s = co.add_parser(name, parents=[common]); _add_field(s); s.add_argument("--d", required=True)
        s.set_defaults(fn=cmd_count)
    s = co.add_parser("qss", parents=[common]); _add_field(s); s.add_argument("--d", default="-1,0,0,0,0,0,1")
    s.add_argument("--limit", type=int, default=None); s.set_defaults(fn=cmd_count_qss)

    s = sub.add_parser("verify-paper", parents=[common])
    s.add_argument("--p", type=int, default=None, choices=TABLE_PRIMES)
    s.set_defaults(fn=cmd_verify_all)
    return ap


def _config(ns) -> RunConfig:
    seed = ns.seed if ns.seed is not None else int(os.environ.get("PRYMRANK_SEED", "0"))
    threads = ns.threads if ns.threads is not None else int(os.environ.get("PRYMRANK_THREADS", "1"))
    if threads < 1:
        raise UsageError("threads must be >= 1")
    mod = None
    if ns.modulus:
        try:
            mod = tuple(int(t) for t in ns.modulus.split(","))
        except ValueError:
            raise UsageError("modulus must be a comma-separated coefficient list")
    return RunConfig(seed=seed, output=ns.format, modulus=mod, threads=threads,
                     timing=not ns.no_timing)


def _params(ns) -> dict:
    # worker count is left out so output does not depend on parallelism
    skip = {"fn", "cfg", "group", "cmd", "format", "no_timing", "threads"}
    out = {k: v for k, v in sorted(vars(ns).items()) if k not in skip}
    out["seed"] = ns.cfg.seed
    return out


def _emit(doc: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(doc) + "\n")
        return
    flat = {f"params.{k}": v for k, v in doc["params"].items()}
    res = doc["result"]
    if isinstance(res, dict):
        flat.update({f"result.{k}": v for k, v in res.items()})
    flat["timing_ms"] = doc.get("timing_ms")
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        for k, v in flat.items():
            w.writerow([k, json.dumps(v) if isinstance(v, (list, dict)) else v])
        out.write(buf.getvalue())
    else:
        out.write(f"{doc['command']}\n")
        for k, v in flat.items():
            out.write(f"  {k}: {v}\n")


def _glue_negative_values(argv: list[str]) -> list[str]:
    """'--d -1,0,...' -> '--d=-1,0,...' so argparse does not read a flag."""
    out: list[str] = []
    for tok in argv:
        if (out and out[-1].startswith("--") and "=" not in out[-1] and len(tok) > 1
                and tok[0] == "-" and (tok[1].isdigit() or tok[1] in "([ ")):
            out[-1] = out[-1] + "=" + tok
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    if not argv:
        ap.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        ns = ap.parse_args(_glue_negative_values(argv))
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    fn: Callable | None = getattr(ns, "fn", None)
    if fn is None:
        ap.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        ns.cfg = _config(ns)
        t0 = time.perf_counter()
        result, ok = fn(ns)
        ms = round((time.perf_counter() - t0) * 1000, 3)
    except (UsageError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    command = " ".join(x for x in (ns.group, getattr(ns, "cmd", None)) if x)
    doc = {"command": command, "params": _params(ns), "result": result,
           "timing_ms": ms if ns.cfg.timing else None}
    _emit(doc, ns.cfg.output, out)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
