"""Command line front end.  Every command prints one JSON report.

Exit codes: 0 success, 2 an expectation was not met (the report is still
printed), 1 bad input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import __version__, catalog
from .ffield import FieldError, field_info, format_element, make_field
from .galois import GaloisError, pencil_perspectivities, verify_pair
from .genus_tools import GenusError, deuring_shafarevich, hurwitz_quotient_genus, hurwitz_solve
from .group_engine import GroupError, action_on, generate, perm_mul
from .group_id import classify
from .plane_curve import CurveError, curve_from_json, parse_point, rational_points, singular_points

REPORT_SCHEMA_VERSION = "1.0.0"


def report_schema_version() -> str:
    return REPORT_SCHEMA_VERSION


class InputError(Exception):
    pass


class Mismatch(Exception):
    """Raised with a results object when an expectation fails."""

    def __init__(self, results):
        super().__init__("expectation mismatch")
        self.results = results


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_curve(path: str):
    try:
        return curve_from_json(_read_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad curve file {path}: {exc}") from exc


def _points_json(pts) -> list[str]:
    return [P.text() for P in pts]


# ---------------------------------------------------------------------------
# commands; each returns the results object


def cmd_field_info(a):
    modulus = [int(c) for c in a.modulus.split(",")] if a.modulus else None
    F = make_field(a.p, a.k, modulus)
    info = field_info(F)
    return {
        "p": info.p,
        "k": info.k,
        "order": info.order,
        "modulus": list(info.modulus),
        "primitive": format_element(F, F.primitive),
    }


def cmd_curve_points(a):
    C = _load_curve(a.curve)
    pts = rational_points(C, a.ext)
    return {"count": len(pts), "points": _points_json(pts), "ext": a.ext}


def cmd_curve_singular(a):
    C = _load_curve(a.curve)
    pts = singular_points(C, a.ext)
    return {"count": len(pts), "points": _points_json(pts), "ext": a.ext}


def cmd_galois_detect(a):
    C = _load_curve(a.curve)
    Q = parse_point(C.ctx, a.point)
    return pencil_perspectivities(C, Q, a.ext).to_json()


def _action_json(rep) -> dict | None:
    """The group as permutations of its own elements followed by Omega.

    The first ``carrier`` entries carry the regular representation, so the
    abstract group (and any kernel on Omega) survives the round trip.
    """
    A = rep.action
    if A is None:
        return None
    G = A.group
    n = G.order
    gens = []
    for g in G.gens_indices():
        reg = [G.m(g, j) for j in range(n)]
        gens.append(reg + [n + i for i in A.perms[g]])
    return {"carrier": n, "degree": A.degree, "generators": sorted(gens)}


def cmd_galois_verify_pair(a):
    C = _load_curve(a.curve)
    P1 = parse_point(C.ctx, a.p1)
    P2 = parse_point(C.ctx, a.p2)
    r1 = pencil_perspectivities(C, P1, a.ext)
    r2 = pencil_perspectivities(C, P2, a.ext)
    rep = verify_pair(C, P1, P2, r1.group, r2.group)
    out = rep.summary()
    if rep.action is not None:
        out["classification_label"] = classify(rep.action).label
    out["P1"] = P1.text()
    out["P2"] = P2.text()
    out["omega"] = _points_json(rep.omega)
    out["action"] = _action_json(rep)
    return out


def cmd_group_classify(a):
    data = _read_json(a.pair_report)
    act = data.get("results", data).get("action") if isinstance(data, dict) else None
    if not act:
        raise InputError("the report has no action (omega was not established)")
    try:
        n = int(act["degree"])
        off = int(act.get("carrier", 0))
        gens = [tuple(int(x) for x in g) for g in act["generators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad action data: {exc}") from exc
    total = off + n
    if any(sorted(g) != list(range(total)) or any(x < off for x in g[off:]) for g in gens):
        raise InputError("generators must permute the carrier and the points separately")
    G = generate(gens, mul=perm_mul, identity=tuple(range(total)))
    A = action_on(G, list(range(off, total)), lambda g, i: g[i])
    res = classify(A).to_json()
    if a.expect is not None and res["label"] != a.expect:
        raise Mismatch(res)
    return res


def cmd_genus_hurwitz(a):
    if a.genus is not None:
        gq = hurwitz_quotient_genus(a.n, a.genus, a.different)
        return {"quotient_genus": gq}
    return {"genus": hurwitz_solve(a.n, a.base_genus, a.different)}


def cmd_genus_dsh(a):
    orbits = [int(x) for x in a.orbits.split(",")] if a.orbits else []
    return {"p_rank": deuring_shafarevich(a.n, a.base_prank, orbits, a.p)}


def cmd_catalog_list(a):
    return {"entries": [catalog.entry(n).to_json() for n in catalog.names()]}


def cmd_catalog_verify(a):
    rep = catalog.verify(catalog.entry(a.name))
    if a.json:
        with open(a.json, "w", encoding="utf-8") as fh:
            json.dump(rep, fh, sort_keys=True, indent=2, ensure_ascii=False)
    if not rep["passed"]:
        raise Mismatch(rep)
    return rep


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="innergalois", description=__doc__.splitlines()[0])
    ap.add_argument("--pretty", action="store_true", help="indent the JSON output")
    top = ap.add_subparsers(dest="group", required=True)

    f = top.add_parser("field").add_subparsers(dest="cmd", required=True)
    p = f.add_parser("info")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--modulus", help="comma separated coefficients, constant first")
    p.set_defaults(func=cmd_field_info)

    c = top.add_parser("curve").add_subparsers(dest="cmd", required=True)
    for name, fn in (("points", cmd_curve_points), ("singular", cmd_curve_singular)):
        p = c.add_parser(name)
        p.add_argument("--curve", required=True)
        p.add_argument("--ext", type=int, default=1)
        p.set_defaults(func=fn)

    g = top.add_parser("galois").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("detect")
    p.add_argument("--curve", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--ext", type=int, default=1)
    p.set_defaults(func=cmd_galois_detect)
    p = g.add_parser("verify-pair")
    p.add_argument("--curve", required=True)
    p.add_argument("--p1", required=True)
    p.add_argument("--p2", required=True)
    p.add_argument("--ext", type=int, default=1)
    p.set_defaults(func=cmd_galois_verify_pair)

    gr = top.add_parser("group").add_subparsers(dest="cmd", required=True)
    p = gr.add_parser("classify")
    p.add_argument("--pair-report", required=True)
    p.add_argument("--expect", help="exit 2 unless the label equals this")
    p.set_defaults(func=cmd_group_classify)

    ge = top.add_parser("genus").add_subparsers(dest="cmd", required=True)
    p = ge.add_parser("hurwitz")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--base-genus", type=int, default=0)
    p.add_argument("--different", type=int, required=True)
    p.add_argument("--genus", type=int, help="solve for the quotient genus instead")
    p.set_defaults(func=cmd_genus_hurwitz)
    p = ge.add_parser("dsh")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--base-prank", type=int, default=0)
    p.add_argument("--orbits", default="", help="comma separated short orbit lengths")
    p.add_argument("--p", type=int)
    p.set_defaults(func=cmd_genus_dsh)

    ca = top.add_parser("catalog").add_subparsers(dest="cmd", required=True)
    p = ca.add_parser("list")
    p.set_defaults(func=cmd_catalog_list)
    p = ca.add_parser("verify")
    p.add_argument("name")
    p.add_argument("--json", help="also write the report to this file")
    p.set_defaults(func=cmd_catalog_verify)
    return ap


def _digest(argv, args) -> str:
    h = hashlib.sha256()
    h.update(json.dumps([a for a in argv if a != "--pretty"]).encode())
    for key in ("curve", "pair_report"):
        path = getattr(args, key, None)
        if path:
            try:
                with open(path, "rb") as fh:
                    h.update(fh.read())
            except OSError:
                pass
    return h.hexdigest()


def _emit(report: dict, pretty: bool) -> None:
    text = json.dumps(report, sort_keys=True, indent=2 if pretty else None, ensure_ascii=False)
    sys.stdout.write(text + "\n")


def run(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    start = time.perf_counter()
    status = "ok"
    code = 0
    try:
        results = args.func(args)
    except Mismatch as mm:
        results, status, code = mm.results, "mismatch", 2
    except (InputError, FieldError, CurveError, GroupError, GaloisError, GenusError, catalog.CatalogError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report = {
        "schema_version": REPORT_SCHEMA_VERSION,
        "version": __version__,
        "command": [args.group, args.cmd],
        "inputs_digest": _digest(argv, args),
        "status": status,
        "results": results,
        "timing": {"seconds": round(time.perf_counter() - start, 6)},
    }
    _emit(report, args.pretty)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
