"""Command-line interface.

Subcommands: ``check``, ``transpose``, ``homology``, ``pipeline``, ``scan``.
Results go to stdout (a table, or JSON with ``--json``); diagnostics go to
stderr.

Exit codes:

    0  success
    2  syntax error in the polynomial, bad usage, unreadable scan file
    3  invalid polynomial (non-square, singular, not atomic, weights mismatch)
    4  unmet precondition (not Calabi-Yau, Fermat input, too many variables)
    5  internal exactness check failed
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Sequence

from . import errors
from .geometry import branch_divisors, is_well_formed, ke_sufficient, milnor_number
from .homology import MAX_VARS, HomologyGroup, homology_report, link_report
from .pipeline import run_pipeline
from .polynomial import InvertiblePolynomial, classify_atomic, parse_polynomial, render
from .transpose import transpose
from .weights import WeightSystem, fano_index, is_calabi_yau, is_fano, solve_weights

log = logging.getLogger("bhtranspose")

EXIT_OK = 0
EXIT_SYNTAX = 2
EXIT_INVALID = 3
EXIT_PRECONDITION = 4
EXIT_INTERNAL = 5


class UsageError(errors.BHError):
    pass


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, (errors.PolynomialSyntaxError, UsageError)):
        return EXIT_SYNTAX
    if isinstance(
        exc,
        (errors.NotCalabiYauError, errors.FermatInputError, errors.NotFanoError, errors.TooManyVariablesError),
    ):
        return EXIT_PRECONDITION
    if isinstance(exc, errors.ConventionError):
        return EXIT_INTERNAL
    return EXIT_INVALID


# --- input handling --------------------------------------------------------

def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _name_list(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def load_input(
    poly: str | None,
    weights: Sequence[int] | None,
    degree: int | None,
    variables: Sequence[str] | None = None,
) -> tuple[InvertiblePolynomial | None, WeightSystem, str]:
    """Parse the polynomial and settle its weight system.

    Explicit ``(w, d)`` is validated against the polynomial; otherwise it is
    derived from the exponent matrix.
    """
    if (weights is None) != (degree is None):
        raise UsageError("--weights and --degree must be given together")
    p = parse_polynomial(poly, variables=variables) if poly is not None else None
    if weights is not None:
        ws = WeightSystem(tuple(weights), degree)
        if p is not None:
            if len(ws) != p.nvars:
                raise errors.DimensionMismatchError(f"{len(ws)} weights for {p.nvars} variables")
            off = [i for i, m in enumerate(p.monomials) if m.weighted_degree(ws.weights) != ws.degree]
            if off:
                raise errors.WeightError(
                    f"polynomial is not quasi-homogeneous of degree {ws.degree} for weights {ws.weights}; "
                    f"monomial(s) {off} have degrees {[p.monomials[i].weighted_degree(ws.weights) for i in off]}"
                )
        return p, ws, "given"
    if p is None:
        raise UsageError("give a polynomial, or --weights and --degree")
    return p, solve_weights(p.matrix), "derived"


def _input_dict(p, ws) -> dict[str, Any]:
    return {"poly": render(p) if p is not None else None, "weights": list(ws.weights), "degree": ws.degree}


# --- commands --------------------------------------------------------------

def cmd_check(p: InvertiblePolynomial, ws: WeightSystem, source: str) -> dict[str, Any]:
    try:
        blocks = [
            {"kind": b.kind.value, "variables": [p.variables[v] for v in b.variables], "exponents": list(b.exponents)}
            for b in classify_atomic(p).blocks
        ]
    except errors.NotAtomicError as exc:
        blocks = None
        reason = str(exc)
    enough = len(ws) >= 3
    fano = is_fano(ws)
    try:
        mu = milnor_number(ws)
    except errors.WeightError:
        mu = None
    return {
        "input": _input_dict(p, ws),
        "weights_source": source,
        "atomic": blocks,
        "atomic_error": None if blocks is not None else reason,
        "flags": {
            "calabi_yau": is_calabi_yau(ws),
            "fano": fano,
            "fano_index": fano_index(ws),
            "well_formed": is_well_formed(ws) if enough else None,
            "branch_divisors": [p.variables[i] for i in branch_divisors(ws)],
            "ke_sufficient": ke_sufficient(ws) if enough and fano else None,
        },
        "milnor": mu,
    }


def cmd_transpose(p: InvertiblePolynomial, ws: WeightSystem) -> dict[str, Any]:
    pt, wt = transpose(p)
    notice = None
    if classify_atomic(p).is_fermat:
        notice = "Fermat input: A is diagonal, so A^T = A and the transpose is the same polynomial"
    return {
        "input": _input_dict(p, ws),
        "output": {"poly": render(pt), "weights": list(wt.weights), "degree": wt.degree},
        "notice": notice,
    }


def cmd_homology(p: InvertiblePolynomial | None, ws: WeightSystem, max_vars: int = MAX_VARS) -> dict[str, Any]:
    if p is not None:
        rep = homology_report(p, ws, max_vars=max_vars)
    else:
        rep = link_report(
            ws,
            max_vars=max_vars,
            notes=["no polynomial given: torsion assumes (w, d) carries an invertible polynomial"],
        )
    out = {"input": _input_dict(p, ws)}
    out.update({k: v for k, v in rep.to_dict().items() if k not in ("poly", "weights", "degree")})
    return out


def cmd_pipeline(p: InvertiblePolynomial, ws: WeightSystem, max_vars: int = MAX_VARS) -> dict[str, Any]:
    return run_pipeline(p, ws, max_vars=max_vars).to_dict()


# --- text rendering --------------------------------------------------------

def render_group(homology: dict[str, Any]) -> str:
    t = homology["torsion"]
    return HomologyGroup(homology["rank"], None if t is None else tuple(t)).render()


def _fmt_ws(weights, degree) -> str:
    return f"P({','.join(map(str, weights))}), d={degree}"


def _table(rows: list[list[str]]) -> str:
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    lines = []
    for k, r in enumerate(rows):
        lines.append(" | ".join(cell.ljust(widths[c]) for c, cell in enumerate(r)).rstrip())
        if k == 0:
            lines.append("-+-".join("-" * w for w in widths))
    return "\n".join(lines)


def text_check(out: dict[str, Any]) -> str:
    inp, fl = out["input"], out["flags"]
    if out["atomic"] is None:
        atomic = f"none ({out['atomic_error']})"
    else:
        atomic = " + ".join(f"{b['kind']}({','.join(b['variables'])})" for b in out["atomic"])
    lines = [
        f"polynomial:      {inp['poly']}",
        f"weights:         {_fmt_ws(inp['weights'], inp['degree'])} ({out['weights_source']})",
        f"atomic types:    {atomic}",
        f"Calabi-Yau:      {fl['calabi_yau']}",
        f"Fano:            {fl['fano']} (index {fl['fano_index']})",
        f"well-formed:     {fl['well_formed']}",
        f"branch divisors: {', '.join(fl['branch_divisors']) or 'none'}",
        f"KE inequality:   {_ke_text(fl['ke_sufficient'])}",
        f"Milnor number:   {out['milnor']}",
    ]
    return "\n".join(lines)


def _ke_text(value) -> str:
    if value is None:
        return "not applicable"
    return "satisfied" if value else "not satisfied (inconclusive: sufficient condition only)"


def text_transpose(out: dict[str, Any]) -> str:
    i, o = out["input"], out["output"]
    return "\n".join(
        [
            f"input:     {i['poly']}  in {_fmt_ws(i['weights'], i['degree'])}",
            f"transpose: {o['poly']}  in {_fmt_ws(o['weights'], o['degree'])}",
        ]
    )


def text_homology(out: dict[str, Any]) -> str:
    inp, link = out["input"], out["link"]
    deg = link["homology_degree"]
    lines = []
    if inp["poly"]:
        lines.append(f"polynomial:   {inp['poly']}")
    lines += [
        f"weights:      {_fmt_ws(inp['weights'], inp['degree'])}",
        f"link:         dimension {link['dimension']}, {link['connectivity']}-connected",
        f"H_{deg}(L, Z):    {render_group(out['homology'])}",
        f"Milnor:       {out['milnor']}",
        f"well-formed:  {out['flags']['well_formed']}",
        f"Sasaki-Einstein: {out['flags']['sasaki_einstein']}",
    ]
    lines += [f"note: {n}" for n in out["notes"]]
    return "\n".join(lines)


def text_pipeline(out: dict[str, Any]) -> str:
    deg = out["stages"][0]["link"]["homology_degree"]
    rows = [["M_i", "polynomial", "weights", f"H_{deg}(M_i, Z)"]]
    for st in out["stages"]:
        rows.append([st["label"], st["poly"], _fmt_ws(st["weights"], st["degree"]), render_group(st["homology"])])
    inp = out["input"]
    head = f"input: {inp['poly']}  in {_fmt_ws(inp['weights'], inp['degree'])}"
    dist = out["distinctness"]
    tail = "all four links have pairwise different H_n" if dist["all_distinct"] else "\n".join(
        f"{p['a']} vs {p['b']}: {p['verdict']}" for p in dist["pairs"]
    )
    se = "\n".join(f"{st['label']}: Sasaki-Einstein {st['flags']['sasaki_einstein']}" for st in out["stages"])
    return "\n".join([head, "", _table(rows), "", tail, se])


# --- scan ------------------------------------------------------------------

def process_record(line: str, max_vars: int = MAX_VARS) -> dict[str, Any]:
    """One scan record -> one result object; failures become error entries."""
    rid = None
    try:
        rec = json.loads(line)
        if not isinstance(rec, dict):
            raise UsageError("record is not a JSON object")
        rid = rec.get("id")
        p, ws, _ = load_input(rec.get("polynomial"), rec.get("weights"), rec.get("degree"), rec.get("vars"))
        annotations = {k: rec[k] for k in ("source", "ke_status") if k in rec}
        if p is not None and is_calabi_yau(ws) and not classify_atomic(p).is_fermat:
            return {"id": rid, "kind": "pipeline", "annotations": annotations, "result": cmd_pipeline(p, ws, max_vars)}
        return {"id": rid, "kind": "homology", "annotations": annotations, "result": cmd_homology(p, ws, max_vars)}
    except json.JSONDecodeError as exc:
        return {"id": rid, "error": {"type": "JSONDecodeError", "message": str(exc), "exit_code": EXIT_SYNTAX}}
    except errors.BHError as exc:
        return {"id": rid, "error": {"type": type(exc).__name__, "message": str(exc), "exit_code": exit_code_for(exc)}}


def text_scan_entry(entry: dict[str, Any]) -> str:
    rid = entry.get("id")
    if "error" in entry:
        return f"{rid}\terror\t{entry['error']['type']}: {entry['error']['message'].splitlines()[0]}"
    res = entry["result"]
    if entry["kind"] == "pipeline":
        summary = "; ".join(f"{st['label']}: {render_group(st['homology'])}" for st in res["stages"])
    else:
        summary = f"{_fmt_ws(res['input']['weights'], res['input']['degree'])}: {render_group(res['homology'])}"
    return f"{rid}\t{entry['kind']}\t{summary}"


def run_scan(path: str, jobs: int = 1, max_vars: int = MAX_VARS) -> list[dict[str, Any]]:
    with open(path, encoding="utf-8") as fh:
        lines = [ln for ln in fh.read().splitlines() if ln.strip()]
    if jobs > 1 and len(lines) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(process_record, lines, [max_vars] * len(lines)))
    return [process_record(ln, max_vars) for ln in lines]


# --- entry point -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bhtranspose",
        description="Berglund-Huebsch transpose, theta-suspension and link homology of weighted hypersurfaces.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, poly_required=True):
        if poly_required:
            sp.add_argument("poly", help='polynomial, e.g. "z0^5*z1 + z0*z2^3 + z1^4 + z3^3"')
        else:
            sp.add_argument("poly", nargs="?", help="polynomial (optional if --weights/--degree given)")
        sp.add_argument("--weights", type=_int_list, help="comma-separated weights w0,w1,...")
        sp.add_argument("--degree", type=int, help="degree d")
        sp.add_argument("--vars", type=_name_list, help="explicit variable order z0,z1,...")
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.add_argument("--max-vars", type=int, default=MAX_VARS, help=f"subset enumeration cap (default {MAX_VARS})")

    common(sub.add_parser("check", help="flags and atomic decomposition"))
    common(sub.add_parser("transpose", help="Berglund-Huebsch transpose"))
    common(sub.add_parser("homology", help="middle homology of the link"), poly_required=False)
    common(sub.add_parser("pipeline", help="four links M1..M4 from a Calabi-Yau input"))
    sp = sub.add_parser("scan", help="batch over a JSON-lines file")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true", help="emit one JSON object per line")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    sp.add_argument("--max-vars", type=int, default=MAX_VARS)
    return parser


def _emit(obj, as_json: bool, text_fn) -> None:
    if as_json:
        print(json.dumps(obj, sort_keys=False))
    else:
        print(text_fn(obj))


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_SYNTAX if exc.code else EXIT_OK
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )

    if args.command == "scan":
        try:
            results = run_scan(args.file, args.jobs, args.max_vars)
        except OSError as exc:
            print(f"error: cannot read {args.file}: {exc}", file=sys.stderr)
            return EXIT_SYNTAX
        for entry in results:
            _emit(entry, args.json, text_scan_entry)
        failed = sum("error" in e for e in results)
        if failed:
            log.warning("%d of %d records failed", failed, len(results))
        return EXIT_OK

    try:
        p, ws, source = load_input(args.poly, args.weights, args.degree, args.vars)
        if args.command == "check":
            _emit(cmd_check(p, ws, source), args.json, text_check)
        elif args.command == "transpose":
            out = cmd_transpose(p, ws)
            if out["notice"] and not args.json:
                print(f"notice: {out['notice']}", file=sys.stderr)
            _emit(out, args.json, text_transpose)
        elif args.command == "homology":
            _emit(cmd_homology(p, ws, args.max_vars), args.json, text_homology)
        elif args.command == "pipeline":
            _emit(cmd_pipeline(p, ws, args.max_vars), args.json, text_pipeline)
    except errors.BHError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
