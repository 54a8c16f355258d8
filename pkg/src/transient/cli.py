"""Command-line interface.

Knot references are catalog names (``10_99``) or inline presentations with a
prefix: ``pd:PD[X(...),...]``, ``braid:2: 1 1 1``, ``seifert:-1 0; -1 -1``.
Results go to stdout, warnings and errors to stderr.  Exit status is 0 on
success and 1 on any command error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .bounds import (
    BoundsError,
    HomologyProfile,
    classify,
    connected_sum_upper_bound,
    lemma_grupos_group,
    repeated_sum,
    repeated_sum_lower_bound,
)
from .catalog import (
    Catalog,
    CatalogError,
    KnotRecord,
    default_catalog,
    ingest_csv,
    parse_column_map,
)
from .covers import SeifertMatrix, format_homology
from .exactalg import AbelianGroup, det, parse_matrix, snf
from .knotcodes import parse_braid, parse_pd

EPILOG = """\
examples:
  transient homology 10_123 --p 2,5
  transient homology "braid:2: 1 1 1"
  transient bounds 9_46
  transient classify-table --max-crossings 10 --p 2
  transient consum 3_1 3_1
  transient consum 3_1 --n 5
  transient snf "2 0; 0 3"
  transient lemma-check 3 0 1 1 1
  transient ingest --csv knots.csv --map name=Name,braid=Braid,u=U,t=T --catalog out.jsonl
"""


class CommandError(Exception):
    pass


def _parse_p_list(text: str) -> list[int]:
    try:
        ps = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad p list {text!r}") from None
    if not ps or ps[0] < 2:
        raise argparse.ArgumentTypeError("cover indices must be integers >= 2")
    return ps


@dataclass
class Context:
    catalog_path: str | None
    fmt: str
    _catalog: Catalog | None = None

    @property
    def catalog(self) -> Catalog:
        if self._catalog is None:
            try:
                self._catalog = (Catalog.load(self.catalog_path) if self.catalog_path
                                 else default_catalog())
            except CatalogError as exc:
                raise CommandError(str(exc)) from exc
        return self._catalog

    def resolve(self, ref: str) -> KnotRecord:
        try:
            if ref.startswith("pd:"):
                return KnotRecord(ref, pd=parse_pd(ref[3:]), source="inline")
            if ref.startswith("braid:"):
                return KnotRecord(ref, braid=parse_braid(ref[6:]), source="inline")
            if ref.startswith("seifert:"):
                return KnotRecord(ref, seifert=SeifertMatrix(parse_matrix(ref[8:])), source="inline")
        except ValueError as exc:
            raise CommandError(f"cannot parse {ref!r}: {exc}") from exc
        rec = self.catalog.query(ref)
        if rec is None:
            raise CommandError(f"unknown knot {ref!r} (not in catalog; use a pd:, braid: or seifert: prefix for inline input)")
        return rec

    def emit(self, text: str, structured) -> None:
        if self.fmt == "structured":
            print(json.dumps(structured, sort_keys=True, indent=1))
        else:
            print(text)


def _group_json(p: int, g: AbelianGroup) -> dict:
    return {"p": p, "torsion": list(g.torsion), "free_rank": g.free_rank,
            "notation": format_homology(p, g)}


def _profile(rec: KnotRecord, ps) -> HomologyProfile:
    try:
        return rec.profile(ps)
    except (CatalogError, ValueError) as exc:
        raise CommandError(str(exc)) from exc


# -- commands ---------------------------------------------------------------

def cmd_homology(ctx: Context, args) -> None:
    rec = ctx.resolve(args.knot)
    h = _profile(rec, args.p or [2])
    lines = [format_homology(p, g) for p, g in h.by_cover.items()]
    ctx.emit("\n".join(lines), {"knot": rec.name,
                                "homology": [_group_json(p, g) for p, g in h.by_cover.items()]})


def cmd_bounds(ctx: Context, args) -> None:
    rec = ctx.resolve(args.knot)
    h = _profile(rec, args.p or [2])
    u = args.u if args.u is not None else rec.u
    t = args.t if args.t is not None else rec.t
    report = classify(h, u, t)
    if report.inconsistent:
        print(f"warning: {rec.name}: inconsistent data: {'; '.join(report.notes)}", file=sys.stderr)
    text = "\n".join([f"knot {rec.name}"] + [f"homology {format_homology(p, g)}" for p, g in h.by_cover.items()]
                     + [report.text()])
    ctx.emit(text, {"knot": rec.name, "homology": [_group_json(p, g) for p, g in h.by_cover.items()],
                    "report": report.as_dict()})


def _bucket_label(lo: int, hi: int | None, inconsistent: bool) -> tuple[tuple, str]:
    if inconsistent:
        return (0, 0, 0), "inconsistent data"
    if hi is None:
        return (1, -lo, 0), f"tr >= {lo}"
    if hi == lo:
        return (2, -hi, -lo), f"tr = {lo}"
    return (2, -hi, -lo), f"{lo} <= tr <= {hi}"


def _count(knots) -> str:
    return f"{len(knots)} knot" + ("" if len(knots) == 1 else "s")


def cmd_classify_table(ctx: Context, args) -> None:
    ps = args.p or [2, 3, 4, 5, 6]
    names = set(args.knots.split(",")) if args.knots else None
    buckets: dict[tuple, tuple[str, list[str]]] = {}
    reports = {}
    cover_decided = []
    for rec in ctx.catalog:
        if names is not None and rec.name not in names:
            continue
        cn = rec.crossing_number
        if names is None and (cn is None or cn < args.min_crossings or cn > args.max_crossings):
            continue
        if not rec.computable:
            print(f"warning: {rec.name}: no presentation, skipped", file=sys.stderr)
            continue
        report = classify(_profile(rec, ps), rec.u, rec.t)
        reports[rec.name] = report
        key, label = _bucket_label(report.tr_lower, report.tr_upper, report.inconsistent)
        buckets.setdefault(key, (label, []))[1].append(rec.name)
        if report.tr_lower >= 2:
            cover_decided.append(rec.name)
    if not reports:
        print("warning: no knots to classify", file=sys.stderr)

    ordered = [buckets[k] for k in sorted(buckets)]
    lines = []
    for label, knots in ordered:
        lines.append(f"== {label} ({_count(knots)})")
        for name in knots:
            r = reports[name]
            upper = "unknown" if r.tr_upper is None else r.tr_upper
            lines.append(f"{name} lower {r.tr_lower} [{','.join(r.tr_lower_provenance)}] "
                         f"upper {upper} [{','.join(r.tr_upper_provenance)}]")
    lines.append(f"== tr >= 2 by cover homology ({_count(cover_decided)})")
    lines.extend(cover_decided)
    ctx.emit("\n".join(lines), {
        "p": ps,
        "buckets": [{"label": label, "knots": knots} for label, knots in ordered],
        "cover_decided": cover_decided,
        "reports": {n: r.as_dict() for n, r in reports.items()},
    })


def _known_tr(rec: KnotRecord, h: HomologyProfile) -> int | None:
    return classify(h, rec.u, rec.t).exact


def cmd_consum(ctx: Context, args) -> None:
    ps = args.p or [2]
    if 2 not in ps:
        ps = [2] + ps
    first = ctx.resolve(args.knots[0])
    if args.n is not None:
        if len(args.knots) != 1:
            raise CommandError("give one knot with --n, or two knots without it")
        if args.n < 1:
            raise CommandError("--n must be >= 1")
        parts = [first] * args.n
    elif len(args.knots) == 2:
        parts = [first, ctx.resolve(args.knots[1])]
    else:
        raise CommandError("give two knots, or one knot with --n")

    profiles = [_profile(r, ps) for r in parts]
    summed = {p: profiles[0][p] for p in ps}
    for prof in profiles[1:]:
        summed = {p: summed[p].direct_sum(prof[p]) for p in ps}
    h = HomologyProfile(summed)

    extra = []
    lines = [f"homology {format_homology(p, g)}" for p, g in h.by_cover.items()]
    info: dict = {}
    trs = [_known_tr(r, prof) for r, prof in zip(parts, profiles)]
    if all(x is not None for x in trs):
        bound = trs[0]
        for x in trs[1:]:
            bound = connected_sum_upper_bound(bound, x)
        extra.append((bound, "thm5.1"))
        lines.append(f"thm5.1_upper {bound}")
        info["thm5.1_upper"] = bound
    us = [r.u for r in parts]
    if all(u is not None for u in us):
        extra.append((sum(us), "upper:u-subadditive"))
        lines.append(f"u_subadditive_upper {sum(us)}")
        info["u_subadditive_upper"] = sum(us)
    if args.n is not None and not profiles[0][2].is_trivial:
        rb = repeated_sum_lower_bound(profiles[0][2], args.n)
        lines.append(f"repeated_sum_lower {rb}")
        info["repeated_sum_lower"] = rb
    report = classify(h, extra_upper=extra)
    lines.append(report.text())
    ctx.emit("\n".join(lines), {"summands": [r.name for r in parts],
                                "homology": [_group_json(p, g) for p, g in h.by_cover.items()],
                                **info, "report": report.as_dict()})


def cmd_snf(ctx: Context, args) -> None:
    try:
        m = parse_matrix(args.matrix)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    res = snf(m)
    if res.u @ m @ res.v != res.d or abs(det(res.u)) != 1 or abs(det(res.v)) != 1:
        raise CommandError("internal error: Smith normal form certificate failed verification")
    ctx.emit(res.d.format(), {"d": res.d.format(), "u": res.u.format(), "v": res.v.format(),
                              "diagonal": res.diagonal, "verified": True})


def cmd_lemma_check(ctx: Context, args) -> None:
    a1, a2 = args.a[0], args.a[1]
    try:
        g = lemma_grupos_group(*args.a)
    except BoundsError as exc:
        raise CommandError(str(exc)) from exc
    expected = AbelianGroup.from_orders([a1 - a2])
    ok = g == expected
    name = f"Z_{abs(a1 - a2)}" if g.is_cyclic and not g.free_rank else str(g)
    if g.is_trivial:
        name = "Z_1"
    ctx.emit(f"{name} {'PASS' if ok else 'FAIL'}",
             {"torsion": list(g.torsion), "free_rank": g.free_rank,
              "expected_order": abs(a1 - a2), "pass": ok})
    if not ok:
        raise CommandError(f"lemma check failed: got {g}, expected Z_{abs(a1 - a2)}")


def cmd_ingest(ctx: Context, args) -> None:
    try:
        cmap = parse_column_map(args.map)
        catalog, report = ingest_csv(args.csv, cmap, source=args.source)
    except FileNotFoundError as exc:
        raise CommandError(f"no such file: {args.csv}") from exc
    except CatalogError as exc:
        raise CommandError(str(exc)) from exc
    for line in report.lines():
        print(line, file=sys.stderr)
    if args.catalog:
        try:
            catalog.persist(args.catalog)
        except CatalogError as exc:
            raise CommandError(str(exc)) from exc
    text = f"ingested {len(catalog)} records, rejected {len(report.rejected)}"
    if args.catalog:
        text += f", wrote {args.catalog}"
    ctx.emit(text, {"records": len(catalog), "rejected": len(report.rejected),
                    "report": report.lines(), "catalog": args.catalog})


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--catalog", help="catalog file (JSON lines); defaults to the bundled KnotInfo subset")
    common.add_argument("--format", choices=("text", "structured"), default="text",
                        help="text lines or JSON (default: text)")
    common.add_argument("--p", type=_parse_p_list, help="comma-separated cover indices, e.g. 2,5")

    parser = argparse.ArgumentParser(
        prog="transient",
        description="Branched cover homology and transient number bounds for knots.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", parents=[common], help="H1 of p-fold branched covers",
                       description="Print H1 of the p-fold branched covers as {p,{d1,...}}; "
                                   "each 0 stands for a Z summand.  Default p: 2.")
    p.add_argument("knot")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("bounds", parents=[common], help="transient number bounds for one knot")
    p.add_argument("knot")
    p.add_argument("--u", type=int, help="override the unknotting number")
    p.add_argument("--t", type=int, help="override the tunnel number")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("classify-table", parents=[common], help="bucket catalog knots by transient number",
                       description="Classify catalog knots (default p: 2,3,4,5,6).  The unknot is "
                                   "skipped unless --min-crossings 0.")
    p.add_argument("--min-crossings", type=int, default=1)
    p.add_argument("--max-crossings", type=int, default=10)
    p.add_argument("--knots", help="comma-separated names; overrides the crossing filter")
    p.set_defaults(func=cmd_classify_table)

    p = sub.add_parser("consum", parents=[common], help="bounds for connected sums")
    p.add_argument("knots", nargs="+", metavar="knot")
    p.add_argument("--n", type=int, help="sum of n copies of a single knot")
    p.set_defaults(func=cmd_consum)

    p = sub.add_parser("snf", parents=[common], help="Smith normal form of an integer matrix")
    p.add_argument("matrix", help='rows separated by ";", e.g. "2 0; 0 3"')
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("lemma-check", parents=[common],
                       help="check the group of the 3x3 lemma presentation is Z_|a1-a2|")
    p.add_argument("a", nargs=5, type=int, metavar="a")
    p.set_defaults(func=cmd_lemma_check)

    p = sub.add_parser("ingest", parents=[common], help="ingest a CSV into a catalog file")
    p.add_argument("--csv", required=True)
    p.add_argument("--map", required=True,
                   help="name=<col>,pd=<col>,braid=<col>,seifert=<col>,u=<col>,t=<col>,det=<col>")
    p.add_argument("--source", help="source label stored on each record (default: CSV file name)")
    p.set_defaults(func=cmd_ingest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    ctx = Context(args.catalog, args.format)
    try:
        args.func(ctx, args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
