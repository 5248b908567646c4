"""Command-line interface.

Exit status: 0 on success, 2 on usage errors (argparse), 1 when a
computation fails; the error class and detail go to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from . import algebras, catalog, coxeter, experiments, spectra
from .errors import ArgumentError, CoxlabError
from .exactmath import IntPoly, cyclotomic_factor


# --------------------------------------------------------------------------
# input helpers

def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ArgumentError(f"cannot read {path}: {exc.strerror}") from exc


def _relations(text: str, n: int) -> list[list[int]]:
    if text.strip().lower() == "x3":
        return [[i, i + 3] for i in range(1, n - 2)]
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            i, j = part.split("-")
            out.append([int(i), int(j)])
        except ValueError:
            raise ArgumentError(f"relation {part!r} is not of the form i-j")
    return out


def _add_algebra_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("algebra")
    g.add_argument("--algebra", help="kind: star, canonical, extended_canonical, linear, ladder")
    g.add_argument("--weights", type=_int_list, help="weight sequence, e.g. 2,3,7")
    g.add_argument("--n", type=int, help="number of vertices (linear, ladder)")
    g.add_argument("--relations", help="linear relations as 1-4,2-5 or the shorthand x3")
    g.add_argument("--variant", help="ladder variant B, C or D")
    g.add_argument("--file", help="JSON algebra description")


def _algebra(args) -> algebras.AlgebraSpec:
    if args.file:
        return algebras.algebra_from_json(_read(args.file))
    if not args.algebra:
        raise ArgumentError("give --algebra KIND or --file PATH")
    obj: dict = {"kind": args.algebra}
    if args.weights is not None:
        obj["weights"] = args.weights
    if args.n is not None:
        obj["vertices"] = obj["n"] = args.n
    if args.variant is not None:
        obj["variant"] = args.variant
    if args.relations is not None:
        if args.n is None:
            raise ArgumentError("--relations needs --n")
        obj["relations"] = _relations(args.relations, args.n)
    return algebras.algebra_from_dict(obj)


def _poly_or_algebra(args) -> IntPoly:
    if getattr(args, "poly", None):
        return IntPoly.parse(args.poly)
    return coxeter.coxeter_polynomial(_algebra(args)).poly


# --------------------------------------------------------------------------
# output helpers

def _emit(out, fmt: str, payload, text: str, rows: Optional[list[list]] = None) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    elif fmt == "csv":
        if rows is None:
            raise ArgumentError("this command has no CSV form")
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        out.write(buf.getvalue())
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def _table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    cols = [header] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[i]) for r in cols) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cols]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _poly_payload(p: IntPoly) -> dict:
    return {"coefficients": list(p.coeffs), "text": str(p),
            "cyclotomic": catalog.cyclotomic_string(p), "v_factorization": catalog.v_factorization(p)}


def _type_payload(t: catalog.DerivedType) -> dict:
    return {"kind": t.kind, "weights": list(t.weights), "name": t.name, "symbol": t.symbol()}


# --------------------------------------------------------------------------
# commands

def cmd_cartan(args, out):
    basis = algebras.CartanBasis(args.basis)
    c = algebras.cartan_matrix(_algebra(args), basis)
    rows = c.tolist()
    text = "\n".join(" ".join(f"{a:>3}" for a in r) for r in rows)
    _emit(out, args.format, {"basis": basis.value, "matrix": rows}, text, rows)


def cmd_coxpoly(args, out):
    p = coxeter.coxeter_polynomial(_algebra(args)).poly
    text = catalog.v_factorization(p) or catalog.cyclotomic_string(p)
    _emit(out, args.format, _poly_payload(p), text, [list(p.coeffs)])


def cmd_factor(args, out):
    p = _poly_or_algebra(args)
    factors, rem = cyclotomic_factor(p)
    payload = {"factors": {str(k): v for k, v in sorted(factors.items())},
               "remainder": list(rem.coeffs), **_poly_payload(p)}
    rows = [["index", "multiplicity"]] + [[k, v] for k, v in sorted(factors.items())]
    _emit(out, args.format, payload, catalog.cyclotomic_string(p), rows)


def cmd_classify(args, out):
    p = _poly_or_algebra(args)
    types = catalog.classify_poly(p)
    text = "\n".join(str(t) for t in types)
    rows = [["kind", "name", "symbol"]] + [[t.kind, t.name, t.symbol()] for t in types]
    _emit(out, args.format, {"poly": list(p.coeffs), "types": [_type_payload(t) for t in types]}, text, rows)


def cmd_represent(args, out):
    p = _poly_or_algebra(args)
    q = spectra.represent(p)
    _emit(out, args.format, {"p": list(p.coeffs), "q": list(q.coeffs), "q_text": str(q)},
          f"{q.to_bracket()}\n{q}", [list(q.coeffs)])


def cmd_acampo(args, out):
    a = _algebra(args)
    if isinstance(a, algebras.Star):
        q = a.quiver()
    elif isinstance(a, algebras.PathAlgebra):
        q = a.quiver
    else:
        raise ArgumentError("A'Campo comparison needs a path algebra of a tree or a star")
    holds, lhs, rhs = spectra.acampo_check(q)
    payload = {"holds": holds, "bipartite": spectra.is_bipartite_orientation(q),
               "chi_of_x_squared": list(lhs.coeffs), "graph_side": list(rhs.coeffs)}
    text = f"holds: {str(holds).lower()}\nbipartite orientation: {str(payload['bipartite']).lower()}"
    _emit(out, args.format, payload, text, [["holds", holds]])


def cmd_spectral(args, out):
    p = _poly_or_algebra(args)
    sc = coxeter.spectral_class(p)
    rho = coxeter.spectral_radius_numeric(p)
    payload = {"class": sc.tag.value, "roots_outside": sc.roots_outside, "salem": sc.salem,
               "spectral_radius": rho}
    text = (f"class: {sc.tag.value}\nroots outside unit circle: {sc.roots_outside}\n"
            f"salem: {str(sc.salem).lower()}\nspectral radius: {rho:.12f}")
    rows = [["class", "roots_outside", "salem", "spectral_radius"],
            [sc.tag.value, sc.roots_outside, sc.salem, f"{rho:.12f}"]]
    _emit(out, args.format, payload, text, rows)


def cmd_chain(args, out):
    report = experiments.analyze_chain(_algebra(args))
    rows = [[s.step, s.v_form or "-", s.cyclotomic_form, s.type_string()] for s in report.steps]
    text = _table(["n", "chi", "cyclotomic", "type"], rows)
    payload = [{"step": s.step, **_poly_payload(s.poly), "types": [_type_payload(t) for t in s.types],
                "one_point_ok": s.one_point_ok} for s in report.steps]
    _emit(out, args.format, payload, text, [["n", "chi", "cyclotomic", "type"]] + rows)


def cmd_census(args, out):
    res = []
    for n in args.n:
        res.append(experiments.linear_relation_census(n, args.min_arrows, not args.exclude_empty, args.jobs))
    rows = [["n", "total", "distinct", "d_type"]] + [[r.n, r.total, r.distinct_polys, r.d_type_count] for r in res]
    text = _table(rows[0], rows[1:]) + f"convention: {res[0].convention}\n"
    if args.format == "csv" and not args.header:
        rows = rows[1:]
    payload = [{"n": r.n, "min_arrows": r.min_arrows, "total": r.total, "raw_total": r.raw_total,
                "distinct": r.distinct_polys, "d_type": r.d_type_count, "convention": r.convention} for r in res]
    _emit(out, args.format, payload, text, rows)


def cmd_radius_one(args, out):
    res = [experiments.count_radius_one(n) for n in args.degree]
    rows = [["n", "a", "b", "c"]] + [[r.n, r.a, r.b, r.c] for r in res]
    if args.format == "csv" and not args.header:
        rows = rows[1:]
    payload = [{"n": r.n, "a": r.a, "b": r.b, "c": r.c} for r in res]
    _emit(out, args.format, payload, _table(["n", "a", "b", "c"], [[r.n, r.a, r.b, r.c] for r in res]), rows)


def cmd_tables(args, out):
    names = ["dynkin", "extended", "domestic", "wild"] if args.which == "all" else [args.which]
    chunks, payload = [], {}
    for name in names:
        header, rows = catalog.table_rows(name)
        chunks.append(f"{name}\n" + _table(header, rows))
        payload[name] = [dict(zip(header, r)) for r in rows]
    csv_rows = None
    if len(names) == 1:
        header, rows = catalog.table_rows(names[0])
        csv_rows = [header] + rows
    _emit(out, args.format, payload, "\n".join(chunks), csv_rows)


def cmd_hilbert_check(args, out):
    rows = []
    if args.weights:
        # compare dim R_n from L(p) with the rational form
        w = tuple(args.weights)
        series = [int(a) for a in catalog.hilbert_rational(w).series(args.terms)]
        direct = catalog.hilbert_R(w, args.terms)
        header = ["weights", "terms", "dim R_n", "series agrees"]
        shown = ",".join(map(str, direct[:12])) + (",..." if len(direct) > 12 else "")
        row = [",".join(map(str, w)), args.terms, shown, series == direct]
        text = _table(header, [row[:3] + ["yes" if row[3] else "NO"]])
        _emit(out, args.format, dict(zip(header, row[:2] + [direct, row[3]])), text, [header, row])
        return
    for fam in catalog.DOMESTIC_TABLE:
        for params in _sample_params(fam.params):
            r = fam.make(*params)
            rows.append([",".join(map(str, r.weights)), ",".join(map(str, r.gen_degrees)),
                         r.rel_degree, catalog.hilbert_identity_check(r)])
    for r in catalog.wild_rows():
        rows.append([",".join(map(str, r.weights)), ",".join(map(str, r.gen_degrees)),
                     r.rel_degree, catalog.hilbert_identity_check(r)])
    header = ["weights", "degrees", "deg f", "identity holds"]
    text_rows = [[a, b, c, "yes" if d else "NO"] for a, b, c, d in rows]
    _emit(out, args.format, [dict(zip(header, r)) for r in rows], _table(header, text_rows), [header] + rows)


def _sample_params(names: Sequence[str]) -> list[tuple]:
    if not names:
        return [()]
    if names == ("p", "q"):
        return [(p, q) for p in range(1, 5) for q in range(p, 6)]
    return [(l,) for l in range(1, 6)]


def cmd_isospectral(args, out):
    if args.graph:
        g = spectra.Graph.from_json(_read(args.graph))
    elif args.star:
        g = spectra.star_graph(args.star)
    else:
        raise ArgumentError("give --graph FILE or --star WEIGHTS")
    mates = spectra.find_isospectral_mate(g, args.max_vertices)
    phi = spectra.graph_char_poly(g)
    text = f"characteristic polynomial: {phi}\nmates: {len(mates)}\n" + "".join(
        json.dumps(m.to_dict()) + "\n" for m in mates)
    rows = [["mate", "edges"]] + [[i + 1, json.dumps(m.to_dict()["edges"])] for i, m in enumerate(mates)]
    _emit(out, args.format, {"char_poly": list(phi.coeffs), "mates": [m.to_dict() for m in mates]}, text, rows)


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxlab", description="Coxeter polynomials of finite dimensional algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, algebra=False, poly=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        if algebra:
            _add_algebra_args(p)
        if poly:
            p.add_argument("--poly", help="coefficients in ascending order, e.g. [1,1,0,1,1]")
        p.set_defaults(func=func)
        return p

    p = add("cartan", cmd_cartan, "Cartan matrix", algebra=True)
    p.add_argument("--basis", choices=("projectives", "simples"), default="projectives")
    add("coxpoly", cmd_coxpoly, "Coxeter polynomial in v-notation", algebra=True)
    add("factor", cmd_factor, "cyclotomic factorization", algebra=True, poly=True)
    add("classify", cmd_classify, "derived types with a given Coxeter polynomial", algebra=True, poly=True)
    add("represent", cmd_represent, "representing polynomial q", algebra=True, poly=True)
    add("acampo", cmd_acampo, "compare chi(x^2) with the graph polynomial", algebra=True)
    add("spectral", cmd_spectral, "spectral class and radius", algebra=True, poly=True)
    add("chain", cmd_chain, "polynomials of the vertex-prefix subalgebras", algebra=True)
    p = add("census", cmd_census, "zero-relation census on linear quivers")
    p.add_argument("--n", type=_int_list, required=True, help="vertex counts, e.g. 10,11,12")
    p.add_argument("--min-arrows", type=int, default=3)
    p.add_argument("--exclude-empty", action="store_true")
    p.add_argument("--header", action="store_true", help="CSV header line")
    p.add_argument("--jobs", type=int, default=None)
    p = add("radius-one", cmd_radius_one, "count spectral-radius-one polynomials")
    p.add_argument("--degree", type=_int_list, required=True)
    p.add_argument("--header", action="store_true", help="CSV header line")
    p.add_argument("--jobs", type=int, default=None, help="accepted for symmetry; the count is single pass")
    p = add("tables", cmd_tables, "print the built-in tables")
    p.add_argument("--which", choices=("dynkin", "extended", "domestic", "wild", "all"), default="all")
    p = add("hilbert-check", cmd_hilbert_check, "Poincare series of R against the degree data")
    p.add_argument("--weights", type=_int_list)
    p.add_argument("--terms", type=int, default=40)
    p = add("isospectral", cmd_isospectral, "isospectral tree mates")
    p.add_argument("--graph", help="JSON graph {vertices, edges}")
    p.add_argument("--star", type=_int_list)
    p.add_argument("--max-vertices", type=int, default=12)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", 0) is None:
        try:
            args.jobs = experiments.default_jobs()
        except CoxlabError as exc:
            err.write(f"{type(exc).__name__}: {exc}\n")
            return 1
    try:
        args.func(args, out)
    except CoxlabError as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
