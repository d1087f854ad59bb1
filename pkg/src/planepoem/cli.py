"""Command-line entry point.

Exit codes: 0 success / positive verdict, 1 domain-level negative verdict
(axiom failure, imperfect set, invalid poem), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import conics, diffset, field, octonion, plane, poemform
from .forms import default_forms
from .serialize import canonical_json

THRESHOLD_ENV_VAR = "PLANEPOEM_THRESHOLD"


class UsageError(Exception):
    pass


class VerdictFailure(Exception):
    """Computation succeeded but the answer is negative."""


def _emit(args, doc: dict, text: str) -> None:
    if args.format == "json":
        print(canonical_json(doc))
    else:
        print(text)


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _parse_residues(raw: str, n: int) -> diffset.DifferenceSet:
    try:
        residues = tuple(sorted({int(tok) % n for tok in raw.split(",")}))
        return diffset.DifferenceSet(n=n, residues=residues)
    except ValueError as exc:
        raise UsageError(f"bad residue list {raw!r}: {exc}") from exc


def _plane_text(s: plane.IncidenceStructure) -> str:
    out = [f"points: {s.point_count}", f"lines: {len(s.lines)}"]
    for line in s.lines:
        out.append(" ".join(str(p) for p in line))
    return "\n".join(out)


def cmd_plane(args) -> None:
    if args.action == "build":
        structure = plane.build_field_plane(args.q)
        _emit(args, plane.to_doc(structure), _plane_text(structure))
        return
    structure = plane.from_doc(json.loads(_read_file(args.file)))
    if args.action == "check":
        report = plane.check_axioms(structure)
        text = "\n".join(
            [f"axiom{i} {'ok' if ok else 'FAIL'}" for i, ok in
             enumerate((report.axiom1_ok, report.axiom2_ok, report.axiom3_ok), start=1)]
            + [f"witness: {w}" for w in report.witnesses]
        )
        _emit(args, report.to_doc(), text)
        if not report.all_ok:
            raise VerdictFailure("axioms failed")
    else:  # stats
        stats = plane.regularity_stats(structure)
        doc = {
            "points": stats["points"],
            "lines": stats["lines"],
            "points_per_line": sorted(stats["points_per_line"]),
            "lines_per_point": sorted(stats["lines_per_point"]),
            "order": stats["order"],
        }
        _emit(args, doc, "\n".join(f"{k}: {v}" for k, v in doc.items()))


def cmd_diffset(args) -> None:
    if args.action == "search":
        found = diffset.search_difference_sets(args.n, args.k)
        doc = {
            "n": args.n,
            "k": args.k,
            "count": len(found),
            "sets": [
                {"residues": list(ds.residues), "orbit_representative": diffset.is_orbit_representative(ds)}
                for ds in found
            ],
        }
        lines = [f"{len(found)} difference sets for n={args.n}, k={args.k}"]
        for entry in doc["sets"]:
            mark = " *" if entry["orbit_representative"] else ""
            lines.append(",".join(map(str, entry["residues"])) + mark)
        _emit(args, doc, "\n".join(lines))
        return
    ds = _parse_residues(args.set, args.n)
    if args.action == "verify":
        result = diffset.verify_difference_set(ds)
        rows = [f"{a} - {b} = {d} (mod {ds.n})" for a, b, d in result.table]
        text = "\n".join(rows + [f"ok: {result.ok}"])
        if not result.ok:
            text += f"\nmissing: {list(result.missing)}\nrepeated: {list(result.repeated)}"
        _emit(args, result.to_doc(ds), text)
        if not result.ok:
            raise VerdictFailure("not a perfect difference set")
    else:  # develop
        try:
            structure = diffset.develop(ds)
        except diffset.NotPerfect as exc:
            print(str(exc), file=sys.stderr)
            raise VerdictFailure(str(exc)) from exc
        _emit(args, plane.to_doc(structure), _plane_text(structure))


def cmd_oval(args) -> None:
    if args.q % 2 == 0:
        raise UsageError(f"even order {args.q} rejected; conic machinery needs odd q")
    if args.action == "segre":
        result = conics.segre_check(args.q, allow_long=args.allow_long)
        text = (
            f"q={result['q']} ovals={result['ovals']} conics={result['conics']} "
            f"equal={result['equal_as_sets']}"
        )
        _emit(args, result, text)
    else:  # list
        if args.q == 7 and not args.allow_long:
            raise UsageError("q = 7 enumeration is long-running; pass --allow-long")
        ovals = conics.enumerate_ovals(plane.build_field_plane(args.q))
        doc = {"q": args.q, "count": len(ovals), "ovals": [list(o) for o in ovals]}
        _emit(args, doc, "\n".join([f"{len(ovals)} ovals"] + [" ".join(map(str, o)) for o in ovals]))


def _basis_index(label: str) -> int:
    try:
        return octonion.BASIS_LABELS.index(label)
    except ValueError as exc:
        raise UsageError(f"unknown basis label {label!r}; expected u or f0..f6") from exc


def cmd_octonion(args) -> None:
    table = octonion.build_table(octonion.paper_orientation())
    if args.action == "table":
        doc = octonion.table_doc(table)
        header = "      " + " ".join(f"{b:>4}" for b in doc["basis"])
        rows = [
            f"{doc['basis'][i]:>4}  " + " ".join(f"{entry:>4}" for entry in row)
            for i, row in enumerate(doc["products"])
        ]
        _emit(args, doc, "\n".join([header] + rows))
    elif args.action == "mul":
        i, j = _basis_index(args.a), _basis_index(args.b)
        sign, k = table.product(i, j)
        rendered = ("+" if sign > 0 else "-") + octonion.BASIS_LABELS[k]
        _emit(args, {"a": args.a, "b": args.b, "product": rendered}, f"{args.a} * {args.b} = {rendered}")
    else:  # report
        report = octonion.algebra_report(table)
        doc = {
            "alternative": report["alternative"],
            "associative": report["associative"],
            "commutative": report["commutative"],
            "norm_multiplicative": report["norm_multiplicative"],
            "witnesses": {
                k: list(w) if w is not None else None
                for k, w in report["witnesses"].items()
            },
        }
        text = "\n".join(f"{k}: {v}" for k, v in doc.items() if k != "witnesses")
        text += f"\nwitnesses: {doc['witnesses']}"
        _emit(args, doc, text)


def _default_threshold() -> float:
    raw = os.environ.get(THRESHOLD_ENV_VAR)
    if raw is None:
        return poemform.DEFAULT_FUZZY_THRESHOLD
    try:
        return float(raw)
    except ValueError as exc:
        raise UsageError(f"bad {THRESHOLD_ENV_VAR} value {raw!r}") from exc


def _load_form(name: str) -> poemform.FormPattern:
    patterns = default_forms()
    if name not in patterns:
        raise UsageError(f"unknown form {name!r}; available: {', '.join(sorted(patterns))}")
    return patterns[name]


def cmd_form(args) -> None:
    if args.action == "list":
        patterns = default_forms()
        doc = {
            "forms": [
                {
                    "name": p.name,
                    "point_count": p.point_count,
                    "stanza_shape": f"{len(p.stanzas)}x{len(p.stanzas[0])}",
                }
                for p in patterns.values()
            ]
        }
        _emit(args, doc, "\n".join(
            f"{f['name']}  {f['stanza_shape']}  ({f['point_count']} base lines)"
            for f in doc["forms"]
        ))
        return
    if args.action == "scaffold":
        pattern = _load_form(args.form)
        raw_lines = [ln for ln in _read_file(args.lines).splitlines() if ln.strip()]
        if len(raw_lines) != pattern.point_count:
            raise UsageError(
                f"lines file must hold exactly {pattern.point_count} nonempty lines, got {len(raw_lines)}"
            )
        try:
            poem = poemform.scaffold(pattern, dict(enumerate(raw_lines)))
        except poemform.MissingBaseLine as exc:
            raise UsageError(str(exc)) from exc
        text = poemform.render_poem(poem)
        _emit(args, {"form": pattern.name, "poem": text}, text)
        return
    if args.action == "validate":
        pattern = _load_form(args.form)
        threshold = args.threshold if args.threshold is not None else _default_threshold()
        try:
            poem = poemform.parse_poem(_read_file(args.poem))
            report = poemform.validate(poem, pattern, mode=args.mode, threshold=threshold)
        except (poemform.EmptyInput, ValueError) as exc:
            raise UsageError(str(exc)) from exc
        doc = report.to_doc()
        lines = [
            f"mode: {report.mode}",
            f"threshold: {report.threshold}",
            f"shape_ok: {report.shape_ok}",
        ]
        for pid, info in sorted(doc["classes"].items(), key=lambda kv: int(kv[0])):
            lines.append(
                f"class {pid}: {'ok' if info['ok'] else 'FAIL'} "
                f"(min similarity {info['min_pairwise_similarity']})"
            )
        lines.append(f"overall_ok: {report.overall_ok}")
        _emit(args, doc, "\n".join(lines))
        if not report.overall_ok:
            raise VerdictFailure("poem does not satisfy the form")
        return
    # discover
    try:
        poem = poemform.parse_poem(_read_file(args.poem))
        result = poemform.discover_structure(poem, args.threshold)
    except (poemform.EmptyInput, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    axioms = result["axiom_report"]
    doc = {
        "threshold": args.threshold,
        "cluster_count": len(result["clusters"]),
        "clusters": {
            str(cid): [list(pos) for pos in members]
            for cid, members in sorted(result["clusters"].items())
        },
        "induced": plane.to_doc(result["induced"]),
        "axioms": axioms.to_doc(),
    }
    text = (
        f"clusters: {doc['cluster_count']}\n"
        f"induced lines: {len(doc['induced']['lines'])}\n"
        f"axioms: {axioms.axiom1_ok} {axioms.axiom2_ok} {axioms.axiom3_ok}"
    )
    _emit(args, doc, text)


def cmd_serve(args) -> None:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="planepoem")
    sub = parser.add_subparsers(dest="command", required=True)

    p_plane = sub.add_parser("plane", help="build and inspect incidence structures")
    plane_sub = p_plane.add_subparsers(dest="action", required=True)
    p = plane_sub.add_parser("build", parents=[fmt])
    p.add_argument("q", type=int)
    for action in ("check", "stats"):
        p = plane_sub.add_parser(action, parents=[fmt])
        p.add_argument("file")
    p_plane.set_defaults(func=cmd_plane)

    p_ds = sub.add_parser("diffset", help="difference sets modulo n")
    ds_sub = p_ds.add_subparsers(dest="action", required=True)
    for action in ("verify", "develop"):
        p = ds_sub.add_parser(action, parents=[fmt])
        p.add_argument("n", type=int)
        p.add_argument("set")
    p = ds_sub.add_parser("search", parents=[fmt])
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p_ds.set_defaults(func=cmd_diffset)

    p_oval = sub.add_parser("oval", help="ovals, conics, Segre cross-check")
    oval_sub = p_oval.add_subparsers(dest="action", required=True)
    for action in ("segre", "list"):
        p = oval_sub.add_parser(action, parents=[fmt])
        p.add_argument("q", type=int)
        p.add_argument("--allow-long", action="store_true")
    p_oval.set_defaults(func=cmd_oval)

    p_oct = sub.add_parser("octonion", help="octonion table and algebra report")
    oct_sub = p_oct.add_subparsers(dest="action", required=True)
    oct_sub.add_parser("table", parents=[fmt])
    p = oct_sub.add_parser("mul", parents=[fmt])
    p.add_argument("a")
    p.add_argument("b")
    oct_sub.add_parser("report", parents=[fmt])
    p_oct.set_defaults(func=cmd_octonion)

    p_form = sub.add_parser("form", help="poetic forms: scaffold, validate, discover")
    form_sub = p_form.add_subparsers(dest="action", required=True)
    form_sub.add_parser("list", parents=[fmt])
    p = form_sub.add_parser("scaffold", parents=[fmt])
    p.add_argument("--form", required=True)
    p.add_argument("--lines", required=True)
    p = form_sub.add_parser("validate", parents=[fmt])
    p.add_argument("--form", required=True)
    p.add_argument("--mode", choices=poemform.MODES, default="exact")
    p.add_argument("--threshold", type=float)
    p.add_argument("poem")
    p = form_sub.add_parser("discover", parents=[fmt])
    p.add_argument("poem")
    p.add_argument("--threshold", type=float, required=True)
    p_form.set_defaults(func=cmd_form)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8642)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except VerdictFailure:
        return 1
    except (
        UsageError,
        field.UnsupportedOrder,
        conics.EvenCharacteristic,
        conics.LongRunNotAllowed,
        conics.OrderUndefined,
        diffset.SearchSpaceTooLarge,
        plane.MalformedStructure,
        json.JSONDecodeError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
