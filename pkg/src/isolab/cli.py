"""Command-line entry point ``lab``.

Every command reads the JSON instance format (see :mod:`isolab.io`) and
prints JSON. Exit codes: 0 pass, 1 property failure (a counterexample file
is written and its path printed), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from isolab import io
from isolab.choquet import choquet_report
from isolab.dual import sigma_check
from isolab.errors import LabError, TheoremViolation
from isolab.isometry import (
    CompositionForm,
    compose_forms,
    decompose,
    invert_form,
    property_alpha_beta,
)
from isolab.maps import verify_into_isometry, verify_onto_isometry
from isolab.scalars import dump_scalar, parse_scalar
from isolab.space import Family, is_boundary, norm, suppmax

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(obj) -> None:
    print(io.pretty(obj))


def _function(A, raw: str):
    try:
        values = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise LabError(f"--function is not JSON: {exc}") from None
    return A.ambient.func([parse_scalar(v, A.field) for v in values])


def _points(raw: str) -> list:
    return [p.strip() for p in raw.split(",") if p.strip()]


def _values(f) -> list:
    return [dump_scalar(v) for v in f.values]


def _write_counterexample(doc: io.Document, out_dir, name: str) -> Path:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"{name}.json"
    io.dump(doc, path)
    return path


def _report_dir(args) -> Path | None:
    if getattr(args, "report_dir", None) is None:
        return None
    d = Path(args.report_dir)
    d.mkdir(parents=True, exist_ok=True)
    return d


# commands


def cmd_norm(args) -> int:
    doc = io.load(args.instance)
    A = doc.subspace(args.subspace)
    f = _function(A, args.function)
    out = {"norm": dump_scalar(norm(f, A))}
    if not f.is_zero():
        out["suppmax"] = list(suppmax(f, A))
    _emit(out)
    return EXIT_OK


def cmd_mset(args) -> int:
    doc = io.load(args.instance)
    target = doc.map(args.map) if args.map or (doc.maps and not args.subspace) else doc.subspace(args.subspace)
    queries = [_points(q) for q in args.query or []]
    report = choquet_report(target, queries)
    _emit(report.to_json())
    rdir = _report_dir(args)
    if rdir is not None:
        from isolab.plotting import dual_ball_figure

        with open(rdir / "mset.csv", "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["point", "in_m_set", "pullback"])
            for z, h in report.generator_images.items():
                w.writerow([z, z in report.m_set, " ".join(str(c) for c in h.coords)])
        A = target if not hasattr(target, "domain") else target.domain
        dual_ball_figure(A, rdir / "dual_ball.png")
    return EXIT_OK


def cmd_boundary(args) -> int:
    doc = io.load(args.instance)
    A = doc.subspace(args.subspace)
    v = is_boundary(A, _points(args.points))
    out = {"boundary": v.holds, "confidence": v.confidence}
    if not v.holds and v.witness is not None:
        out["witness"] = _values(v.witness)
    _emit(out)
    return EXIT_OK if v.holds else EXIT_FAIL


def cmd_sigma(args) -> int:
    doc = io.load(args.instance)
    A = doc.subspace(args.subspace)
    members = [A.ambient.func([parse_scalar(x, A.field) for x in row]) for row in json.loads(args.family)]
    report = sigma_check(A, Family(A, tuple(members)))
    _emit(
        {
            "centered": report.centered,
            "extreme_members": [[dump_scalar(c) for c in g.coords] for g in report.extreme_members],
            "faces": [
                {"signs": list(sig), "member": [dump_scalar(c) for c in ell.coords]} for sig, ell in report.faces
            ],
        }
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = io.load(args.instance)
    T = doc.map(args.map)
    v = verify_into_isometry(T)
    out = {"into_isometry": v.holds, "confidence": v.confidence}
    if v.holds:
        out["onto_isometry"] = verify_onto_isometry(T)
        _emit(out)
        return EXIT_OK
    out["reason"] = v.note
    if v.witness is not None:
        out["witness"] = _values(v.witness)
        out["norm_f"] = dump_scalar(norm(v.witness, T.domain))
        out["norm_Tf"] = dump_scalar(norm(T.apply(v.witness), T.codomain))
    _emit(out)
    return EXIT_FAIL


def _form_out(form: CompositionForm) -> dict:
    out = io.form_json(form)
    if form.classes:
        out["classes"] = {str(x): list(c) for x, c in form.classes.items() if len(c) > 1}
    return out


def cmd_decompose(args) -> int:
    doc = io.load(args.instance)
    T = doc.map(args.map)
    form = decompose(T, strict=args.strict)
    out = _form_out(form)
    if args.beta:
        ab = property_alpha_beta(T)
        out["alpha"] = ab.alpha
        out["beta"] = ab.beta
        out["beta_by_point"] = ab.beta_by_point
    _emit(out)
    return EXIT_OK


def cmd_compose(args) -> int:
    doc = io.load(args.instance)
    T1, T2 = doc.map(args.first), doc.map(args.second)
    _emit(_form_out(compose_forms(T1, decompose(T1), T2, decompose(T2))))
    return EXIT_OK


def cmd_invert(args) -> int:
    doc = io.load(args.instance)
    T = doc.map(args.map)
    _emit(_form_out(invert_form(T, decompose(T))))
    return EXIT_OK


def cmd_suite(args) -> int:
    from isolab.harness.suites import SUITES, run_suite

    ids = list(SUITES) if args.suite_id == "all" else [args.suite_id]
    if args.suite_id != "all" and args.suite_id not in SUITES:
        raise LabError(f"unknown suite {args.suite_id!r}; known: all, {', '.join(SUITES)}")
    reports = [run_suite(sid, args.trials, args.seed, shrink=not args.no_shrink) for sid in ids]
    failed = False
    out_dir = Path(args.counterexample_dir)
    rows = []
    for r in reports:
        line = {
            "suite": r.suite_id,
            "status": r.status,
            "trials": r.trials,
            "passed": r.passed,
            "skipped": r.skipped,
            "failures": len(r.failures),
            "seconds": round(r.elapsed, 3),
        }
        if r.note:
            line["note"] = r.note
        paths = []
        for cx in r.failures:
            failed = True
            p = _write_counterexample(cx.instance.to_document(), out_dir, f"{r.suite_id}-seed{r.seed}-trial{cx.trial}")
            paths.append(str(p))
            print(f"counterexample: {p} ({cx.message})", file=sys.stderr)
        if paths:
            line["counterexamples"] = paths
        rows.append(line)
        _emit(line)
    rdir = _report_dir(args)
    if rdir is not None:
        from isolab.plotting import suite_figure

        stem = "suites" if len(reports) > 1 else f"suite_{args.suite_id}"
        with open(rdir / f"{stem}.csv", "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=["suite", "status", "trials", "passed", "skipped", "failures", "seconds"])
            w.writeheader()
            for line in rows:
                w.writerow({k: line[k] for k in w.fieldnames})
        suite_figure([(x["suite"], x["passed"], x["skipped"], x["failures"]) for x in rows], rdir / f"{stem}.png")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_gen(args) -> int:
    from isolab.harness.generate import Scale, gen_instance

    scale = Scale(args.max_points, args.max_dim, args.height)
    inst = gen_instance(args.seed, scale, args.kind)
    text = io.dumps(inst.to_document())
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    from isolab.harness.generate import KINDS

    parser = argparse.ArgumentParser(prog="lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", help="weighted sup norm and suppmax of a function")
    p.add_argument("instance")
    p.add_argument("--subspace")
    p.add_argument("--function", required=True, help='JSON list of values, e.g. "[1, \\"1/2\\", 0]"')
    p.set_defaults(run=cmd_norm)

    p = sub.add_parser("mset", help="Choquet set of a map (or of a subspace's identity)")
    p.add_argument("instance")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--map")
    g.add_argument("--subspace")
    p.add_argument("--query", action="append", help="comma-separated point set to test for membership in Ch")
    p.add_argument("--report-dir")
    p.set_defaults(run=cmd_mset)

    p = sub.add_parser("boundary", help="is a point set a boundary of the subspace")
    p.add_argument("instance")
    p.add_argument("--subspace")
    p.add_argument("--points", required=True)
    p.set_defaults(run=cmd_boundary)

    p = sub.add_parser("sigma", help="norming functionals of a family")
    p.add_argument("instance")
    p.add_argument("--subspace")
    p.add_argument("--family", required=True, help="JSON list of function value lists")
    p.set_defaults(run=cmd_sigma)

    p = sub.add_parser("verify-isometry", help="exact into/onto isometry test")
    p.add_argument("instance")
    p.add_argument("--map")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("decompose", help="recover (phi, tau) of an into-isometry")
    p.add_argument("instance")
    p.add_argument("--map")
    p.add_argument("--strict", action="store_true", help="fail on nontrivial point classes")
    p.add_argument("--beta", action="store_true", help="also decide properties alpha and beta")
    p.set_defaults(run=cmd_decompose)

    p = sub.add_parser("compose", help="form of the composition second o first")
    p.add_argument("instance")
    p.add_argument("--first", required=True)
    p.add_argument("--second", required=True)
    p.set_defaults(run=cmd_compose)

    p = sub.add_parser("invert", help="form of the inverse of an onto isometry")
    p.add_argument("instance")
    p.add_argument("--map")
    p.set_defaults(run=cmd_invert)

    p = sub.add_parser("suite", help="run a property suite ('all' runs every suite)")
    p.add_argument("suite_id")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report-dir", help="write CSV and PNG summaries here")
    p.add_argument("--counterexample-dir", default="counterexamples")
    p.add_argument("--no-shrink", action="store_true")
    p.set_defaults(run=cmd_suite)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--kind", choices=KINDS, default="random_subspace")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-points", type=int, default=8)
    p.add_argument("--max-dim", type=int, default=4)
    p.add_argument("--height", type=int, default=8)
    p.add_argument("--out")
    p.set_defaults(run=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.run(args)
    except TheoremViolation as exc:
        print(f"lab: property failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (LabError, ValueError, TypeError, OSError) as exc:
        print(f"lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
