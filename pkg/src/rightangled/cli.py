"""Command-line interface.

Exit codes: 0 success, 2 validation failure (or a bounds diff under
``--verify``), 3 a realizability screen fired, 4 input or usage error.
Human-readable reports go to stdout; machine output is written to ``-o``.
A path of ``-`` reads the polytope from stdin; ``-o -`` writes the machine
output to stdout and moves the report to stderr, so commands can be piped.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bounds, catalog, gluing, lattice, screens, tables
from .polytope import StructureError, dump, dumps, load, loads

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_SCREEN = 3
EXIT_USAGE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load(path):
    try:
        if path == "-":
            return loads(sys.stdin.read())
        return load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    except StructureError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(P, output):
    if output == "-":
        sys.stdout.write(dumps(P))
    elif output:
        dump(P, output)


def _report_stream(args):
    return sys.stderr if args.output == "-" else sys.stdout


def _sidecar_path(out) -> Path:
    out = Path(out)
    return out.with_name(out.stem + ".map.json")


def _validation_lines(report):
    if report.ok:
        return ["valid: all rules satisfied"]
    return ["invalid:"] + ["  " + line for line in report.lines()]


def _require_valid(P):
    report = lattice.validate(P)
    if not report.ok:
        for line in _validation_lines(report):
            print(line)
        return False
    return True


def cmd_validate(args) -> int:
    P = _load(args.path)
    report = lattice.validate(P)
    for line in _validation_lines(report):
        print(line)
    if not report.ok:
        return EXIT_INVALID
    if args.screen:
        findings = screens.realizability_screen(P, bounds.default_table())
        if findings:
            print("realizability screen: excluded")
            for f in findings:
                print(f"  {f}")
            return EXIT_SCREEN
        print("realizability screen: not excluded by implemented criteria")
    return EXIT_OK


def _face_vector_line(fv) -> str:
    return f"a: {' '.join(map(str, fv.a))}; v_inf: {fv.v_inf}; v_fin: {fv.v_fin}"


def cmd_stats(args) -> int:
    P = _load(args.path)
    if not _require_valid(P):
        return EXIT_INVALID
    print(f"dim: {P.dim}")
    print(_face_vector_line(lattice.face_vector(P)))
    for k in args.faces or []:
        if not 1 <= k <= P.dim - 1:
            raise UsageError(f"--faces {k} out of range 1..{P.dim - 1}")
        faces = lattice.enumerate_faces(P, k)
        print(f"{k}-faces: {len(faces)}")
        for F in faces:
            print(f"  {sorted(F.facet_set)} vertices {sorted(F.vertex_ids)}")
    fired = False
    if args.nk:
        for c in screens.nk_checks(P, include_l0=args.include_l0):
            rel = "<" if c.passed else ">="
            print(f"a_{c.k}^{c.l} = {c.average} {rel} {c.bound}")
            fired |= not c.passed
    if args.nonaka:
        for c in screens.nonaka_checks(P):
            where = "" if not c.facet_set else f"3-face {sorted(c.facet_set)}: "
            if not c.applicable:
                print(f"{where}v_inf = {c.v_inf} > 1: not applicable, pass")
            elif c.passed:
                print(f"{where}a_2 = {c.a2} ≥ 12: pass")
            else:
                print(f"{where}a_2 = {c.a2} < 12: FAIL (Nonaka)")
                fired = True
    return EXIT_SCREEN if fired else EXIT_OK


def _counts_line(P) -> str:
    parts = [f"facets {P.facet_count}"]
    if P.v_fin:
        parts.append(f"v_fin {P.v_fin}")
    if P.v_inf:
        parts.append(f"v_inf {P.v_inf}")
    return ", ".join(parts)


def cmd_glue(args) -> int:
    P = _load(args.path)
    if not 0 <= args.facet < P.facet_count:
        raise UsageError(f"--facet {args.facet} out of range 0..{P.facet_count - 1}")
    if not _require_valid(P):
        return EXIT_INVALID
    try:
        Q, gmap = gluing.double(P, args.facet)
    except gluing.DegenerateDoublingError as exc:
        print(str(exc))
        return EXIT_INVALID
    out = _report_stream(args)
    print(_counts_line(Q), file=out)
    predicted = gluing.predict_counts(P, args.facet)
    print(f"predicted (facets, v_fin, v_inf) = {predicted}", file=out)
    _emit(Q, args.output)
    if args.output and args.output != "-":
        _sidecar_path(args.output).write_text(gmap.dumps(), encoding="utf-8")
    return EXIT_OK


def cmd_reduce(args) -> int:
    P = _load(args.path)
    for vid in (args.u, args.v):
        if vid not in P.vertex_by_id:
            raise UsageError(f"unknown vertex id {vid!r}")
        if not P.vertex(vid).is_ideal:
            raise UsageError(f"vertex {vid!r} is not ideal")
    if args.u == args.v:
        raise UsageError("--u and --v must differ")
    if not _require_valid(P):
        return EXIT_INVALID
    try:
        trace = gluing.reduce_ideal_pair(P, args.u, args.v, target_dim=args.target_dim)
    except gluing.DegenerateDoublingError as exc:
        print(str(exc))
        return EXIT_INVALID
    out = _report_stream(args)
    for i, s in enumerate(trace.steps, 1):
        print(f"step {i}: glue facet {s.facet}; common facets {s.common_before} -> {s.common_after}; "
              f"d {s.dim_before} -> {s.dim_after}", file=out)
    print(f"steps: {len(trace.steps)}; final common facets: {sorted(trace.final_common)}; "
          f"{_counts_line(trace.polytope)}", file=out)
    _emit(trace.polytope, args.output)
    return EXIT_OK


def cmd_bounds(args) -> int:
    try:
        cfg = bounds.BoundsConfig(
            v5_base=args.base_v5, vfin7_base=args.base_vfin7,
            nu_update_rule=args.nu_rule, max_dim=args.max_dim,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ideal = bounds.cascade_ideal(cfg)
    table = bounds.cascade_finite(cfg, ideal) if cfg.max_dim >= 7 else ideal
    text = tables.render(table, args.format)
    sys.stdout.write(text)
    if args.output and args.output != "-":
        Path(args.output).write_text(text, encoding="utf-8")
    if args.verify:
        diffs = bounds.verify_against_published(ideal, table)
        if diffs:
            print(f"verify: {len(diffs)} discrepancies (computed values are authoritative)")
            for d in diffs:
                print(f"  {d}")
            return EXIT_INVALID
        print("verify: all published values reproduced")
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.name is None:
        for name in catalog.names():
            print(name)
        return EXIT_OK
    try:
        P = catalog.build(args.name)
    except catalog.UnknownEntryError as exc:
        raise UsageError(exc.args[0]) from None
    _emit(P, args.output or "-")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write machine output to this path")

    p = _Parser(prog="rightangled", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", parents=[common], help="check combinatorial rules")
    s.add_argument("path")
    s.add_argument("--screen", action="store_true", help="also run the realizability screen")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("stats", parents=[common], help="face vector and incidence statistics")
    s.add_argument("path")
    s.add_argument("--faces", type=int, action="append", metavar="K", help="list the K-faces")
    s.add_argument("--nk", action="store_true", help="Nikulin-Khovanskii averages vs bounds")
    s.add_argument("--include-l0", action="store_true", help="include l = 0 pairs with --nk")
    s.add_argument("--nonaka", action="store_true", help="Nonaka check on 3-faces")
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("glue", parents=[common], help="double along a facet")
    s.add_argument("path")
    s.add_argument("--facet", type=int, required=True)
    s.set_defaults(func=cmd_glue)

    s = sub.add_parser("reduce", parents=[common], help="reduce an ideal vertex pair by doublings")
    s.add_argument("path")
    s.add_argument("--u", required=True)
    s.add_argument("--v", required=True)
    s.add_argument("--target-dim", type=int, default=4)
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("bounds", parents=[common], help="lower-bound cascade tables")
    s.add_argument("--base-v5", type=int, default=3)
    s.add_argument("--base-vfin7", type=int, default=4)
    s.add_argument("--nu-rule", choices=bounds.NU_RULES, default="max")
    s.add_argument("--max-dim", type=int, default=bounds.MAX_DIM)
    s.add_argument("--format", choices=tables.FORMATS, default="md")
    s.add_argument("--verify", action="store_true", help="compare with published values")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("catalog", parents=[common], help="list or emit catalog entries")
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
