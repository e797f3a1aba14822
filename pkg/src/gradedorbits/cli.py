"""Command-line front end.

    python3 -m gradedorbits enumerate --family even-sp --m 2 --delta 1,2
    python3 -m gradedorbits hasse --family even-so --m 2 --delta 2,3
    python3 -m gradedorbits orbit tableau.json --half prime --dump-matrices
    python3 -m gradedorbits verify --max-m 3 --max-total-dim 12

Exit status: 0 on success, 1 when a verification check fails, 2 on bad usage.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from . import jmrealize as jm
from .grading import Family, GradingError, GradingSpec
from .levi import LeviError, lambda_profile, levi_blocks, levi_string, local_system_count, symbols_for_orbit
from .orbits import Orbit, OrbitError, SplitTag, enumerate_orbits, hasse_edges, orbit_name_map
from .sweep import check_orbit, iter_gradings, run_sweep
from .tableaux import DimensionVector, TableauError, dimension_vector, from_tableau, parse_tableau_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_USAGE_ERRORS = (GradingError, TableauError, OrbitError, LeviError, jm.JMError)


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    spec: GradingSpec
    delta: DimensionVector
    fmt: str


def parse_delta(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--delta expects comma-separated integers, got {text!r}") from None
    if not values:
        raise UsageError("--delta is empty")
    if any(v <= 0 for v in values):
        raise UsageError(
            f"--delta {text}: every graded piece must be nonzero; "
            "drop the vanishing degrees and lower --m instead"
        )
    return values


def make_config(family: str, m: int, delta: str, fmt: str) -> RunConfig:
    try:
        spec = GradingSpec(Family(family), m)
        dv = DimensionVector.from_positive(spec, parse_delta(delta))
    except (GradingError, TableauError) as exc:
        raise UsageError(str(exc)) from None
    return RunConfig(spec, dv, fmt)


# --- records ----------------------------------------------------------------


def _rows_text(entries: dict) -> str:
    rows: dict[int, list[str]] = {}
    for i, j, v in entries["entries"]:
        rows.setdefault(i, []).append(str(v))
    return "/".join(" ".join(r) for r in rows.values())


def orbit_record(o: Orbit, name: str) -> dict:
    rec = {
        "name": name,
        "tableau": o.tableau.to_json(),
        "rank_tableau": o.rank_tableau.to_json(),
        "dimension": o.dimension,
        "jordan": str(o.jordan),
        "split": o.split.value,
        "parity": o.parity,
    }
    if o.coeffs.is_zero():
        rec["levi"] = None
        rec["lambda"] = None
    else:
        prof = lambda_profile(o.coeffs)
        rec["levi"] = levi_string(o.coeffs)
        rec["lambda"] = {"values": list(prof.values), "sizes": list(prof.sizes)}
        rec["levi_factors"] = [f.to_json() for f in levi_blocks(o.coeffs)]
    rec["local_systems"] = local_system_count(o)
    rec["symbols"] = [s.to_json() for s in symbols_for_orbit(o)]
    return rec


def _named(orbits: Sequence[Orbit]) -> list[tuple[Orbit, str]]:
    return list(zip(orbits, orbit_name_map(orbits)))


_TSV_COLUMNS = ("name", "dimension", "jordan", "split", "parity", "levi",
                "local_systems", "symbols", "tableau", "rank_tableau")


def _tsv_line(rec: dict) -> str:
    sym = " ".join(
        "trivial" if s.get("trivial") else
        "(" + ",".join("{" + ",".join(map(str, row)) + "}" for row in s["symbol"]) + ")"
        for s in rec["symbols"]
    )
    cells = [rec["name"], rec["dimension"], rec["jordan"], rec["split"], rec["parity"],
             rec["levi"] or "-", rec["local_systems"], sym,
             _rows_text(rec["tableau"]), _rows_text(rec["rank_tableau"])]
    return "\t".join(str(x) for x in cells)


def _dump(obj, out: TextIO) -> None:
    out.write(json.dumps(obj, indent=2, ensure_ascii=False))
    out.write("\n")


# --- commands ---------------------------------------------------------------


def cmd_enumerate(cfg: RunConfig, out: TextIO) -> int:
    orbits = enumerate_orbits(cfg.spec, cfg.delta)
    records = [orbit_record(o, n) for o, n in _named(orbits)]
    if cfg.fmt == "tsv":
        out.write("\t".join(_TSV_COLUMNS) + "\n")
        for rec in records:
            out.write(_tsv_line(rec) + "\n")
    elif cfg.fmt == "json":
        _dump({"family": cfg.spec.family.value, "m": cfg.spec.m,
               "delta": cfg.delta.positive, "orbits": records}, out)
    else:
        raise UsageError("enumerate supports --format json or tsv")
    return EXIT_OK


def hasse_dot(cfg: RunConfig) -> str:
    hd = hasse_edges(cfg.spec, cfg.delta)
    names = orbit_name_map(hd.orbits)
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for n, name in enumerate(names):
        lines.append(f'  n{n} [label="{name}"];')
    for lo, hi in hd.edges:
        lines.append(f"  n{lo} -> n{hi};")
    for a, b in hd.unknown:
        lines.append(f'  n{a} -> n{b} [style=dashed, dir=none, label="unknown"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_hasse(cfg: RunConfig, out: TextIO) -> int:
    if cfg.fmt == "dot":
        out.write(hasse_dot(cfg))
        return EXIT_OK
    hd = hasse_edges(cfg.spec, cfg.delta)
    names = orbit_name_map(hd.orbits)
    edges = [[names[a], names[b]] for a, b in hd.edges]
    unknown = [[names[a], names[b]] for a, b in hd.unknown]
    if cfg.fmt == "json":
        _dump({"nodes": names, "edges": edges, "unknown": unknown}, out)
    else:
        out.write("lower\tupper\trelation\n")
        for a, b in edges:
            out.write(f"{a}\t{b}\tcovers\n")
        for a, b in unknown:
            out.write(f"{a}\t{b}\tunknown\n")
    return EXIT_OK


def orbit_report(o: Orbit, dump: bool = False) -> dict:
    spec = o.spec
    orbits = enumerate_orbits(spec, o.delta)
    name = dict(zip(((p.coeffs, p.split) for p in orbits), orbit_name_map(orbits)))[(o.coeffs, o.split)]
    rep = {"family": spec.family.value, "m": spec.m, "delta": o.delta.positive}
    rep.update(orbit_record(o, name))
    t = jm.build_jm(spec, o.coeffs, o.split.value)
    rep["verify_jm"] = {"ok": jm.verify_jm(t).ok, "failures": jm.verify_jm(t).failures}
    problems = check_orbit(o)
    rep["oracles"] = {
        "dimension_by_eigenvalues": jm.orbit_dimension_by_eigenvalues(t),
        "dimension_by_centralizer": jm.orbit_dimension_by_centralizer(t),
        "jordan_from_ranks": jm.jordan_from_ranks(t),
        "failures": problems,
    }
    if dump:
        rep["matrices"] = jm.dump_matrices(t)
    return rep


def cmd_orbit(path: str, half: str | None, dump: bool, fmt: str, out: TextIO,
              family: str | None = None, m: int | None = None) -> int:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read tableau file {path}: {exc}") from None
    if isinstance(doc, dict) and "tableau" in doc and "entries" not in doc:
        doc = doc["tableau"]   # accept a whole record from `enumerate`
    t = parse_tableau_json(doc)
    if family is not None and t.spec.family.value != family:
        raise UsageError(f"tableau file is for {t.spec.family.value}, not {family}")
    if m is not None and t.spec.m != m:
        raise UsageError(f"tableau file has m={t.spec.m}, not {m}")
    c = from_tableau(t)
    if any(v == 0 for v in dimension_vector(c).positive):
        raise UsageError("the tableau leaves some graded piece empty")
    split = SplitTag(half) if half else SplitTag.NONE
    if half is None and t.spec.family is Family.ODD_SO:
        from .orbits import splits
        if splits(t.spec, c):
            raise UsageError("this orbit splits: pass --half prime or --half doubleprime")
    rep = orbit_report(Orbit(t.spec, c, split), dump)
    if fmt == "tsv":
        out.write("\t".join(_TSV_COLUMNS) + "\n" + _tsv_line(rep) + "\n")
    else:
        _dump(rep, out)
    ok = rep["verify_jm"]["ok"] and not rep["oracles"]["failures"]
    return EXIT_OK if ok else EXIT_FAIL


def _flip_first_e_sign(t: jm.JMTriple) -> jm.JMTriple:
    """Fault injection: negate the first nonzero entry of E."""
    rows = [list(r) for r in t.E.matrix]
    for r in rows:
        for n, x in enumerate(r):
            if x:
                r[n] = -x
                break
        else:
            continue
        break
    E = jm.GradedMatrix.build(t.labels, t.labels, rows, 2)
    return jm.JMTriple(t.spec, t.coeffs, t.labels, E, t.H, t.F, t.gram, t.doubleprime)


def cmd_verify(max_m: int, max_total_dim: int, out: TextIO, inject: str | None = None) -> int:
    if max_m < 1 or max_total_dim < 1:
        raise UsageError("bounds must be at least 1")
    mutate = _flip_first_e_sign if inject == "e-sign" else None
    res = run_sweep(max_m, max_total_dim, mutate=mutate, stop_at_first=True)
    if res.ok:
        out.write(f"ok: {res.gradings_checked} gradings, {res.orbits_checked} orbits, 0 failures\n")
        return EXIT_OK
    out.write(f"FAIL after {res.gradings_checked} gradings, {res.orbits_checked} orbits\n")
    for f in res.failures:
        out.write(f.reproducer() + "\n")
    return EXIT_FAIL


# --- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gradedorbits", description="Orbits in the degree-2 piece of a graded classical Lie algebra.")
    sub = p.add_subparsers(dest="command", required=True)

    def grading_args(sp, default_fmt):
        sp.add_argument("--family", required=True, choices=[f.value for f in Family])
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--delta", required=True, help="positive-side dimensions, largest degree first")
        sp.add_argument("--format", choices=("json", "tsv", "dot"), default=default_fmt)

    grading_args(sub.add_parser("enumerate", help="list every orbit with its invariants"), "json")
    grading_args(sub.add_parser("hasse", help="closure-order Hasse diagram"), "dot")

    o = sub.add_parser("orbit", help="full report for one tableau")
    o.add_argument("tableau", help="JSON file with family, m and entries")
    o.add_argument("--family", choices=[f.value for f in Family])
    o.add_argument("--m", type=int)
    o.add_argument("--half", choices=("prime", "doubleprime"))
    o.add_argument("--dump-matrices", action="store_true")
    o.add_argument("--format", choices=("json", "tsv"), default="json")

    v = sub.add_parser("verify", help="cross-check closed forms against matrix oracles")
    v.add_argument("--max-m", type=int, default=3)
    v.add_argument("--max-total-dim", type=int, default=12)
    v.add_argument("--inject-fault", choices=("e-sign",), help=argparse.SUPPRESS)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "enumerate":
            return cmd_enumerate(make_config(args.family, args.m, args.delta, args.format), out)
        if args.command == "hasse":
            return cmd_hasse(make_config(args.family, args.m, args.delta, args.format), out)
        if args.command == "orbit":
            return cmd_orbit(args.tableau, args.half, args.dump_matrices, args.format, out, args.family, args.m)
        return cmd_verify(args.max_m, args.max_total_dim, out, args.inject_fault)
    except UsageError as exc:
        print(f"gradedorbits: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _USAGE_ERRORS as exc:
        print(f"gradedorbits: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
