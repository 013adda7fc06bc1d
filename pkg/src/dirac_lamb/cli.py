"""Command line interface: ``dirac-lamb {levels,lamb,radial,verify}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from dirac_lamb.constants import HYDROGEN, load_constants
from dirac_lamb.lamb import CONTRIBUTIONS, BetheLogMissing, BetheTable, lamb_lambda, load_bethe_table
from dirac_lamb.radial import sample_grid, schrodinger_radial, solve
from dirac_lamb.spectra import energy, transition
from dirac_lamb.states import L_LETTERS, DomainError, StateError, dirac_numbers, parse_state
from dirac_lamb.verify import TABLE_STATES, run_all

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


@dataclass
class OutputTable:
    header: list[str]
    rows: list[list[str]] = field(default_factory=list)
    footer: list[str] = field(default_factory=list)

    def add(self, row):
        if len(row) != len(self.header):
            raise ValueError(f"row has {len(row)} cells, header has {len(self.header)}")
        self.rows.append(list(row))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.header)
        writer.writerows(self.rows)
        for line in self.footer:
            buf.write(f"# {line}\n")
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {"columns": self.header, "rows": [dict(zip(self.header, row)) for row in self.rows]}
        if self.footer:
            doc["footer"] = self.footer
        return json.dumps(doc, indent=2) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_csv()


def _fmt(value, digits):
    text = f"{value:.{digits}f}"
    # avoid "-0.000" for values that round to zero
    return text[1:] if text.startswith("-") and float(text) == 0 else text


def _j_text(state):
    return f"{state.twice_j}/2"


def _parse_states(labels, errors):
    states = []
    for label in labels:
        try:
            states.append(parse_state(label))
        except StateError as exc:
            errors.append(str(exc))
    return states


def cmd_levels(labels, lambda_mode, c, table, errors):
    out = OutputTable(["state", "n", "l", "j", "k", "g", "u", "v", "w", "E_eV"])
    for state in _parse_states(labels, errors):
        lam = 0.0 if lambda_mode == "zero" else None
        try:
            level = energy(state, c, table, lam)
            nums = dirac_numbers(state, c)
        except (BetheLogMissing, DomainError) as exc:
            errors.append(f"{state.label}: {exc}")
            continue
        out.add([
            state.label, str(state.n), str(state.l), _j_text(state), str(nums.k), str(nums.g),
            _fmt(nums.u, 12), _fmt(nums.v, 12), _fmt(nums.w, 12), _fmt(level.binding_energy, 9),
        ])
    return out


def cmd_lamb(labels, c, table, errors):
    out = OutputTable(["state", *(f"{name}_MHz" for name in CONTRIBUTIONS), "total_MHz", "lambda_1e-15"])
    states = _parse_states(labels, errors)
    for state in states:
        try:
            row = lamb_lambda(state, c, table)
        except BetheLogMissing as exc:
            errors.append(f"{state.label}: {exc}")
            continue
        cells = ["" if value == 0.0 else _fmt(value, 3) for value in row.contributions().values()]
        out.add([state.label, *cells, _fmt(row.total_mhz, 3), str(round(row.lam * 1e15))])
    labels_ok = {s.label for s in states}
    if {"2s1/2", "2p1/2"} <= labels_ok:
        try:
            shift = transition(parse_state("2s1/2"), parse_state("2p1/2"), c, table)
            out.footer.append(f"2s1/2 - 2p1/2 = {_fmt(shift, 3)} MHz")
        except BetheLogMissing:
            pass
    return out


def cmd_radial(labels, r_max, points, shift_f, with_schrodinger, c, errors):
    out = OutputTable(["state", "r_a0", "R_plus", "R_minus", "density"])
    seen = set()
    for state in _parse_states(labels, errors):
        try:
            sol = solve(state, c, shift_f)
        except DomainError as exc:
            errors.append(f"{state.label}: {exc}")
            continue
        r, r_plus, r_minus, density = sample_grid(sol, r_max, points)
        for row in zip(r, r_plus, r_minus, density):
            out.add([state.label, _fmt(row[0], 6), *(f"{x:.12e}" for x in row[1:])])
        key = (state.n, state.l)
        if with_schrodinger and key not in seen:
            seen.add(key)
            label = f"{state.n}{L_LETTERS[state.l]}"
            values = schrodinger_radial(state.n, state.l, r)
            for ri, value in zip(r, values):
                out.add([label, _fmt(ri, 6), f"{value:.12e}", f"{0.0:.12e}", f"{ri * ri * value * value:.12e}"])
    return out


def cmd_verify(c, table, stream):
    results = run_all(c, table)
    for result in results:
        print(result.line(), file=stream)
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed", file=stream)
    return EXIT_OK if failed == 0 else EXIT_FAILURE


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--constants", type=Path, help="key = value file overriding CODATA 2018 constants")
    common.add_argument("--bethe", type=Path, help="extra Bethe logarithms, lines of 'n l beta'")
    common.add_argument("--format", choices=("csv", "json"), default="csv")

    parser = argparse.ArgumentParser(prog="dirac-lamb", description="Nondegenerate Dirac hydrogen levels with the Lamb shift.")
    sub = parser.add_subparsers(dest="command", required=True)

    levels = sub.add_parser("levels", parents=[common], help="energy levels and Dirac parameters")
    levels.add_argument("--states", nargs="*", default=list(TABLE_STATES))
    levels.add_argument("--lambda", dest="lambda_mode", choices=("full", "zero"), default="full")

    lamb = sub.add_parser("lamb", parents=[common], help="Lamb shift contributions in MHz")
    lamb.add_argument("--states", nargs="*", default=list(TABLE_STATES))

    radial = sub.add_parser("radial", parents=[common], help="radial functions sampled on a grid")
    radial.add_argument("--states", nargs="*", default=list(TABLE_STATES))
    radial.add_argument("--rmax", type=float, default=16.0)
    radial.add_argument("--points", type=int, default=2000)
    radial.add_argument("--f", dest="shift_f", type=float, default=0.0, help="signed length-scale shift, x = 2r/(v+f)")
    radial.add_argument("--schrodinger", action="store_true", help="also emit the nonrelativistic curves")

    sub.add_parser("verify", parents=[common], help="run the verification suite")
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)

    for path in (args.constants, args.bethe):
        if path is not None and not path.is_file():
            parser.error(f"file not found: {path}")
    try:
        c = load_constants(args.constants) if args.constants else HYDROGEN
        table = load_bethe_table(args.bethe) if args.bethe else BetheTable.default()
    except ValueError as exc:
        parser.error(str(exc))

    if args.command == "verify":
        return cmd_verify(c, table, stdout)

    errors = []
    if args.command == "levels":
        out = cmd_levels(args.states, args.lambda_mode, c, table, errors)
    elif args.command == "lamb":
        out = cmd_lamb(args.states, c, table, errors)
    else:
        if args.rmax <= 0:
            parser.error("--rmax must be positive")
        if args.points < 2:
            parser.error("--points must be at least 2")
        out = cmd_radial(args.states, args.rmax, args.points, args.shift_f, args.schrodinger, c, errors)

    stdout.write(out.render(args.format))
    for message in errors:
        print(f"error: {message}", file=stderr)
    return EXIT_FAILURE if errors else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
