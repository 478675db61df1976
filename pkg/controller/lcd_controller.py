"""
LCD Controller - Command-line entry point for construction, checking, search, seeding and theorem checks
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from controller.build_planner import plan_for, seeding_targets, table_rows
from controller.code_store import CodeStore
from modules.codes import LinearCode
from modules.constructs import STATUS_BELOW, DatabaseSeeder, build_optimal_lcd
from modules.defvec import DefiningVector, canonicalize, code_from_defvec, defining_vector
from modules.gf2 import BitMatrix
from modules.search import ExhaustiveSearch, HillClimber
from modules.theorems import (
    ArithmeticCheckError,
    TheoremChecker,
    TheoremRegistry,
    preflight_hull_inheritance,
    preflight_parity_lift,
)
from utils.config_loader import CliConfig, build_cli_config, load_config, setup_logging

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

TABLE_COLUMNS = ("t", "d_a", "d_l", "status", "s", "n", "class")


class LcdController:
    """Dispatches one CLI command against the configured database"""

    def __init__(self, config: CliConfig):
        self.config = config
        self.store = CodeStore(str(config.db_path))
        self.logger = self._setup_logger()

    def _setup_logger(self) -> logging.Logger:
        logger = logging.getLogger("LcdController")
        logger.setLevel(logging.INFO)
        return logger

    # ------------------------------------------------------------------
    # Output
    # ------------------------------------------------------------------

    def _wants_json(self, args: argparse.Namespace) -> bool:
        return getattr(args, "json", False) or self.config.output_format == "json"

    def _emit(self, args: argparse.Namespace, data: Dict, text: str) -> None:
        if self._wants_json(args):
            print(json.dumps(data, ensure_ascii=False))
        else:
            print(text)

    @staticmethod
    def _summary(code: LinearCode) -> Dict:
        return {"n": code.n, "k": code.k, "d": code.min_distance, "hull": code.hull_dim, "is_lcd": code.is_lcd()}

    # ------------------------------------------------------------------
    # Commands
    # ------------------------------------------------------------------

    def construct(self, args: argparse.Namespace) -> int:
        try:
            plan = plan_for(args.n)
        except ValueError as e:
            self.logger.error(str(e))
            return EXIT_USAGE
        try:
            base = self.store.small_lcd_db(plan.t, 6)
        except (LookupError, ValueError) as e:
            self.logger.error(str(e))
            return EXIT_FAILED
        record = build_optimal_lcd(plan, base)
        if args.emit:
            record.generator.write_g2m(args.emit)
            self.logger.info(f"Wrote {record.params.label()} generator to {args.emit}")
        p = record.params
        data = {
            "n": p.n,
            "k": p.k,
            "d": p.d,
            "hull": p.hull_dim,
            "status": record.status,
            "s": plan.s,
            "t": plan.t,
            "expected_d": plan.expected_d,
        }
        self._emit(args, data, f"{record.summary()} status={record.status}")
        return EXIT_FAILED if record.status == STATUS_BELOW else EXIT_OK

    def check(self, args: argparse.Namespace) -> int:
        try:
            code = LinearCode(BitMatrix.read_g2m(args.path))
        except (OSError, ValueError) as e:
            self.logger.error(f"Cannot check {args.path}: {str(e)}")
            return EXIT_FAILED
        data = self._summary(code)
        text = " ".join(f"{key}={value}" for key, value in data.items())
        self._emit(args, data, text)
        return EXIT_OK

    def table(self, args: argparse.Namespace) -> int:
        try:
            rows = table_rows(args.s_max)
        except ValueError as e:
            self.logger.error(str(e))
            return EXIT_USAGE
        if self._wants_json(args):
            for row in rows:
                print(json.dumps(row, ensure_ascii=False))
            return EXIT_OK
        print("\t".join(TABLE_COLUMNS))
        for row in rows:
            print("\t".join(str(row[column]) for column in TABLE_COLUMNS))
        return EXIT_OK

    def search(self, args: argparse.Namespace) -> int:
        try:
            if args.engine == "exhaustive":
                result = ExhaustiveSearch(self.config.limits).run(args.n, args.k, args.l_cap)
                record = result.witness
                data = {"n": args.n, "k": args.k, "d_l": result.d_l, "orbits": result.orbits, "lcd_orbits": result.lcd_orbits}
                text = f"d_l({args.n}, {args.k}) = {result.d_l} over {result.orbits} orbits ({result.lcd_orbits} LCD)"
            else:
                budget = self.config.budget
                if args.restarts or args.iterations:
                    budget = budget.model_copy(
                        update={
                            "restarts": args.restarts or budget.restarts,
                            "max_iterations": args.iterations or budget.max_iterations,
                        }
                    )
                record = HillClimber(args.n, args.k, args.d, args.lcd, budget).run()
                data = {"n": args.n, "k": args.k, "target_d": args.d}
                text = f"[{args.n}, {args.k}, {args.d}] {'found' if record else 'not found'}"
                if record is not None:
                    text = f"{record.summary()} ({record.notes})"
        except ValueError as e:
            self.logger.error(str(e))
            return EXIT_USAGE
        data.update(
            {
                "d": record.params.d if record else None,
                "hull": record.params.hull_dim if record else None,
                "found": record is not None,
            }
        )
        if record is not None:
            if args.emit:
                record.generator.write_g2m(args.emit)
                self.logger.info(f"Wrote {record.params.label()} witness to {args.emit}")
            else:
                sys.stdout.write(record.generator.to_g2m())
        self._emit(args, data, text)
        return EXIT_OK if record is not None else EXIT_FAILED

    def seed_db(self, args: argparse.Namespace) -> int:
        budget = self.config.budget
        if args.budget:
            budget = budget.model_copy(update={"max_iterations": args.budget})
        try:
            targets = seeding_targets(args.lengths)
        except ValueError as e:
            self.logger.error(str(e))
            return EXIT_USAGE

        existing = self.store.records()
        pending = [t for t in targets if (t.n, t.k) not in existing or args.force]
        self.logger.info(f"Seeding {len(pending)} of {len(targets)} targets into {self.store.db_path}")
        produced, report = DatabaseSeeder(budget).seed(pending, existing)
        for record in produced.values():
            self.store.save(record)
        skipped = [
            {"name": t.name, "n": t.n, "k": t.k, "target_d": t.d, "method": t.method, "status": "skipped"}
            for t in targets
            if t not in pending
        ]
        report = skipped + report
        self.store.save_report(report)

        failed = [entry for entry in report if entry["status"] == "failed"]
        for entry in report:
            line = f"{entry['name']}\t{entry['status']}\t{entry.get('d', '')}\t{entry.get('error') or ''}"
            self._emit(args, entry, line)
        return EXIT_FAILED if failed else EXIT_OK

    def verify_theorems(self, args: argparse.Namespace) -> int:
        exit_code = EXIT_OK
        if args.preflight:
            samples = self.config.preflight_samples
            for name, outcome in (
                ("hull-inheritance", preflight_hull_inheritance(samples)),
                ("parity-lift", preflight_parity_lift(samples)),
            ):
                self._emit(args, {"preflight": name, **outcome}, f"preflight {name}: {outcome['status']}")
                if outcome["status"] != "success":
                    exit_code = EXIT_FAILED

        ids = [args.id] if args.id else TheoremRegistry.ids()
        try:
            result = TheoremChecker(self.config.theorem_workers).check_all(ids)
        except ValueError as e:
            self.logger.error(str(e))
            return EXIT_USAGE
        except ArithmeticCheckError as e:
            self.logger.error(f"Arithmetic check failed: {str(e)}")
            return EXIT_FAILED

        for report in result["reports"]:
            if self._wants_json(args):
                print(json.dumps(report.to_dict(), ensure_ascii=False))
                continue
            print(f"{report.theorem}: {report.status}")
            for claim in report.claims:
                print(f"  {claim.family}: {claim.status}")
                for branch in claim.branches:
                    print(f"    {branch.case} [{branch.rule}] {branch.status}: {branch.detail}")
                if claim.note:
                    print(f"    note: {claim.note}")
        summary = result["summary"]
        self._emit(args, {"summary": summary}, "summary: " + " ".join(f"{k}={v}" for k, v in summary.items()))
        if summary["unresolved"]:
            exit_code = EXIT_FAILED
        return exit_code

    def defvec(self, args: argparse.Namespace) -> int:
        try:
            if args.direction == "to-defvec":
                vector = defining_vector(BitMatrix.read_g2m(args.path))
                if args.canonical:
                    vector = canonicalize(vector, best_effort=vector.k >= 6, beam_cap=self.config.beam_cap)
                self._emit(args, {"k": vector.k, "entries": list(vector.entries)}, vector.to_text())
                return EXIT_OK
            text = Path(args.path).read_text(encoding="utf-8")
            code = code_from_defvec(DefiningVector.from_text(text))
        except (OSError, ValueError) as e:
            self.logger.error(f"Cannot convert {args.path}: {str(e)}")
            return EXIT_FAILED
        if args.emit:
            code.generator.write_g2m(args.emit)
        else:
            sys.stdout.write(code.generator.to_g2m())
        return EXIT_OK

    def dispatch(self, args: argparse.Namespace) -> int:
        handlers = {
            "construct": self.construct,
            "check": self.check,
            "table": self.table,
            "search": self.search,
            "seed-db": self.seed_db,
            "verify-theorems": self.verify_theorems,
            "defvec": self.defvec,
        }
        return handlers[args.command](args)


def _lengths(text: str) -> List[int]:
    """'6-20,51,66' -> [6, ..., 20, 51, 66]"""
    lengths: List[int] = []
    for part in text.split(","):
        low, sep, high = part.strip().partition("-")
        if sep:
            lengths.extend(range(int(low), int(high) + 1))
        else:
            lengths.append(int(low))
    return lengths


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lcdlab", description="Binary LCD codes of dimension 6")
    parser.add_argument("--config", help="YAML configuration file")
    parser.add_argument("--db", help="Database directory (overrides LCD_DB)")
    parser.add_argument("--format", choices=["text", "json", "tsv"], help="Output format")
    parser.add_argument("--seed", type=int, help="Search seed")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="Build an optimal [n, 6] LCD code, n >= 51")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit", help="Write the generator to this .g2m file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check", help="Recompute the parameters of a .g2m generator")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("table", help="Residue table of d_a and d_l offsets")
    p.add_argument("--s-max", type=int, required=True, dest="s_max")

    p = sub.add_parser("search", help="Exhaustive or hill-climbing search")
    engines = p.add_subparsers(dest="engine", required=True)
    e = engines.add_parser("exhaustive")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--l-cap", type=int, dest="l_cap")
    e.add_argument("--emit")
    e.add_argument("--json", action="store_true")
    c = engines.add_parser("climb")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--target-d", "--d", type=int, required=True, dest="d", help="Minimum distance to reach")
    c.add_argument("--lcd", action="store_true", help="Require an LCD code")
    c.add_argument("--seed", type=int, dest="local_seed", help="Search seed (overrides the global --seed)")
    c.add_argument("--restarts", type=int)
    c.add_argument("--iters", "--iterations", type=int, dest="iterations", help="Iterations per restart")
    c.add_argument("--emit")
    c.add_argument("--json", action="store_true")

    p = sub.add_parser("seed-db", help="Produce and verify the small LCD records")
    p.add_argument("--budget", type=int, help="Hill-climbing iterations per restart")
    p.add_argument("--db", dest="local_db", help="Database directory (overrides the global --db)")
    p.add_argument("--lengths", type=_lengths, help="k = 6 lengths to seed, e.g. 6-20,51,66")
    p.add_argument("--force", action="store_true", help="Rebuild records already present")

    p = sub.add_parser("verify-theorems", help="Check the registered nonexistence proofs")
    p.add_argument("--id", choices=TheoremRegistry.ids())
    p.add_argument("--json", action="store_true")
    p.add_argument("--preflight", action="store_true", help="Also run the randomised lemma checks")

    p = sub.add_parser("defvec", help="Convert between generators and defining vectors")
    p.add_argument("direction", choices=["to-defvec", "to-g2m"])
    p.add_argument("path")
    p.add_argument("--canonical", action="store_true", help="Print the canonical orbit representative")
    p.add_argument("--emit")
    p.add_argument("--json", action="store_true")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse and execute one command

    Returns:
        0 on success, 1 on verification failure, 2 on usage error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    try:
        raw = load_config(args.config)
        setup_logging(raw, args.verbose)
        db = getattr(args, "local_db", None) or args.db
        seed = getattr(args, "local_seed", None)
        config = build_cli_config(raw, db=db, output_format=args.format, seed=args.seed if seed is None else seed)
    except ValueError as e:
        print(f"Error: {str(e)}", file=sys.stderr)
        return EXIT_USAGE

    return LcdController(config).dispatch(args)


def main():
    """CLI entry point"""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
