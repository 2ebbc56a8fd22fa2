"""
Application Entry Point
Command line launcher for the LTL Minimum-Violation Planner
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from models import LtlSyntaxError, PlannerSettings
from models.settings import DEFAULT_MAX_STATES
from viewmodels import MissionViewModel
from views import oracle_report, serialize_plan, verdict_table


LOG_FORMAT = '[%(asctime)s.%(msecs)03d] %(levelname)s (%(funcName)s): %(message)s'
LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def configure_logging(verbosity: int):
    """Log to stderr so stdout stays byte-deterministic"""
    logging.basicConfig(
        level=LOG_LEVELS[min(verbosity, len(LOG_LEVELS) - 1)],
        format=LOG_FORMAT,
        datefmt='%Y-%m-%d %H:%M:%S',
        stream=sys.stderr,
        force=True,
    )


class CommandLineParser(argparse.ArgumentParser):
    """Argument parser reporting usage errors as a single diagnostic line"""

    def error(self, message: str):
        self.exit(2, f"error[usage]: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = CommandLineParser(
        prog="ltlmvp",
        description="Plan maximal-reward traces for prioritized LTL specifications.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logs")
    commands = parser.add_subparsers(dest="command", required=True)

    plan = commands.add_parser("plan", help="Plan a trace for a model and a specification")
    plan.add_argument("--model", required=True, type=Path)
    plan.add_argument("--spec", required=True, type=Path)
    plan.add_argument("--oracle", action="store_true", help="Cross-check with subset enumeration")
    plan.add_argument("--dot", type=Path, metavar="DIR", help="Write DOT files of every automaton")
    plan.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    plan.add_argument("--lexicographic", action="store_true", help="Use 2^(n-i) rewards in priority order")
    plan.add_argument("--product-trace", action="store_true", help="Append the product-level trace")
    plan.add_argument("--no-reuse", action="store_true", help="Disable cross-root reuse of inner visits")

    translate = commands.add_parser("translate", help="Translate a formula and dump its automaton")
    translate.add_argument("--formula", required=True)
    translate.add_argument("--dot", type=Path, metavar="FILE")
    translate.add_argument("--nonblocking", action="store_true")
    translate.add_argument("--degeneralize", action="store_true")
    translate.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)

    check = commands.add_parser("check", help="Re-score a plan file")
    check.add_argument("--model", required=True, type=Path)
    check.add_argument("--spec", required=True, type=Path)
    check.add_argument("--plan", required=True, type=Path)
    check.add_argument("--lexicographic", action="store_true")

    rescue = commands.add_parser("gen-rescue", help="Generate a rescue mission model and specification")
    rescue.add_argument("--config", type=Path, help="Scenario JSON (default: bundled 4x4 scenario)")
    rescue.add_argument("--out", required=True, type=Path)

    random_cmd = commands.add_parser("random", help="Generate a seeded random instance")
    random_cmd.add_argument("--seed", required=True, type=int)
    random_cmd.add_argument("--states", type=int, default=6)
    random_cmd.add_argument("--props", type=int, default=3)
    random_cmd.add_argument("--formulas", type=int, default=3)
    random_cmd.add_argument("--out", required=True, type=Path)
    return parser


def settings_from_args(args: argparse.Namespace) -> PlannerSettings:
    return PlannerSettings(
        max_states=getattr(args, "max_states", DEFAULT_MAX_STATES),
        reuse_inner_visits=not getattr(args, "no_reuse", False),
        lexicographic=getattr(args, "lexicographic", False),
        product_trace=getattr(args, "product_trace", False),
    )


def report_failure(result) -> int:
    """Print the single diagnostic line of a failed result"""
    print(result.message, file=sys.stderr)
    if isinstance(result.error, LtlSyntaxError) and result.error.text:
        print(result.error.caret(), file=sys.stderr)
    return result.exit_code


def cmd_plan(viewmodel: MissionViewModel, args: argparse.Namespace) -> int:
    result = viewmodel.plan(args.model, args.spec, oracle=args.oracle, dot_dir=args.dot)
    if result.plan is None:
        return report_failure(result)
    product = result.artifacts.product if viewmodel.settings.product_trace else None
    sys.stdout.write(serialize_plan(result.plan, product))
    if result.oracle is not None:
        sys.stdout.write(oracle_report(result.plan, result.oracle))
    if not result.is_success:
        return report_failure(result)
    return 0


def cmd_translate(viewmodel: MissionViewModel, args: argparse.Namespace) -> int:
    result = viewmodel.translate(
        args.formula,
        nonblocking=args.nonblocking,
        degeneralized=args.degeneralize,
        dot=args.dot is not None,
    )
    if not result.is_success:
        return report_failure(result)
    sys.stdout.write(result.dump)
    if args.dot is not None:
        args.dot.write_text(result.dot, encoding="utf-8")
    return 0


def cmd_check(viewmodel: MissionViewModel, args: argparse.Namespace) -> int:
    result = viewmodel.check(args.model, args.spec, args.plan)
    if result.score is None:
        return report_failure(result)
    sys.stdout.write(verdict_table(result.score.verdicts))
    print(f"reward: {result.score.reward} (plan file: {result.claimed_reward})")
    if not result.is_success:
        return report_failure(result)
    return 0


def cmd_gen_rescue(viewmodel: MissionViewModel, args: argparse.Namespace) -> int:
    result = viewmodel.generate_rescue(args.config, args.out)
    return report_generated(result)


def cmd_random(viewmodel: MissionViewModel, args: argparse.Namespace) -> int:
    result = viewmodel.generate_random(args.seed, args.out, args.states, args.props, args.formulas)
    return report_generated(result)


def report_generated(result) -> int:
    if not result.is_success:
        return report_failure(result)
    print(f"model: {result.model_path} ({result.states} states)")
    print(f"spec: {result.spec_path} ({result.formulas} formulas)")
    return 0


COMMANDS = {
    "plan": cmd_plan,
    "translate": cmd_translate,
    "check": cmd_check,
    "gen-rescue": cmd_gen_rescue,
    "random": cmd_random,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main application entry point"""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    viewmodel = MissionViewModel(settings_from_args(args))
    return COMMANDS[args.command](viewmodel, args)


if __name__ == "__main__":
    sys.exit(main())
