"""
Election Control Lab - Main Entry Point
Solve, brute-force, generate and benchmark election control instances
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from src.bootstrap import get_bootstrap, reset_bootstrap
from src.experiments.results_io import (
    case_keys, format_cell_table, format_summary, read_csv, summarize, write_csv,
)
from src.models.config_models import ExperimentConfig, SolverConfig, TimeoutPolicy
from src.models.control_models import ControlType, all_control_types
from src.models.election_models import VotingRule
from src.models.experiment_models import CellKey, DistModel, TrialSeed
from src.utils.error_handling import ConfigurationError, handle_errors
from src.voting.election_io import format_instance, read_instance


def _split(text: str) -> List[str]:
    return [part.strip() for part in text.split(',') if part.strip()]


def parse_rule(text: str) -> VotingRule:
    """Rule by name (``bucklin``) or short name (``BV``)"""
    for rule in VotingRule:
        if text.lower() == rule.value or text.upper() == rule.short_name:
            return rule
    raise ConfigurationError(f"Unknown voting rule: {text}", config_key="rules")


def parse_rules(text: str) -> List[VotingRule]:
    return [parse_rule(part) for part in _split(text)]


def parse_controls(text: str) -> List[ControlType]:
    """Comma-separated control names; ``all`` expands to every supported type"""
    names = _split(text)
    if names == ['all']:
        return list(all_control_types())
    return [ControlType.parse(name) for name in names]


def parse_dists(text: str) -> List[DistModel]:
    try:
        return [DistModel(part.upper()) for part in _split(text)]
    except ValueError as e:
        raise ConfigurationError(f"Unknown distribution model: {e}", config_key="dists")


def parse_ints(text: str, key: str) -> List[int]:
    try:
        return [int(part) for part in _split(text)]
    except ValueError:
        raise ConfigurationError(f"Expected a comma-separated list of integers: {text}", config_key=key)


def _apply_solver_flags(args, settings: SolverConfig) -> SolverConfig:
    """Layer the solve flags over the configured solver section"""
    if args.timeout_secs is not None:
        settings.timeout_secs = args.timeout_secs
    settings.use_preorder = settings.use_preorder and not args.no_preorder
    settings.use_conditions = settings.use_conditions and not args.no_conditions
    return settings


def cmd_solve(args) -> int:
    bootstrap = get_bootstrap()
    _apply_solver_flags(args, bootstrap.get_config_manager().get_solver_config())
    instance = read_instance(args.instance)
    outcome = bootstrap.get_solver().solve(instance)
    print(outcome.to_line())
    return 0


def cmd_oracle(args) -> int:
    bootstrap = get_bootstrap()
    if args.cap is not None:
        if args.cap < 1:
            raise ConfigurationError(f"--cap must be positive, got {args.cap}", config_key="max_actions")
        bootstrap.get_config_manager().get_oracle_config().max_actions = args.cap
    verdict = bootstrap.get_oracle().brute_force(read_instance(args.instance))
    print(verdict.to_line())
    return 0


def cmd_gen(args) -> int:
    generator = get_bootstrap().get_instance_generator()
    control = ControlType.parse(args.control, args.tie)
    cell = CellKey(parse_rule(args.rule), control, parse_dists(args.dist)[0], args.m, args.n)
    instance = generator.generate(TrialSeed(args.seed, cell, args.trial))
    text = format_instance(instance)
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(text, encoding='utf-8')
        print(f"Instance written to: {args.out}")
    else:
        print(text, end='')
    return 0


def build_experiment_config(args, bootstrap) -> ExperimentConfig:
    """Experiment settings: CLI flags over environment over config file"""
    config_manager = bootstrap.get_config_manager()
    defaults = config_manager.get_experiment_defaults()
    solver = config_manager.get_solver_config()

    policy = defaults.timeout_policy
    if args.timeout_policy:
        try:
            policy = TimeoutPolicy(args.timeout_policy)
        except ValueError:
            raise ConfigurationError(f"Unknown timeout policy: {args.timeout_policy}",
                                     config_key="timeout_policy")

    return ExperimentConfig(
        rules=tuple(parse_rules(args.rules)),
        controls=tuple(parse_controls(args.controls)),
        # 'all' spans every rule, so it silently keeps the published pairs only
        paper_pairs_only=_split(args.controls) == ['all'] and not args.allow_non_paper,
        dists=tuple(parse_dists(args.dists)),
        m_values=tuple(parse_ints(args.m_list, "m_values")) if args.m_list else tuple(defaults.m_values),
        n_values=tuple(parse_ints(args.n_list, "n_values")) if args.n_list else tuple(defaults.n_values),
        trials=args.trials if args.trials is not None else defaults.trials,
        timeout_secs=args.timeout_secs if args.timeout_secs is not None else solver.timeout_secs,
        seed=args.seed if args.seed is not None else defaults.seed,
        output_path=args.out or defaults.output_path,
        jobs=args.jobs if args.jobs is not None else defaults.jobs,
        allow_non_paper=args.allow_non_paper or defaults.allow_non_paper,
        timeout_policy=policy,
        record_timings=defaults.record_timings and not args.omit_timings,
        use_preorder=solver.use_preorder,
        use_conditions=solver.use_conditions,
    )


def cmd_experiment(args) -> int:
    bootstrap = get_bootstrap()
    cfg = build_experiment_config(args, bootstrap)
    table = bootstrap.get_experiment_runner().run_grid(cfg)
    path = write_csv(table, cfg.output_path)
    print(f"{len(table)} cells written to: {path}")
    return 0


def cmd_summarize(args) -> int:
    get_bootstrap()
    table = read_csv(args.input)
    text = format_summary(summarize(table))
    if args.tables:
        for rule, control, dist in case_keys(table):
            text += "\n" + format_cell_table(table, rule, control, dist)
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(text, encoding='utf-8')
        print(f"Summary written to: {args.out}")
    else:
        print(text, end='')
    return 0


def _add_solver_flags(parser: argparse.ArgumentParser):
    parser.add_argument('--instance', required=True, help='Control instance file')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Election Control Lab - heuristic control solving for Bucklin, fallback and plurality'
    )
    parser.add_argument('--verbose', '-v', action='store_true', help='Enable verbose logging')
    parser.add_argument('--config-dir', help='Configuration directory (default: ./config)')
    commands = parser.add_subparsers(dest='command', required=True)

    solve = commands.add_parser('solve', help='Decide an instance with the heuristic solver')
    _add_solver_flags(solve)
    solve.add_argument('--timeout-secs', type=float, help='Wall-clock limit per instance')
    solve.add_argument('--no-preorder', action='store_true', help='Search in input order')
    solve.add_argument('--no-conditions', action='store_true', help='Skip the trivial-case checks')
    solve.set_defaults(handler=cmd_solve)

    oracle = commands.add_parser('oracle', help='Decide a small instance exhaustively')
    _add_solver_flags(oracle)
    oracle.add_argument('--cap', type=int, help='Maximum number of actions to enumerate')
    oracle.set_defaults(handler=cmd_oracle)

    gen = commands.add_parser('gen', help='Generate a seeded random instance')
    gen.add_argument('--rule', required=True, help='bucklin|fallback|plurality (or BV|FV|PV)')
    gen.add_argument('--dist', default='IC', help='IC or TM')
    gen.add_argument('--m', type=int, required=True, help='Registered candidates')
    gen.add_argument('--n', type=int, required=True, help='Registered voters')
    gen.add_argument('--control', required=True, help='Control type, e.g. CCDV or DCroPC')
    gen.add_argument('--tie', help='TE or TP for partition controls')
    gen.add_argument('--seed', type=int, default=0, help='Master seed')
    gen.add_argument('--trial', type=int, default=0, help='Trial index')
    gen.add_argument('--out', help='Output file (default: stdout)')
    gen.set_defaults(handler=cmd_gen)

    experiment = commands.add_parser('experiment', help='Run the Monte-Carlo experiment grid')
    experiment.add_argument('--rules', default='bucklin,fallback,plurality')
    experiment.add_argument('--controls', default='all', help="Comma-separated control names or 'all'")
    experiment.add_argument('--dists', default='IC,TM')
    experiment.add_argument('--m-list', help='Comma-separated candidate counts')
    experiment.add_argument('--n-list', help='Comma-separated voter counts')
    experiment.add_argument('--trials', type=int)
    experiment.add_argument('--timeout-secs', type=float)
    experiment.add_argument('--timeout-policy', choices=[p.value for p in TimeoutPolicy])
    experiment.add_argument('--seed', type=int)
    experiment.add_argument('--jobs', type=int)
    experiment.add_argument('--out', help='Results CSV')
    experiment.add_argument('--allow-non-paper', action='store_true',
                            help='Also run DCAV/DCDV and the plurality voter cells')
    experiment.add_argument('--omit-timings', action='store_true',
                            help='Leave the timing columns empty (byte-reproducible CSV)')
    experiment.set_defaults(handler=cmd_experiment)

    summary = commands.add_parser('summarize', help='Summarize a results CSV')
    summary.add_argument('--in', dest='input', required=True, help='Results CSV')
    summary.add_argument('--out', help='Summary file (default: stdout)')
    summary.add_argument('--tables', action='store_true', help='Append per-case cp/ci/to grids')
    summary.set_defaults(handler=cmd_summarize)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for command-line processing"""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    finally:
        reset_bootstrap()


@handle_errors
def _dispatch(args) -> int:
    get_bootstrap(args.config_dir, log_level='DEBUG' if args.verbose else None)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
