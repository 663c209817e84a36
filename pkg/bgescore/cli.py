"""
Command-line front end.

Exit codes: 0 ok, 2 parse or usage error, 3 variable-name or dimension
mismatch, 4 invalid prior configuration, 1 any other library error.
Reports go to stdout; logging goes to stderr.
"""
import argparse
import logging
import shlex
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from pydantic import ValidationError

from bgescore.business_logic.config_merger import resolve_config
from bgescore.models.bundle import RunConfig
from bgescore.models.prior import PriorConfig, ScoreMode, prior_from_overrides
from bgescore.models.search_config import McmcConfig
from bgescore.settings import load_config
from bgescore.utils.commands.bias_study_command import BiasStudyCommand
from bgescore.utils.commands.command_invoker import CommandInvoker
from bgescore.utils.commands.compare_command import CompareCommand
from bgescore.utils.commands.mcmc_command import McmcCommand
from bgescore.utils.commands.score_command import ScoreCommand
from bgescore.utils.commands.search_command import SearchCommand
from bgescore.utils.errors import BgeScoreError, ConfigError, UsageError
from bgescore.utils.handlers.file_formats import FileFormatsHandler
from bgescore.utils.interfaces.icommand import ICommand

logger = logging.getLogger(__name__)

MODES = [m.value for m in ScoreMode]


def _float_list(text: str) -> List[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got '{text}'")


def _int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'")


def _add_prior_flags(parser: argparse.ArgumentParser, with_mode: bool = True) -> None:
    group = parser.add_argument_group("prior")
    group.add_argument("--alpha-mu", type=float, help="precision multiplier of the mean (default 1)")
    group.add_argument("--alpha-w", type=float, help="Wishart degrees of freedom (default n + 2)")
    group.add_argument("--t-scale", type=float, help="T = t * I (default from alpha_mu and alpha_w)")
    group.add_argument("--nu", type=_float_list, help="prior mean, one value or one per variable")
    group.add_argument("--rank-one", choices=["alpha_mu", "alpha_w"], dest="rank_one_coefficient_uses",
                       help="alpha used in the rank-one term of R")
    group.add_argument("--hg95-sample-variance", action="store_true", default=None,
                       help="hg95 builds R from S_N / (N - 1)")
    if with_mode:
        group.add_argument("--mode", choices=MODES, help="scoring mode (default bge)")


def _add_data_flags(parser: argparse.ArgumentParser, with_dag: bool) -> None:
    parser.add_argument("--data", type=Path, required=True, help="CSV file with a header row")
    if with_dag:
        parser.add_argument("--dag", type=Path, required=True, help="edge-list DAG file")
    parser.add_argument("--config", type=Path, help="JSON or YAML run configuration")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bgescore", description="BGe scoring and structure learning for Gaussian DAGs")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v INFO, -vv DEBUG on stderr")
    parser.add_argument("--timing", action="store_true", help="include elapsed_seconds in the report")
    sub = parser.add_subparsers(dest="command", required=True)

    score = sub.add_parser("score", help="log score of a DAG")
    _add_data_flags(score, with_dag=True)
    _add_prior_flags(score)
    score.add_argument("--naive", action="store_true", help="difference of subset marginals instead of the simplified form")

    compare = sub.add_parser("compare", help="bge against the legacy hg95 and gh02 scores")
    _add_data_flags(compare, with_dag=True)
    _add_prior_flags(compare, with_mode=False)

    search = sub.add_parser("search", help="hill-climbing structure search")
    _add_data_flags(search, with_dag=False)
    _add_prior_flags(search)
    search.add_argument("--max-parents", type=int)
    search.add_argument("--max-iterations", type=int)
    search.add_argument("--restarts", type=int)
    search.add_argument("--start-edge-prob", type=float)
    search.add_argument("--workers", type=int)
    search.add_argument("--seed", type=int)
    search.add_argument("--start-dag", type=Path, help="edge-list DAG to start the first restart from")
    search.add_argument("--dag-out", type=Path, help="write the best DAG here")
    search.add_argument("--trace-out", type=Path, help="write the line-delimited JSON trace here")

    mcmc = sub.add_parser("mcmc", help="Metropolis-Hastings structure MCMC")
    _add_data_flags(mcmc, with_dag=False)
    _add_prior_flags(mcmc)
    mcmc.add_argument("--iterations", type=int)
    mcmc.add_argument("--burn-in", type=int)
    mcmc.add_argument("--thinning", type=int)
    mcmc.add_argument("--max-parents", type=int)
    mcmc.add_argument("--edge-penalty", type=float, help="per-edge log prior penalty gamma (default uniform prior)")
    mcmc.add_argument("--seed", type=int)
    mcmc.add_argument("--start-dag", type=Path, help="edge-list DAG to start the chain from")
    mcmc.add_argument("--trace-out", type=Path, help="write the line-delimited JSON sample trace here")

    bias = sub.add_parser("bias-study", help="growth of bge - hg95 with N per parent count")
    bias.add_argument("--n", type=int, required=True, help="number of simulated variables")
    bias.add_argument("--parents-max", type=int, required=True)
    bias.add_argument("--sample-sizes", type=_int_list, default=[100, 1000, 10000])
    bias.add_argument("--seed", type=int, default=0)
    _add_prior_flags(bias, with_mode=False)

    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s %(message)s", force=True)


def _prior_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    keys = ("alpha_mu", "alpha_w", "t_scale", "nu", "mode", "rank_one_coefficient_uses", "hg95_sample_variance")
    return {key: getattr(args, key, None) for key in keys}


def resolve_run_config(args: argparse.Namespace) -> RunConfig:
    """Defaults -> config file -> command-line flags."""
    file_config = load_config(args.config) if getattr(args, "config", None) else {}
    cli = {"prior": _prior_overrides(args)}
    if args.command == "search":
        cli["search"] = {key: getattr(args, key) for key in
                         ("max_parents", "max_iterations", "restarts", "start_edge_prob", "workers", "seed")}
    if args.command == "mcmc":
        mcmc = {key: getattr(args, key) for key in ("iterations", "burn_in", "thinning", "max_parents", "seed")}
        if args.edge_penalty is not None:
            mcmc["structure_prior"] = {"kind": "per_edge_penalty", "gamma": args.edge_penalty}
        cli["mcmc"] = mcmc

    merged = resolve_config({"prior": {}, "search": {}, "mcmc": {}}, file_config, [cli])
    try:
        return RunConfig(**merged)
    except ValidationError as e:
        section = e.errors()[0]["loc"][0] if e.errors() else None
        if section == "prior":
            raise ConfigError(f"Invalid prior configuration: {e}") from e
        raise UsageError(f"Invalid settings: {e}") from e


def build_prior(n: int, run_config: RunConfig) -> PriorConfig:
    try:
        return prior_from_overrides(n, **run_config.prior)
    except (TypeError, ValueError) as e:
        # pydantic ValidationError is a ValueError
        raise ConfigError(f"Invalid prior configuration: {e}") from e


def build_command(args: argparse.Namespace, echo: str) -> ICommand:
    run_config = resolve_run_config(args)

    if args.command == "bias-study":
        if args.n < 1 or not 0 <= args.parents_max <= args.n - 1:
            raise UsageError(f"Need n >= 1 and 0 <= parents-max <= n - 1, got n={args.n}, parents-max={args.parents_max}")
        if len(set(args.sample_sizes)) < 2 or min(args.sample_sizes) < 1:
            raise UsageError(f"Need at least two distinct positive sample sizes, got {args.sample_sizes}")
        return BiasStudyCommand(args.n, args.parents_max, args.sample_sizes, args.seed, echo,
                                build_prior(args.n, run_config))

    dataset = FileFormatsHandler.load_dataset(args.data)
    prior = build_prior(dataset.n, run_config)

    if args.command in ("score", "compare"):
        dag = FileFormatsHandler.parse_dag(args.dag, dataset.names)
        if args.command == "score":
            return ScoreCommand(dataset, dag, prior, echo, naive=args.naive)
        return CompareCommand(dataset, dag, prior, echo)

    start = FileFormatsHandler.parse_dag(args.start_dag, dataset.names) if args.start_dag else None
    if args.command == "search":
        return SearchCommand(dataset, prior, run_config.search, echo,
                             dag_out=args.dag_out, trace_out=args.trace_out, start=start)

    mcmc_cfg = run_config.mcmc if run_config.mcmc is not None else McmcConfig()
    return McmcCommand(dataset, prior, mcmc_cfg, echo, trace_out=args.trace_out, start=start)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging(args.verbose)
    echo = shlex.join(argv)
    try:
        command = build_command(args, echo)
        report = CommandInvoker(timing=args.timing).execute_command(command)
    except BgeScoreError as e:
        logger.error("[CLI] %s", e)
        return e.exit_code
    except FileNotFoundError as e:
        logger.error("[CLI] %s", e)
        return 2

    sys.stdout.write(report.to_text())
    return 0
