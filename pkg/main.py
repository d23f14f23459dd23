"""__________________RIEMANNIAN VQE LABORATORY__________________"""

"""
# File: main.py
# Creation date: 19-10-2026
# Python v3.12.1
"""

# IMPORT THE NECESSARY PACKAGES
import argparse
import logging
import sys
from typing import Optional
from typing import Sequence

from analysis import experiments
from checks import check_config
from checks.exceptions import ConfigError
from checks.exceptions import NumericError
from preparation import read_user_config
from preparation import utility


logger = logging.getLogger(__name__)

COMMANDS = {
    "convergence": experiments.cmd_convergence,
    "init-sweep": experiments.cmd_init_sweep,
    "shots": experiments.cmd_shots,
    "landscape": experiments.cmd_landscape,
    "decompose": experiments.cmd_decompose,
}

HELP = {
    "convergence": "objective gap per iteration of product-unitary RGD for several depths",
    "init-sweep": "initialization gap and its bound over a grid of rotation widths",
    "shots": "estimation error of uniform and adaptive shot allocation",
    "landscape": "critical points of the single-unitary objective",
    "decompose": "Pauli decomposition of a matrix file",
}


def build_parser() -> argparse.ArgumentParser:
    """Command line parser with one subparser per subcommand."""
    parser = argparse.ArgumentParser(
        prog="main.py", description="Ansatz-free VQE on the unitary group."
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    for name in COMMANDS:
        sub = subparsers.add_parser(name, help=HELP[name])
        sub.add_argument("--config", help="yaml file with settings overriding the defaults")
        sub.add_argument("--seed", type=int, help="base seed (unsigned 64-bit)")
        sub.add_argument("--trials", type=int, help="trials per sweep point")
        sub.add_argument("--threads", type=int, help="worker processes for the trials")
        sub.add_argument("--out", dest="output", help="output file")
        sub.add_argument(
            "--set",
            dest="overrides",
            action="append",
            default=[],
            metavar="KEY=VALUE",
            help="override any setting, may be repeated",
        )
        sub.add_argument(
            "--allow-large", action="store_true", help="lift the qubit count cap"
        )
    return parser


def collect_overrides(args: argparse.Namespace) -> dict:
    """Settings given on the command line; explicit flags win over --set."""
    overrides = dict(read_user_config.parse_override(item) for item in args.overrides)
    for key in ("seed", "trials", "threads", "output"):
        value = getattr(args, key)
        if value is not None:
            overrides[key] = value
    return overrides


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Runs one subcommand.

    Args:
        argv (Sequence[str], optional): arguments without the program name.

    Returns:
        int: 0 on success; configuration errors exit with 2 and numerical errors with 3.
    """
    args = build_parser().parse_args(argv)
    check_config.setup_logging()
    try:
        cfg = check_config.build_experiment_config(
            args.subcommand, args.config, collect_overrides(args), args.allow_large
        )
        COMMANDS[args.subcommand](cfg)
    except (ConfigError, OSError) as e:
        logger.error(f"Configuration error: {e}")
        utility.stop_script(2)
    except NumericError as e:
        logger.error(f"Numerical error: {e}")
        utility.stop_script(3)
    logger.info(f"Subcommand '{args.subcommand}' finished.")
    return 0


if __name__ == "__main__":
    sys.exit(main())
