import argparse
import sys
from typing import List, Optional

from dotenv import load_dotenv

from algebra.errors import DegreeCapExceeded, SplitbupError
from handlers.check import register_check
from handlers.omega import register_omega
from handlers.oracle import register_oracle
from handlers.search import register_search_f4
from handlers.sigma import register_sigma
from handlers.verify import register_verify
from utils.config import load_config
from utils.logger import logger, quiet_logger

# Load environment variables
load_dotenv()

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CAP = 2


class CliArgumentParser(argparse.ArgumentParser):
    """Argument errors exit with 1, the code shared by every input error."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog="splitbup",
        description="Divisor sums and bi-unitary perfect polynomials over F_p and F_{p^2}",
    )
    parser.add_argument("--config", help="path to config.json (default: $CONFIG_FILE or ./config.json)")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    # Register handlers
    register_sigma(subparsers)
    register_omega(subparsers)
    register_check(subparsers)
    register_search_f4(subparsers)
    register_verify(subparsers)
    register_oracle(subparsers)
    return parser


def dispatch(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_ERROR

    quiet_logger(args.quiet)
    try:
        config = load_config(args.config).with_overrides(
            output_format=args.format,
            workers=getattr(args, "workers", None),
            degree_cap=getattr(args, "degree_cap", None),
            divisor_cap=getattr(args, "divisor_cap", None),
        )
        return args.handler(args, config)
    except DegreeCapExceeded as e:
        logger.error(f"Cap exceeded: {e}")
        return EXIT_CAP
    except (SplitbupError, ValueError, ZeroDivisionError) as e:
        logger.error(f"Error running {args.command}: {e}")
        return EXIT_ERROR


def main():
    """Start the command line tool."""
    try:
        sys.exit(dispatch())
    except KeyboardInterrupt:
        logger.info("Interrupted, shutting down...")
        sys.exit(130)


if __name__ == "__main__":
    main()
