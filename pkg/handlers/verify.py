import argparse

from handlers.common import emit, output_flags
from jobs.verify_beard import verify_beard_fp
from jobs.verify_splitbup import verify_splitbup
from utils.config import CliConfig
from utils.logger import logger


def handle_verify_splitbup(args: argparse.Namespace, config: CliConfig) -> int:
    report = verify_splitbup(args.p, args.rmax, config.degree_cap, config.divisor_cap)
    if report.counterexamples:
        logger.warning(f"Counterexamples at r = {report.counterexamples}")
    return emit(config, args, "verify-splitbup", report.to_dict(), report.to_text())


def handle_verify_beard(args: argparse.Namespace, config: CliConfig) -> int:
    report = verify_beard_fp(args.p, args.rmax, config.degree_cap, config.divisor_cap)
    if report.violations:
        logger.warning(f"b.u.p. outside conditions i-iv at r = {report.violations}")
    return emit(config, args, "verify-beard", report.to_dict(), report.to_text())


def _add_cap_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--degree-cap", type=int, help="largest degree handed to the brute-force oracle")
    parser.add_argument("--divisor-cap", type=int, help="largest divisor count handed to the brute-force oracle")


def register_verify(subparsers):
    """Register verify-splitbup and verify-beard."""
    splitbup = subparsers.add_parser("verify-splitbup", parents=[output_flags()],
                                     help="(x^q-x)^(2r) over F_{p^2} against r in Omega")
    splitbup.add_argument("--p", type=int, required=True, help="odd prime")
    splitbup.add_argument("--rmax", type=int, required=True, help="largest r")
    _add_cap_flags(splitbup)
    splitbup.set_defaults(handler=handle_verify_splitbup)

    beard = subparsers.add_parser("verify-beard", parents=[output_flags()],
                                  help="(x^p-x)^r over F_p by brute force against conditions i-iv")
    beard.add_argument("--p", type=int, required=True, help="odd prime")
    beard.add_argument("--rmax", type=int, required=True, help="largest r")
    _add_cap_flags(beard)
    beard.set_defaults(handler=handle_verify_beard)
    logger.debug("Registered 'verify-splitbup' and 'verify-beard' subcommands")
