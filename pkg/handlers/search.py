import argparse

from algebra.divfun import SigmaKind
from handlers.common import emit, output_flags
from jobs.search_f4 import search_f4
from utils.config import CliConfig
from utils.logger import logger


def handle_search_f4(args: argparse.Namespace, config: CliConfig) -> int:
    """Exhaustive F4 search."""
    bound = args.bound if args.bound is not None else config.search_bound
    report = search_f4(bound, args.filter, config.workers, args.function)
    logger.info(f"search-f4 produced {len(report.hits)} hits")
    return emit(config, args, "search-f4", report.to_dict(), report.to_text())


def register_search_f4(subparsers):
    """Register the search-f4 subcommand."""
    parser = subparsers.add_parser("search-f4", parents=[output_flags()],
                                   help="all b.u.p. (or perfect) x^a(x+1)^b(x+a)^c(x+a+1)^d")
    parser.add_argument("--bound", type=int, help="largest exponent tried")
    parser.add_argument("--filter", default="all",
                        help="comma list of all, not-all-odd, all-odd, ibup-only")
    parser.add_argument("--function", choices=[SigmaKind.SIGMA.value, SigmaKind.BIUNITARY.value],
                        default=SigmaKind.BIUNITARY.value, help="s = perfect, s2 = bi-unitary perfect")
    parser.add_argument("--workers", type=int, help="worker processes")
    parser.set_defaults(handler=handle_search_f4)
    logger.debug("Registered 'search-f4' subcommand")
