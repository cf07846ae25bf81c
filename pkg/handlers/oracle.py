import argparse

from algebra.divfun import brute_sigma_star2
from algebra.notation import format_factored, format_poly, parse_factored
from handlers.common import emit, field_from_args, output_flags
from utils.config import CliConfig
from utils.logger import logger


def handle_oracle(args: argparse.Namespace, config: CliConfig) -> int:
    """Brute-force sigma** by enumerating bi-unitary divisors."""
    ctx = field_from_args(args, config)
    A = parse_factored(ctx, args.poly)
    result = brute_sigma_star2(A, config.degree_cap, config.divisor_cap)
    logger.info(f"Enumerated {A.divisor_count()} divisors of {A} over {ctx.label}")
    payload = {
        "schema": 1,
        "field": ctx.label,
        "input": str(A),
        "divisors": A.divisor_count(),
        "result": format_factored(result),
        "dense": format_poly(result),
    }
    return emit(config, args, "oracle", payload, format_factored(result))


def register_oracle(subparsers):
    """Register the oracle subcommand."""
    parser = subparsers.add_parser("oracle", parents=[output_flags()],
                                   help="sigma** by enumerating bi-unitary divisors")
    parser.add_argument("--field", help="p[,ext|prime]")
    parser.add_argument("--degree-cap", type=int, help="refuse inputs of larger degree")
    parser.add_argument("--divisor-cap", type=int, help="refuse inputs with more divisors")
    parser.add_argument("poly", help="factored polynomial")
    parser.set_defaults(handler=handle_oracle)
    logger.debug("Registered 'oracle' subcommand")
