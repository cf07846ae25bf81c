import argparse

from algebra.divfun import SigmaKind, sigma_map
from algebra.notation import format_factored, format_poly, parse_factored
from handlers.common import emit, field_from_args, output_flags
from utils.config import CliConfig
from utils.logger import logger


def handle_sigma(args: argparse.Namespace, config: CliConfig) -> int:
    """sigma / sigma* / sigma** of a factored polynomial."""
    ctx = field_from_args(args, config)
    which = SigmaKind(args.which)
    A = parse_factored(ctx, args.poly)
    result = sigma_map(A, which)
    logger.info(f"Computed {which.symbol} of {A} over {ctx.label}")
    payload = {
        "schema": 1,
        "field": ctx.label,
        "which": which.value,
        "input": str(A),
        "result": format_factored(result),
        "dense": format_poly(result),
    }
    return emit(config, args, "sigma", payload, format_factored(result))


def register_sigma(subparsers):
    """Register the sigma subcommand."""
    parser = subparsers.add_parser(
        "sigma", parents=[output_flags()], help="sigma, sigma* or sigma** of a factored polynomial"
    )
    parser.add_argument("--which", choices=[k.value for k in SigmaKind], default=SigmaKind.BIUNITARY.value,
                        help="s = sigma, s1 = sigma*, s2 = sigma**")
    parser.add_argument("--field", help="p[,ext|prime]")
    parser.add_argument("poly", help="factored polynomial, e.g. \"(x-0)^4\"")
    parser.set_defaults(handler=handle_sigma)
    logger.debug("Registered 'sigma' subcommand")
