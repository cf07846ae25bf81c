import argparse

from algebra.bup import classify_bup, is_perfect, is_unitary_perfect
from algebra.notation import parse_splitting
from handlers.common import emit, field_from_args, output_flags
from utils.config import CliConfig
from utils.logger import logger


def handle_check(args: argparse.Namespace, config: CliConfig) -> int:
    """Classify a splitting polynomial."""
    ctx = field_from_args(args, config)
    A = parse_splitting(ctx, args.poly)
    if A.is_constant():
        raise ValueError("check needs a nonconstant polynomial")
    cls = classify_bup(A)
    perfect = is_perfect(A)
    unitary = is_unitary_perfect(A)
    logger.info(f"{A} over {ctx.label}: {cls.label}")

    payload = {"schema": 1, "field": ctx.label, "input": str(A), **cls.to_dict(),
               "perfect": perfect, "unitary_perfect": unitary}
    lines = [
        f"bup: {str(cls.is_bup).lower()}, class: {cls.label}",
        f"perfect: {str(perfect).lower()}",
        f"unitary-perfect: {str(unitary).lower()}",
    ]
    if cls.decomposition:
        lines.append("decomposition: " + " | ".join(str(part) for part in cls.decomposition))
    return emit(config, args, "check", payload, "\n".join(lines))


def register_check(subparsers):
    """Register the check subcommand."""
    parser = subparsers.add_parser("check", parents=[output_flags()], help="b.u.p. class of a splitting polynomial")
    parser.add_argument("--field", help="p[,ext|prime]")
    parser.add_argument("poly", help="product of (x-<elem>)^<exp> factors")
    parser.set_defaults(handler=handle_check)
    logger.debug("Registered 'check' subcommand")
