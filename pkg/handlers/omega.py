import argparse

from algebra.omega import omega_sets, raw_omega_sets
from handlers.common import emit, output_flags
from utils.config import CliConfig
from utils.logger import logger


def handle_omega(args: argparse.Namespace, config: CliConfig) -> int:
    """Dump the Omega sets of an odd prime; JSON unless --format text is given."""
    sets = omega_sets(args.p)
    payload = {"schema": 1, **sets.to_dict()}
    if args.raw:
        omega2, omega3, omega4 = raw_omega_sets(args.p)
        payload["raw"] = {"omega2": sorted(omega2), "omega3": sorted(omega3), "omega4": sorted(omega4)}
    text = None
    if args.format == "text":
        text = "\n".join(f"{key}: {value}" for key, value in payload.items() if key != "schema")
    logger.info(f"Omega for p={args.p}: {sorted(sets.union)}")
    return emit(config, args, "omega", payload, text)


def register_omega(subparsers):
    """Register the omega subcommand."""
    parser = subparsers.add_parser("omega", parents=[output_flags()], help="Omega_1..Omega_4 for an odd prime")
    parser.add_argument("--p", type=int, required=True, help="odd prime")
    parser.add_argument("--raw", action="store_true", help="also list Omega_2..Omega_4 from their definitions")
    parser.set_defaults(handler=handle_omega)
    logger.debug("Registered 'omega' subcommand")
