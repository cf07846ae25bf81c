import argparse
import json
from typing import Any, Dict, Optional

from algebra.field import FieldCtx
from algebra.notation import parse_field
from utils.config import OUTPUT_FORMATS, CliConfig
from utils.logger import logger
from utils.storage import report_storage


def output_flags() -> argparse.ArgumentParser:
    """Flags every subcommand accepts."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=OUTPUT_FORMATS, help="report format on stdout")
    parent.add_argument("--save", action="store_true", help="also archive the JSON report")
    parent.add_argument("--quiet", action="store_true", help="log warnings and errors only")
    return parent


def field_from_args(args: argparse.Namespace, config: CliConfig) -> FieldCtx:
    """--field p[,ext|prime], falling back to the configured field."""
    spec = getattr(args, "field", None) or f"{config.p},{config.ext.value}"
    return parse_field(spec, default_ext=config.ext)


def emit(config: CliConfig, args: argparse.Namespace, kind: str,
         payload: Dict[str, Any], text: Optional[str] = None) -> int:
    """Print the report in the configured format and archive it when --save is given."""
    if config.output_format == "json" or text is None:
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    if getattr(args, "save", False):
        report_storage.configure(config.report_dir, config.timezone)
        path = report_storage.save(kind, payload)
        logger.info(f"Report archived at {path}")
    return 0
