import json
import os
from dataclasses import asdict, dataclass, replace
from typing import Any, Dict, Optional

import pytz
from dotenv import load_dotenv

from algebra.field import FieldExt
from utils.logger import logger

OUTPUT_FORMATS = ("text", "json")

# config.json key -> CliConfig field
_JSON_KEYS = {
    "p": "p",
    "ext": "ext",
    "degreeCap": "degree_cap",
    "divisorCap": "divisor_cap",
    "searchBound": "search_bound",
    "outputFormat": "output_format",
    "workers": "workers",
    "reportDir": "report_dir",
    "timezone": "timezone",
}

# environment variable -> CliConfig field
_ENV_KEYS = {
    "SPLITBUP_WORKERS": "workers",
    "SPLITBUP_DEGREE_CAP": "degree_cap",
    "SPLITBUP_DIVISOR_CAP": "divisor_cap",
    "SPLITBUP_SEARCH_BOUND": "search_bound",
    "SPLITBUP_FORMAT": "output_format",
    "REPORT_DIR": "report_dir",
    "TIMEZONE": "timezone",
}

_INT_FIELDS = {"p", "degree_cap", "divisor_cap", "search_bound", "workers"}


@dataclass(frozen=True)
class CliConfig:
    """Settings shared by every subcommand."""

    p: int = 2
    ext: FieldExt = FieldExt.QUADRATIC
    degree_cap: int = 64
    divisor_cap: int = 200_000
    search_bound: int = 23
    output_format: str = "text"
    workers: int = 1
    report_dir: str = "reports"
    timezone: str = "UTC"

    def __post_init__(self):
        object.__setattr__(self, "ext", FieldExt(self.ext))
        for name in ("degree_cap", "divisor_cap", "search_bound", "workers"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"output format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")
        if self.timezone not in pytz.all_timezones_set:
            raise ValueError(f"unknown timezone {self.timezone!r}")

    def with_overrides(self, **overrides: Any) -> "CliConfig":
        """Copy with every non-None override applied (command-line flags)."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["ext"] = self.ext.value
        return data


def _coerce(name: str, value: Any) -> Any:
    if name in _INT_FIELDS:
        try:
            return int(value)
        except (TypeError, ValueError) as e:
            raise ValueError(f"{name} must be an integer, got {value!r}") from e
    return value


def load_config(path: Optional[str] = None) -> CliConfig:
    """Load configuration from JSON file, then environment overrides."""
    load_dotenv()
    config_file = path or os.getenv("CONFIG_FILE", "config.json")
    values: Dict[str, Any] = {}

    try:
        with open(config_file, "r", encoding="utf-8") as f:
            raw = json.load(f)
    except FileNotFoundError:
        logger.warning(f"Config file {config_file} not found, using defaults")
        raw = {}
    except json.JSONDecodeError as e:
        raise ValueError(f"Config file {config_file} is not valid JSON: {e}") from e

    for key, value in raw.items():
        if key in _JSON_KEYS:
            values[_JSON_KEYS[key]] = _coerce(_JSON_KEYS[key], value)
        else:
            logger.warning(f"Ignoring unknown config key {key!r}")

    for env_name, name in _ENV_KEYS.items():
        value = os.getenv(env_name)
        if value:
            values[name] = _coerce(name, value)

    return CliConfig(**values)
