import json
from datetime import datetime
from pathlib import Path
from threading import Lock
from typing import Any, Dict, List, Optional

import pytz

from utils.logger import logger


class ReportStorage:
    """Thread-safe archive of JSON reports, one time-stamped file per saved report."""

    def __init__(self, report_dir: str = "reports", timezone: str = "UTC"):
        self.report_dir = Path(report_dir)
        self.timezone = timezone
        self.lock = Lock()

    def configure(self, report_dir: str, timezone: str):
        """Point the archive at another directory or timezone."""
        with self.lock:
            self.report_dir = Path(report_dir)
            self.timezone = timezone

    def _stamp(self) -> str:
        return datetime.now(pytz.timezone(self.timezone)).strftime("%Y%m%dT%H%M%S%z")

    def save(self, kind: str, payload: Dict[str, Any]) -> Path:
        """Write a report as <report_dir>/<kind>_<stamp>.json and return its path."""
        with self.lock:
            self.report_dir.mkdir(parents=True, exist_ok=True)
            stamp = self._stamp()
            path = self.report_dir / f"{kind}_{stamp}.json"
            counter = 1
            while path.exists():
                path = self.report_dir / f"{kind}_{stamp}_{counter}.json"
                counter += 1
            with open(path, "w", encoding="utf-8") as f:
                json.dump(payload, f, indent=2)
            logger.info(f"Saved {kind} report to {path}")
            return path

    def list_reports(self, kind: Optional[str] = None) -> List[Path]:
        """Saved reports, newest first."""
        with self.lock:
            if not self.report_dir.is_dir():
                return []
            pattern = f"{kind}_*.json" if kind else "*.json"
            paths = list(self.report_dir.glob(pattern))
        return sorted(paths, key=lambda p: (p.stat().st_mtime, p.name), reverse=True)

    def load(self, path: Path) -> Dict[str, Any]:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)


# Global storage instance
report_storage = ReportStorage()
