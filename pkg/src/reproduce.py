"""
Reproduction driver.
Coordinates the ledger checks and reports the pass/fail table.
"""
import os
import json
import logging
import pandas as pd
from datetime import datetime
from importlib import import_module
from typing import List, Optional

from jinja2 import Environment, FileSystemLoader

from src.ledger.base import LedgerEntry, Status

logger = logging.getLogger(__name__)

TEMPLATE_DIR = os.path.join(os.path.dirname(__file__), "templates")


def _check_class_name(name: str) -> str:
    return "".join(part.capitalize() for part in name.split("_")) + "Check"


class ReproductionAgent:
    """Runs every enabled ledger check and collects the entries."""

    def __init__(self, config: dict) -> None:
        """
        Initialize the agent.

        Args:
            config (dict): Validated configuration with ``ledger``, ``search`` and
                ``output`` sections.
        """
        self.config = config
        self.output = config['output']
        self.jobs = config['search'].get('jobs', 1)
        self.checks = {}
        self.load_errors = []
        self._load_checks()

    def _load_checks(self) -> None:
        """Load and initialize the ledger checks named in the configuration."""
        for check_name, settings in self.config['ledger'].items():
            if not settings.get('enabled', False):
                logger.info(f"Check {check_name} is disabled, skipping")
                continue

            try:
                check_module = import_module(f"src.ledger.{check_name}")
                check_class = getattr(check_module, _check_class_name(check_name))
                self.checks[check_name] = check_class(settings, jobs=self.jobs)
                logger.info(f"Loaded check: {check_name}")

            except (ImportError, AttributeError) as e:
                logger.error(f"Failed to load check {check_name}: {str(e)}")
                self.load_errors.append((check_name, str(e)))

    def run(self) -> List[LedgerEntry]:
        """
        Run all loaded checks.

        Returns:
            list: LedgerEntry rows sorted by criterion.
        """
        entries = [
            LedgerEntry(criterion=0, title=f"load check {name}", status=Status.FAIL, detail=error)
            for name, error in self.load_errors
        ]

        for check_name, check in self.checks.items():
            try:
                logger.info(f"Running check {check_name}")
                entries.extend(check.run())
            except Exception as e:
                logger.exception(f"Check {check_name} aborted: {str(e)}")
                entries.append(LedgerEntry(
                    criterion=0, title=f"check {check_name}", status=Status.FAIL,
                    detail=f"{type(e).__name__}: {e}",
                ))

        entries.sort(key=lambda entry: entry.criterion)
        return entries

    def save_results(self, entries: List[LedgerEntry],
                     timestamp: Optional[str] = None) -> List[str]:
        """
        Save ledger entries to CSV and JSON files in the reports directory.

        Args:
            entries (list): LedgerEntry rows.
            timestamp (str, optional): Timestamp to include in the filenames.

        Returns:
            list: Paths written.
        """
        if not entries:
            logger.warning("No ledger entries to save")
            return []

        if timestamp is None:
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")

        reports_dir = self.output.get('reports_dir', 'reports')
        os.makedirs(reports_dir, exist_ok=True)
        rows = [entry.as_row() for entry in entries]
        written = []

        csv_path = os.path.join(reports_dir, f"ledger_{timestamp}.csv")
        try:
            pd.DataFrame(rows).to_csv(csv_path, index=False)
            logger.info(f"Saved {len(rows)} ledger entries to {csv_path}")
            written.append(csv_path)
        except Exception as e:
            logger.error(f"Error saving ledger to CSV: {str(e)}")

        json_path = os.path.join(reports_dir, f"ledger_{timestamp}.json")
        try:
            with open(json_path, 'w') as f:
                json.dump(rows, f, indent=4)
            logger.info(f"Saved {len(rows)} ledger entries to {json_path}")
            written.append(json_path)
        except Exception as e:
            logger.error(f"Error saving ledger to JSON: {str(e)}")

        return written

    def display_summary(self, entries: List[LedgerEntry]) -> str:
        """
        Render the pass/fail table.

        Args:
            entries (list): LedgerEntry rows.

        Returns:
            str: The rendered table.
        """
        counts = {status.value: 0 for status in Status}
        for entry in entries:
            counts[entry.status.value] += 1
        environment = Environment(loader=FileSystemLoader(TEMPLATE_DIR), keep_trailing_newline=True)
        return environment.get_template("ledger.jinja").render(entries=entries, counts=counts)

    @staticmethod
    def succeeded(entries: List[LedgerEntry]) -> bool:
        """True when no entry failed; documented divergences do not count as failures."""
        return all(entry.status is not Status.FAIL for entry in entries)
