"""
Base class for reproduction checks.
All ledger checks should inherit from this class.
"""
import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Optional, Tuple

logger = logging.getLogger(__name__)


class Status(str, Enum):
    """Outcome of one ledger row."""

    PASS = "pass"
    FAIL = "fail"
    DOCUMENTED_DIVERGENCE = "documented-divergence"


@dataclass
class LedgerEntry:
    """One row of the reproduction ledger."""

    criterion: int
    title: str
    status: Status
    detail: str = ""
    elapsed: float = 0.0
    budget: Optional[float] = None

    @property
    def over_budget(self) -> bool:
        """True when the row ran longer than its time budget."""
        return self.budget is not None and self.elapsed > self.budget

    def as_row(self) -> dict:
        """Row for the CSV and JSON reports."""
        return {
            'criterion': str(self.criterion),
            'title': self.title,
            'status': self.status.value,
            'detail': self.detail,
            'elapsed': f"{self.elapsed:.3f}",
            'budget': '' if self.budget is None else f"{self.budget:g}",
        }


class BaseCheck(ABC):
    """Base class for all ledger checks."""

    def __init__(self, settings: dict, jobs: int = 1) -> None:
        """
        Initialize the check with its ledger section.

        Args:
            settings (dict): The check's section of the ``ledger`` configuration.
            jobs (int): Worker processes available to brute-force scans.
        """
        self.settings = settings
        self.jobs = jobs
        self.entries: List[LedgerEntry] = []

    @abstractmethod
    def run(self) -> List[LedgerEntry]:
        """
        Run the check.

        Returns:
            list: LedgerEntry rows, one per acceptance item or documented divergence.
        """
        pass

    def _record(self, criterion: int, title: str, probe: Callable[[], Tuple[Status, str]],
                budget: Optional[float] = None) -> LedgerEntry:
        """
        Time ``probe`` and append its verdict. A probe that raises is recorded as a fail.
        """
        started = time.perf_counter()
        try:
            status, detail = probe()
        except Exception as e:
            logger.exception(f"Criterion {criterion} ({title}) raised: {str(e)}")
            status, detail = Status.FAIL, f"{type(e).__name__}: {e}"
        entry = LedgerEntry(
            criterion=criterion,
            title=title,
            status=status,
            detail=detail,
            elapsed=time.perf_counter() - started,
            budget=budget,
        )
        if entry.over_budget:
            logger.warning(f"Criterion {criterion} ({title}) took {entry.elapsed:.2f}s, budget {budget}s")
        logger.info(f"Criterion {criterion} ({title}): {entry.status.value}")
        self.entries.append(entry)
        return entry


def verdict(ok: bool, detail: str) -> Tuple[Status, str]:
    """
    Turn a boolean outcome into a probe result.

    Args:
        ok (bool): Whether the probe passed.
        detail (str): Explanation recorded on the row.

    Returns:
        tuple: (Status, detail).
    """
    return (Status.PASS if ok else Status.FAIL), detail
