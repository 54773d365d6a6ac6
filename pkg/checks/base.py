"""
Common plumbing for verification checks.

A check has a ``name``, a one-line ``description`` and an ``execute(n)``
method returning a CheckReport. Sweeps over permutations go through
``sweep`` so they can fan out to worker processes.
"""
from concurrent.futures import ProcessPoolExecutor
import time
from typing import Callable, Iterable, List, Sequence, TypeVar

from algebra.errors import AlgebraError
from checks.reports import CheckRecord, CheckReport
from utils.log import log_info, log_warning

T = TypeVar("T")


class Check:
    name = "check"
    description = ""

    def __init__(self, jobs: int = 1):
        self.jobs = jobs

    def records(self, n: int) -> List[CheckRecord]:
        raise NotImplementedError

    def report_class(self):
        return CheckReport

    def execute(self, n: int) -> CheckReport:
        start = time.perf_counter()
        records = self.records(n)
        report = self.report_class()(check=self.name, n=n, records=records)
        report.elapsed_seconds = time.perf_counter() - start
        for record in report.failures():
            log_warning("%s n=%d failed on %s: %s", self.name, n, record.subject, record.detail)
        log_info(
            "%s n=%d: %d/%d passed in %.2fs",
            self.name,
            n,
            report.pass_count,
            report.total,
            report.elapsed_seconds,
        )
        return report


def guarded(subject: str, fn: Callable[[], CheckRecord]) -> CheckRecord:
    """Run one record; an AlgebraError becomes a failed record instead of ending the sweep."""
    try:
        return fn()
    except AlgebraError as e:
        return CheckRecord(subject=subject, passed=False, detail=f"{type(e).__name__}: {e}")


def sweep(worker: Callable[[T], CheckRecord], items: Sequence[T], jobs: int = 1) -> List[CheckRecord]:
    """Apply ``worker`` to every item, in item order regardless of completion order."""
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [_logged(worker(item), i, len(items)) for i, item in enumerate(items, start=1)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map yields in submission order as results arrive
        results = pool.map(worker, items, chunksize=max(1, len(items) // (4 * jobs)))
        return [_logged(record, i, len(items)) for i, record in enumerate(results, start=1)]


def _logged(record: CheckRecord, index: int, total: int) -> CheckRecord:
    log_info("[%d/%d] %s: %s", index, total, record.subject, "pass" if record.passed else "FAIL")
    return record


def subject_of(w: Iterable[int]) -> str:
    return "w=" + ",".join(str(v) for v in w)
