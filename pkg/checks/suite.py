# checks/suite.py
from typing import List, Optional, Sequence

from checks.appendix import AppendixCheck
from checks.base import Check
from checks.cyclic import CyclicCheck
from checks.kostant import KostantCheck
from checks.peterson import PetersonCheck
from checks.qschur_image import QSchurImageCheck
from checks.remark import RemarkCheck
from checks.reports import SuiteReport
from checks.theorem import TheoremCheck
from utils.log import log_info


def default_checks(jobs: int = 1, spot: bool = False) -> List[Check]:
    return [
        TheoremCheck(jobs=jobs, spot=spot),
        CyclicCheck(jobs=jobs),
        QSchurImageCheck(jobs=jobs),
        KostantCheck(jobs=jobs),
        AppendixCheck(jobs=jobs),
        PetersonCheck(jobs=jobs),
        RemarkCheck(jobs=jobs),
    ]


class VerifySuite:
    name = "Verify Suite"
    description = "Routes a verification request to every registered check, or to the ones named."

    def __init__(self, checks: Sequence[Check], only: Optional[Sequence[str]] = None):
        self.available_checks = {check.name: check for check in checks}
        if only:
            unknown = [name for name in only if name not in self.available_checks]
            if unknown:
                raise ValueError(
                    f"Invalid check name(s) {', '.join(unknown)}; choose from {', '.join(self.available_checks)}"
                )
            self.selected = [self.available_checks[name] for name in only]
        else:
            self.selected = list(checks)

    def execute(self, n: int) -> SuiteReport:
        log_info("running %d check(s) at n=%d", len(self.selected), n)
        return SuiteReport(n=n, reports=[check.execute(n) for check in self.selected])
