from typing import List

from algebra.toda import verify_kostant
from checks.base import Check
from checks.reports import CheckRecord


class KostantCheck(Check):
    name = "kostant"
    description = "Ψ(g) = n_-^{-1} e n_- equals Φ applied to the Lax matrix, on the nilpotent leaf."

    def records(self, n: int) -> List[CheckRecord]:
        report = verify_kostant(n)
        records = [
            CheckRecord(subject=f"entry ({e.i},{e.j})", passed=e.passed, lhs=e.psi, rhs=e.phi)
            for e in report.entries
        ]
        records.append(CheckRecord(subject="nilpotent", passed=report.nilpotent, detail=f"Ψ(g)^{n} = 0"))
        records.append(CheckRecord(subject="antitriangular", passed=report.antitriangular))
        records.append(CheckRecord(subject="conservation", passed=report.conservation))
        for k, vanishes in enumerate(report.hamiltonians_vanish, start=1):
            records.append(CheckRecord(subject=f"H_{k}", passed=vanishes, detail="Φ(tr L^{k+1}) = 0"))
        return records
