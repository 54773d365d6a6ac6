from typing import List

from algebra.locring import loc_eq
from algebra.schubert import Perm, elementary_substitution_image, permutations, phi_of_quantum_schubert
from checks.base import Check, guarded, subject_of, sweep
from checks.reports import CheckRecord


def remark_record(w: Perm) -> CheckRecord:
    subject = subject_of(w)

    def run() -> CheckRecord:
        lhs = elementary_substitution_image(w)
        rhs = phi_of_quantum_schubert(w)
        return CheckRecord(subject=subject, passed=loc_eq(lhs, rhs), lhs=str(lhs), rhs=str(rhs), data={"w": list(w)})

    return guarded(subject, run)


class RemarkCheck(Check):
    name = "remark"
    description = "Substituting e_i(m) -> (h_i^⊥ s_{R_m}) / s_{R_m} reproduces Φ of the quantum Schubert polynomial."

    def records(self, n: int) -> List[CheckRecord]:
        return sweep(remark_record, permutations(n), self.jobs)
