from typing import List, Tuple

from algebra.locring import loc_eq, over_rect, phi
from algebra.schubert import dual_partition, grassmannian_perm, quantum_schubert, quantum_schur
from algebra.symfunc import Partition, conjugate, partitions_of, rect_partition, schur_to_h, skew_schur_to_h
from checks.base import Check, guarded, sweep
from checks.reports import CheckRecord


def shapes(n: int) -> List[Tuple[Partition, int, int]]:
    """Every (λ, m) with λ inside the m x (n - m) box."""
    out = []
    for m in range(1, n):
        for total in range(m * (n - m) + 1):
            for la in partitions_of(total, max_part=n - m, max_len=m):
                out.append((la, m, n))
    return out


def qschur_record(item: Tuple[Partition, int, int]) -> CheckRecord:
    la, m, n = item
    subject = f"λ={list(la)} m={m}"

    def run() -> CheckRecord:
        qschur = quantum_schur(la, m, n)
        lhs = phi(qschur)
        perp_form = over_rect(skew_schur_to_h(rect_partition(m, n), conjugate(la), n), m)
        dual_form = over_rect(schur_to_h(dual_partition(la, m, n), n), m)
        grassmannian = qschur == quantum_schubert(grassmannian_perm(la, m, n))
        checks = {
            "perp_form": loc_eq(lhs, perp_form),
            "dual_form": loc_eq(lhs, dual_form),
            "grassmannian_perm": grassmannian,
        }
        failed = [name for name, ok in checks.items() if not ok]
        return CheckRecord(
            subject=subject,
            passed=not failed,
            detail=", ".join(failed),
            lhs=str(lhs),
            rhs=str(dual_form),
            data=checks,
        )

    return guarded(subject, run)


class QSchurImageCheck(Check):
    name = "qschur-image"
    description = "Φ of quantum Schur functions in both the skewed-rectangle and complement forms."

    def records(self, n: int) -> List[CheckRecord]:
        return sweep(qschur_record, shapes(n), self.jobs)
