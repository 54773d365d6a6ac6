from typing import List

from algebra.affine import lambda_of
from algebra.locring import LocElem, loc_eq, loc_mul
from algebra.schubert import Perm, inverse, permutations, phi_of_quantum_schubert, prime
from algebra.symfunc import rect_schur
from checks.base import Check, guarded, subject_of, sweep
from checks.reports import CheckRecord


def cyclic_factor(w: Perm) -> LocElem:
    """s_{R_{a-1}} / s_{R_a} with a = w^{-1}(1)."""
    n = len(w)
    a = inverse(w)[0]
    den = tuple(1 if i == a else 0 for i in range(1, n))
    return LocElem(rect_schur(a - 1, n), den, n)


def cyclic_record(w: Perm) -> CheckRecord:
    subject = subject_of(w)

    def run() -> CheckRecord:
        shifted = prime(w)
        lhs = phi_of_quantum_schubert(shifted)
        rhs = loc_mul(phi_of_quantum_schubert(w), cyclic_factor(w))
        same_partition = lambda_of(shifted) == lambda_of(w)
        equal = loc_eq(lhs, rhs)
        detail = ""
        if not equal:
            detail = "Φ(σ^{w'}) differs from Φ(σ^w) times the rectangle ratio"
        elif not same_partition:
            detail = f"λ(w') = {list(lambda_of(shifted))} but λ(w) = {list(lambda_of(w))}"
        return CheckRecord(
            subject=subject,
            passed=equal and same_partition,
            detail=detail,
            lhs=str(lhs),
            rhs=str(rhs),
            data={"w": list(w), "w_prime": list(shifted)},
        )

    return guarded(subject, run)


class CyclicCheck(Check):
    name = "cyclic"
    description = "Cyclic shift w -> w' multiplies the Φ image by a ratio of rectangles and keeps λ(w)."

    def records(self, n: int) -> List[CheckRecord]:
        return sweep(cyclic_record, permutations(n), self.jobs)
