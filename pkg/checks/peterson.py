from typing import List

from algebra.affine import alpha, coweight_add, omega
from algebra.locring import loc_eq, loc_mul, phi_prime_q, q_image, rect_inverse
from algebra.schubert import phi_of_quantum_schubert, w0_omega
from checks.base import Check, guarded
from checks.reports import CheckRecord


class PetersonCheck(Check):
    name = "peterson"
    description = "q_{ω_i} classes map to 1/s_{R_i}, and the coweight substitution agrees with Φ on q."

    def records(self, n: int) -> List[CheckRecord]:
        records = []
        for i in range(1, n):
            records.append(guarded(f"σ^(w0^ω{i})", lambda i=i: self._fundamental(i, n)))
            records.append(guarded(f"q{i}", lambda i=i: self._simple_coroot(i, n)))
        for i in range(1, n):
            for j in range(i, n):
                records.append(guarded(f"q(ω{i}+ω{j})", lambda i=i, j=j: self._additive(i, j, n)))
        return records

    @staticmethod
    def _fundamental(i: int, n: int) -> CheckRecord:
        lhs = phi_of_quantum_schubert(w0_omega(i, n))
        rhs = rect_inverse(i, n)
        return CheckRecord(subject=f"σ^(w0^ω{i})", passed=loc_eq(lhs, rhs), lhs=str(lhs), rhs=str(rhs))

    @staticmethod
    def _simple_coroot(i: int, n: int) -> CheckRecord:
        lhs = phi_prime_q(alpha(i, n), n)
        rhs = q_image(i, n)
        return CheckRecord(subject=f"q{i}", passed=loc_eq(lhs, rhs), lhs=str(lhs), rhs=str(rhs))

    @staticmethod
    def _additive(i: int, j: int, n: int) -> CheckRecord:
        lhs = phi_prime_q(coweight_add(omega(i, n), omega(j, n)), n)
        rhs = loc_mul(phi_prime_q(omega(i, n), n), phi_prime_q(omega(j, n), n))
        return CheckRecord(subject=f"q(ω{i}+ω{j})", passed=loc_eq(lhs, rhs), lhs=str(lhs), rhs=str(rhs))
