from typing import List, Optional, Sequence

from algebra.affine import lambda_of, lambda_of_via_lemma
from algebra.kschur import kschur_in_h
from algebra.locring import LocElem, loc_eq
from algebra.schubert import Perm, descent_set, permutations, phi_of_quantum_schubert
from checks.base import Check, guarded, subject_of, sweep
from checks.reports import CheckRecord, VerifyReport

# from this rank on, the full S_n sweep is replaced by a spot check
SPOT_CHECK_RANK = 6


def theorem_rhs(w: Perm) -> LocElem:
    """s^{(n-1)}_{λ(w)} / ∏_{i ∈ Des(w)} s_{R_i}."""
    n = len(w)
    des = descent_set(w)
    return LocElem(kschur_in_h(lambda_of(w), n), tuple(1 if i in des else 0 for i in range(1, n)), n)


def theorem_record(w: Perm) -> CheckRecord:
    subject = subject_of(w)

    def run() -> CheckRecord:
        lhs = phi_of_quantum_schubert(w)
        rhs = theorem_rhs(w)
        partition = lambda_of(w)
        lemma = lambda_of_via_lemma(w)
        equal = loc_eq(lhs, rhs)
        detail = "" if equal else "Φ image differs from the k-Schur side"
        if lemma != partition:
            detail = f"λ(w) = {list(partition)} but the lemma window gives {list(lemma)}"
        return CheckRecord(
            subject=subject,
            passed=equal and lemma == partition,
            detail=detail,
            lhs=str(lhs),
            rhs=str(rhs),
            data={"w": list(w), "descents": sorted(descent_set(w)), "partition": list(partition)},
        )

    return guarded(subject, run)


def spot_permutations(n: int) -> List[Perm]:
    """Permutations with w(1) = 1 and w(2) = 4."""
    return [w for w in permutations(n) if w[0] == 1 and w[1] == 4]


class TheoremCheck(Check):
    name = "theorem"
    description = "Φ of every quantum Schubert polynomial against k-Schur over descent rectangles."

    def __init__(self, jobs: int = 1, perms: Optional[Sequence[Perm]] = None, spot: bool = False):
        super().__init__(jobs)
        self.perms = perms
        self.spot = spot

    def report_class(self):
        return VerifyReport

    def targets(self, n: int) -> List[Perm]:
        if self.perms is not None:
            return [tuple(w) for w in self.perms]
        if self.spot or n >= SPOT_CHECK_RANK:
            return spot_permutations(n)
        return permutations(n)

    def records(self, n: int) -> List[CheckRecord]:
        return sweep(theorem_record, self.targets(n), self.jobs)
