"""
Type A checks on the affine side: the elements d_i, the special rotations,
the Grassmannian coset criterion, and peeling rectangles off Grassmannian
elements compared with k-Schur rectangle factorization.
"""
from itertools import product
from typing import List

from algebra.affine import (
    ExtAffinePerm,
    affine_identity,
    bounded_partition_of,
    check_d_formulas,
    compose,
    coset_criterion,
    coweight_neg,
    d_element,
    d_word_from_tableau,
    from_perm,
    from_word,
    grassmannian_elements,
    in_coroot_lattice,
    is_antidominant,
    is_grassmannian,
    length,
    omega,
    rectangle_factor_decomposition,
    partition_union,
    rectangles_union,
    rotation_part,
    special_rotation,
    translation,
)
from algebra.kschur import kschur_in_h
from algebra.schubert import permutations
from algebra.symfunc import rect_partition, rect_schur
from checks.base import Check, guarded
from checks.reports import CheckRecord

# Grassmannian elements up to this length are factored
MAX_FACTOR_LENGTH = 8
# coweight entries range over [-COWEIGHT_BOUND, COWEIGHT_BOUND] in the coset sweep
COWEIGHT_BOUND = 2


def d_record(i: int, n: int) -> CheckRecord:
    report = check_d_formulas(i, n)
    d = d_element(i, n)
    t = translation(coweight_neg(omega(i, n)))
    word = d_word_from_tableau(i, n)
    checks = {
        "formulas": report.passed,
        "partition": bounded_partition_of(d) == rect_partition(i, n),
        "tableau_word": from_word(word, n) == d,
        "length": length(d) == i * (n - i) == report.word_length,
        "rotation": compose(special_rotation(rotation_part(t), n), d) == t,
    }
    failed = [name for name, ok in checks.items() if not ok]
    return CheckRecord(
        subject=f"d{i}",
        passed=not failed,
        detail=", ".join(failed),
        lhs=str(d),
        data={"word": word, **checks},
    )


def tau_record(i: int, n: int) -> CheckRecord:
    tau = special_rotation(i, n)
    shift = tuple(j - i for j in range(1, n + 1))
    ok = tau == ExtAffinePerm(shift) and length(tau) == 0 and rotation_part(tau) == i
    return CheckRecord(subject=f"τ{i}", passed=ok, lhs=str(tau))


def antidominant_coroots(n: int) -> List[tuple]:
    return [
        mu
        for mu in product(range(-COWEIGHT_BOUND, COWEIGHT_BOUND + 1), repeat=n)
        if in_coroot_lattice(mu) and is_antidominant(mu)
    ]


def coset_record(n: int) -> CheckRecord:
    mismatches = []
    for w in permutations(n):
        for mu in antidominant_coroots(n):
            if is_grassmannian(compose(from_perm(w), translation(mu))) != coset_criterion(w, mu):
                mismatches.append(f"{list(w)} t{list(mu)}")
    return CheckRecord(subject="coset criterion", passed=not mismatches, detail="; ".join(mismatches[:5]))


def factor_record(y, n: int) -> CheckRecord:
    core, exponents = rectangle_factor_decomposition(y)
    whole = bounded_partition_of(y)
    core_partition = bounded_partition_of(core)
    contract = whole == partition_union(core_partition, rectangles_union(exponents, n))
    product_side = kschur_in_h(core_partition, n)
    for i, e in enumerate(exponents, start=1):
        for _ in range(e):
            product_side = product_side * rect_schur(i, n)
    factorization = kschur_in_h(whole, n) == product_side
    return CheckRecord(
        subject=f"y={y}",
        passed=contract and factorization,
        detail=", ".join(name for name, ok in (("partition contract", contract), ("k-Schur factorization", factorization)) if not ok),
        data={"partition": list(whole), "core": list(core_partition), "exponents": list(exponents)},
    )


class AppendixCheck(Check):
    name = "appendix"
    description = "d_i, τ_i, the Grassmannian coset criterion and rectangle factorization on the affine side."

    def records(self, n: int) -> List[CheckRecord]:
        records = []
        for i in range(1, n):
            records.append(guarded(f"d{i}", lambda i=i: d_record(i, n)))
        for i in range(n):
            records.append(guarded(f"τ{i}", lambda i=i: tau_record(i, n)))
        records.append(guarded("coset criterion", lambda: coset_record(n)))
        levels = grassmannian_elements(n, MAX_FACTOR_LENGTH)
        for ell in range(MAX_FACTOR_LENGTH + 1):
            for y in levels[ell]:
                records.append(guarded(f"y={y}", lambda y=y: factor_record(y, n)))
        records.append(
            CheckRecord(subject="identity", passed=rectangle_factor_decomposition(affine_identity(n))[1] == (0,) * (n - 1))
        )
        return records
