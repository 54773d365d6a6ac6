import pytest

from algebra.locring import loc_eq, loc_from_poly, loc_one, phi
from algebra.polyring import XQ, parse
from algebra.symfunc import h
from algebra.toda import (
    antitriangular_check,
    conservation_check,
    hamiltonians,
    lax_lower,
    is_zero_matrix,
    lax_matrix,
    mat_eq,
    mat_identity,
    mat_mul,
    mat_pow,
    n_minus_closed_form,
    n_minus_inverse_closed_form,
    phi_of_lax,
    principal_nilpotent,
    psi,
    render_hamiltonian,
    toeplitz_g,
    verify_kostant,
)


def test_lax_matrix_shape():
    rows = lax_matrix(3).to_list()
    alphabet = XQ(3)
    assert rows[0][0] == alphabet.gen("x1")
    assert rows[0][1] == -alphabet.ring.one
    assert rows[1][0] == alphabet.gen("q1")
    assert rows[0][2] == alphabet.ring.zero


def test_first_hamiltonian_at_rank_two():
    first = hamiltonians(2)[0]
    assert first.k == 1 and first.divisor == 2
    assert first.trace == parse("x1^2 + x2^2 - 2*q1", XQ(2))
    assert render_hamiltonian(first) == "H_1 = (x1^2 + x2^2 - 2*q1) / 2"


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hamiltonians_vanish_under_phi(n):
    for ham in hamiltonians(n):
        assert phi(ham.trace).is_zero()


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_conservation(n):
    assert conservation_check(n)


def test_principal_nilpotent_is_nilpotent():
    e = principal_nilpotent(4)
    assert not is_zero_matrix(mat_pow(e, 3))
    assert is_zero_matrix(mat_pow(e, 4))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_closed_form_inverse(n):
    product = mat_mul(n_minus_closed_form(n), n_minus_inverse_closed_form(n))
    assert mat_eq(product, mat_identity(n))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_antitriangular(n):
    assert antitriangular_check(n)


def test_psi_matches_phi_of_lax_at_rank_three():
    left, right = psi(3), phi_of_lax(3)
    for i in range(3):
        for j in range(3):
            assert loc_eq(left[i][j], right[i][j])


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_verify_kostant(n):
    report = verify_kostant(n)
    assert report.passed
    assert len(report.entries) == n * n
    assert len(report.hamiltonians_vanish) == n


def test_lax_lower_keeps_the_subdiagonal():
    alphabet = XQ(3)
    lower = lax_lower(3).to_list()
    assert lower[1][0] == alphabet.gen("q1")
    assert lower[2][1] == alphabet.gen("q2")
    assert all(lower[i][j] == alphabet.ring.zero for i in range(3) for j in range(3) if i <= j)


def test_toeplitz_g():
    g = toeplitz_g(3)
    assert all(loc_eq(g[i][i], loc_one(3)) for i in range(3))
    assert loc_eq(g[0][1], loc_from_poly(h(1, 3)))
    assert loc_eq(g[0][2], loc_from_poly(h(2, 3)))
    assert g[2][0].is_zero()
