import json
from pathlib import Path

import numpy as np
import pytest

from cliffsym import gamma_rep as gr
from cliffsym.clifford import CL13, Multivector, Signature, SignatureError, basis, dagger, mv_mul, star
from cliffsym.lie_sets import EVEN_REAL_ODD_IMAG, W_PATTERN, CliffordSet, exp, sample, sample_subspace, subspace_leak
from cliffsym.serialize import matrix_from_list

from oracles import matrix_rep

GOLDEN = json.loads((Path(__file__).parent / "golden" / "gamma_matrices.json").read_text())
E = lambda name, c=1: Multivector.blade(CL13, name, c)


def random_mv(rng):
    return Multivector(CL13, rng.uniform(-1, 1, 16) + 1j * rng.uniform(-1, 1, 16))


def test_generators_match_golden():
    for a, g in enumerate(gr.MAJORANA.generators):
        assert np.array_equal(g, matrix_from_list(GOLDEN[f"gamma{a}"]))
    assert np.array_equal(gr.J, matrix_from_list(GOLDEN["J"]))


def test_gamma_examples():
    assert np.array_equal(gr.gamma(Multivector.scalar(CL13)), np.eye(4))
    assert np.array_equal(gr.gamma(E("e3")), np.diag([-1j, 1j, 1j, -1j]))
    assert np.array_equal(1j * gr.gamma(E("e0")), gr.J)


def test_gamma_matches_independent_construction():
    rng = np.random.default_rng(0)
    for _ in range(50):
        u = random_mv(rng)
        assert np.allclose(gr.gamma(u), matrix_rep(u.coeffs), atol=1e-14)


def test_gamma_requires_cl13():
    with pytest.raises(SignatureError):
        gr.gamma(Multivector.scalar(Signature(2, 2)))


def test_table_invariants_exact():
    g = gr.MAJORANA.generators
    eta = CL13.eta()
    for a in range(4):
        for b in range(4):
            assert np.array_equal(g[a] @ g[b] + g[b] @ g[a], 2 * eta[a, b] * np.eye(4))
        assert np.array_equal((1j * g[a]).imag, np.zeros((4, 4)))
    assert np.array_equal(gr.hermitian_conjugate(g[0]), g[0])
    for k in (1, 2, 3):
        assert np.array_equal(gr.hermitian_conjugate(g[k]), -g[k])
    flat = gr.MAJORANA.blades.reshape(16, 16)
    assert np.linalg.matrix_rank(flat) == 16


def test_J_properties():
    assert np.array_equal(gr.J @ gr.J, -np.eye(4))
    assert np.array_equal(gr.J.T, -gr.J)
    assert np.array_equal(gr.symplectic_form(4), gr.J)


def test_homomorphism_on_blades():
    for ea in basis(CL13):
        for eb in basis(CL13):
            assert np.array_equal(gr.gamma(mv_mul(ea, eb)), gr.gamma(ea) @ gr.gamma(eb))


def test_homomorphism_random():
    rng = np.random.default_rng(1)
    for _ in range(100):
        u, v = random_mv(rng), random_mv(rng)
        assert gr.matrix_norm(gr.gamma(mv_mul(u, v)) - gr.gamma(u) @ gr.gamma(v)) <= 1e-12


def test_gamma_inverse_examples():
    assert gr.gamma_inverse(np.eye(4)) == Multivector.scalar(CL13)
    assert gr.gamma_inverse(-1j * gr.J) == E("e0")
    rng = np.random.default_rng(2)
    for _ in range(100):
        u = random_mv(rng)
        assert np.max(np.abs(gr.gamma_inverse(gr.gamma(u)).coeffs - u.coeffs)) <= 1e-12


def test_gamma_inverse_dimension():
    with pytest.raises(gr.DimensionError):
        gr.gamma_inverse(np.eye(3))


def test_matrix_star_relation_examples():
    assert np.array_equal(gr.matrix_star_relation(np.eye(4)), np.eye(4))
    m01 = gr.gamma(E("e01"))
    assert np.array_equal(gr.matrix_star_relation(m01), gr.gamma(star(E("e01"))))
    assert np.array_equal(gr.matrix_star_relation(m01), -m01)
    assert np.array_equal(gr.matrix_star_relation(gr.J), -gr.J)
    assert np.array_equal(gr.gamma(star(E("e0", 1j))), -gr.J)
    with pytest.raises(gr.DimensionError):
        gr.matrix_star_relation(np.eye(2))


def test_star_relation_on_real_elements():
    for s in range(200):
        u = sample_subspace(EVEN_REAL_ODD_IMAG, s)
        m = gr.gamma(u)
        assert gr.imag_residual(m) <= 1e-12
        assert gr.matrix_norm(gr.gamma(star(u)) - gr.matrix_star_relation(m)) <= 1e-12


def test_real_matrices_invert_to_real_subspace():
    rng = np.random.default_rng(3)
    for _ in range(200):
        u = gr.gamma_inverse(rng.uniform(-1, 1, (4, 4)))
        assert subspace_leak(u, EVEN_REAL_ODD_IMAG) <= 1e-12


def test_dagger_compatibility():
    rng = np.random.default_rng(4)
    for _ in range(200):
        u = random_mv(rng)
        assert gr.matrix_norm(gr.gamma(dagger(u)) - gr.hermitian_conjugate(gr.gamma(u))) <= 1e-12


def test_w_twisted_anti_hermiticity():
    g0 = gr.MAJORANA.generators[0]
    for s in range(200):
        m = gr.gamma(sample_subspace(W_PATTERN, s))
        assert gr.matrix_norm(gr.hermitian_conjugate(m) @ g0 + g0 @ m) <= 1e-12


# -- matrix utilities --------------------------------------------------------

def test_matrix_utilities():
    assert gr.det(np.eye(4)) == pytest.approx(1)
    assert gr.det(gr.J) == pytest.approx(1, abs=1e-14)
    assert np.array_equal(gr.hermitian_conjugate(gr.GAMMA0), gr.GAMMA0)
    assert np.array_equal(gr.transpose(gr.J), -gr.J)
    assert gr.matrix_norm(np.eye(4)) == 2.0
    with pytest.raises(gr.DimensionError):
        gr.matrix_mul(np.eye(4), np.eye(3))
    with pytest.raises(gr.DimensionError):
        gr.det(np.ones((2, 3)))


# -- group predicates --------------------------------------------------------

def test_symplectic_predicates():
    assert gr.is_symplectic(np.eye(4))
    assert gr.is_symplectic(gr.J)
    assert not gr.is_symplectic(2 * np.eye(4))
    assert not gr.is_symplectic(1j * np.eye(4))  # complex, though it preserves J up to sign
    assert gr.is_sp_algebra(gr.J)
    assert not gr.is_sp_algebra(np.eye(4))
    with pytest.raises(gr.DimensionError):
        gr.is_symplectic(np.eye(3))
    # n = 2 and n = 6 work too
    assert gr.is_symplectic(np.eye(6))
    assert gr.is_sp_algebra(gr.symplectic_form(2))


def test_sp_samples_map_into_sp4():
    for s in range(100):
        assert gr.is_sp_algebra(gr.gamma(sample(CliffordSet.sp, s)), 1e-9)
        assert gr.is_symplectic(gr.gamma(sample(CliffordSet.Sp, s)), 1e-9)


def test_pseudounitary():
    b22 = gr.beta(2, 2)
    assert gr.is_pseudounitary(np.eye(4), b22, special=True)
    assert gr.is_pseudounitary(np.eye(3), gr.beta(1, 2))
    phase = np.diag([np.exp(0.7j), 1, 1, 1])
    assert gr.is_pseudounitary(phase, b22)
    assert not gr.is_pseudounitary(phase, b22, special=True)
    assert not gr.is_pseudounitary(2 * np.eye(4), b22)
    with pytest.raises(gr.DimensionError):
        gr.is_pseudounitary(np.eye(4), gr.beta(1, 2))
    with pytest.raises(ValueError):
        gr.beta(0, 0)


def test_w_group_images_preserve_gamma0():
    for s in range(100):
        m = gr.gamma(exp(sample_subspace(W_PATTERN, s)))
        assert gr.is_pseudounitary(m, gr.GAMMA0, 1e-9)
