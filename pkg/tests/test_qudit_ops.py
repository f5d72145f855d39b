import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sun_gates.qudit_ops import decompose, reconstruct, tensor
from sun_gates.sun_algebra import build_generators

complex_scalars = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)


def random_operator(n, seed):
    rng = np.random.default_rng(seed)
    return rng.normal(size=(n * n, n * n)) + 1j * rng.normal(size=(n * n, n * n))


def test_tensor_identity():
    np.testing.assert_array_equal(tensor(np.eye(2), np.eye(2)), np.eye(4))


def test_tensor_matches_index_formula():
    # (sigma_x / 2) (x) I_2, frozen from (A (x) B)[(k*2+l),(i*2+j)] = A_ki B_lj
    half_sx = np.array([[0, 0.5], [0.5, 0]], dtype=complex)
    expected = np.array(
        [
            [0.0, 0.0, 0.5, 0.0],
            [0.0, 0.0, 0.0, 0.5],
            [0.5, 0.0, 0.0, 0.0],
            [0.0, 0.5, 0.0, 0.0],
        ],
        dtype=complex,
    )
    np.testing.assert_allclose(tensor(half_sx, np.eye(2)), expected, atol=1e-15)


@given(scale=complex_scalars)
def test_tensor_is_bilinear(scale):
    a = np.array([[1.0, 2.0], [3.0, 4.0]], dtype=complex)
    b = np.array([[0.0, 1j], [-1j, 5.0]], dtype=complex)
    np.testing.assert_allclose(tensor(scale * a, b), scale * tensor(a, b), atol=1e-9, rtol=1e-12)


def test_tensor_rejects_non_square():
    with pytest.raises(ValueError):
        tensor(np.zeros((2, 3)), np.eye(2))
    with pytest.raises(ValueError):
        tensor(np.eye(2), np.zeros((3, 2)))


def test_decompose_identity():
    gens = build_generators(3)
    dec = decompose(np.eye(9, dtype=complex), gens)
    assert abs(dec.scalar - 1.0) < 1e-14
    assert np.abs(dec.left).max() < 1e-14
    assert np.abs(dec.right).max() < 1e-14
    assert np.abs(dec.corr).max() < 1e-14


def test_decompose_picks_out_single_correlation():
    gens = build_generators(2)
    op = tensor(gens[0], gens[1])
    dec = decompose(op, gens)
    expected = np.zeros((3, 3), dtype=complex)
    expected[0, 1] = 1.0
    assert abs(dec.scalar) < 1e-14
    assert np.abs(dec.left).max() < 1e-14
    assert np.abs(dec.right).max() < 1e-14
    np.testing.assert_allclose(dec.corr, expected, atol=1e-14)


def test_reconstruct_trivial_coefficients():
    gens = build_generators(2)
    zero = decompose(np.zeros((4, 4), dtype=complex), gens)
    np.testing.assert_allclose(reconstruct(zero, gens), np.zeros((4, 4)), atol=1e-15)
    unit = decompose(np.eye(4, dtype=complex), gens)
    np.testing.assert_allclose(reconstruct(unit, gens), np.eye(4), atol=1e-14)


def test_round_trip_through_swap():
    gens = build_generators(2)
    swap = np.zeros((4, 4), dtype=complex)
    for i in range(2):
        for j in range(2):
            swap[i * 2 + j, j * 2 + i] = 1.0
    np.testing.assert_allclose(reconstruct(decompose(swap, gens), gens), swap, atol=1e-12)


@pytest.mark.parametrize("n", range(2, 7))
def test_round_trip_random_operators(n):
    gens = build_generators(n)
    for sample in range(100):
        op = random_operator(n, seed=1000 * n + sample)
        rebuilt = reconstruct(decompose(op, gens), gens)
        assert np.abs(rebuilt - op).max() <= 1e-10


@pytest.mark.parametrize("n", range(2, 7))
def test_round_trip_on_coefficient_space(n):
    # decompose(reconstruct(.)) is the identity on coefficients
    gens = build_generators(n)
    for sample in range(100):
        dec = decompose(random_operator(n, seed=500 * n + sample), gens)
        rebuilt = decompose(reconstruct(dec, gens), gens)
        assert abs(rebuilt.scalar - dec.scalar) <= 1e-10
        assert np.abs(rebuilt.left - dec.left).max() <= 1e-10
        assert np.abs(rebuilt.right - dec.right).max() <= 1e-10
        assert np.abs(rebuilt.corr - dec.corr).max() <= 1e-10


@given(u=complex_scalars, v=complex_scalars)
def test_decompose_is_linear(u, v):
    gens = build_generators(2)
    op1 = random_operator(2, seed=11)
    op2 = random_operator(2, seed=13)
    combo = decompose(u * op1 + v * op2, gens)
    d1 = decompose(op1, gens)
    d2 = decompose(op2, gens)
    tol = 1e-8 * (1 + abs(u) + abs(v))
    assert abs(combo.scalar - (u * d1.scalar + v * d2.scalar)) <= tol
    assert np.abs(combo.left - (u * d1.left + v * d2.left)).max() <= tol
    assert np.abs(combo.right - (u * d1.right + v * d2.right)).max() <= tol
    assert np.abs(combo.corr - (u * d1.corr + v * d2.corr)).max() <= tol


@pytest.mark.parametrize("n", [2, 3, 5])
def test_hermitian_operators_give_real_coefficients(n):
    # every basis element is Hermitian, so a Hermitian operator has real
    # coefficients throughout (corr included; it need not be symmetric)
    gens = build_generators(n)
    op = random_operator(n, seed=3 * n)
    op = op + op.conj().T
    dec = decompose(op, gens)
    assert abs(dec.scalar.imag) <= 1e-12
    assert np.abs(dec.left.imag).max() <= 1e-12
    assert np.abs(dec.right.imag).max() <= 1e-12
    assert np.abs(dec.corr.imag).max() <= 1e-12


def test_dimension_mismatch_raises():
    gens = build_generators(3)
    with pytest.raises(ValueError):
        decompose(np.eye(4, dtype=complex), gens)
    dec = decompose(np.eye(4, dtype=complex), build_generators(2))
    with pytest.raises(ValueError):
        reconstruct(dec, gens)
