import numpy as np
import pytest

from sun_gates.sun_algebra import (
    GeneratorSet,
    build_generators,
    hermiticity_deviation,
    orthonormality_deviation,
    structure_constants,
    tracelessness_deviation,
    verify_completeness,
)

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def test_su2_generators_are_half_paulis():
    gens = build_generators(2)
    assert len(gens) == 3
    np.testing.assert_allclose(gens[0], SIGMA_X / 2, atol=1e-15)
    np.testing.assert_allclose(gens[1], SIGMA_Y / 2, atol=1e-15)
    np.testing.assert_allclose(gens[2], SIGMA_Z / 2, atol=1e-15)


def test_su3_count_and_normalization():
    gens = build_generators(3)
    assert len(gens) == 8
    for t in gens:
        assert abs(np.trace(t @ t) - 0.5) < 1e-12


def test_su4_pairwise_trace_orthogonality():
    # loop over all 15^2 pairs with a freshly computed trace
    gens = build_generators(4)
    assert len(gens) == 15
    for a, ta in enumerate(gens):
        for b, tb in enumerate(gens):
            expected = 0.5 if a == b else 0.0
            assert abs(np.trace(ta @ tb) - expected) < 1e-12


@pytest.mark.parametrize("n", range(2, 9))
def test_generator_invariants(n):
    gens = build_generators(n)
    assert len(gens) == n * n - 1
    assert hermiticity_deviation(gens) <= 1e-12
    assert tracelessness_deviation(gens) <= 1e-12
    assert orthonormality_deviation(gens) <= 1e-12


@pytest.mark.parametrize("n", [1, 0, -3])
def test_rejects_dimension_below_two(n):
    with pytest.raises(ValueError):
        build_generators(n)


def test_su2_structure_constants_are_levi_civita():
    eps = np.zeros((3, 3, 3))
    for i, j, k in [(0, 1, 2), (1, 2, 0), (2, 0, 1)]:
        eps[i, j, k] = 1.0
        eps[j, i, k] = -1.0
    f = structure_constants(build_generators(2)).f
    np.testing.assert_allclose(f, eps, atol=1e-14)


def test_su3_structure_constant_values():
    # with the sym/anti/diag ordering, [T^1, T^2] = (i/2) T^6, so f_126 = 1/2
    # (hand computation from the basis matrices); f_123 vanishes
    f = structure_constants(build_generators(3)).f
    assert abs(f[0, 1, 5] - 0.5) < 1e-14
    assert abs(f[0, 1, 2]) < 1e-14
    assert abs(f[0, 0, 7]) < 1e-14  # repeated index, forced by antisymmetry


@pytest.mark.parametrize("n", range(2, 6))
def test_structure_constants_totally_antisymmetric(n):
    f = structure_constants(build_generators(n)).f
    assert np.abs(f + f.transpose(1, 0, 2)).max() <= 1e-12
    assert np.abs(f + f.transpose(0, 2, 1)).max() <= 1e-12
    assert np.abs(f - f.transpose(2, 0, 1)).max() <= 1e-12


@pytest.mark.parametrize("n", range(2, 6))
def test_structure_constants_reproduce_commutators(n):
    gens = build_generators(n)
    f = structure_constants(gens).f
    t = gens.generators
    comm = np.einsum("aij,bjk->abik", t, t) - np.einsum("bij,ajk->abik", t, t)
    rebuilt = 1j * np.einsum("abc,cik->abik", f, t)
    assert np.abs(comm - rebuilt).max() <= 1e-12


@pytest.mark.parametrize("n", range(2, 6))
def test_jacobi_identity(n):
    f = structure_constants(build_generators(n)).f
    jac = (
        np.einsum("ade,bcd->abce", f, f)
        + np.einsum("bde,cad->abce", f, f)
        + np.einsum("cde,abd->abce", f, f)
    )
    assert np.abs(jac).max() <= 1e-10


def test_structure_constants_reject_broken_generator_set():
    # a non-Hermitian third matrix leaks imaginary parts into f
    mats = np.array([SIGMA_X / 2, SIGMA_Y / 2, (1 + 0.3j) * SIGMA_Z / 2])
    broken = GeneratorSet(n=2, generators=mats)
    with pytest.raises(ValueError, match="imaginary"):
        structure_constants(broken)


@pytest.mark.parametrize("n", [2, 3])
def test_completeness_explicit_index_loop(n):
    # exhaustive loop over all (i, j, k, l) tuples, independent of the
    # vectorized check
    gens = build_generators(n)
    worst = 0.0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    lhs = sum(t[i, j] * t[k, l] for t in gens)
                    rhs = 0.5 * ((i == l) * (j == k) - (i == j) * (k == l) / n)
                    worst = max(worst, abs(lhs - rhs))
    assert worst <= 1e-12
    report = verify_completeness(gens, tolerance=1e-12)
    assert report.passed
    assert abs(report.max_deviation - worst) <= 1e-15


@pytest.mark.parametrize("n", range(2, 9))
def test_completeness_passes_at_tight_tolerance(n):
    report = verify_completeness(build_generators(n), tolerance=1e-12)
    assert report.passed
    assert report.max_deviation <= 1e-12


def test_generator_set_rejects_wrong_shape():
    with pytest.raises(ValueError):
        GeneratorSet(n=2, generators=np.zeros((4, 2, 2), dtype=complex))


def test_generator_matrices_are_read_only():
    gens = build_generators(3)
    with pytest.raises(ValueError):
        gens.generators[0, 0, 0] = 1.0
