"""Dense-matrix oracle: densification, density operators, reduced states."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import matrix_of
from qundet import dense
from qundet.codes import catalog
from qundet.dense import (
    OracleCapError,
    all_subsets,
    apply_on_subset,
    build_density,
    build_mixed_density,
    codeword_vector,
    frobenius_distance,
    group_projector,
    partial_trace,
    pauli_matrix,
    phase_family_check,
    reduced_equal_dense,
    relates_codewords,
    relating_unitary,
    trace_distance,
)
from qundet.pauli import PauliOperator, parse_pauli


def test_pauli_matrix_spot_checks():
    np.testing.assert_allclose(pauli_matrix(parse_pauli("X")), [[0, 1], [1, 0]])
    np.testing.assert_allclose(pauli_matrix(parse_pauli("Y")),
                               [[0, -1j], [1j, 0]])
    # qubit 1 is the leftmost letter and the most significant tensor factor
    zi = pauli_matrix(parse_pauli("ZI"))
    np.testing.assert_allclose(np.diag(zi), [1, 1, -1, -1])


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n),
    st.integers(0, 2 ** n - 1),
    st.integers(0, 2 ** n - 1),
    st.integers(0, 3),
)))
def test_pauli_matrix_matches_reference(args):
    n, x, z, p = args
    op = PauliOperator(n, x, z, p)
    np.testing.assert_allclose(pauli_matrix(op), matrix_of(op), atol=1e-12)


def test_group_projector_is_projector():
    spec = catalog("code_412")
    proj = group_projector(list(spec.stabilizer_ops()), spec.n)
    np.testing.assert_allclose(proj @ proj, proj, atol=1e-12)
    np.testing.assert_allclose(proj, proj.conj().T, atol=1e-12)
    # rank 3 group on 4 qubits: 2^(4-3) dimensional codespace
    assert abs(np.trace(proj) - 2) < 1e-12


def test_build_density_ghz3():
    spec = catalog("ghz", n=3)
    rho = build_density(spec, 0)
    v = np.zeros(8, dtype=complex)
    v[0] = v[7] = 1 / np.sqrt(2)
    np.testing.assert_allclose(rho, np.outer(v, v.conj()), atol=1e-12)
    rho1 = build_density(spec, 1)
    w = v.copy()
    w[7] = -w[7]
    np.testing.assert_allclose(rho1, np.outer(w, w.conj()), atol=1e-12)


@pytest.mark.parametrize("name", ["code_412", "code_513", "steane_713"])
def test_build_density_is_rank_one_projector(name):
    spec = catalog(name)
    for bit in (0, 1):
        rho = build_density(spec, bit)
        np.testing.assert_allclose(rho, rho.conj().T, atol=1e-12)
        np.testing.assert_allclose(rho @ rho, rho, atol=1e-12)
        assert abs(np.trace(rho) - 1) < 1e-12


def test_build_density_rejects_k2():
    with pytest.raises(ValueError):
        build_density(catalog("code_422"), 0)


@pytest.mark.parametrize("name", ["code_412", "code_513", "ghz"])
def test_codeword_vector_matches_density(name):
    spec = catalog(name, n=4) if name == "ghz" else catalog(name)
    for bit in (0, 1):
        vec = codeword_vector(spec, bit)
        assert abs(np.linalg.norm(vec) - 1) < 1e-12
        np.testing.assert_allclose(np.outer(vec, vec.conj()),
                                   build_density(spec, bit), atol=1e-12)


def test_codeword_vectors_orthogonal():
    spec = catalog("code_513")
    v0 = codeword_vector(spec, 0)
    v1 = codeword_vector(spec, 1)
    assert abs(np.vdot(v0, v1)) < 1e-12


def test_partial_trace_textbook_ghz():
    rho = build_density(catalog("ghz", n=3), 0)
    one = partial_trace(rho, (2, 3))
    np.testing.assert_allclose(one, np.eye(2) / 2, atol=1e-12)
    two = partial_trace(rho, (3,), 3)
    expect = np.zeros((4, 4))
    expect[0, 0] = expect[3, 3] = 0.5
    np.testing.assert_allclose(two, expect, atol=1e-12)


def test_partial_trace_properties():
    rng = np.random.default_rng(7)
    a = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    rho = a @ a.conj().T
    rho /= np.trace(rho)
    # trace preservation
    assert abs(np.trace(partial_trace(rho, (2,))) - 1) < 1e-12
    # hermiticity preservation
    red = partial_trace(rho, (1, 3))
    np.testing.assert_allclose(red, red.conj().T, atol=1e-12)
    # sequential equals batched: tracing 3 then 2 == tracing {2, 3}
    step = partial_trace(partial_trace(rho, (3,)), (2,))
    np.testing.assert_allclose(step, partial_trace(rho, (2, 3)), atol=1e-12)
    # linearity
    b = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    sig = b @ b.conj().T
    sig /= np.trace(sig)
    np.testing.assert_allclose(
        partial_trace(0.3 * rho + 0.7 * sig, (1,)),
        0.3 * partial_trace(rho, (1,)) + 0.7 * partial_trace(sig, (1,)),
        atol=1e-12)


def test_partial_trace_edge_cases():
    rho = np.eye(4) / 4
    np.testing.assert_allclose(partial_trace(rho, (1, 2)), [[1.0]])
    # duplicates collapse to a set
    np.testing.assert_allclose(partial_trace(rho, (1, 1)),
                               partial_trace(rho, (1,)))
    with pytest.raises(ValueError):
        partial_trace(rho, (0,))
    with pytest.raises(ValueError):
        partial_trace(rho, (3,))
    with pytest.raises(ValueError):
        partial_trace(np.eye(3), (1,), 2)


def test_build_mixed_density_spectrum():
    spec = catalog("code_422")
    for which in (0, 1):
        rho = build_mixed_density(spec, which)
        vals = np.sort(np.linalg.eigvalsh(rho))[::-1]
        np.testing.assert_allclose(vals[:2], [0.5, 0.5], atol=1e-12)
        np.testing.assert_allclose(vals[2:], 0, atol=1e-12)
        assert abs(np.trace(rho) - 1) < 1e-12
    # the 00/11 and 10/01 mixtures live on orthogonal subspaces
    r0 = build_mixed_density(spec, 0)
    r1 = build_mixed_density(spec, 1)
    assert np.linalg.norm(r0 @ r1) < 1e-12


def test_build_mixed_density_rejects_k1():
    with pytest.raises(ValueError):
        build_mixed_density(catalog("code_513"), 0)


def test_apply_on_subset():
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    v = np.zeros(4, dtype=complex)
    v[0] = 1.0
    # flip qubit 2 of |00> -> |01>
    np.testing.assert_allclose(apply_on_subset(x, v, (2,), 2), [0, 1, 0, 0])
    np.testing.assert_allclose(apply_on_subset(x, v, (1,), 2), [0, 0, 1, 0])
    # two-qubit unitary on out-of-order subset
    cnot = np.eye(4, dtype=complex)[[0, 1, 3, 2]]
    w = np.zeros(8, dtype=complex)
    w[4] = 1.0  # |100>
    # control qubit 1, target qubit 3: |100> -> |101>
    np.testing.assert_allclose(
        apply_on_subset(cnot, w, (1, 3), 3),
        np.eye(8)[5])


def test_relating_unitary_ghz_phase():
    spec = catalog("ghz", n=3)
    u = relating_unitary(spec, (1,))
    np.testing.assert_allclose(u @ u.conj().T, np.eye(2), atol=1e-9)
    assert relates_codewords(spec, (1,), u)
    assert not relates_codewords(spec, (1,), np.eye(2, dtype=complex))


def test_relating_unitary_steane():
    spec = catalog("steane_713")
    subset = (1, 2, 3, 4, 5)
    u = relating_unitary(spec, subset)
    dim = 1 << len(subset)
    np.testing.assert_allclose(u @ u.conj().T, np.eye(dim), atol=1e-8)
    assert relates_codewords(spec, subset, u)


def test_relating_unitary_rejects_distinguishing_subset():
    # tracing {2,3,4} of this code leaves unequal reductions, so no
    # unitary on {2,3,4} can connect the codewords
    spec = catalog("steane_713")
    assert not reduced_equal_dense(spec, (2, 3, 4))
    with pytest.raises(ValueError):
        relating_unitary(spec, (2, 3, 4))


def test_relating_unitary_rejects_bad_subset():
    spec = catalog("ghz", n=3)
    with pytest.raises(ValueError):
        relating_unitary(spec, ())
    with pytest.raises(ValueError):
        relating_unitary(spec, (1, 2, 3))
    with pytest.raises(ValueError):
        relating_unitary(spec, (0,))


def test_reduced_equal_dense_steane():
    spec = catalog("steane_713")
    # tracing only qubit 1 keeps {2..7}, which still holds a coset
    # support, so the reductions differ; the triple {5,6,7} removes a
    # point from every low-weight coset support and equalizes them
    assert not reduced_equal_dense(spec, (1,))
    assert reduced_equal_dense(spec, (5, 6, 7))
    assert reduced_equal_dense(spec, (1, 2, 3, 4, 5))
    assert not reduced_equal_dense(spec, (2, 3, 4))


def test_reduced_equal_dense_mixed_422():
    spec = catalog("code_422")
    assert reduced_equal_dense(spec, (1, 2, 3))
    assert not reduced_equal_dense(spec, (1, 3))


def test_trace_and_frobenius_distance():
    r0 = np.diag([1.0, 0.0])
    r1 = np.diag([0.0, 1.0])
    assert abs(trace_distance(r0, r1) - 1) < 1e-12
    assert abs(frobenius_distance(r0, r1) - np.sqrt(2)) < 1e-12
    assert frobenius_distance(r0, r0) < 1e-15


def test_steane_frozen_distance():
    spec = catalog("steane_713")
    r0 = partial_trace(build_density(spec, 0), (2, 3, 4), 7)
    r1 = partial_trace(build_density(spec, 1), (2, 3, 4), 7)
    assert abs(frobenius_distance(r0, r1) - 0.5) < 1e-9


def test_phase_family_check():
    assert phase_family_check(3, 1 / np.sqrt(2), 1 / np.sqrt(2), np.pi / 3)
    assert phase_family_check(4, 0.6, 0.8, 1.0)
    with pytest.raises(ValueError):
        phase_family_check(3, 1.0, 1.0, 0.1)


def test_all_subsets():
    assert list(all_subsets(3, 2)) == [(1, 2), (1, 3), (2, 3)]
    assert list(all_subsets(2, 0)) == [()]


def test_oracle_cap():
    with pytest.raises(OracleCapError):
        pauli_matrix(PauliOperator(dense.ORACLE_MAX_N + 1, 0, 0, 0))
    with pytest.raises(OracleCapError):
        phase_family_check(dense.ORACLE_MAX_N + 1, 1.0, 0.0, 0.1)
