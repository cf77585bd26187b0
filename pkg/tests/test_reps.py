"""Truncated representations: construction, relations, bases, exports."""

import numpy as np
import pytest

import gpcuntz as g
from helpers import random_nonperiodic_cycle, random_unit

E1 = g.basis_vector(2, 1)
E2 = g.basis_vector(2, 2)


# ----------------------------------------------------------------------
# unitary completion

def test_complete_unitary_identity_seed():
    assert np.allclose(g.complete_unitary(E1), np.eye(2))


def test_complete_unitary_swapped_seed():
    u = g.complete_unitary(np.array([0.0, 1.0]))
    assert np.allclose(u, np.array([[0.0, 1.0], [1.0, 0.0]]))


def test_complete_unitary_contract():
    rng = np.random.default_rng(1)
    for n in (2, 3, 4):
        for _ in range(10):
            z = random_unit(rng, n)
            u = g.complete_unitary(z)
            assert np.max(np.abs(u @ u.conj().T - np.eye(n))) < 1e-10
            assert np.allclose(u[:, 0], z)


def test_complete_unitary_rejects_non_unit():
    with pytest.raises(ValueError):
        g.complete_unitary(np.array([1.0, 1.0]))


# ----------------------------------------------------------------------
# cycle representations

def test_standard_representation_structure():
    for n in (2, 3):
        rep = g.build_cycle_rep(g.cycle([g.basis_vector(n, 1)]), 3)
        for i in range(1, n + 1):
            mat = rep.gens[i - 1].toarray()
            for m in range(1, n ** 2 + 1):
                target = n * (m - 1) + i
                assert mat[target - 1, m - 1] == 1.0
        assert np.argmax(np.abs(rep.omega)) == 0


def test_two_step_example_on_rank_three():
    # the rank-3 cycle with two e_1 factors swaps the two layers along s_1
    rep = g.build_cycle_rep(g.cycle([g.basis_vector(3, 1)] * 2), 3)
    s1 = rep.gens[0]
    v = np.zeros(rep.dim, dtype=complex)
    v[rep.index(1, 1)] = 1.0
    w = s1 @ v
    assert abs(w[rep.index(2, 1)] - 1.0) < 1e-12
    assert abs((s1 @ w)[rep.index(1, 1)] - 1.0) < 1e-12


def test_cycle_rep_eigenequation():
    rng = np.random.default_rng(2)
    for _ in range(5):
        k = int(rng.integers(1, 4))
        z = g.cycle([random_unit(rng, 2) for _ in range(k)])
        rep = g.build_cycle_rep(z, 5)
        fixed = g.reps.cycle_isometry(rep, z.factors) @ rep.omega
        assert np.linalg.norm(fixed - rep.omega) < 1e-12
        assert abs(np.vdot(rep.omega, fixed) - 1.0) < 1e-12


def test_cycle_rep_depth_validation():
    with pytest.raises(ValueError):
        g.build_cycle_rep(g.cycle([E1]), 1)


# ----------------------------------------------------------------------
# chain representations

def test_constant_chain_is_permutative():
    rep = g.build_chain_rep(g.explicit_chain([E1]), 3)
    for t in range(-2, 3):
        vec = g.reps.chain_vector(rep, t)
        expected = np.zeros(rep.dim, dtype=complex)
        expected[rep.index(t, 1)] = 1.0
        assert np.linalg.norm(vec - expected) < 1e-12


def test_chain_backward_family_orthonormal():
    rng = np.random.default_rng(3)
    chain = g.explicit_chain(
        [random_unit(rng, 2) for _ in range(2)], [random_unit(rng, 2)]
    )
    rep = g.build_chain_rep(chain, 4, d_minus=2, d_plus=3)
    family = [g.reps.chain_vector(rep, t) for t in range(-2, 4)]
    gram = np.stack(family, axis=1)
    gram = gram.conj().T @ gram
    assert np.max(np.abs(gram - np.eye(len(family)))) < 1e-12


def test_chain_step_relation():
    rng = np.random.default_rng(4)
    chain = g.explicit_chain([random_unit(rng, 2) for _ in range(3)])
    rep = g.build_chain_rep(chain, 4)
    for t in range(-2, 5):
        e_t = g.reps.chain_vector(rep, t)
        e_prev = g.reps.chain_vector(rep, t - 1)
        factor = g.chain_factor(chain, t) if t >= 1 else E1
        step = g.reps.vector_isometry(rep, factor) @ e_t
        assert np.linalg.norm(step - e_prev) < 1e-12


def test_chain_rejects_prefix_kind():
    with pytest.raises(ValueError):
        g.build_chain_rep(g.prefix_chain([E1]), 3)


# ----------------------------------------------------------------------
# fiber representations

def test_fiber_phase_one_matches_plain_cycle():
    rng = np.random.default_rng(5)
    z = g.cycle([random_unit(rng, 2) for _ in range(2)])
    plain = g.build_cycle_rep(z, 4)
    fiber = g.build_fiber_rep(z, 1.0, 4)
    for a, b in zip(plain.gens, fiber.gens):
        assert abs(a - b).max() == 0.0


def test_fiber_eigenequation():
    rng = np.random.default_rng(6)
    z = g.cycle([random_unit(rng, 2) for _ in range(2)])
    c = np.exp(1.1j)
    rep = g.build_fiber_rep(z, c, 4)
    scaled = g.scale_cycle(z, c)
    fixed = g.reps.cycle_isometry(rep, scaled.factors) @ rep.omega
    assert np.linalg.norm(fixed - rep.omega) < 1e-12


def test_fiber_minus_one_flips_fixed_vector():
    rep = g.build_fiber_rep(g.cycle([E1]), -1.0, 3)
    out = g.reps.vector_isometry(rep, E1) @ rep.omega
    assert np.linalg.norm(out + rep.omega) < 1e-12


def test_fiber_requires_unimodular_phase():
    with pytest.raises(ValueError):
        g.build_fiber_rep(g.cycle([E1]), 0.5, 3)


# ----------------------------------------------------------------------
# basis enumeration

def test_enumerate_basis_single_vector():
    rep = g.build_cycle_rep(g.cycle([E1]), 3)
    fam = g.enumerate_basis(rep, 1)
    assert len(fam) == 2
    vectors = np.stack([v for _, v in fam], axis=1)
    expected = np.zeros((rep.dim, 2))
    expected[0, 0] = 1.0
    expected[1, 1] = 1.0
    assert np.max(np.abs(vectors - expected)) < 1e-12


def test_enumerate_basis_counts_and_gram():
    rng = np.random.default_rng(7)
    for n, k, d in ((2, 1, 3), (2, 2, 2), (2, 3, 2), (3, 2, 2)):
        z = g.cycle([random_unit(rng, n) for _ in range(k)])
        rep = g.build_cycle_rep(z, d + k)
        fam = g.enumerate_basis(rep, d)
        assert len(fam) == k * n ** d
        mat = np.stack([v for _, v in fam], axis=1)
        gram = mat.conj().T @ mat
        assert np.max(np.abs(gram - np.eye(len(fam)))) < 1e-9


def test_enumerate_basis_depth_zero_anchors():
    rng = np.random.default_rng(8)
    z = g.cycle([random_unit(rng, 2) for _ in range(3)])
    rep = g.build_cycle_rep(z, 5)
    fam = g.enumerate_basis(rep, 0)
    assert len(fam) == 3
    assert all(label.depth == 0 for label, _ in fam)


def test_anchor_family_orthonormal_for_random_nonperiodic_cycles():
    rng = np.random.default_rng(20)
    for _ in range(20):
        k = int(rng.integers(1, 4))
        z = random_nonperiodic_cycle(rng, 2, k)
        rep = g.build_cycle_rep(z, k + 2)
        fam = g.enumerate_basis(rep, 0)
        mat = np.stack([v for _, v in fam], axis=1)
        gram = mat.conj().T @ mat
        assert np.max(np.abs(gram - np.eye(k))) < 1e-9


def test_enumerate_basis_insufficient_depth():
    rep = g.build_cycle_rep(g.cycle([E1, E2]), 3)
    with pytest.raises(ValueError):
        g.enumerate_basis(rep, 3)


def test_enumerate_chain_basis():
    rng = np.random.default_rng(9)
    chain = g.explicit_chain([random_unit(rng, 2) for _ in range(2)])
    rep = g.build_chain_rep(chain, 4)
    fam = g.enumerate_basis(rep, 3, anchors=range(-1, 2))
    assert len(fam) == 3 * 2 ** 2
    mat = np.stack([v for _, v in fam], axis=1)
    gram = mat.conj().T @ mat
    assert np.max(np.abs(gram - np.eye(len(fam)))) < 1e-9


# ----------------------------------------------------------------------
# applying elements

def test_apply_identity_and_relations():
    rng = np.random.default_rng(10)
    z = g.cycle([random_unit(rng, 2) for _ in range(2)])
    rep = g.build_cycle_rep(z, 4)
    v = np.zeros(rep.dim, dtype=complex)
    v[rep.index(2, 3)] = 1.0
    assert np.allclose(g.apply_element(rep, g.identity(2), v), v)
    out = g.apply_element(rep, g.parse("s1* s1", 2), v)
    assert np.linalg.norm(out - v) < 1e-12


def test_apply_fixed_vector():
    rng = np.random.default_rng(11)
    z = g.cycle([random_unit(rng, 2) for _ in range(2)])
    rep = g.build_cycle_rep(z, 4)
    elem = g.s_of([np.asarray(f) for f in z.factors])
    assert np.linalg.norm(g.apply_element(rep, elem, rep.omega) - rep.omega) < 1e-12


def test_element_matrix_matches_vector_application():
    rng = np.random.default_rng(21)
    z = g.cycle([random_unit(rng, 2) for _ in range(2)])
    rep = g.build_cycle_rep(z, 4)
    elem = g.parse("0.5 s1 s2* - i s2 + I", 2)
    mat = g.element_matrix(rep, elem)
    v = np.zeros(rep.dim, dtype=complex)
    v[rep.index(1, 2)] = 1.0
    assert np.linalg.norm(mat @ v - g.apply_element(rep, elem, v)) < 1e-12
    iso = g.element_matrix(rep, g.s_of([np.asarray(f) for f in z.factors]))
    diff = abs(iso - g.cycle_isometry(rep, z.factors))
    assert diff.max() < 1e-12


def test_apply_detects_overflow():
    rep = g.build_cycle_rep(g.cycle([E1]), 3)
    deep = g.word_element(2, (2,) * 4)
    with pytest.raises(g.TruncationOverflowError):
        g.apply_element(rep, deep, rep.omega)


def test_apply_detects_chain_ceiling():
    rep = g.build_chain_rep(g.explicit_chain([E1]), 2, d_minus=1, d_plus=1)
    climb = g.word_element(2, (), (1, 1))
    with pytest.raises(g.TruncationOverflowError):
        g.apply_element(rep, climb, rep.omega)


# ----------------------------------------------------------------------
# verification

def test_verify_standard_rep_is_exact():
    rep = g.build_cycle_rep(g.cycle([E1]), 4)
    report = g.verify_gp(rep)
    assert report.max_residual() == 0.0
    assert report.passed(1e-12)


def test_verify_random_cycles():
    rng = np.random.default_rng(12)
    for _ in range(5):
        z = random_nonperiodic_cycle(rng, 2, int(rng.integers(1, 4)))
        rep = g.build_cycle_rep(z, 4)
        report = g.verify_gp(rep)
        assert report.passed(1e-10), report.to_dict()


def test_verify_random_chain():
    rng = np.random.default_rng(13)
    chain = g.explicit_chain([random_unit(rng, 3) for _ in range(2)])
    report = g.verify_gp(g.build_chain_rep(chain, 4))
    assert report.passed(1e-10), report.to_dict()


def test_verify_flags_corruption():
    rep = g.build_cycle_rep(g.cycle([E1, E2]), 4)
    bad = rep.gens[0].tolil()
    bad[0, 0] = bad[0, 0] + 0.25
    rep.gens[0] = bad.tocsc()
    report = g.verify_gp(rep)
    assert not report.passed(1e-9)
    assert report.max_residual() > 0.1


# ----------------------------------------------------------------------
# contraction along the cycle isometry

def test_power_vanish_fixed_vector():
    rep = g.build_cycle_rep(g.cycle([E1]), 4)
    norms = g.power_vanish(rep, g.cycle([E1]), rep.omega, 5)
    assert np.allclose(norms, 1.0)


def test_power_vanish_orthogonal_direction():
    rep = g.build_cycle_rep(g.cycle([E1]), 4)
    v = rep.gens[1] @ rep.omega
    norms = g.power_vanish(rep, g.cycle([E1]), v, 3)
    assert norms[0] == 1.0
    assert norms[1] < 1e-12


def test_power_vanish_rate_matches_overlap():
    rng = np.random.default_rng(14)
    z = random_nonperiodic_cycle(rng, 2, 2)
    rep = g.build_cycle_rep(z, 6)
    anchors = g.reps.cycle_anchor_vectors(rep)
    y1 = g.full_tensor(z)
    y2 = g.full_tensor(g.cycle([z.factors[1], z.factors[0]]))
    rate = abs(np.vdot(y1, y2))
    norms = g.power_vanish(rep, z, anchors[1], 2)
    assert norms[0] == pytest.approx(1.0, abs=1e-12)
    for m in (1, 2):
        assert norms[m] == pytest.approx(rate ** m, abs=1e-10)


def test_fixed_subspace_is_one_dimensional():
    rng = np.random.default_rng(15)
    for _ in range(5):
        z = random_nonperiodic_cycle(rng, 2, 2)
        rep = g.build_cycle_rep(z, 5)
        mat = g.reps.cycle_isometry(rep, z.factors).toarray()
        shifted = (mat - np.eye(rep.dim))[:, rep.interior]
        sing = np.linalg.svd(shifted, compute_uv=False)
        assert sing[-1] < 1e-10
        assert sing[-2] > 1e-4


def test_inequivalent_fixed_vectors_are_orthogonal():
    # in a direct sum of two inequivalent cycle reps, the fixed vector of
    # each product isometry lives entirely inside its own block
    rng = np.random.default_rng(16)
    z = random_nonperiodic_cycle(rng, 2, 2)
    y = random_nonperiodic_cycle(rng, 2, 2)
    assert not g.cycles_equivalent(z, y)
    rep_z = g.build_cycle_rep(z, 5)
    rep_y = g.build_cycle_rep(y, 5)

    def singular_spectrum(mat, interior):
        shifted = (mat - np.eye(mat.shape[0]))[:, interior]
        return np.linalg.svd(shifted, compute_uv=False)

    # s(z) has a fixed vector in its own block and none in the other block
    own = singular_spectrum(g.reps.cycle_isometry(rep_z, z.factors).toarray(), rep_z.interior)
    other = singular_spectrum(g.reps.cycle_isometry(rep_y, z.factors).toarray(), rep_y.interior)
    assert own[-1] < 1e-10
    assert other[-1] > 1e-3

    # literal direct-sum form: the near-fixed directions of the two product
    # isometries are orthogonal
    import scipy.sparse as sp

    def fixed_direction(param):
        big = sp.block_diag(
            [g.reps.cycle_isometry(rep_z, param.factors),
             g.reps.cycle_isometry(rep_y, param.factors)]
        ).toarray()
        interior = np.concatenate([rep_z.interior, rep_y.interior])
        shifted = (big - np.eye(big.shape[0]))[:, interior]
        _, s, vh = np.linalg.svd(shifted)
        direction = np.zeros(big.shape[0], dtype=complex)
        direction[interior] = vh[-1].conj()
        assert s[-1] < 1e-10
        return direction

    v_z = fixed_direction(z)
    v_y = fixed_direction(y)
    assert abs(np.vdot(v_z, v_y)) < 1e-9


def test_generator_columns_are_sparse_and_isometric():
    rng = np.random.default_rng(17)
    for n in (2, 3):
        z = g.cycle([random_unit(rng, n) for _ in range(2)])
        rep = g.build_cycle_rep(z, 3)
        for mat in rep.gens:
            per_column = np.diff(mat.tocsc().indptr)
            assert per_column.max() <= n
            norms = np.sqrt(np.asarray(abs(mat).power(2).sum(axis=0)).ravel())
            assert np.max(np.abs(norms[rep.interior] - 1.0)) < 1e-12


# ----------------------------------------------------------------------
# exports

def test_export_coo_roundtrip():
    rep = g.build_cycle_rep(g.cycle([E1, E2]), 2)
    text = g.export_coo(rep)
    sections = {}
    current = None
    for line in text.strip().splitlines():
        if line.startswith("#"):
            current = line
            sections[current] = []
        else:
            sections[current].append(line.split())
    for i in (1, 2):
        entries = sections[f"# S{i}"]
        rebuilt = np.zeros((rep.dim, rep.dim), dtype=complex)
        for row, col, re_part, im_part in entries:
            rebuilt[int(row), int(col)] = float(re_part) + 1j * float(im_part)
        assert np.max(np.abs(rebuilt - rep.gens[i - 1].toarray())) == 0.0
    omega_rows = sections["# omega: index re im"]
    assert len(omega_rows) == 1
    assert int(omega_rows[0][0]) == 0


def test_export_json_shapes():
    rep = g.build_chain_rep(g.explicit_chain([E1]), 2, d_minus=1, d_plus=1)
    data = g.export_json(rep)
    assert data["rank"] == 2
    assert data["kind"] == "chain"
    assert data["dim"] == rep.dim
    assert len(data["generators"]) == 2
    assert len(data["labels"]) == rep.dim
    assert data["labels"][0] == [-1, 1]
