import numpy as np
import pytest

from lgmirror import partitions as pt
from lgmirror import qchevalley as qc
from lgmirror import weyl as wy


def test_positive_root_counts():
    for m in (2, 3, 4, 5):
        roots = qc.positive_roots(m)
        assert len(roots) == m * m
        outside = [r for r in roots if not r.in_parabolic]
        assert len(outside) == m * (m + 1) // 2


def test_coroot_pairings():
    # long roots 2e_i have coroot e_i (pairing 1); short e_i+e_j pair to 2
    for m in (2, 3):
        for r in qc.positive_roots(m):
            if r.in_parabolic:
                assert r.omega_m_pairing == 0
            elif 2 in r.vector:
                assert r.omega_m_pairing == 1
            else:
                assert r.omega_m_pairing == 2


def test_reflection_of_long_root_is_sign_change():
    m = 3
    long_last = next(r for r in qc.positive_roots(m) if r.vector == (0, 0, 2))
    assert long_last.reflection == wy.simple_reflection(m, m)


def test_reflections_are_involutions_with_root_action():
    for m in (2, 3):
        for r in qc.positive_roots(m):
            assert r.reflection * r.reflection == wy.identity(m)
            assert wy.length(r.reflection) % 2 == 1


def pieri_oracle(lam: pt.StrictPartition, m: int) -> dict:
    """Independent combinatorial rule for sigma_1 * sigma_lambda on LG(m):
    add one box (coefficient 2 off the first column, 1 in it); if the first
    part equals m, add q times the class with the first part removed."""
    out = {}
    parts = lam.parts
    for r in range(len(parts)):
        grown = parts[r] + 1
        if grown <= m and (r == 0 or grown < parts[r - 1]):
            mu = parts[:r] + (grown,) + parts[r + 1:]
            out[(mu, 0)] = 1 if grown == 1 else 2
    if not parts or parts[-1] > 1:
        out[(parts + (1,), 0)] = 1
    if parts and parts[0] == m:
        out[(parts[1:], 1)] = 1
    return out


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_chevalley_matches_pieri_rule(m):
    for lam in pt.all_strict_partitions(m):
        got = {(mu.parts, d): c for (mu, d), c in qc.chevalley_multiply(lam).terms.items()}
        assert got == pieri_oracle(lam, m), lam


def test_spec_products():
    # sigma_1 * sigma_() = sigma_(1)
    for m in (2, 3, 5):
        out = qc.chevalley_multiply(pt.empty(m))
        assert out.terms == {(pt.partition((1,), m), 0): 1}
    # m=2: sigma_1 * sigma_(2,1) = q sigma_(1)
    out = qc.chevalley_multiply(pt.partition((2, 1), 2))
    assert out.terms == {(pt.partition((1,), 2), 1): 1}
    # sigma_1 * sigma_(m) = sigma_(m,1) + q
    for m in (2, 3, 4):
        out = qc.chevalley_multiply(pt.partition((m,), m))
        assert out.terms == {
            (pt.partition((m, 1), m), 0): 1,
            (pt.empty(m), 1): 1,
        }


@pytest.mark.parametrize("m", list(range(2, 9)))
def test_relation_l1(m):
    assert qc.verify_relation_l1(m)


@pytest.mark.parametrize("m", list(range(2, 9)))
def test_grading_and_positivity(m):
    assert qc.grading_violations(m) == []


def test_classical_limit_has_no_q():
    m = 3
    for lam in pt.all_strict_partitions(m):
        classical = {k: v for k, v in qc.chevalley_multiply(lam).terms.items() if k[1] == 0}
        for (mu, _), c in classical.items():
            assert mu.size == lam.size + 1


def test_sigma1_matrix_structure():
    m = 2
    mat = qc.sigma1_matrix(m, 1.0)
    basis = pt.all_strict_partitions(m)
    col = basis.index(pt.empty(m))
    row = basis.index(pt.partition((1,), m))
    column = mat[:, col]
    assert column[row] == 1 and np.count_nonzero(column) == 1
    assert np.allclose(np.linalg.matrix_power(mat, 4), 4 * mat)  # h^4 = 4qh at q=1
    ev = np.linalg.eigvals(qc.sigma1_matrix(2, 1.0))
    assert len(set(np.round(ev, 8))) == 4


def test_sigma1_matrix_nonnegative_at_positive_q():
    for m in (2, 3):
        mat = qc.sigma1_matrix(m, 2.0)
        assert np.all(mat.real >= 0) and np.allclose(mat.imag, 0)


def test_multiplication_table_dump():
    table = qc.multiplication_table(2)
    assert set(table) == {"[]", "[1]", "[2]", "[2,1]"}
    assert table["[]"] == [{"partition": [1], "q_power": 0, "coeff": 1}]
