import json
from fractions import Fraction

import pytest

from conftest import rational_points
from lgmirror import grouprep as gr
from lgmirror import partitions as pt
from lgmirror import superpotential as sp
from lgmirror.scalars import COMPLEX, EXACT, QSqrt2

ring = EXACT


def frac(x):
    return ring.from_fraction(Fraction(x))


def test_plucker_values_m2():
    b = sp.ring_vector([1, 2, 3], ring)
    p = sp.plucker_vector(b, 2, ring)
    values = {lam.parts: v for lam, v in p.items()}
    assert values[()] == frac(1)
    assert values[(1,)] == frac(4)  # b1 + b3
    assert values[(2,)] == frac(6)  # b2 b3
    assert values[(2, 1)] == frac(6)  # b1 b2 b3


def test_plucker_subword_m2():
    b = sp.ring_vector([1, 2, 3], ring)
    assert sp.plucker_subword(pt.empty(2), b, 2, ring) == frac(1)
    assert sp.plucker_subword(pt.partition((2,), 2), b, 2, ring) == frac(6)
    assert sp.plucker_subword(pt.rho(2, 2), b, 2, ring) == frac(6)


def test_spin_equals_subword_routes():
    for m in (2, 3, 4):
        for bs in rational_points(m, 4, seed=31):
            b = sp.ring_vector(bs, ring)
            for lam in pt.all_strict_partitions(m):
                assert sp.plucker_spin(lam, b, m, ring) == sp.plucker_subword(lam, b, m, ring)


def test_denominator_and_numerator_m2():
    b = sp.ring_vector([1, 2, 3], ring)
    p = sp.plucker_vector(b, 2, ring)
    assert sp.eval_denominator(1, p, 2, ring) == frac(18)
    assert sp.eval_numerator(1, p, 2, ring) == frac(36)


def test_eval_W_m2_frozen_value():
    b = sp.ring_vector([1, 2, 3], ring)
    p = sp.plucker_vector(b, 2, ring)
    assert sp.eval_W(frac(1), p, 2, ring) == frac(Fraction(20, 3))
    assert sp.eval_W_tilde(frac(1), b, 2, ring) == frac(Fraction(20, 3))
    # q = 0 kills the last term: value = 4 + 2
    assert sp.eval_W(frac(0), p, 2, ring) == frac(6)
    assert sp.eval_W_tilde(frac(0), b, 2, ring) == frac(6)


def test_divisor_error():
    m = 2
    b = sp.ring_vector([1, 0, 3], ring)
    with pytest.raises(sp.DivisorError):
        sp.eval_W(frac(1), sp.plucker_vector(b, m, ring), m, ring)
    with pytest.raises(ZeroDivisionError):
        sp.eval_W_tilde(frac(1), b, m, ring)


def test_laurent_numerator_m2():
    b = sp.ring_vector([1, 2, 3], ring)
    assert sp.laurent_numerator(b, 2, ring) == frac(4)  # b1 + b3


def test_theorem_w_exact():
    for m in (2, 3, 4):
        for k, bs in enumerate(rational_points(m, 5, seed=41)):
            b = sp.ring_vector(bs, ring)
            q = frac(Fraction(2 * k + 1, k + 2))
            try:
                rep = sp.verify_theorem_w(m, q, b, ring)
            except sp.DivisorError:
                continue
            assert rep.ok, rep.detail


def test_w_term_matches_f_coefficients():
    """Middle term l of W equals f_{m-l}*(u2bar); term 0 equals f_m*."""
    for m in (2, 3, 4):
        for bs in rational_points(m, 3, seed=43):
            b = sp.ring_vector(bs, ring)
            u2 = gr.build_u2bar(b, m, ring)
            p = sp.plucker_vector(b, m, ring)
            assert gr.extract_f_coeff(u2, m, ring) == p[pt.rho_plus(0, m)] / p[pt.empty(m)]
            for l in range(1, m):
                fl = gr.extract_f_coeff(u2, m - l, ring)
                assert fl * sp.eval_denominator(l, p, m, ring) == sp.eval_numerator(l, p, m, ring)


def test_sym_to_minor_exact():
    for m in (2, 3, 4):
        for bs in rational_points(m, 3, seed=47):
            b = sp.ring_vector(bs, ring)
            for j in range(2, m + 1):
                rep = sp.verify_sym_to_minor(m, j, b, ring)
                assert rep.ok, (m, j, rep.detail)


def test_sym_to_minor_frozen_m2():
    b = sp.ring_vector([1, 2, 3], ring)
    rep = sp.verify_sym_to_minor(2, 2, b, ring)
    assert rep.ok
    ones = sp.ring_vector([1, 1, 1], ring)
    p = sp.plucker_vector(ones, 2, ring)
    assert sp.eval_denominator(1, p, 2, ring) == frac(1)  # b2 b3^2 at b = 1


def test_fj_minors_exact():
    for m in (2, 3, 4):
        for bs in rational_points(m, 3, seed=53):
            b = sp.ring_vector(bs, ring)
            for j in range(1, m):
                rep = sp.verify_fj_minors(m, j, b, ring)
                assert rep.ok, (m, j, rep.detail)


def test_em_formula_exact():
    for m in (2, 3, 4):
        for bs in rational_points(m, 3, seed=59):
            rep = sp.verify_em_formula(m, sp.ring_vector(bs, ring), ring)
            assert rep.ok, (m, rep.detail)
    ones = sp.ring_vector([1] * 6, ring)
    p = sp.plucker_vector(ones, 3, ring)
    assert sp.laurent_numerator(ones, 3, ring) == p[pt.rho(2, 3)]


def test_subword_count_equals_plucker_at_ones():
    from lgmirror import weyl as wy

    for m in (2, 3, 4):
        ones = sp.ring_vector([1] * (m * (m + 1) // 2), ring)
        word = wy.canonical_wp_word(m)
        for lam in pt.all_strict_partitions(m):
            count = len(wy.reduced_subwords(word, wy.coset_min_rep(lam)))
            assert sp.plucker_spin(lam, ones, m, ring) == frac(count)


def test_complex_ring_evaluation_consistent():
    bs = [Fraction(1), Fraction(2), Fraction(3)]
    be = sp.ring_vector(bs, ring)
    bc = sp.ring_vector(bs, COMPLEX)
    we = sp.eval_W_tilde(frac(1), be, 2, ring)
    wc = sp.eval_W_tilde(COMPLEX.from_fraction(Fraction(1)), bc, 2, COMPLEX)
    assert abs(we.to_float() - wc.real) < 1e-12 and abs(wc.imag) < 1e-12


# -- the symbolic form ---------------------------------------------------------


def test_symbolic_text_m2():
    assert (
        sp.render_text(sp.symbolic_W(2))
        == "p[1]/p[] + p[2]^2/(p[1]p[2] - p[]p[2,1]) + q*p[1]/p[2,1]"
    )


def test_symbolic_text_m3():
    assert sp.render_text(sp.symbolic_W(3)) == (
        "p[1]/p[] + (p[2]p[3] - p[]p[3,2])/(p[1]p[3] - p[]p[3,1])"
        " + (p[3,1]p[3,2] - p[3]p[3,2,1])/(p[2,1]p[3,2] - p[2]p[3,2,1])"
        " + q*p[2,1]/p[3,2,1]"
    )


def test_symbolic_term_count_and_degrees():
    for m in (2, 3, 4, 5):
        terms = sp.symbolic_W(m)
        assert len(terms) == m + 1
        assert terms[-1].q_power == 1 and all(t.q_power == 0 for t in terms[:-1])
        # denominator degrees add up to the index 2m of the mirror space
        degrees = [len(t.denominator[0][1]) for t in terms]
        assert degrees[0] == 1 and degrees[-1] == 1
        assert all(d == 2 for d in degrees[1:-1])
        assert sum(degrees) == 2 * m


def test_symbolic_json():
    payload = sp.render_json_terms(sp.symbolic_W(2))
    assert len(payload) == 3
    assert payload[0] == {"num": [{"sign": 1, "factors": [[1]]}], "den": [{"sign": 1, "factors": [[]]}], "q_power": 0}
    assert payload[1]["den"] == [
        {"sign": 1, "factors": [[1], [2]]},
        {"sign": -1, "factors": [[], [2, 1]]},
    ]
    json.dumps(payload)  # serializable


def test_symbolic_latex_structure():
    tex = sp.render_latex(sp.symbolic_W(2))
    assert tex.count("\\frac") == 3
    assert "p_{\\emptyset}" in tex and "q\\," in tex
