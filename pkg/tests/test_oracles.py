"""Closed-form oracles against the numeric pipeline."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from manalab import OracleId, closed_form, oracle_vs_numeric, p_crit, table1_cell
from manalab.errors import BadParams
from manalab.oracles import (
    TABLE_MEASURES,
    TABLE_STATES,
    example1,
    example2,
    ml1_h,
    msre2_h,
    shannon_entropy,
    threshold_by_bisection,
)

SQRT3 = math.sqrt(3.0)


def test_shannon_entropy_basics():
    assert shannon_entropy(1.0, 0.0, 0.0) == 0.0
    assert abs(shannon_entropy(1 / 3, 1 / 3, 1 / 3) - math.log(3)) < 1e-14
    with pytest.raises(BadParams):
        shannon_entropy(-0.2, 1.2)


def test_example1_requires_normalized_amplitudes():
    with pytest.raises(BadParams):
        example1(1.0, 1.0, 0.0, 0.5)


def test_example1_random_triples_vs_numeric():
    rng = np.random.default_rng(31)
    worst = 0.0
    for _ in range(200):
        v = rng.standard_normal(3)
        v /= np.linalg.norm(v)
        p = float(rng.uniform())
        rec = oracle_vs_numeric(OracleId("ex1", (v[0], v[1], v[2], p)))
        worst = max(worst, rec.difference)
    assert worst < 1e-10


@given(
    st.sampled_from([0.0, math.pi]),
    st.sampled_from([0.0, math.pi]),
    st.floats(0.0, 1.0),
)
@settings(max_examples=40, deadline=None)
def test_example2_reduces_to_example1_on_real_phases(t1, t2, p):
    mus = np.array([1.0, math.cos(t1), math.cos(t2)]) / SQRT3
    assert abs(example2(t1, t2, p) - example1(mus[0], mus[1], mus[2], p)) < 1e-12


def test_example2_grid_vs_numeric():
    worst = 0.0
    for t1 in np.linspace(0, 2 * math.pi, 7):
        for t2 in np.linspace(0, 2 * math.pi, 7):
            for p in (0.2, 0.8):
                rec = oracle_vs_numeric(OracleId("ex2", (float(t1), float(t2), p)))
                worst = max(worst, rec.difference)
    assert worst < 1e-10


def test_example3_known_points():
    assert abs(closed_form(OracleId("ex3", (1 / math.sqrt(2), 1.0))) - math.log(5 / 3)) < 1e-12
    assert abs(closed_form(OracleId("ex3", (1 / SQRT3, 1.0)))) < 1e-12
    rec = oracle_vs_numeric(OracleId("ex3", (0.31, 0.77)))
    assert rec.difference < 1e-10


def test_example4_boundary_and_branches():
    # at p = 2/(2 + 3 sin 2 theta) both branches meet at zero
    assert closed_form(OracleId("ex4", (math.pi / 4, 0.4))) == 0.0
    assert abs(closed_form(OracleId("ex4", (math.pi / 4, 1.0))) - math.log(5 / 3)) < 1e-12
    rec = oracle_vs_numeric(OracleId("ex4", (0.6, 0.9)))
    assert rec.difference < 1e-10


@given(st.floats(0.05, math.pi / 2 - 0.05))
@settings(max_examples=30, deadline=None)
def test_example4_continuous_at_branch_point(theta):
    pc = 2.0 / (2.0 + 3.0 * math.sin(2 * theta))
    eps = 1e-9
    below = closed_form(OracleId("ex4", (theta, pc - eps)))
    above = closed_form(OracleId("ex4", (theta, min(pc + eps, 1.0))))
    assert below == 0.0
    assert abs(above) < 1e-8


@pytest.mark.parametrize("measure", TABLE_MEASURES)
def test_example5_curve_vs_numeric(measure):
    worst = 0.0
    for lam in np.linspace(0.0, 1 / math.sqrt(2), 21):
        rec = oracle_vs_numeric(OracleId("ex5_set", (float(lam),), (measure,)))
        worst = max(worst, rec.difference)
    assert worst < 1e-9


@pytest.mark.parametrize("measure", TABLE_MEASURES)
def test_example6_curve_vs_numeric(measure):
    worst = 0.0
    for th in np.linspace(0.0, math.pi / 2, 21):
        rec = oracle_vs_numeric(OracleId("ex6_set", (float(th),), (measure,)))
        worst = max(worst, rec.difference)
    assert worst < 1e-9


def test_example5_endpoint_values():
    assert abs(closed_form(OracleId("ex5_set", (1 / math.sqrt(2),), ("m_mana",))) - math.log(5 / 3)) < 1e-12
    assert abs(closed_form(OracleId("ex5_set", (0.0,), ("m_mana",)))) < 1e-12
    assert abs(closed_form(OracleId("ex5_set", (0.0,), ("I",)))) < 1e-12


def test_example6_known_points():
    assert abs(closed_form(OracleId("ex6_set", (math.pi / 4,), ("m_sre2",))) - math.log(2.0)) < 1e-12
    assert abs(closed_form(OracleId("ex6_set", (math.pi / 4,), ("I",))) - 2 * math.log(2.0)) < 1e-12
    assert abs(closed_form(OracleId("ex6_set", (math.pi / 4,), ("m_mana",))) - math.log(5 / 3)) < 1e-12


def test_table_p0_column_consistency():
    for state in TABLE_STATES:
        assert abs(table1_cell("m_mana", state, 0.0)) < 1e-12
        assert abs(table1_cell("m_sre2", state, 0.0)) < 1e-12
        assert abs(table1_cell("I", state, 0.0) - math.log(3.0)) < 1e-12
        assert abs(table1_cell("m_l1", state, 0.0) - math.log(3.0)) < 1e-12


def test_table_mana_cells_nondecreasing():
    grid = np.linspace(0.0, 1.0, 101)
    for state in TABLE_STATES:
        vals = [table1_cell("m_mana", state, float(p)) for p in grid]
        assert all(b >= a - 1e-12 for a, b in zip(vals, vals[1:]))


def test_table_l1_interior_maximum():
    # the L1 correlation rises then falls for S, N, H but not for T
    grid = np.linspace(0.0, 1.0, 101)
    for state in ("S", "N", "H"):
        vals = [table1_cell("m_l1", state, float(p)) for p in grid]
        peak = int(np.argmax(vals))
        assert 0 < peak < 100
    vals = [table1_cell("m_l1", "T", float(p)) for p in grid]
    assert int(np.argmax(vals)) == 100


def test_table_cells_match_numeric_spot():
    for measure in TABLE_MEASURES:
        for state in TABLE_STATES:
            for p in (0.0, 0.3, 0.75, 1.0):
                rec = oracle_vs_numeric(OracleId("table1_cell", (p,), (measure, state)))
                assert rec.difference < 1e-9, (measure, state, p, rec)


def test_table_known_cell_values():
    assert abs(table1_cell("m_mana", "S", 1.0) - math.log(5 / 3)) < 1e-14
    assert abs(table1_cell("m_mana", "T", 1.0) - math.log((1 + 4 * math.cos(math.pi / 9)) / 3)) < 1e-14
    assert abs(table1_cell("m_sre2", "T", 1.0) - math.log(9 / 5)) < 1e-14
    assert abs(table1_cell("m_sre2", "S", 0.5) - math.log(48 / 33)) < 1e-14
    assert abs(table1_cell("m_l1", "S", 1.0) - math.log(15 / 4)) < 1e-14


def test_h_column_closed_forms_match_printed_state():
    # ML1H and MSRE2H belong to the printed h vector (the one carrying the
    # stray ninth-root phase); both match its numerics to high precision
    for p in (0.0, 0.25, 0.6, 1.0):
        rec = oracle_vs_numeric(OracleId("ml1_h", (p,)))
        assert rec.difference < 1e-12, rec
        rec = oracle_vs_numeric(OracleId("msre2_h", (p,)))
        assert rec.difference < 1e-12, rec


def test_h_column_mana_needs_fourier_variant():
    # the mana cell does NOT match the printed h state, only the Fourier
    # eigenstate variant: the split is real and pinned here
    from manalab import mutual_mana
    from manalab.oracles import csum_output

    cell = table1_cell("m_mana", "H", 1.0)
    printed = mutual_mana(csum_output("h", 1.0))
    fourier = mutual_mana(csum_output("h_fourier", 1.0))
    assert abs(fourier - cell) < 1e-12
    assert printed - cell > 0.03


def test_sre_row_equals_global_not_composition():
    # the table's SRE row equals the global output SRE; the mutual
    # composition differs by twice the marginal SRE (except for T)
    from manalab import mutual_sre, partial_trace, sre_alpha
    from manalab.oracles import csum_output

    out = csum_output("strange", 1.0)
    cell = table1_cell("m_sre2", "S", 1.0)
    assert abs(sre_alpha(out, 2.0) - cell) < 1e-12
    marg = sre_alpha(partial_trace(out, 0), 2.0)
    assert abs(cell - mutual_sre(out, 2.0) - 2 * marg) < 1e-12
    assert marg > 0.1  # the dropped term is not a numerical artifact


def test_p_crit_values():
    assert p_crit("S") == 0.25
    assert p_crit("N") == 0.4
    assert abs(p_crit("T") - 1 / (2 * math.cos(math.pi / 9))) < 1e-15
    assert abs(p_crit("H") - 4 / (1 + 3 * SQRT3)) < 1e-15
    assert abs(p_crit("H") - 0.65) < 5e-3
    with pytest.raises(BadParams):
        p_crit("Q")


def test_thresholds_by_bisection():
    for state, name in (("S", "strange"), ("N", "norrell"), ("T", "t"), ("H", "h_fourier")):
        found = threshold_by_bisection(name)
        assert abs(found - p_crit(state)) < 1e-3, (state, found)


def test_oracle_vs_numeric_record_fields():
    rec = oracle_vs_numeric(OracleId("table1_cell", (0.5,), ("I", "T")), tol=1e-9)
    assert rec.ok
    assert rec.difference == abs(rec.oracle_value - rec.numeric_value)
    assert rec.note


def test_unknown_oracle_rejected():
    with pytest.raises(BadParams):
        closed_form(OracleId("ex9", ()))
    with pytest.raises(BadParams):
        table1_cell("m_mana", "Q", 0.5)


def test_ml1h_msre2h_p0():
    assert abs(ml1_h(0.0) - math.log(3.0)) < 1e-12
    assert abs(msre2_h(0.0)) < 1e-12
