import numpy as np
import pytest
from hypothesis import given, settings

from sudoku_spectra import linalg as la
from sudoku_spectra.graph import (
    StructureViolation,
    adjacency,
    block_row_profile,
    layers,
    template,
    verify_layer_structure,
)
from sudoku_spectra.tiling import Tiling, classical_tiling, row_tiling

from conftest import tilings
from golden import FREEFORM4_ADJACENCY, FREEFORM4_TEMPLATE


def test_adjacency_matches_golden(freeform4):
    assert np.array_equal(adjacency(freeform4), np.array(FREEFORM4_ADJACENCY, dtype=object))


def test_adjacency_spot_entries(freeform4):
    a = adjacency(freeform4)
    # 1-based entries (1,2), (1,5), (1,6), (5,8)
    assert a[0, 1] == 1 and a[0, 4] == 1 and a[0, 5] == 0 and a[4, 7] == 1


def test_template_matches_golden(freeform4):
    expected = np.array([list(row) for row in FREEFORM4_TEMPLATE])
    assert np.array_equal(template(freeform4), expected)


def test_template_spot_entries(freeform4):
    tm = template(freeform4)
    assert tm[0, 0] == "D" and tm[0, 1] == "B" and tm[0, 4] == "V"
    assert tm[4, 5] == "H" and tm[0, 5] == "N"


def test_trivial_cases():
    t1 = Tiling(1, (0,))
    d = layers(t1)
    assert d.l_b.tolist() == [[0]] and d.l_h.tolist() == [[0]] and d.l_v.tolist() == [[0]]
    assert template(t1).tolist() == [["D"]]


def test_row_tiling_layers():
    d = layers(row_tiling(3))
    assert not np.any(d.l_h != 0)  # whole row shares a block: no H edges
    rep = verify_layer_structure(d)
    assert rep.n_cliques == 3 and rep.clique_size == 3


def test_classical2_regular():
    a = adjacency(classical_tiling(2))
    sums = [int(sum(row)) for row in a]
    assert sums == [7] * 16


def test_profile_classical3():
    p = block_row_profile(classical_tiling(3), "row").p
    assert all(sorted(row, reverse=True)[:3] == [3, 3, 3] and sum(row) == 9 for row in p.tolist())


def test_profile_freeform4(freeform4):
    p = block_row_profile(freeform4, "row").p
    assert p[0].tolist() == [4, 0, 0, 0]
    assert p[1].tolist() == [0, 1, 2, 1]


def test_profile_row_tiling():
    p = block_row_profile(row_tiling(4), "row").p
    assert np.array_equal(p, 4 * np.eye(4, dtype=int))


def test_structure_report_freeform4(freeform4):
    rep = verify_layer_structure(layers(freeform4))
    assert rep.n_cliques == 4 and rep.clique_size == 4
    assert rep.row_parts[0] == (4,)
    assert rep.row_parts[1] == (2, 1, 1)
    # parts match the nonzero profile entries (descending)
    p = block_row_profile(freeform4, "column").p
    for i in range(4):
        expected = tuple(sorted((x for x in p[i].tolist() if x), reverse=True))
        assert rep.col_parts[i] == expected


def test_structure_report_classical3():
    rep = verify_layer_structure(layers(classical_tiling(3)))
    assert all(parts == (3, 3, 3) for parts in rep.row_parts)
    assert all(parts == (3, 3, 3) for parts in rep.col_parts)


def test_structure_violation_missing_clique_edge(freeform4):
    d = layers(freeform4)
    broken = d.l_b.copy()
    # remove one edge inside block 0 (cells 1 and 2)
    broken[0, 1] = broken[1, 0] = 0
    from sudoku_spectra.graph import LayerDecomposition

    with pytest.raises(StructureViolation):
        verify_layer_structure(LayerDecomposition(broken, d.l_h, d.l_v, d.m))


def test_structure_violation_overlapping_layers(freeform4):
    d = layers(freeform4)
    bad = d.l_h.copy()
    bad[0, 1] = bad[1, 0] = 1  # duplicates a block edge
    from sudoku_spectra.graph import LayerDecomposition

    with pytest.raises(StructureViolation):
        verify_layer_structure(LayerDecomposition(d.l_b, bad, d.l_v, d.m))


@given(tilings(max_m=5))
@settings(max_examples=40, deadline=None)
def test_layers_disjoint_and_sum(t):
    d = layers(t)
    for x, y in ((d.l_b, d.l_h), (d.l_b, d.l_v), (d.l_h, d.l_v)):
        assert not np.any(x * y)
    a = adjacency(t)
    assert np.array_equal(a, a.T)
    assert all(a[i, i] == 0 for i in range(t.n_cells))
    assert set(int(x) for x in a.flat) <= {0, 1}


@given(tilings(max_m=5))
@settings(max_examples=40, deadline=None)
def test_degree_formula(t):
    # degree = (block_size - 1) + (m - row_block_mates) + (m - col_block_mates)
    a = adjacency(t)
    p_row = block_row_profile(t, "row").p
    p_col = block_row_profile(t, "column").p
    m = t.m
    for c, b in enumerate(t.block_of):
        r_i = int(p_row[t.row_of(c), b])
        c_i = int(p_col[t.col_of(c), b])
        expected = (t.block_size - 1) + (m - r_i) + (m - c_i)
        assert int(sum(a[c])) == expected


@given(tilings(max_m=6))
@settings(max_examples=40, deadline=None)
def test_template_consistent_with_adjacency(t):
    tm = template(t)
    value = {"B": 1, "H": 1, "V": 1, "D": 0, "N": 0}
    rebuilt = la.int_matrix([[value[s] for s in row] for row in tm])
    assert np.array_equal(rebuilt, adjacency(t))


@given(tilings(max_m=4))
@settings(max_examples=30, deadline=None)
def test_structure_always_verifies(t):
    rep = verify_layer_structure(layers(t))
    assert rep.n_cliques == t.n_blocks
    assert rep.clique_size == t.block_size
