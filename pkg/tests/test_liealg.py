"""so(3,2): bases, frozen bracket tables, grading, Killing form."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cartancr import linalg
from cartancr.liealg import (CAL_I, CONGRUENCE_S, CR_CONJ, DEGREES, DIM, I32,
                             Z_INDEX, adjoint_matrix, build_basis,
                             change_of_basis, commutator, grading_decomposition,
                             killing_form, killing_matrix, mat_add, mat_conj,
                             mat_scale, membership_so32)
from cartancr.numfield import AlgNum, ZERO, ONE, I, HALF

R3 = AlgNum.sqrt3(Fraction(1, 3))    # 1/sqrt3
R3H = AlgNum.sqrt3(Fraction(1, 6))   # 1/(2 sqrt3)
R6 = AlgNum.sqrt6(Fraction(1, 6))    # 1/sqrt6

# complete bracket table of the f basis, keys 1-based, [f_b, f_c] = sum a-th
F_TABLE = {
    (1, 6): {1: R3},
    (1, 8): {3: -R6},
    (1, 9): {2: R6},
    (1, 10): {6: -R3},
    (2, 3): {1: R6},
    (2, 4): {2: R3H},
    (2, 5): {3: R3H},
    (2, 6): {2: R3H},
    (2, 7): {3: R3H},
    (2, 8): {4: -R3H, 6: -R3H},
    (2, 9): {5: -R3H, 7: R3H},
    (2, 10): {9: -R6},
    (3, 4): {3: -R3H},
    (3, 5): {2: R3H},
    (3, 6): {3: R3H},
    (3, 7): {2: -R3H},
    (3, 8): {5: -R3H, 7: -R3H},
    (3, 9): {4: R3H, 6: -R3H},
    (3, 10): {8: R6},
    (4, 5): {7: R3},
    (4, 7): {5: R3},
    (4, 8): {8: R3H},
    (4, 9): {9: -R3H},
    (5, 7): {4: -R3},
    (5, 8): {9: R3H},
    (5, 9): {8: R3H},
    (6, 8): {8: R3H},
    (6, 9): {9: R3H},
    (6, 10): {10: R3},
    (7, 8): {9: -R3H},
    (7, 9): {8: R3H},
    (8, 9): {10: -R6},
}

# complete bracket table of the cr basis, same conventions
CR_TABLE = {
    (1, 6): {1: ONE},
    (1, 7): {1: ONE},
    (1, 8): {2: -I},
    (1, 9): {3: I},
    (1, 10): {6: -ONE, 7: -ONE},
    (2, 3): {1: I * HALF},
    (2, 5): {3: ONE},
    (2, 6): {2: ONE},
    (2, 8): {4: -HALF},
    (2, 9): {6: -HALF},
    (2, 10): {8: -I},
    (3, 4): {2: ONE},
    (3, 7): {3: ONE},
    (3, 8): {7: -HALF},
    (3, 9): {5: -HALF},
    (3, 10): {9: I},
    (4, 5): {6: -ONE, 7: ONE},
    (4, 6): {4: ONE},
    (4, 7): {4: -ONE},
    (4, 9): {8: ONE},
    (5, 6): {5: -ONE},
    (5, 7): {5: ONE},
    (5, 8): {9: ONE},
    (6, 9): {9: ONE},
    (6, 10): {10: ONE},
    (7, 8): {8: ONE},
    (7, 10): {10: ONE},
    (8, 9): {10: -I * HALF},
}


def _assert_table(kind, table):
    basis = build_basis(kind)
    sc = basis.structure_constants()
    for b in range(DIM):
        for c in range(b + 1, DIM):
            want = table.get((b + 1, c + 1), {})
            got = sc[(b, c)]
            for a in range(DIM):
                assert got[a] == want.get(a + 1, ZERO), (
                    f"[{basis.names[b]}, {basis.names[c]}] component {a}")


def test_f_bracket_table():
    _assert_table("f", F_TABLE)


def test_cr_bracket_table():
    _assert_table("cr", CR_TABLE)


def test_all_bases_satisfy_membership():
    for kind in ("standard", "cr", "f"):
        for e in build_basis(kind).elements:
            assert membership_so32(e)


def test_solution_space_of_form_identity_is_ten_dimensional():
    # A^T CalI + CalI A = 0 as 25 linear equations in the 25 entries of A
    rows = []
    for i in range(5):
        for j in range(5):
            row = [ZERO] * 25
            # (A^T CalI)_{ij} = A_{4-j, i} since CalI is the exchange matrix
            row[(4 - j) * 5 + i] += ONE
            row[(4 - i) * 5 + j] += ONE
            rows.append(row)
    assert len(linalg.nullspace(rows)) == 10


def test_grading_dimensions_and_eigenvalues():
    g = grading_decomposition()
    assert g["dims"] == {-2: 1, -1: 2, 0: 4, 1: 2, 2: 1}
    assert g["z_index"] == Z_INDEX
    assert g["m_minus"] == (0, 1, 2)
    assert g["h0"] == (5, 6)
    assert sum(g["dims"].values()) == DIM


def test_bracket_respects_degrees():
    # [g_i, g_j] lands in g_{i+j} (zero when i+j is out of range)
    basis = build_basis("standard")
    sc = basis.structure_constants()
    for b in range(DIM):
        for c in range(b + 1, DIM):
            tot = DEGREES[b] + DEGREES[c]
            for a in range(DIM):
                if DEGREES[a] != tot:
                    assert sc[(b, c)][a] == ZERO


def test_jacobi_identity_on_structure_constants():
    # checked on the abstract table, not on matrix commutators
    basis = build_basis("f")
    count = 0
    for a in range(DIM):
        for b in range(a + 1, DIM):
            for c in range(b + 1, DIM):
                count += 1
                for d in range(DIM):
                    acc = ZERO
                    for e in range(DIM):
                        acc += basis.c(e, b, c) * basis.c(d, a, e)
                        acc += basis.c(e, c, a) * basis.c(d, b, e)
                        acc += basis.c(e, a, b) * basis.c(d, c, e)
                    assert acc == ZERO
    assert count == 120


def test_cr_basis_reality():
    basis = build_basis("cr")
    for k in range(DIM):
        assert linalg.mat_eq(mat_conj(basis.elements[k]),
                             basis.elements[CR_CONJ[k]])
    # conjugation is an involution pairing degrees
    for k in range(DIM):
        assert CR_CONJ[CR_CONJ[k]] == k
        assert DEGREES[CR_CONJ[k]] == DEGREES[k]


def test_cr_structure_constants_reality():
    # conj(c^a_{bc}) = c^{conj a}_{conj b, conj c}
    basis = build_basis("cr")
    for b in range(DIM):
        for c in range(DIM):
            for a in range(DIM):
                lhs = basis.c(a, b, c).conj()
                rhs = basis.c(CR_CONJ[a], CR_CONJ[b], CR_CONJ[c])
                assert lhs == rhs


def test_killing_matrix_on_f_basis():
    km = killing_matrix(build_basis("f"))
    want = {(0, 9): ONE, (1, 7): ONE, (2, 8): ONE,
            (3, 3): ONE, (4, 4): ONE, (5, 5): ONE, (6, 6): -ONE}
    for i in range(DIM):
        for j in range(DIM):
            expect = want.get((i, j)) or want.get((j, i)) or ZERO
            assert km[i][j] == expect


def test_killing_is_three_times_trace_form():
    basis = build_basis("standard")
    km = killing_matrix(basis)
    for a in range(DIM):
        for b in range(DIM):
            prod = linalg.mat_mul(basis.elements[a], basis.elements[b])
            tr = sum((prod[i][i] for i in range(5)), ZERO)
            assert km[a][b] == AlgNum.of(3) * tr


def test_change_of_basis_witnesses():
    std, cr, f = build_basis("standard"), build_basis("cr"), build_basis("f")
    coeffs = f.expand(std.elements[0])
    assert coeffs[0] == AlgNum.sqrt6()
    assert all(c == ZERO for c in coeffs[1:])
    row = cr.expand(f.elements[1])
    assert row[1] == R6 and row[2] == R6
    assert all(row[k] == ZERO for k in range(DIM) if k not in (1, 2))
    # P(std->f) columns actually re-express the standard elements
    p = change_of_basis(std, f)
    for j in range(DIM):
        combo = linalg.zeros(5, 5)
        for i in range(DIM):
            combo = mat_add(combo, mat_scale(p[i][j], f.elements[i]))
        assert linalg.mat_eq(combo, std.elements[j])


def test_congruence_relates_the_two_forms():
    st_ = linalg.transpose(CONGRUENCE_S)
    assert linalg.mat_eq(linalg.mat_mul(st_, linalg.mat_mul(I32, CONGRUENCE_S)), CAL_I)


def test_expand_rejects_off_span():
    basis = build_basis("standard")
    bad = linalg.zeros(5, 5)
    bad[0][0] = ONE
    with pytest.raises(Exception):
        basis.expand(bad)


small = st.integers(min_value=-3, max_value=3)
vectors = st.tuples(*([small] * DIM))


def _combo(coeffs):
    basis = build_basis("standard")
    out = linalg.zeros(5, 5)
    for c, e in zip(coeffs, basis.elements):
        out = mat_add(out, mat_scale(AlgNum.of(c), e))
    return out


@given(vectors, vectors, vectors)
@settings(max_examples=15, deadline=None)
def test_killing_symmetry_and_invariance(u, v, w):
    x, y, z = _combo(u), _combo(v), _combo(w)
    assert killing_form(x, y) == killing_form(y, x)
    # ad-invariance: K([x,y],z) + K(y,[x,z]) = 0
    assert killing_form(commutator(x, y), z) + killing_form(y, commutator(x, z)) == ZERO


@given(vectors)
@settings(max_examples=15, deadline=None)
def test_adjoint_matrix_preserves_membership(u):
    x = _combo(u)
    assert membership_so32(x)
    ad = adjoint_matrix(x)
    # columns of ad x are bracket coordinates, so degree blocks shift by deg x
    assert len(ad) == DIM and len(ad[0]) == DIM
