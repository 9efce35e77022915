"""The projective model hypersurface and its tube realization."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cartancr import liealg, linalg, model
from cartancr.numfield import AlgNum, ZERO, ONE, I

MEMBERS = [
    (ONE, I, ZERO, ONE, -I),
    (ONE, -I, ZERO, ONE, -I),
    (ZERO, ONE, I, ONE, -I),
]


def test_membership_verdicts():
    res = model.membership_model((ONE, I, ZERO, ONE, -I))
    assert res["member"]
    assert res["symmetric"] == ZERO and res["hermitian"] == ZERO
    assert res["positivity_sign"] == 1

    res = model.membership_model((ONE, ZERO, ZERO, ZERO, ZERO))
    assert not res["member"]
    assert res["positivity_sign"] == 0

    res = model.membership_model((ONE, I, ZERO, ONE, I))
    assert not res["member"]
    assert res["symmetric"] == ZERO and res["hermitian"] == ZERO
    assert res["positivity_sign"] == -1


def test_all_listed_members():
    for p in MEMBERS:
        assert model.membership_model(p)["member"]


def test_zero_vector_rejected():
    with pytest.raises(ValueError):
        model.membership_model((ZERO,) * 5)


def test_membership_is_projective():
    # scaling by a nonzero field element never changes the verdict
    for lam in (AlgNum.of(2) + I, I, AlgNum.sqrt2() - I):
        for p in MEMBERS + [(ONE, I, ZERO, ONE, I)]:
            scaled = tuple(lam * c for c in p)
            assert (model.membership_model(scaled)["member"]
                    == model.membership_model(p)["member"])


def test_chart_roundtrip():
    for p in MEMBERS:
        back = model.from_exchange_chart(model.to_exchange_chart(p))
        assert back == list(p)


def test_chart_intertwines_pairings():
    # S^T I32 S = CalI, so the model pairing pulls back to the exchange form
    u = (ONE, I, AlgNum.of(2), ZERO, -I)
    v = (ZERO, ONE, -I, AlgNum.sqrt2(), ONE)
    pu, pv = model.to_exchange_chart(u), model.to_exchange_chart(v)
    cal = sum((pu[i] * liealg.CAL_I[i][j] * pv[j]
               for i in range(5) for j in range(5)), ZERO)
    assert model.symmetric_pairing(list(u), list(v)) == cal


def test_infinitesimal_action_requires_membership():
    x = liealg.build_basis("standard").elements[0]
    with pytest.raises(ValueError):
        model.infinitesimal_action(x, (ONE, ZERO, ZERO, ZERO, ZERO))
    vel = model.infinitesimal_action(x, MEMBERS[0])
    assert len(vel) == 5


def test_tangency_defects_vanish_for_all_sixty():
    zeros = 0
    for x in liealg.build_basis("standard").elements:
        for p in MEMBERS:
            d_sym, d_herm = model.tangency_defects(x, p)
            assert d_sym.is_zero() and d_herm.is_zero()
            zeros += 2
    assert zeros == 60


def test_tangency_defects_detect_non_algebra_flows():
    bad = linalg.zeros(5, 5)
    bad[0][0] = ONE     # not in the algebra
    flagged = False
    for p in MEMBERS:
        d_sym, d_herm = model.tangency_defects(bad, p)
        if not (d_sym.is_zero() and d_herm.is_zero()):
            flagged = True
    assert flagged


def test_levi_matrix_at_345():
    data = model.levi_form_tube((3, 4, 5))
    want = [[AlgNum.of(8), AlgNum.of(-6)],
            [AlgNum.of(-6), AlgNum.of(Fraction(9, 2))]]
    assert data["matrix"] == want
    assert data["determinant"] == ZERO
    assert data["kernel_dim"] == 1
    assert data["kernel_is_radial"]


def test_levi_kernel_along_the_cone():
    out = model.levi_kernel_distribution_check()
    assert set(out) == set(model.PYTHAGOREAN_SAMPLES)
    for res in out.values():
        assert res["kernel_dim"] == 1
        assert res["kernel_is_radial"]


def test_levi_form_rejects_bad_points():
    with pytest.raises(ValueError):
        model.levi_form_tube((I, ZERO, ONE))          # not real
    with pytest.raises(ValueError):
        model.levi_form_tube((1, 1, 2))               # off the cone
    with pytest.raises(ValueError):
        model.levi_form_tube((3, 4, -5))              # wrong sheet
    with pytest.raises(ValueError):
        model.levi_form_tube((0, 0, 0))               # apex


small = st.integers(min_value=-3, max_value=3)
gauss = st.tuples(small, small).map(lambda p: AlgNum.from_complex_rat(*p))
points = st.tuples(*([gauss] * 5))


@given(points, points)
@settings(max_examples=50)
def test_pairing_symmetries(u, v):
    u, v = list(u), list(v)
    assert model.symmetric_pairing(u, v) == model.symmetric_pairing(v, u)
    assert model.hermitian_pairing(u, v) == model.hermitian_pairing(v, u).conj()
