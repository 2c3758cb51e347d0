from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conicpos.classify_parabola import (
    CanonicalParabolaCircle, ParabolaEllipsePosition as P, ParabolaSignData, canonical_conics,
    classify_canonical, classify_general, sign_data,
)
from conicpos.conic import conic_from_equation
from conicpos.errors import InvalidParams, NoCaseMatched, RoleMismatch
from conicpos.numeric import Sign
from conicpos.witnesses import (
    EXTRA_PARABOLA, parabola_figure, parabola_figure_pair, rigid_scaling_map,
    transform_pair,
)

from conftest import positive_rationals, small_rationals

PARABOLA = conic_from_equation(1, 0, 0, 0, -2, 0)

# sign traces of the figure witnesses, computed once by the exact path
PARABOLA_TRACES = {
    1: ('1a', {'Delta': 1, 'DeltaPrime': 1, 'L1': 1, 'L2': 1, 'I5': 1, 'I4': -1, 'I3': 0, 'I2': 0}),
    2: ('2a', {'Delta': 0, 'DeltaPrime': 1, 'L1': 1, 'L2': 1, 'I5': 1, 'I4': -1, 'I3': 0, 'I2': 0}),
    3: ('3a', {'Delta': 1, 'DeltaPrime': 1, 'L1': -1, 'L2': -1, 'I5': -1, 'I4': 1, 'I3': 0, 'I2': 1}),
    4: ('4', {'Delta': -1, 'DeltaPrime': -1, 'L1': -1, 'L2': -1, 'I5': 1, 'I4': -1, 'I3': 0, 'I2': 0}),
    5: ('5', {'Delta': 1, 'DeltaPrime': 1, 'L1': -1, 'L2': -1, 'I5': -1, 'I4': -1, 'I3': 0, 'I2': -1}),
    6: ('6', {'Delta': 0, 'DeltaPrime': 1, 'L1': -1, 'L2': -1, 'I5': -1, 'I4': -1, 'I3': 0, 'I2': -1}),
    7: ('7d', {'Delta': 0, 'DeltaPrime': 0, 'L1': -1, 'L2': -1, 'I5': 0, 'I4': 0, 'I3': 0, 'I2': 0}),
    8: ('8', {'Delta': 0, 'DeltaPrime': 1, 'L1': -1, 'L2': -1, 'I5': -1, 'I4': 0, 'I3': 0, 'I2': -1}),
    9: ('9', {'Delta': 0, 'DeltaPrime': 0, 'L1': -1, 'L2': -1, 'I5': -1, 'I4': -1, 'I3': -1, 'I2': -1}),
}


def circle(xc, yc, r2):
    return conic_from_equation(1, 0, 1, -2 * Q(xc), -2 * Q(yc), Q(xc) ** 2 + Q(yc) ** 2 - Q(r2))


@pytest.mark.parametrize("center, r2, expected", [
    ((0, -3), 1, P.SEPARATED),
    ((0, Q(9, 4)), Q(65, 16), P.FOUR_INTERSECTIONS),
    ((0, 1), 1, P.ONE_INNER_TANGENT),
    ((0, 2), 4, P.TWO_INTERSECTIONS_AND_INNER_TANGENT),
])
def test_general_examples(center, r2, expected):
    assert classify_general(PARABOLA, circle(*center, r2)).position is expected


@pytest.mark.parametrize("params, case", [
    ((1, 0, -3, 1), 1),
    ((1, 0, 1, 1), 7),
    ((1, 0, Q(13, 2), 12), 8),
    # the centre (0, 5) with radius 4 cuts the parabola four times
    ((1, 0, 5, 16), 5),
])
def test_canonical_examples(params, case):
    assert classify_canonical(CanonicalParabolaCircle.from_center(*params)).case == case


def test_osculating_vertex_uses_triple_root_branch():
    v = classify_canonical(CanonicalParabolaCircle.from_center(1, 0, 1, 1))
    assert v.branch == "7d"
    assert (v.signs["c1P"], v.signs["c2P"], v.signs["c3P"]) == (Sign.ZERO,) * 3


@pytest.mark.parametrize("case", range(1, 10))
def test_figure_traces(case):
    branch, signs = PARABOLA_TRACES[case]
    v = classify_general(*parabola_figure_pair(case))
    assert v.case == case
    assert v.branch == branch
    assert {k: int(s) for k, s in v.signs.items()} == signs
    assert classify_canonical(parabola_figure(case)).case == case


def test_names_and_labels():
    assert P(1).label == "Separated"
    assert P(3).label == "EllipseInsideParabola"
    assert len([p for p in P if p]) == 9


def test_completion_branch():
    p = CanonicalParabolaCircle.from_center(*EXTRA_PARABOLA[3])
    N, M = canonical_conics(*EXTRA_PARABOLA[3])
    v = classify_general(N, M)
    assert v.case == 3 and v.branch == "3d"
    assert classify_canonical(p).branch == "3c"
    with pytest.raises(NoCaseMatched):
        classify_general(N, M, paper_only=True)
    with pytest.raises(NoCaseMatched):
        classify_canonical(p, paper_only=True)


def test_sign_data_record():
    s = sign_data(*parabola_figure_pair(1))
    assert isinstance(s, ParabolaSignData)
    assert s.Delta is Sign.POSITIVE and s.I3 is Sign.ZERO


def test_role_errors():
    with pytest.raises(RoleMismatch):
        classify_general(conic_from_equation(1, 0, -1, 0, 0, 1), circle(0, 0, 1))
    with pytest.raises(RoleMismatch):
        classify_general(PARABOLA, conic_from_equation(1, 0, 1, 0, 0, 1))
    with pytest.raises(InvalidParams):
        classify_canonical(CanonicalParabolaCircle(Q(1), Q(0), Q(0), Q(-1)))


def test_float_mode_on_generic_instance():
    N, M = canonical_conics(Q(1), Q(1, 3), Q(-2, 7), Q(5, 2))
    ex = classify_general(N, M)
    fl = classify_general(N.to_float(), M.to_float())
    assert fl.case == ex.case


def test_float_mode_flags_tangency():
    v = classify_general(*(c.to_float() for c in parabola_figure_pair(7)))
    assert v.case == 0 and v.unknown
    assert "I5" in v.reason or "Delta" in v.reason


params = st.tuples(positive_rationals(), small_rationals(), small_rationals(), positive_rationals(16))


@given(params, st.integers(-4, 4), st.integers(-5, 5), st.integers(-5, 5),
       st.sampled_from([Q(1, 3), 1, Q(7, 2)]), st.sampled_from([Q(-2), Q(1, 5), 3]))
def test_general_agrees_with_canonical_under_motions(p, t, tx, ty, k, kn):
    verdict = classify_canonical(CanonicalParabolaCircle.from_center(*p))
    N, M = transform_pair(*canonical_conics(*p), rigid_scaling_map(Q(t, 3), tx, ty, k), kn, -kn)
    assert classify_general(N, M).case == verdict.case


@given(params)
def test_mirror_symmetry(p):
    a2, xc, yc, d2 = p
    assert (classify_canonical(CanonicalParabolaCircle.from_center(a2, xc, yc, d2)).case
            == classify_canonical(CanonicalParabolaCircle.from_center(a2, -xc, yc, d2)).case)


@given(params, positive_rationals())
def test_uniform_scaling(p, k):
    c = CanonicalParabolaCircle.from_center(*p)
    assert classify_canonical(c).case == classify_canonical(c.scaled(k)).case
