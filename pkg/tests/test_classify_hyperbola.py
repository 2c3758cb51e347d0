from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conicpos.classify_hyperbola import (
    CanonicalHyperbolaCircle, HyperbolaEllipsePosition as H, HyperbolaSignData, canonical_conics,
    classify_canonical, classify_general, sign_data,
)
from conicpos.conic import conic_from_equation
from conicpos.errors import InvalidParams, RoleMismatch
from conicpos.numeric import Sign
from conicpos.witnesses import (
    EXTRA_HYPERBOLA, hyperbola_figure, hyperbola_figure_pair, rigid_scaling_map, transform_pair,
)

from conftest import positive_rationals, small_rationals

# y^2 - x^2 = 1
UNIT_HYPERBOLA = conic_from_equation(1, 0, -1, 0, 0, 1)

# sign traces of the figure witnesses, computed once by the exact path
HYPERBOLA_TRACES = {
    1: ('1', {'Delta': 1, 'DeltaPrime': 1, 'VarF': 2, 'J5': 1, 'J4': -1, 'J3': 0, 'K5': -1, 'K4': -1, 'K3': 0, 'J1': 1, 'VarG': 2, 'VarG3': 2, 'VarQ': 0}),
    2: ('2', {'Delta': -1, 'DeltaPrime': 1, 'VarF': 0, 'J5': 1, 'J4': -1, 'J3': 0, 'K5': -1, 'K4': -1, 'K3': -1, 'J1': 1, 'VarG': 2, 'VarG3': 2, 'VarQ': 0}),
    3: ('3b', {'Delta': 0, 'DeltaPrime': 0, 'VarF': 0, 'J5': 0, 'J4': 0, 'J3': 0, 'K5': -1, 'K4': -1, 'K3': -1, 'J1': 0, 'VarG': 0, 'VarG3': 0, 'VarQ': 0}),
    4: ('4', {'Delta': 0, 'DeltaPrime': 1, 'VarF': 0, 'J5': -1, 'J4': 0, 'J3': 0, 'K5': -1, 'K4': -1, 'K3': -1, 'J1': -1, 'VarG': 0, 'VarG3': 0, 'VarQ': 0}),
    5: ('5b', {'Delta': 0, 'DeltaPrime': 1, 'VarF': 0, 'J5': -1, 'J4': -1, 'J3': 0, 'K5': -1, 'K4': -1, 'K3': -1, 'J1': 0, 'VarG': 0, 'VarG3': 0, 'VarQ': 0}),
    6: ('6', {'Delta': 0, 'DeltaPrime': 1, 'VarF': 2, 'J5': 1, 'J4': -1, 'J3': 0, 'K5': -1, 'K4': -1, 'K3': -1, 'J1': 1, 'VarG': 2, 'VarG3': 2, 'VarQ': 0}),
    7: ('7', {'Delta': 0, 'DeltaPrime': 1, 'VarF': 2, 'J5': 1, 'J4': -1, 'J3': 0, 'K5': -1, 'K4': 0, 'K3': 0, 'J1': 1, 'VarG': 2, 'VarG3': 2, 'VarQ': 0}),
    8: ('8', {'Delta': 0, 'DeltaPrime': 1, 'VarF': 2, 'J5': 1, 'J4': -1, 'J3': 0, 'K5': -1, 'K4': 1, 'K3': -1, 'J1': 1, 'VarG': 2, 'VarG3': 2, 'VarQ': 2}),
    9: ('9b', {'Delta': 1, 'DeltaPrime': 1, 'VarF': 2, 'J5': 1, 'J4': -1, 'J3': 0, 'K5': -1, 'K4': 1, 'K3': 0, 'J1': 1, 'VarG': 2, 'VarG3': 2, 'VarQ': 1}),
    10: ('10a', {'Delta': 1, 'DeltaPrime': 1, 'VarF': 0, 'J5': -1, 'J4': 1, 'J3': -1, 'K5': -1, 'K4': -1, 'K3': -1, 'J1': -1, 'VarG': 2, 'VarG3': 1, 'VarQ': 0}),
    11: ('11', {'Delta': 0, 'DeltaPrime': 0, 'VarF': 0, 'J5': -1, 'J4': -1, 'J3': -1, 'K5': -1, 'K4': -1, 'K3': -1, 'J1': 1, 'VarG': 0, 'VarG3': 0, 'VarQ': 0}),
}


def circle(xc, yc, r2):
    return conic_from_equation(1, 0, 1, -2 * Q(xc), -2 * Q(yc), Q(xc) ** 2 + Q(yc) ** 2 - Q(r2))


@pytest.mark.parametrize("Nh, M, expected", [
    (UNIT_HYPERBOLA, circle(0, 0, Q(1, 4)), H.SEPARATED),
    (conic_from_equation(Q(1, 4), 0, -1, 0, 0, 1), circle(0, 0, 1), H.TWO_OUTER_TANGENTS),
    (UNIT_HYPERBOLA, circle(0, 2, 1), H.ONE_INNER_TANGENT),
    (UNIT_HYPERBOLA, circle(0, 0, 4), H.FOUR_INTERSECTIONS),
])
def test_general_examples(Nh, M, expected):
    assert classify_general(Nh, M).position is expected


@pytest.mark.parametrize("params, case", [
    ((1, 1, 0, 0, Q(1, 4)), 1),
    ((1, 1, 0, 2, 1), 3),
    ((4, 1, 0, 0, 1), 7),
])
def test_canonical_examples(params, case):
    assert classify_canonical(CanonicalHyperbolaCircle.from_center(*params)).case == case


@pytest.mark.parametrize("case", range(1, 12))
def test_figure_traces(case):
    branch, signs = HYPERBOLA_TRACES[case]
    v = classify_general(*hyperbola_figure_pair(case))
    assert v.case == case
    assert v.branch == branch
    assert {k: int(s) for k, s in v.signs.items()} == signs
    assert classify_canonical(hyperbola_figure(case)).case == case


def test_second_vertex_osculating_circle():
    # the osculating circle at (0, -b) is case 3 as well
    N, M = canonical_conics(*EXTRA_HYPERBOLA[3])
    assert classify_general(N, M).case == 3
    assert classify_canonical(CanonicalHyperbolaCircle.from_center(*EXTRA_HYPERBOLA[3])).case == 3


def test_labels():
    assert H(7).label == "TwoOuterTangents"
    assert len([h for h in H if h]) == 11


def test_sign_data_record():
    s = sign_data(*hyperbola_figure_pair(7))
    assert isinstance(s, HyperbolaSignData)
    assert s.K4 is Sign.ZERO and s.Delta is Sign.ZERO


def test_role_errors():
    with pytest.raises(RoleMismatch):
        classify_general(conic_from_equation(1, 0, 0, 0, -2, 0), circle(0, 0, 1))
    with pytest.raises(InvalidParams):
        classify_canonical(CanonicalHyperbolaCircle(Q(1), Q(-1), Q(0), Q(0), Q(1)))


def test_float_mode_on_generic_instance():
    N, M = canonical_conics(Q(2), Q(1, 3), Q(1, 5), Q(-7, 4), Q(3))
    assert classify_general(N.to_float(), M.to_float()).case == classify_general(N, M).case


def test_float_mode_flags_tangency():
    v = classify_general(*(c.to_float() for c in hyperbola_figure_pair(7)))
    assert v.case == 0 and v.unknown


params = st.tuples(positive_rationals(), positive_rationals(), small_rationals(), small_rationals(),
                   positive_rationals(16))


@given(params, st.integers(-4, 4), st.integers(-5, 5), st.integers(-5, 5),
       st.sampled_from([Q(1, 3), 1, Q(7, 2)]), st.sampled_from([Q(-2), Q(1, 5), 3]))
def test_general_agrees_with_canonical_under_motions(p, t, tx, ty, k, kn):
    verdict = classify_canonical(CanonicalHyperbolaCircle.from_center(*p))
    N, M = transform_pair(*canonical_conics(*p), rigid_scaling_map(Q(t, 3), tx, ty, k), kn, -kn)
    assert classify_general(N, M).case == verdict.case


@given(params)
def test_reflections(p):
    a2, b2, xc, yc, d2 = p
    case = classify_canonical(CanonicalHyperbolaCircle.from_center(*p)).case
    for sx, sy in ((-1, 1), (1, -1), (-1, -1)):
        c = CanonicalHyperbolaCircle.from_center(a2, b2, sx * xc, sy * yc, d2)
        assert classify_canonical(c).case == case


@given(params, positive_rationals())
def test_uniform_scaling(p, k):
    c = CanonicalHyperbolaCircle.from_center(*p)
    assert classify_canonical(c).case == classify_canonical(c.scaled(k)).case
