from fractions import Fraction as F

import pytest
from hypothesis import assume, given, strategies as st

from planecount.bounds import (
    InvalidM,
    InvalidN,
    bound_chain,
    contradiction_report,
    edge_upper_bound,
    face_count_bound,
    format_rational,
    ky_lower_bound,
    raw_face_bound,
    theorem4_verdict,
)
from planecount.plane import build_plane_graph


def test_verdict_cube(cube_rotation):
    v = theorem4_verdict(build_plane_graph(cube_rotation))
    assert v.hypotheses_hold and v.conclusion_holds
    assert (v.counts.f3, v.counts.f) == (0, 6)
    assert v.slack == 4


def test_verdict_k4(k4_rotation):
    v = theorem4_verdict(build_plane_graph(k4_rotation))
    assert not v.hypotheses_hold
    assert v.failed_hypotheses == ("no_shared_triangle_edge",)
    assert (v.counts.f3, v.counts.f) == (4, 4)


def test_verdict_prism(prism_rotation):
    v = theorem4_verdict(build_plane_graph(prism_rotation))
    assert v.hypotheses_hold and v.conclusion_holds
    assert (v.counts.f3, v.counts.f) == (2, 5)
    assert v.slack == F(4, 3)


@pytest.mark.parametrize("m, coeff", [(12, F(1, 3)), (11, F(6, 17)), (9, F(2, 5))])
def test_face_count_closed_forms(m, coeff):
    for e in range(0, 60):
        _, closed = face_count_bound(m, e, 0)
        assert closed == coeff * e
    assert bound_chain(m).face_coefficient == coeff


@pytest.mark.parametrize(
    "m, n, expected",
    [(12, 30, F(42)), (11, 13, F(17)), (9, 10, F(40, 3))],
)
def test_edge_upper_bound_examples(m, n, expected):
    assert edge_upper_bound(m, n) == expected


@pytest.mark.parametrize(
    "m, closed_form",
    [
        (12, lambda n: F(3, 2) * n - 3),
        (11, lambda n: F(17, 11) * n - F(34, 11)),
        (9, lambda n: F(5, 3) * n - F(10, 3)),
    ],
)
def test_edge_upper_bound_closed_forms(m, closed_form):
    chain = bound_chain(m)
    for n in range(1, 200):
        assert edge_upper_bound(m, n) == closed_form(n) == chain.edge_bound(n)


def test_raw_face_bound_instances():
    # f <= f3 + (2e - 3 f3)/m with m = 12 simplifies to e/6 + 3 f3/4
    for e in range(30):
        for f3 in range(10):
            assert raw_face_bound(12, e, f3) == F(e, 6) + F(3 * f3, 4)
            assert raw_face_bound(11, e, f3) == F(2 * e, 11) + F(8 * f3, 11)
            assert raw_face_bound(9, e, f3) == F(2 * e, 9) + F(2 * f3, 3)


@pytest.mark.parametrize("n, expected", [(4, F(6)), (6, F(28, 3)), (11, F(53, 3)), (10, F(16))])
def test_ky_lower_bound(n, expected):
    assert ky_lower_bound(n) == expected


def test_invalid_parameters():
    with pytest.raises(InvalidM):
        edge_upper_bound(6, 10)
    with pytest.raises(InvalidM):
        face_count_bound(4, 10, 0)
    with pytest.raises(InvalidM):
        contradiction_report(3)
    with pytest.raises(InvalidN):
        ky_lower_bound(3)


def test_contradiction_m9_always():
    rep = contradiction_report(9)
    assert rep.always_contradicts and rep.threshold_n == 4
    assert rep.gap_slope == 0 and rep.gap_offset == F(8, 3)


def test_contradiction_m12_always():
    assert contradiction_report(12).always_contradicts


def test_contradiction_m8_fails_for_large_n():
    rep = contradiction_report(8)
    assert not rep.always_contradicts
    assert rep.threshold_n is None
    # -n/12 + 17/6 >= 0 exactly for n <= 34
    assert rep.contradicts_up_to == 34
    assert rep.gap_slope == F(-1, 12)


@pytest.mark.parametrize("m", range(7, 40))
def test_contradiction_report_matches_scan(m):
    rep = contradiction_report(m)
    holds = [ky_lower_bound(n) >= edge_upper_bound(m, n) for n in range(4, 3000)]
    assert rep.always_contradicts == all(holds)
    if rep.threshold_n is not None:
        k = rep.threshold_n - 4
        assert all(holds[k:]) and (k == 0 or not holds[k - 1])
    if rep.contradicts_up_to is not None:
        k = rep.contradicts_up_to - 4
        assert holds[k] and not any(holds[k + 1:])


@given(st.integers(0, 10**6), st.integers(1, 10**6))
def test_format_rational_round_trip(p, q):
    text = format_rational(F(p, q))
    assert F(text) == F(p, q)
    num, den = text.split("/")
    assert F(int(num), int(den)).denominator == int(den)


@given(st.integers(7, 40), st.integers(0, 300), st.data())
def test_chain_follows_from_premises(m, e, data):
    # the two premises of the counting argument force the closed-form bound;
    # feasibility needs f3 < 4e/(m+6)
    f3 = data.draw(st.integers(0, 4 * e // (m + 6)))
    lo = 3 * f3 // 2 + 1
    hi = raw_face_bound(m, e, f3)
    hi = hi.numerator // hi.denominator
    assume(lo <= hi)
    f = data.draw(st.integers(lo, hi))
    assert 3 * f3 < 2 * f and f <= raw_face_bound(m, e, f3)
    _, closed = face_count_bound(m, e, f3)
    assert f < closed


@given(st.integers(7, 60), st.integers(3, 10**5))
def test_edge_bound_follows_from_face_bound(m, n):
    # e = n + f - 2 with f < 6e/(m+6) is equivalent to e < (m+6)(n-2)/m
    bound = edge_upper_bound(m, n)
    for e in (bound.numerator // bound.denominator - 1, bound.numerator // bound.denominator + 1):
        f = e - n + 2
        assert (F(f) < F(6 * e, m + 6)) == (e < bound)


def test_face_bounds_hold_on_real_plane_graphs():
    from planecount.corpus import CorpusFilter, enumerate_embeddings, enumerate_small_graphs

    checked = 0
    for g in enumerate_small_graphs(CorpusFilter(max_n=6)):
        if g.n < 3:
            continue
        for rot in enumerate_embeddings(g):
            pg = build_plane_graph(rot)
            v = theorem4_verdict(pg)
            c = v.counts
            tri = set(pg.triangular_faces())
            other = [L for i, L in enumerate(pg.faces.lengths) if i not in tri]
            if not other:
                continue
            m = min(other)
            assert c.f <= raw_face_bound(m, c.e, c.f3)
            if v.hypotheses_hold:
                assert v.conclusion_holds
                # closed form needs only m >= 3 once the density bound holds
                assert c.f < F(6 * c.e, m + 6)
            checked += 1
    assert checked > 500
