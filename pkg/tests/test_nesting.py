"""Cross-checks built around the nested-conifold family.

The doubly nested fixture fails normality; the singly nested quiver built
by the same subdivision gadget must still be normal with sigma * S inside
R.  This pins the gadget down independently of the shipped fixture.
"""

from fractions import Fraction

import pytest

import dimeralg as da
from dimeralg.centers import analysis_context
from dimeralg.paths import CentralCandidate, PathBudget

NESTED1 = """
vertices 6
arrow 0 0 1 0 0
arrow 1 1 0 0 1
arrow 2 0 1 -1 0
arrow 3 1 0 1 -1
arrow 4 1 2 0 0
arrow 5 0 3 0 -1
arrow 6 1 4 1 -1
arrow 7 0 5 0 0
arrow 8 2 0 0 0
arrow 9 3 1 0 0
arrow 10 4 0 0 1
arrow 11 5 1 -1 1
arrow 12 2 3 0 0
arrow 13 3 4 0 0
arrow 14 4 5 0 0
arrow 15 5 2 0 0
face 0 0 4 8
face 1 1 5 9
face 2 2 6 10
face 3 3 7 11
face 4 8 7 15
face 5 9 4 12
face 6 10 5 13
face 7 11 6 14
face 8 12 13 14 15
face 9 2 1 0 3
"""


@pytest.fixture(scope="module")
def nested1():
    q = da.parse_quiver(NESTED1)
    assert da.validate(q).valid
    return q


def test_nested1_is_normal_but_nested2_is_not(nested1, quivers, analyses):
    c = da.contract(nested1, (8, 9, 10, 11))
    assert da.is_cancellative(c.target).cancellative
    assert da.is_cyclic(c).cyclic
    S = da.cycle_algebra(nested1, c)
    R = da.homotopy_center(nested1, c)
    assert R.exact
    # one nesting level: sigma already multiplies S into R
    assert R.sigma_power == 1
    assert da.is_normal(R, S)
    # two levels push the threshold up by one and destroy normality
    assert analyses["nested2"].R.sigma_power == 2
    assert not da.is_normal(analyses["nested2"].R, analyses["nested2"].S)


def test_nested1_red_cycle_is_not_r_equal(nested1):
    # the inner square composed with spokes realizes sigma without being a
    # product of unit cycles, so R is strictly smaller than S
    c = da.contract(nested1, (8, 9, 10, 11))
    R = da.homotopy_center(nested1, c)
    w = da.nonnoetherian_witness(R)
    assert w is not None and w.N == 1


def test_centrality_checker_reports_budget_exhaustion(quivers, analyses):
    q = quivers["conif2"]
    ctx = analysis_context(q, analyses["conif2"].contraction)
    p = da.Path(q, 1, (1, 6, 6, 3, 5))
    qq = da.Path(q, 1, (0, 6, 6, 2, 5))
    g = da.label(ctx, p)
    cand = CentralCandidate(ctx, {1: ((Fraction(1), p), (Fraction(-1), qq))}, g)
    verdict = da.is_central(cand, PathBudget(length_cap=6, node_budget=2))
    assert verdict.status == "unknown"


def test_simplifying_isor_target_matches_the_reduced_quiver(analyses):
    # deleting the four removable 2-cycles leaves the printed six-arrow
    # quiver with one loop at each vertex, and the cycle algebra survives
    a = analyses["isor"]
    target = a.contraction.target
    assert len(target.arrows) == 10
    reduced = da.simplify_two_cycles(target)
    assert reduced.num_vertices == 2
    assert len(reduced.arrows) == 6
    assert da.validate(reduced).valid
    assert da.is_cancellative(reduced).cancellative
    loops = [ar for ar in reduced.arrows if ar.tail == ar.head]
    assert len(loops) == 2 and loops[0].tail != loops[1].tail
    assert len(da.simple_matchings(reduced)) == 3
    S_reduced = da.cycle_algebra(reduced)
    expected = {a.mono(x=2), a.mono(x=1, y=1), a.mono(y=2), a.mono(z=1)}
    assert set(S_reduced.generators) == expected
