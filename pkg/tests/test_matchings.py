from itertools import combinations

import pytest

import dimeralg as da

from conftest import ALL_FIXTURES


def brute_force_perfect(q):
    """Independent oracle: try every arrow subset."""
    ids = [a.ident for a in q.arrows]
    found = []
    for r in range(len(ids) + 1):
        for subset in combinations(ids, r):
            chosen = set(subset)
            if all(len(chosen & set(f.boundary)) == 1 for f in q.faces):
                found.append(frozenset(chosen))
    return sorted(found, key=lambda s: tuple(sorted(s)))


@pytest.mark.parametrize("name", ["c3", "conif2", "conif2_target", "ex1", "perm2"])
def test_perfect_matchings_against_brute_force(quivers, name):
    q = quivers[name]
    assert [m.arrows for m in da.perfect_matchings(q)] == brute_force_perfect(q)


def test_c3_matchings(quivers):
    q = quivers["c3"]
    assert [sorted(m.arrows) for m in da.perfect_matchings(q)] == [[0], [1], [2]]
    # removing one loop from a one-vertex quiver keeps it strongly connected
    assert [sorted(m.arrows) for m in da.simple_matchings(q)] == [[0], [1], [2]]
    assert da.uncovered_arrows(q) == frozenset()


def test_perm2_matchings(quivers):
    q = quivers["perm2"]
    perfect = da.perfect_matchings(q)
    assert perfect
    # every matching must pick one side of the pendant 2-cycle
    assert all({4, 5} & m.arrows for m in perfect)
    assert da.simple_matchings(q) == ()


def test_every_simple_matching_is_perfect(quivers):
    for name in ALL_FIXTURES:
        q = quivers[name]
        perfect = {m.arrows for m in da.perfect_matchings(q)}
        for m in da.simple_matchings(q):
            assert m.arrows in perfect


def test_conif2_uncovered_is_contracted_arrow(quivers):
    assert da.uncovered_arrows(quivers["conif2"]) == frozenset({5})


def test_isor_target_has_three_simple_matchings(quivers, analyses):
    target = analyses["isor"].contraction.target
    assert len(da.simple_matchings(target)) == 3


def test_ex1_target_has_four_simple_matchings(analyses):
    target = analyses["ex1"].contraction.target
    assert len(da.simple_matchings(target)) == 4


def test_unsatisfiable_cover_gives_no_matchings():
    text = ("vertices 1\n"
            "arrow 0 0 0 1 0\narrow 1 0 0 -1 0\narrow 2 0 0 0 1\n"
            "face 0 0 1\nface 1 1 2\nface 2 2 0\n")
    assert da.perfect_matchings(da.parse_quiver(text)) == ()


def test_is_cancellative_certificates(quivers):
    cert = da.is_cancellative(quivers["c3"])
    assert cert.cancellative
    assert sorted(cert.cover) == [0, 1, 2]
    simples = da.simple_matchings(quivers["c3"])
    for arrow, idx in cert.cover.items():
        assert arrow in simples[idx].arrows

    cert = da.is_cancellative(quivers["conif2"])
    assert not cert.cancellative and cert.uncovered == frozenset({5})
    assert not da.is_cancellative(quivers["ex2"]).cancellative
