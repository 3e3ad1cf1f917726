import random

import pytest

import dimeralg as da
from dimeralg.centers import CenterBounds, analysis_context, hilbert_counts
from dimeralg.contraction import (ContractedCycleError, ContractedFaceError,
                                  SearchSpaceExceededError,
                                  TargetNotCancellativeError,
                                  TargetNotDimerError)

from conftest import CANONICAL


def _face_keys(q):
    def canon(boundary):
        rotations = [boundary[i:] + boundary[:i] for i in range(len(boundary))]
        return min(rotations)
    return sorted(canon(f.boundary) for f in q.faces)


def test_conif2_contracts_to_its_target(quivers):
    c = da.contract(quivers["conif2"], (5,))
    target, expected = c.target, quivers["conif2_target"]
    assert target.num_vertices == expected.num_vertices == 2
    assert len(target.arrows) == len(expected.arrows) == 6
    assert [(a.tail, a.head) for a in target.arrows] == \
           [(a.tail, a.head) for a in expected.arrows]
    assert _face_keys(target) == _face_keys(expected)
    report = da.validate(target)
    assert report.valid


def test_contract_errors(quivers):
    with pytest.raises(ContractedCycleError):
        da.contract(quivers["c3"], (0,))             # a loop is a graph cycle
    with pytest.raises(ContractedCycleError):
        da.contract(quivers["conif2"], (2, 3))       # parallel arrows
    with pytest.raises(ContractedFaceError):
        da.contract(quivers["perm2"], (4, 5))        # a whole 2-cycle face
    with pytest.raises(TargetNotDimerError):
        da.contract(quivers["perm2"], (4,))          # leaves a length-1 face
    with pytest.raises(da.ContractionError):
        da.contract(quivers["c3"], (9,))             # unknown id


def test_ex1_green_contraction_reaches_the_square_target(quivers):
    # contracting the two interior arrows of the hexagon pair yields the
    # two-vertex square quiver with two 4-cycle faces
    c = da.contract(quivers["ex1"], (4, 5))
    target = c.target
    assert target.num_vertices == 2 and len(target.arrows) == 4
    assert sorted(len(f.boundary) for f in target.faces) == [4, 4]
    assert da.is_cancellative(target).cancellative
    assert da.is_cyclic(c).cyclic


def test_identity_contraction(quivers):
    c = da.contract(quivers["c3"], ())
    assert c.is_identity()
    assert da.is_cyclic(c).cyclic


def test_psi_transport(analyses):
    a = analyses["conif2"]
    c = a.contraction
    p = da.Path(a.quiver, 1, (1, 6, 6, 3, 5))
    image = c.psi(p)
    assert image.base == c.vertex_map[1]
    assert len(image) == 4                      # the contracted arrow drops out
    assert image.displacement == p.displacement  # its wind was gauged to zero


def test_psi_preserves_labels_and_windings(analyses):
    rng = random.Random(3)
    for name in ("conif2", "ex1", "ex3"):
        a = analyses[name]
        q, c = a.quiver, a.contraction
        ctx = analysis_context(q, c)
        target_ctx = da.build_context(c.target, "simple")
        cycles_seen = 0
        for _ in range(400):
            v = rng.randrange(q.num_vertices)
            path = da.Path(q, v)
            for _ in range(rng.randrange(1, 9)):
                path = path.compose(
                    da.Path(q, path.head, (rng.choice(q.out_arrows(path.head)),)))
            image = c.psi(path)
            assert da.label(ctx, path) == da.label(target_ctx, image)
            if path.is_cycle():
                # winding is a gauge invariant of cycles, so psi preserves it
                cycles_seen += 1
                assert image.displacement == path.displacement
        assert cycles_seen > 20


def test_is_cyclic_conif2(analyses):
    result = da.is_cyclic(analyses["conif2"].contraction)
    assert result.cyclic
    assert da.semigroups_equal(result.cycle_algebra, result.target_cycle_algebra)


def test_is_cyclic_requires_cancellative_target(quivers):
    c = da.contract(quivers["ex1"], (1,))
    assert not da.is_cancellative(c.target).cancellative
    with pytest.raises(TargetNotCancellativeError):
        da.is_cyclic(c)


def test_find_cyclic_contraction(quivers):
    assert sorted(da.find_cyclic_contraction(quivers["conif2"]).contracted) == [5]
    assert da.find_cyclic_contraction(quivers["c3"]).is_identity()
    assert da.find_cyclic_contraction(quivers["perm2"]) is None
    with pytest.raises(SearchSpaceExceededError):
        da.find_cyclic_contraction(quivers["isor"])


def test_discovered_contractions_lie_in_uncovered(quivers):
    for name in ("conif2", "ex1", "ex2", "ex3", "sigall"):
        q = quivers[name]
        c = da.find_cyclic_contraction(q)
        assert c.contracted <= da.uncovered_arrows(q)


def test_canonical_contractions_lie_in_uncovered(quivers):
    for name, arrows in CANONICAL.items():
        if not arrows:
            continue
        assert frozenset(arrows) <= da.uncovered_arrows(quivers[name])


def test_cycle_algebra_independent_of_contraction(quivers):
    # alternative cyclic contractions give the same graded dimensions
    cases = {"ex1": [(1, 3), (4, 5)], "ex2": [(5,), (8,)],
             "sigall": [(0, 2, 3, 5), (0, 3, 5, 6)]}
    for name, specs in cases.items():
        counts = []
        for spec in specs:
            q = da.parse_quiver(quivers[name].to_text())   # fresh cache
            c = da.contract(q, spec)
            assert da.is_cyclic(c).cyclic
            counts.append(hilbert_counts(da.cycle_algebra(q, c), 8))
        assert counts[0] == counts[1]


def test_simplify_two_cycles_ex2(quivers):
    target = da.contract(quivers["ex2"], (5,)).target
    assert len(target.arrows) == 8
    reduced = da.simplify_two_cycles(target)
    assert len(reduced.arrows) == 4
    assert len(reduced.faces) == 2
    assert da.validate(reduced).valid
    assert da.is_cancellative(reduced).cancellative


def test_contract_cli_roundtrip(quivers):
    text = da.contract(quivers["conif2"], (5,)).target.to_text()
    again = da.parse_quiver(text)
    assert da.validate(again).valid
