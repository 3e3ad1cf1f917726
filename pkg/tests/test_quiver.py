import pytest

import dimeralg as da
from dimeralg.fixtures import FIXTURES
from dimeralg.quiver import QuiverFormatError, face_path

from conftest import ALL_FIXTURES


def test_parse_c3(quivers):
    q = quivers["c3"]
    assert q.num_vertices == 1
    assert len(q.arrows) == 3
    assert len(q.faces) == 2
    assert q.arrow(0).wind == (1, 0)
    assert q.arrow(2).wind == (-1, -1)
    assert q.faces[0].boundary == (0, 1, 2)


def test_parse_conif2_counts(quivers):
    # V - E + F = 0 with three vertices and one interior arrow contracted away
    q = quivers["conif2"]
    assert (q.num_vertices, len(q.arrows), len(q.faces)) == (3, 7, 4)


def test_parse_errors():
    with pytest.raises(QuiverFormatError, match="vertices"):
        da.parse_quiver("arrow 0 0 0 0 0\n")
    with pytest.raises(QuiverFormatError, match="missing 'vertices'"):
        da.parse_quiver("# nothing here\n")
    with pytest.raises(QuiverFormatError, match="duplicate arrow id"):
        da.parse_quiver("vertices 1\narrow 0 0 0 0 0\narrow 0 0 0 1 0\n")
    with pytest.raises(QuiverFormatError, match="missing arrow 7"):
        da.parse_quiver("vertices 1\narrow 0 0 0 0 0\nface 0 0 7\n")
    with pytest.raises(QuiverFormatError, match="contiguous"):
        da.parse_quiver("vertices 1\narrow 1 0 0 0 0\n")
    err = None
    try:
        da.parse_quiver("vertices 1\narrow 0 0 zero 0 0\n")
    except QuiverFormatError as exc:
        err = exc
    assert err is not None and err.line == 2 and err.column == 11


def test_parse_comments_and_roundtrip(quivers):
    q = quivers["ex2"]
    again = da.parse_quiver(q.to_text())
    assert again.num_vertices == q.num_vertices
    assert [a.wind for a in again.arrows] == [a.wind for a in q.arrows]
    assert [f.boundary for f in again.faces] == [f.boundary for f in q.faces]


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_all_fixtures_validate(quivers, name):
    report = da.validate(quivers[name])
    assert report.valid, [c for c in report.failures()]


def test_validate_broken_face():
    text = FIXTURES["c3"].replace("face 0 0 1 2", "face 0 0 1")
    report = da.validate(da.parse_quiver(text))
    assert not report.valid
    failed = {c.name for c in report.failures()}
    # the loop z now sits on one face only and the shortened face winds badly
    assert "arrow-in-two-faces" in failed
    assert "face-winding-zero" in failed


def test_validate_requires_perfect_matching():
    # three loops on one vertex with an odd incidence pattern: no exact cover
    text = ("vertices 1\n"
            "arrow 0 0 0 1 0\narrow 1 0 0 -1 0\narrow 2 0 0 0 1\n"
            "face 0 0 1\nface 1 1 2\nface 2 2 0\n")
    q = da.parse_quiver(text)
    assert da.perfect_matchings(q) == ()
    report = da.validate(q)
    assert not report.valid


def test_unit_cycle_at(quivers):
    q = quivers["c3"]
    p = da.unit_cycle_at(q, 0)
    assert p.arrows == (0, 1, 2) and p.base == 0 and p.is_cycle()
    # any face through the vertex gives the same cycle modulo the relations
    other = face_path(q, q.faces[1], 0)
    assert da.paths_equal(p, other).is_equal


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_unit_cycle_face_choice_irrelevant(quivers, name):
    q = quivers[name]
    for v in q.vertices:
        base = da.unit_cycle_at(q, v)
        for f in q.faces:
            for idx, ident in enumerate(f.boundary):
                if q.arrow(ident).tail == v:
                    alt = face_path(q, f, idx)
                    assert da.paths_equal(base, alt).is_equal
                    break


def test_unit_cycle_missing_vertex():
    text = ("vertices 2\n"
            "arrow 0 0 0 1 0\narrow 1 0 0 0 1\narrow 2 0 0 -1 -1\n"
            "face 0 0 1 2\nface 1 0 2 1\n")
    q = da.parse_quiver(text)
    with pytest.raises(ValueError, match="vertex 1"):
        da.unit_cycle_at(q, 1)


def test_lift_displacement(quivers):
    q = quivers["c3"]
    e = da.Path(q, 0)
    assert da.lift_displacement(e) == (0, 0)
    x = da.Path(q, 0, (0,))
    assert da.lift_displacement(x) == (1, 0)
    for f in q.faces:
        assert da.lift_displacement(face_path(q, f, 0)) == (0, 0)
    xy = x.compose(da.Path(q, 0, (1,)))
    assert da.lift_displacement(xy) == (1, 1)


def test_path_composability_checked(quivers):
    q = quivers["conif2"]
    with pytest.raises(ValueError):
        da.Path(q, 0, (0,))       # arrow 0 starts at vertex 1
    with pytest.raises(ValueError):
        da.Path(q, 1, (1,)).compose(da.Path(q, 1, (1,)))
