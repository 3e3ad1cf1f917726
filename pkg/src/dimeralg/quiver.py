"""Dimer quivers embedded in the two-torus.

A dimer quiver is stored combinatorially: arrows carry integer winding
vectors (the displacement of their lift across the fundamental domain) and
each face lists its boundary arrows in traversal order.  Faces are oriented
cycles; every arrow lies on exactly two faces.  Validity of an embedding is
decided by the checks in :func:`validate`.
"""

from __future__ import annotations

from dataclasses import dataclass


class QuiverFormatError(ValueError):
    """Raised on malformed quiver files; carries 1-based line/column."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


@dataclass(frozen=True)
class Arrow:
    ident: int
    tail: int
    head: int
    wind: tuple[int, int]


@dataclass(frozen=True)
class Face:
    ident: int
    boundary: tuple[int, ...]


class DimerQuiver:
    """Vertices 0..V-1, arrows with winds, oriented faces.

    Instances are immutable after construction and hashable by identity;
    derived data (matchings, relations, ...) is memoized in ``_cache``.
    """

    def __init__(self, num_vertices: int, arrows, faces):
        self.num_vertices = int(num_vertices)
        self.arrows = tuple(arrows)
        self.faces = tuple(faces)
        self._cache: dict = {}
        out: list[list[int]] = [[] for _ in range(self.num_vertices)]
        inc: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for a in self.arrows:
            if 0 <= a.tail < self.num_vertices:
                out[a.tail].append(a.ident)
            if 0 <= a.head < self.num_vertices:
                inc[a.head].append(a.ident)
        self._out = tuple(tuple(v) for v in out)
        self._in = tuple(tuple(v) for v in inc)

    @property
    def vertices(self) -> range:
        return range(self.num_vertices)

    def arrow(self, ident: int) -> Arrow:
        return self.arrows[ident]

    def out_arrows(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_arrows(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def faces_of_arrow(self, ident: int) -> tuple[int, ...]:
        table = self._cache.get("faces_of_arrow")
        if table is None:
            table = {a.ident: [] for a in self.arrows}
            for f in self.faces:
                for a in f.boundary:
                    table[a].append(f.ident)
            table = {k: tuple(v) for k, v in table.items()}
            self._cache["faces_of_arrow"] = table
        return table[ident]

    def to_text(self, header: str | None = None) -> str:
        lines = []
        if header:
            for h in header.splitlines():
                lines.append(f"# {h}")
        lines.append(f"vertices {self.num_vertices}")
        for a in self.arrows:
            lines.append(f"arrow {a.ident} {a.tail} {a.head} {a.wind[0]} {a.wind[1]}")
        for f in self.faces:
            lines.append("face " + " ".join(str(x) for x in (f.ident, *f.boundary)))
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return (f"DimerQuiver(V={self.num_vertices}, E={len(self.arrows)}, "
                f"F={len(self.faces)})")


class Path:
    """Composable arrow sequence in temporal order (first arrow first).

    The empty sequence encodes the idempotent at ``base``.  The lift
    displacement is the componentwise sum of arrow winds, so it is additive
    under composition.
    """

    __slots__ = ("quiver", "base", "arrows", "head", "displacement")

    def __init__(self, quiver: DimerQuiver, base: int, arrows=()):
        arrows = tuple(arrows)
        at = base
        dx = dy = 0
        for ident in arrows:
            a = quiver.arrow(ident)
            if a.tail != at:
                raise ValueError(f"arrow {ident} has tail {a.tail}, expected {at}")
            at = a.head
            dx += a.wind[0]
            dy += a.wind[1]
        self.quiver = quiver
        self.base = base
        self.arrows = arrows
        self.head = at
        self.displacement = (dx, dy)

    def is_vertex(self) -> bool:
        return not self.arrows

    def is_cycle(self) -> bool:
        return self.head == self.base

    def compose(self, other: "Path") -> "Path":
        """Traverse ``self`` first, then ``other``."""
        if other.base != self.head:
            raise ValueError("paths do not compose")
        return Path(self.quiver, self.base, self.arrows + other.arrows)

    def power(self, n: int) -> "Path":
        if not self.is_cycle():
            raise ValueError("only cycles can be raised to a power")
        return Path(self.quiver, self.base, self.arrows * n)

    def __len__(self):
        return len(self.arrows)

    def __eq__(self, other):
        return (isinstance(other, Path) and self.base == other.base
                and self.arrows == other.arrows)

    def __hash__(self):
        return hash((self.base, self.arrows))

    def __repr__(self):
        return f"Path({self.base}; {list(self.arrows)})"


def lift_displacement(p: Path) -> tuple[int, int]:
    """Winding of the lift of ``p`` to the covering plane."""
    return p.displacement


def face_path(q: DimerQuiver, face: Face, start_index: int = 0) -> Path:
    """The boundary of ``face`` as a path, starting at position ``start_index``."""
    boundary = face.boundary[start_index:] + face.boundary[:start_index]
    base = q.arrow(boundary[0]).tail
    return Path(q, base, boundary)


def unit_cycle_at(q: DimerQuiver, vertex: int) -> Path:
    """Boundary of the lowest-id face through ``vertex``, rotated to start there.

    Any other face through the vertex gives the same cycle modulo the dimer
    relations; tests check this with the path-equality oracle.
    """
    for f in q.faces:
        for idx, ident in enumerate(f.boundary):
            if q.arrow(ident).tail == vertex:
                return face_path(q, f, idx)
    raise ValueError(f"vertex {vertex} lies on no face")


# --- parsing ---------------------------------------------------------------

def _tokens_with_columns(line: str):
    toks = []
    col = 0
    for tok in line.split():
        col = line.index(tok, col)
        toks.append((tok, col + 1))
        col += len(tok)
    return toks


def _int_token(tok: str, col: int, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise QuiverFormatError(f"expected integer {what}, got {tok!r}", lineno, col) from None


def parse_quiver(text: str) -> DimerQuiver:
    """Parse the line-oriented quiver file format.

    Performs structural checks only (syntax, duplicate ids, contiguous ids,
    dangling references); the dimer-quiver invariants are left to
    :func:`validate`.
    """
    num_vertices = None
    arrows: dict[int, tuple[Arrow, int]] = {}
    faces: dict[int, tuple[int, tuple[int, ...], int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens_with_columns(line)
        if not toks:
            continue
        kw, kwcol = toks[0]
        args = toks[1:]
        if kw == "vertices":
            if num_vertices is not None:
                raise QuiverFormatError("duplicate 'vertices' line", lineno, kwcol)
            if len(args) != 1:
                raise QuiverFormatError("'vertices' takes one count", lineno, kwcol)
            num_vertices = _int_token(args[0][0], args[0][1], lineno, "vertex count")
            if num_vertices <= 0:
                raise QuiverFormatError("vertex count must be positive", lineno, args[0][1])
        elif kw == "arrow":
            if num_vertices is None:
                raise QuiverFormatError("'vertices' line must come first", lineno, kwcol)
            if len(args) != 5:
                raise QuiverFormatError("'arrow' takes: id tail head wx wy", lineno, kwcol)
            vals = [_int_token(t, c, lineno, "arrow field") for t, c in args]
            ident, tail, head, wx, wy = vals
            if ident in arrows:
                raise QuiverFormatError(f"duplicate arrow id {ident}", lineno, args[0][1])
            for v, (_, c) in ((tail, args[1]), (head, args[2])):
                if not 0 <= v < num_vertices:
                    raise QuiverFormatError(f"arrow {ident} references missing vertex {v}",
                                            lineno, c)
            arrows[ident] = (Arrow(ident, tail, head, (wx, wy)), lineno)
        elif kw == "face":
            if num_vertices is None:
                raise QuiverFormatError("'vertices' line must come first", lineno, kwcol)
            if len(args) < 2:
                raise QuiverFormatError("'face' takes: id arrow-id...", lineno, kwcol)
            ident = _int_token(args[0][0], args[0][1], lineno, "face id")
            if ident in faces:
                raise QuiverFormatError(f"duplicate face id {ident}", lineno, args[0][1])
            boundary = tuple(_int_token(t, c, lineno, "arrow id") for t, c in args[1:])
            faces[ident] = (ident, boundary, lineno)
        else:
            raise QuiverFormatError(f"unknown directive {kw!r}", lineno, kwcol)
    if num_vertices is None:
        raise QuiverFormatError("missing 'vertices' line")
    if sorted(arrows) != list(range(len(arrows))):
        raise QuiverFormatError("arrow ids must be contiguous from 0")
    if sorted(faces) != list(range(len(faces))):
        raise QuiverFormatError("face ids must be contiguous from 0")
    for ident, boundary, lineno in faces.values():
        for b in boundary:
            if b not in arrows:
                raise QuiverFormatError(f"face {ident} references missing arrow {b}", lineno)
    return DimerQuiver(
        num_vertices,
        [arrows[i][0] for i in range(len(arrows))],
        [Face(i, faces[i][1]) for i in range(len(faces))],
    )


# --- validation ------------------------------------------------------------

@dataclass(frozen=True)
class ValidationCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[ValidationCheck, ...]

    @property
    def valid(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[ValidationCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)


def strongly_connected(q: DimerQuiver, excluded_arrows: frozenset[int] = frozenset()) -> bool:
    """True when the digraph minus ``excluded_arrows`` is strongly connected."""
    n = q.num_vertices
    if n <= 1:
        return True

    def reach(forward: bool) -> int:
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            idents = q.out_arrows(v) if forward else q.in_arrows(v)
            for ident in idents:
                if ident in excluded_arrows:
                    continue
                a = q.arrow(ident)
                w = a.head if forward else a.tail
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count

    return reach(True) == n and reach(False) == n


def validate(q: DimerQuiver) -> ValidationReport:
    """Check the dimer-quiver invariants, one report entry per check."""
    checks: list[ValidationCheck] = []

    counts = {a.ident: [] for a in q.arrows}
    for f in q.faces:
        for ident in f.boundary:
            counts[ident].append(f.ident)
    bad = {ident: fs for ident, fs in counts.items()
           if len(fs) != 2 or len(set(fs)) != 2}
    checks.append(ValidationCheck(
        "arrow-in-two-faces", not bad,
        "" if not bad else "arrows with wrong face incidence: "
        + ", ".join(f"{i} in faces {fs}" for i, fs in sorted(bad.items()))))

    bad_faces = []
    for f in q.faces:
        if len(f.boundary) < 2:
            bad_faces.append(f"face {f.ident} has length {len(f.boundary)}")
            continue
        at = q.arrow(f.boundary[0]).tail
        ok = True
        for ident in f.boundary:
            a = q.arrow(ident)
            if a.tail != at:
                ok = False
                break
            at = a.head
        if not ok or at != q.arrow(f.boundary[0]).tail:
            bad_faces.append(f"face {f.ident} does not close head-to-tail")
    checks.append(ValidationCheck("face-closure", not bad_faces, "; ".join(bad_faces)))

    bad_winds = []
    for f in q.faces:
        sx = sum(q.arrow(i).wind[0] for i in f.boundary)
        sy = sum(q.arrow(i).wind[1] for i in f.boundary)
        if (sx, sy) != (0, 0):
            bad_winds.append(f"face {f.ident} winds to ({sx}, {sy})")
    checks.append(ValidationCheck("face-winding-zero", not bad_winds, "; ".join(bad_winds)))

    euler = q.num_vertices - len(q.arrows) + len(q.faces)
    checks.append(ValidationCheck(
        "euler-characteristic-zero", euler == 0,
        "" if euler == 0 else
        f"V - E + F = {q.num_vertices} - {len(q.arrows)} + {len(q.faces)} = {euler}"))

    sc = strongly_connected(q)
    checks.append(ValidationCheck("strongly-connected", sc,
                                  "" if sc else "quiver is not strongly connected"))

    structurally_ok = all(c.passed for c in checks)
    if structurally_ok:
        from . import matchings as _matchings
        has_pm = bool(_matchings.perfect_matchings(q))
        checks.append(ValidationCheck("perfect-matching-exists", has_pm,
                                      "" if has_pm else "no perfect matching"))
    else:
        checks.append(ValidationCheck("perfect-matching-exists", False,
                                      "skipped: structural checks failed"))

    return ValidationReport(tuple(checks))
