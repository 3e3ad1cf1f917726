"""Contraction of arrow subsets and cyclicity of the induced map.

Contracting a forest of arrows merges their endpoints, deletes the arrows
from every face boundary, and re-gauges winds by a vertex potential so the
contracted arrows wind trivially first.  The induced map on path algebras
must respect the relations; the contraction is cyclic when the cycle
algebra computed through it agrees with the cycle algebra of the target.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .quiver import Arrow, DimerQuiver, Face, Path, validate
from .matchings import is_cancellative, uncovered_arrows
from . import paths as path_calculus


class ContractionError(ValueError):
    pass


class ContractedCycleError(ContractionError):
    pass


class ContractedFaceError(ContractionError):
    pass


class TargetNotDimerError(ContractionError):
    pass


class RelationNotPreservedError(ContractionError):
    pass


class TargetNotCancellativeError(ContractionError):
    pass


class InconclusiveBoundsError(ContractionError):
    pass


class SearchSpaceExceededError(ContractionError):
    pass


@dataclass(frozen=True)
class Contraction:
    source: DimerQuiver
    contracted: frozenset[int]
    target: DimerQuiver
    vertex_map: tuple[int, ...]        # source vertex -> target vertex
    arrow_map: dict                    # source arrow id -> target arrow id

    def psi(self, p: Path) -> Path:
        """Image of a path: contracted arrows drop out."""
        arrows = tuple(self.arrow_map[a] for a in p.arrows if a in self.arrow_map)
        return Path(self.target, self.vertex_map[p.base], arrows)

    def is_identity(self) -> bool:
        return not self.contracted


def _forest_potentials(q: DimerQuiver, contracted: frozenset[int]):
    """Vertex potentials zeroing the winds of the contracted arrows.

    Fails (None) when the contracted set contains an undirected cycle.
    """
    parent = list(range(q.num_vertices))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    adjacency: dict[int, list] = {v: [] for v in q.vertices}
    for ident in sorted(contracted):
        a = q.arrow(ident)
        ru, rv = find(a.tail), find(a.head)
        if ru == rv:
            return None, ident
        parent[ru] = rv
        adjacency[a.tail].append((a.head, a.wind, ident))
        adjacency[a.head].append((a.tail, (-a.wind[0], -a.wind[1]), ident))

    phi = [None] * q.num_vertices
    for root in q.vertices:
        if phi[root] is not None:
            continue
        phi[root] = (0, 0)
        stack = [root]
        while stack:
            v = stack.pop()
            for w, wind, _ in adjacency[v]:
                if phi[w] is None:
                    # want wind + phi[head] - phi[tail] = 0 along the arrow;
                    # stored as tail -> head with the arrow's wind
                    phi[w] = (phi[v][0] - wind[0], phi[v][1] - wind[1])
                    stack.append(w)
    return phi, None


def contract(q: DimerQuiver, arrows, *, check_relations: bool = True,
             budget: path_calculus.PathBudget | None = None) -> Contraction:
    """Contract ``arrows``; raises a ContractionError subclass on failure."""
    contracted = frozenset(int(a) for a in arrows)
    for ident in contracted:
        if not 0 <= ident < len(q.arrows):
            raise ContractionError(f"unknown arrow id {ident}")

    for f in q.faces:
        if contracted.issuperset(f.boundary):
            raise ContractedFaceError(f"face {f.ident} lies inside the contracted set")
    phi, bad = _forest_potentials(q, contracted)
    if phi is None:
        raise ContractedCycleError(
            f"arrow {bad} closes a cycle in the contracted set")

    # merge vertices; representatives keep ascending order of first occurrence
    parent = list(range(q.num_vertices))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for ident in contracted:
        a = q.arrow(ident)
        ru, rv = find(a.tail), find(a.head)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    reps = sorted({find(v) for v in q.vertices})
    index = {rep: i for i, rep in enumerate(reps)}
    vertex_map = tuple(index[find(v)] for v in q.vertices)

    arrow_map = {}
    new_arrows = []
    for a in q.arrows:
        wx = a.wind[0] + phi[a.head][0] - phi[a.tail][0]
        wy = a.wind[1] + phi[a.head][1] - phi[a.tail][1]
        if a.ident in contracted:
            if (wx, wy) != (0, 0):
                raise ContractionError("re-gauging failed on a contracted arrow")
            continue
        arrow_map[a.ident] = len(new_arrows)
        new_arrows.append(Arrow(len(new_arrows), vertex_map[a.tail],
                                vertex_map[a.head], (wx, wy)))

    new_faces = []
    for f in q.faces:
        boundary = tuple(arrow_map[a] for a in f.boundary if a not in contracted)
        if len(boundary) < 2:
            raise TargetNotDimerError(
                f"face {f.ident} drops below length 2 after contraction")
        new_faces.append(Face(len(new_faces), boundary))

    target = DimerQuiver(len(reps), new_arrows, new_faces)
    report = validate(target)
    if not report.valid:
        raise TargetNotDimerError(
            "; ".join(f"{c.name}: {c.detail}" for c in report.failures()))

    contraction = Contraction(q, contracted, target, vertex_map, arrow_map)
    if check_relations and contracted:
        _check_relations(contraction, budget)
    return contraction


def _check_relations(c: Contraction, budget=None):
    """Each source relation must map to an equality in the target."""
    budget = budget or path_calculus.PathBudget()
    target_cancellative = is_cancellative(c.target).cancellative
    for rel in path_calculus.face_relations(c.source):
        left, right = c.psi(rel.left), c.psi(rel.right)
        if left.arrows == right.arrows:
            continue
        if left.base != right.base or left.head != right.head:
            raise RelationNotPreservedError(
                f"relation of arrow {rel.arrow} maps to mismatched endpoints")
        verdict = path_calculus.paths_equal(left, right, budget,
                                            allow_fast_path=target_cancellative)
        if verdict.is_not_equal:
            raise RelationNotPreservedError(
                f"relation of arrow {rel.arrow} broken in the target: {verdict.reason}")
        if verdict.is_unknown:
            raise InconclusiveBoundsError(
                f"relation of arrow {rel.arrow} could not be verified in budget")


@dataclass(frozen=True)
class CyclicityResult:
    cyclic: bool
    cycle_algebra: object            # semigroup computed through the contraction
    target_cycle_algebra: object
    detail: str = ""


def is_cyclic(c: Contraction, bounds=None) -> CyclicityResult:
    """Compare the cycle algebra through the contraction with the target's."""
    from . import centers

    if not is_cancellative(c.target).cancellative:
        raise TargetNotCancellativeError("contraction target is not cancellative")
    bounds = bounds or centers.CenterBounds()
    S = centers.cycle_algebra(c.source, c, bounds)
    if c.is_identity():
        return CyclicityResult(True, S, S, "identity contraction")
    S_target = centers.cycle_algebra(c.target, None, bounds)
    if centers.semigroups_equal(S, S_target):
        return CyclicityResult(True, S, S_target)
    return CyclicityResult(False, S, S_target, "cycle algebras differ")


MAX_SEARCH_ARROWS = 12


def find_cyclic_contraction(q: DimerQuiver, bounds=None) -> Contraction | None:
    """Smallest cyclic contraction with cancellative target, or None.

    Candidate arrow sets are subsets of the arrows lying in no simple
    matching, searched by cardinality then lexicographically.
    """
    from . import centers

    bounds = bounds or centers.CenterBounds()
    if is_cancellative(q).cancellative:
        return contract(q, ())
    pool = sorted(uncovered_arrows(q))
    if len(pool) > MAX_SEARCH_ARROWS:
        raise SearchSpaceExceededError(
            f"{len(pool)} uncovered arrows exceeds the search cap of "
            f"{MAX_SEARCH_ARROWS}")
    for size in range(1, len(pool) + 1):
        for subset in combinations(pool, size):
            try:
                c = contract(q, subset)
            except ContractionError:
                continue
            if not is_cancellative(c.target).cancellative:
                continue
            try:
                if is_cyclic(c, bounds).cyclic:
                    return c
            except ContractionError:
                continue
    return None


def simplify_two_cycles(q: DimerQuiver) -> DimerQuiver:
    """Delete removable 2-cycles, merging their two neighbour faces.

    Both arrows of a removable 2-cycle are redundant generators; the two
    faces adjacent to the pair splice into one along the complementary
    paths.  Permanent 2-cycles are left alone.
    """
    current = q
    while True:
        info = next((t for t in path_calculus.permanent_two_cycles(current)
                     if not t.permanent), None)
        if info is None:
            return current
        u, v = current.faces[info.face].boundary
        fu = [fi for fi in current.faces_of_arrow(u) if fi != info.face][0]
        fv = [fi for fi in current.faces_of_arrow(v) if fi != info.face][0]
        if fu == fv:
            raise ContractionError(
                "cannot delete a 2-cycle whose arrows share their other face")
        comp_u = path_calculus._complement(current, fu, u)
        comp_v = path_calculus._complement(current, fv, v)
        # comp_v runs h(v)->t(v) and comp_u runs h(u)->t(u) = t(v)->h(v)
        merged = comp_v.arrows + comp_u.arrows

        keep = [a for a in current.arrows if a.ident not in (u, v)]
        arrow_map = {a.ident: i for i, a in enumerate(keep)}
        new_arrows = [Arrow(i, a.tail, a.head, a.wind) for i, a in enumerate(keep)]
        new_faces = []
        for f in current.faces:
            if f.ident in (info.face, fu, fv):
                continue
            new_faces.append(tuple(arrow_map[a] for a in f.boundary))
        new_faces.append(tuple(arrow_map[a] for a in merged))
        current = DimerQuiver(
            current.num_vertices, new_arrows,
            [Face(i, b) for i, b in enumerate(new_faces)])
