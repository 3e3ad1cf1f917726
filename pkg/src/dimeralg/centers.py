"""Cycle algebra, homotopy center, and the central geometry report.

All commutative data lives in monomial semigroups over the simple matchings
of the (contraction-)target quiver.  The set of labels realized by closed
walks is computed exactly up to a degree cap by reachability over
(vertex, accumulated label) states; cycle-algebra generators are extracted
from that closure, with a saturation check demanding that no new generator
appears when the cap is raised.  A window-bounded enumeration of cycles
whose lifts repeat no covering vertex is kept as the per-vertex generator
view.  The homotopy center is the intersection of the per-vertex label
sets; as a semigroup it need not be finitely generated, so alongside the
truncated data the verified compact form k[sigma] + (ideal)S is derived,
making membership exact in every degree.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction

from .quiver import DimerQuiver, Path
from .matchings import is_cancellative
from .grading import GradingContext, Monomial, build_context, display_sorted
from . import paths as path_calculus


class SaturationFailure(RuntimeError):
    """Enumeration bounds too small: enlarging them changed the result."""


@dataclass(frozen=True)
class CenterBounds:
    window: int = 2
    degree_cap: int = 12
    saturation: bool = True
    lift_degree_cap: int = 6    # central lifts are attempted below this degree
    oracle: path_calculus.PathBudget = field(default_factory=path_calculus.PathBudget)


# --- monomial semigroups -----------------------------------------------------

class MonomialSemigroup:
    """Finitely many generator exponent vectors with decidable membership."""

    def __init__(self, generators, *, minimal: bool = False):
        gens = sorted({g for g in generators if not g.is_one()})
        if not minimal:
            gens = _minimalize(gens)
        self.generators = tuple(gens)
        self._memo: dict[Monomial, bool] = {}

    def contains(self, m: Monomial) -> bool:
        if m.is_one():
            return True
        memo = self._memo
        hit = memo.get(m)
        if hit is not None:
            return hit
        result = False
        for g in self.generators:
            if g.divides(m) and self.contains(m / g):
                result = True
                break
        memo[m] = result
        return result

    def monomials_up_to(self, cap: int) -> frozenset[Monomial]:
        """All nonunit members of degree at most ``cap``."""
        if not self.generators:
            return frozenset()
        seen = set()
        frontier = [g for g in self.generators if g.degree() <= cap]
        seen.update(frontier)
        while frontier:
            nxt = []
            for m in frontier:
                for g in self.generators:
                    prod = m * g
                    if prod.degree() <= cap and prod not in seen:
                        seen.add(prod)
                        nxt.append(prod)
            frontier = nxt
        return frozenset(seen)

    def __repr__(self):
        return f"MonomialSemigroup({list(self.generators)})"


def _minimalize(gens: list[Monomial]) -> list[Monomial]:
    """Drop generators that are products of the remaining ones."""
    gens = sorted(set(gens))
    for g in sorted(gens, key=lambda m: (-m.degree(), m.exps)):
        rest = MonomialSemigroup([h for h in gens if h != g], minimal=True)
        if rest.contains(g):
            gens.remove(g)
    return gens


def membership(sg: MonomialSemigroup, m: Monomial) -> bool:
    """True iff ``m`` is a product of the semigroup's generators."""
    return sg.contains(m)


def semigroups_equal(a: MonomialSemigroup, b: MonomialSemigroup) -> bool:
    return (all(b.contains(g) for g in a.generators)
            and all(a.contains(g) for g in b.generators))


def krull_dimension(sg: MonomialSemigroup) -> int:
    """Rank of the integer lattice spanned by the generator exponents."""
    rows = [list(g.exps) for g in sg.generators]
    rank = 0
    cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = Fraction(rows[i][c], rows[r][c])
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        rank += 1
    return rank


# --- cycle enumeration -------------------------------------------------------

def _contraction_key(contraction):
    return None if contraction is None else tuple(sorted(contraction.contracted))


def analysis_context(q: DimerQuiver, contraction=None) -> GradingContext:
    """Simple-matching labels, pulled back through ``contraction`` if given."""
    if contraction is not None:
        return build_context(q, "simple", contraction)
    return build_context(q, "simple")


def _min_return_degree(q: DimerQuiver, ctx: GradingContext, base: int):
    key = ("ret_deg", id(ctx), base)
    cached = q._cache.get(key)
    if cached is not None:
        return cached
    INF = float("inf")
    dist = [INF] * q.num_vertices
    dist[base] = 0
    heap = [(0, base)]
    while heap:
        d, v = heapq.heappop(heap)
        if d > dist[v]:
            continue
        for ident in q.in_arrows(v):
            a = q.arrow(ident)
            nd = d + ctx.labels[ident].degree()
            if nd < dist[a.tail]:
                dist[a.tail] = nd
                heapq.heappush(heap, (nd, a.tail))
    q._cache[key] = dist
    return dist


def _simple_lift_cycle_labels(q: DimerQuiver, ctx: GradingContext, base: int,
                              window: int, cap: int) -> frozenset[Monomial]:
    """Labels of cycles at ``base`` whose lift repeats no covering vertex.

    The lift is confined to the (2*window+3)^2 block of fundamental domains
    around the start, and the label degree is capped.
    """
    key = ("slc", id(ctx), base, window, cap)
    cached = q._cache.get(key)
    if cached is not None:
        return cached

    W = window + 1
    ret = _min_return_degree(q, ctx, base)
    arrow_deg = [m.degree() for m in ctx.labels]
    out_arrows = q.out_arrows
    arrow = q.arrow
    nvars = ctx.nvars

    labels: set[Monomial] = {ctx.sigma}
    exps = [0] * nvars
    visited = {(base, 0, 0)}

    def dfs(v: int, ox: int, oy: int, deg: int):
        for ident in out_arrows(v):
            a = arrow(ident)
            nd = deg + arrow_deg[ident]
            if nd > cap:
                continue
            nx, ny = ox + a.wind[0], oy + a.wind[1]
            state = (a.head, nx, ny)
            m = ctx.labels[ident]
            if a.head == base:
                # the cycle closes in the quiver at any lift of the base
                labels.add(Monomial(e + x for e, x in zip(exps, m.exps)))
            if abs(nx) > W or abs(ny) > W or state in visited:
                continue
            if nd + ret[a.head] > cap:
                continue
            visited.add(state)
            for i, x in enumerate(m.exps):
                exps[i] += x
            dfs(a.head, nx, ny, nd)
            for i, x in enumerate(m.exps):
                exps[i] -= x
            visited.remove(state)

    dfs(base, 0, 0, 0)
    result = frozenset(labels)
    q._cache[key] = result
    return result


def vertex_cycle_monomials(q: DimerQuiver, contraction, vertex: int,
                           bounds: CenterBounds | None = None) -> frozenset[Monomial]:
    """Simple-lift cycle labels at one vertex (includes sigma).

    The per-vertex label semigroup need not be finitely generated (labels
    with unbounded powers of a single variable can be irreducible), so the
    saturation check asserts containment in the cycle algebra at the given
    bounds rather than stability of a per-vertex generating set.  Exact
    per-vertex membership is provided by :func:`vertex_walk_labels`.
    """
    bounds = bounds or CenterBounds()
    ctx = analysis_context(q, contraction)
    raw = _simple_lift_cycle_labels(q, ctx, vertex, bounds.window, bounds.degree_cap)
    if bounds.saturation:
        S = cycle_algebra(q, contraction, bounds)
        bigger = _simple_lift_cycle_labels(q, ctx, vertex, bounds.window + 1,
                                           bounds.degree_cap + 1)
        missing = [m for m in bigger if not S.contains(m)]
        if missing:
            raise SaturationFailure(
                f"vertex {vertex}: enlarging the window/degree bounds produced "
                f"a label outside the cycle algebra, e.g. {sorted(missing)[0].exps}")
    return raw


_PACK_BITS = 6  # per-variable exponents stay below 2**6 for our degree caps


def _packed_tables(q: DimerQuiver, ctx: GradingContext):
    key = ("packed_tables", id(ctx))
    cached = q._cache.get(key)
    if cached is not None:
        return cached
    packed = []
    degs = []
    for m in ctx.labels:
        value = 0
        for i, e in enumerate(m.exps):
            value |= e << (_PACK_BITS * i)
        packed.append(value)
        degs.append(m.degree())
    transitions = [tuple((q.arrow(i).head, packed[i], degs[i])
                         for i in q.out_arrows(v)) for v in q.vertices]
    result = (tuple(packed), tuple(degs), tuple(transitions))
    q._cache[key] = result
    return result


def _unpack(value: int, nvars: int) -> Monomial:
    mask = (1 << _PACK_BITS) - 1
    return Monomial((value >> (_PACK_BITS * i)) & mask for i in range(nvars))


def _walk_label_values(q: DimerQuiver, ctx: GradingContext, base: int,
                       cap: int) -> frozenset[int]:
    """Packed labels of all closed walks at ``base`` with degree <= cap.

    Exact: reachability over (vertex, accumulated label) states.  No winding
    window is involved because the quiver itself is walked, not its cover.
    """
    key = ("walk_values", id(ctx), base, cap)
    cached = q._cache.get(key)
    if cached is not None:
        return cached
    _, _, transitions = _packed_tables(q, ctx)
    seen = {(base, 0)}
    frontier = [(base, 0, 0)]
    labels: set[int] = set()
    while frontier:
        nxt = []
        for v, value, deg in frontier:
            for head, avalue, adeg in transitions[v]:
                nd = deg + adeg
                if nd > cap:
                    continue
                nvalue = value + avalue
                if head == base:
                    labels.add(nvalue)
                state = (head, nvalue)
                if state not in seen:
                    seen.add(state)
                    nxt.append((head, nvalue, nd))
        frontier = nxt
    result = frozenset(labels)
    q._cache[key] = result
    return result


def vertex_walk_labels(q: DimerQuiver, contraction, vertex: int,
                       cap: int) -> frozenset[Monomial]:
    """Exact set of closed-walk labels at ``vertex`` with degree at most ``cap``."""
    ctx = analysis_context(q, contraction)
    return frozenset(_unpack(v, ctx.nvars)
                     for v in _walk_label_values(q, ctx, vertex, cap))


def _degree_of_value(value: int, nvars: int) -> int:
    mask = (1 << _PACK_BITS) - 1
    return sum((value >> (_PACK_BITS * i)) & mask for i in range(nvars))


def _dominates(b: int, a: int, nvars: int) -> bool:
    mask = (1 << _PACK_BITS) - 1
    for i in range(nvars):
        shift = _PACK_BITS * i
        if ((b >> shift) & mask) < ((a >> shift) & mask):
            return False
    return True


def _closure_values(q: DimerQuiver, ctx: GradingContext, cap: int):
    """(all cycle-label products <= cap, their union part) as packed sets."""
    key = ("closure_values", id(ctx), cap)
    cached = q._cache.get(key)
    if cached is not None:
        return cached
    nvars = ctx.nvars
    union: set[int] = set()
    for v in q.vertices:
        union |= _walk_label_values(q, ctx, v, cap)
    union.discard(0)
    base = sorted((_degree_of_value(val, nvars), val) for val in union)
    closure = set(union)
    frontier = list(base)
    while frontier:
        nxt = []
        for d, val in frontier:
            for gd, gval in base:
                nd = d + gd
                if nd > cap:
                    break
                nval = val + gval
                if nval not in closure:
                    closure.add(nval)
                    nxt.append((nd, nval))
        frontier = nxt
    result = (closure, union)
    q._cache[key] = result
    return result


def _generator_values(q: DimerQuiver, ctx: GradingContext, cap: int) -> frozenset[int]:
    """Minimal semigroup generators of the cycle algebra, exact up to ``cap``.

    Generators lie in the union of the per-vertex label sets (anything else
    is already a product); a label is a generator when it does not factor
    into two nonunit cycle-algebra monomials.
    """
    key = ("generator_values", id(ctx), cap)
    cached = q._cache.get(key)
    if cached is not None:
        return cached
    nvars = ctx.nvars
    closure, union = _closure_values(q, ctx, cap)
    pairs = sorted((_degree_of_value(val, nvars), val) for val in closure)
    gens = set()
    for d, val in sorted((_degree_of_value(v, nvars), v) for v in union):
        composite = False
        for da, a in pairs:
            if 2 * da > d:
                break
            if _dominates(val, a, nvars) and (val - a) in closure and a != val:
                composite = True
                break
        if not composite:
            gens.add(val)
    result = frozenset(gens)
    q._cache[key] = result
    return result


def cycle_algebra(q: DimerQuiver, contraction=None,
                  bounds: CenterBounds | None = None) -> MonomialSemigroup:
    """Semigroup generated by the labels of all cycles, over all vertices.

    Computed exactly up to the degree cap from closed-walk labels; the
    saturation check demands that no new generator appears when the cap is
    raised, so a finitely generated cycle algebra is reported exactly.
    """
    bounds = bounds or CenterBounds()
    key = ("cycle_algebra", _contraction_key(contraction), bounds.degree_cap)
    cached = q._cache.get(key)
    if cached is not None:
        return cached
    ctx = analysis_context(q, contraction)
    gens = _generator_values(q, ctx, bounds.degree_cap)
    if bounds.saturation:
        bigger = _generator_values(q, ctx, bounds.degree_cap + 2)
        extra = bigger - gens
        if extra:
            sample = _unpack(min(extra), ctx.nvars)
            raise SaturationFailure(
                f"cycle algebra: new generator {sample.exps} appears beyond "
                f"the degree cap")
    result = MonomialSemigroup((_unpack(v, ctx.nvars) for v in gens), minimal=True)
    q._cache[key] = result
    return result


# --- homotopy center ---------------------------------------------------------

@dataclass
class HomotopyCenter:
    """Intersection of the per-vertex cycle semigroups.

    As a semigroup this need not be finitely generated, so alongside the
    truncated data it carries the compact form

        R = k[sigma] + (ideal_gens) S,

    verified monomial-by-monomial up to the degree cap.  ``sigma_power`` is
    the least n with sigma^n S contained in R (0 iff R = S, <= 1 iff normal).
    """

    S: MonomialSemigroup
    sigma: Monomial
    degree_cap: int
    monomials: frozenset[Monomial]          # members with degree <= cap
    gens_truncated: tuple[Monomial, ...]    # minimal semigroup generators <= cap
    sigma_power: int
    ideal_gens: tuple[Monomial, ...]        # S-ideal generators of R minus k[sigma]
    exact: bool
    caveats: tuple[str, ...] = ()

    def contains(self, m: Monomial) -> bool:
        if self.exact:
            if _is_power_of(m, self.sigma):
                return True
            return any(g.divides(m) and self.S.contains(m / g)
                       for g in self.ideal_gens)
        if m.degree() <= self.degree_cap:
            return m in self.monomials
        raise SaturationFailure("membership beyond the degree cap is undecided")

    def equals_cycle_algebra(self) -> bool:
        return self.sigma_power == 0


def _is_power_of(m: Monomial, base: Monomial) -> bool:
    if m.is_one():
        return True
    d = base.degree()
    if d == 0 or m.degree() % d:
        return False
    k = m.degree() // d
    return m == base ** k


def homotopy_center(q: DimerQuiver, contraction=None,
                    bounds: CenterBounds | None = None) -> HomotopyCenter:
    """Monomials realized by cycles at every vertex simultaneously."""
    bounds = bounds or CenterBounds()
    key = ("homotopy_center", _contraction_key(contraction),
           bounds.window, bounds.degree_cap)
    cached = q._cache.get(key)
    if cached is not None:
        return cached

    ctx = analysis_context(q, contraction)
    S = cycle_algebra(q, contraction, bounds)
    cap = bounds.degree_cap
    closure, _ = _closure_values(q, ctx, cap)
    vertex_values = [_walk_label_values(q, ctx, v, cap) for v in q.vertices]
    member_values = [val for val in closure
                     if all(val in vs for vs in vertex_values)]

    smons = sorted(_unpack(v, ctx.nvars) for v in closure)
    members = frozenset(_unpack(v, ctx.nvars) for v in member_values)

    gens = _truncated_semigroup_generators(members)

    sigma = ctx.sigma
    sd = sigma.degree()
    sigma_power = None
    for n in range(0, cap // sd + 1):
        power = sigma ** n
        ok = all((power * m) in members for m in smons
                 if m.degree() + n * sd <= cap)
        if ok:
            sigma_power = n
            break
    caveats: list[str] = []
    if sigma_power is None:
        sigma_power = cap // sd + 1
        caveats.append("no power of sigma was seen to multiply S into R "
                       "within the degree cap")

    ideal_gens = _ideal_generators(members, sigma, sigma_power, S)

    exact = not caveats
    if exact:
        exact = _verify_compact_form(smons, members, sigma, ideal_gens, S)
        if not exact:
            caveats.append("compact form k[sigma] + (ideal)S failed to "
                           "reproduce the truncated membership set")
    if exact:
        max_sgen = max((g.degree() for g in S.generators), default=0)
        headroom_bad = [g for g in ideal_gens if g.degree() > cap - max_sgen]
        if headroom_bad:
            exact = False
            caveats.append("ideal generators appear too close to the degree cap")

    result = HomotopyCenter(S, sigma, cap, members, tuple(gens), sigma_power,
                            tuple(ideal_gens), exact, tuple(caveats))
    q._cache[key] = result
    return result


def _truncated_semigroup_generators(members: frozenset[Monomial]):
    nonunit = sorted(m for m in members if not m.is_one())
    gens = []
    member_set = set(nonunit)
    for m in nonunit:
        composite = any(a.divides(m) and (m / a) in member_set and not (m / a).is_one()
                        for a in nonunit if a.degree() < m.degree())
        if not composite:
            gens.append(m)
    return gens


def _ideal_generators(members, sigma, sigma_power, S):
    """Minimal S-ideal generators of the non-sigma-power part, plus sigma^n."""
    pool = sorted(m for m in members
                  if not m.is_one() and not _is_power_of(m, sigma))
    pool.append(sigma ** sigma_power)
    minimal: list[Monomial] = []
    for m in sorted(set(pool)):
        if not any(g.divides(m) and S.contains(m / g) for g in minimal):
            minimal = [g for g in minimal if not (m.divides(g) and S.contains(g / m))]
            minimal.append(m)
    return sorted(minimal)


def _verify_compact_form(smons, members, sigma, ideal_gens, S) -> bool:
    for m in smons:
        predicted = _is_power_of(m, sigma) or any(
            g.divides(m) and S.contains(m / g) for g in ideal_gens)
        if predicted != (m in members):
            return False
    return True


# --- central lifts -----------------------------------------------------------

@dataclass(frozen=True)
class LiftVerdict:
    status: str                   # "central" | "not-centralizable" | "unknown"
    candidate: object = None      # CentralCandidate for "central"
    reason: str = ""

    @property
    def is_central(self):
        return self.status == "central"


def _cycles_with_label(q: DimerQuiver, ctx: GradingContext, base: int,
                       target: Monomial, length_cap: int):
    """All cycles at ``base`` whose label is exactly ``target``.

    Prefix labels must divide the target, which bounds the search because
    label-1 arrows cannot form cycles here.  Returns (cycles, exhaustive).
    """
    cycles: list[Path] = []
    complete = True
    stack: list[int] = []
    exps = [0] * ctx.nvars

    def dfs(v: int, deg: int):
        nonlocal complete
        for ident in q.out_arrows(v):
            m = ctx.labels[ident]
            if not all(e + x <= t for e, x, t in zip(exps, m.exps, target.exps)):
                continue
            if len(stack) + 1 > length_cap:
                complete = False
                continue
            stack.append(ident)
            for i, x in enumerate(m.exps):
                exps[i] += x
            head = q.arrow(ident).head
            if head == base and list(target.exps) == exps:
                cycles.append(Path(q, base, tuple(stack)))
            dfs(head, deg + m.degree())
            for i, x in enumerate(m.exps):
                exps[i] -= x
            stack.pop()

    dfs(base, 0)
    return cycles, complete


def central_lift(q: DimerQuiver, contraction, g: Monomial,
                 bounds: CenterBounds | None = None) -> LiftVerdict:
    """Try to realize a homotopy-center monomial as the image of a central element.

    When sigma does not divide ``g``, a sum of one label-``g`` cycle per
    vertex is central; otherwise rational coefficients are solved for and
    the resulting candidate is re-verified with the centrality checker.
    """
    bounds = bounds or CenterBounds()
    ctx = analysis_context(q, contraction)
    sigma = ctx.sigma
    length_cap = (g.degree() + 1) * (q.num_vertices + 2)

    per_vertex = []
    exhaustive = True
    for v in q.vertices:
        cycles, complete = _cycles_with_label(q, ctx, v, g, length_cap)
        exhaustive = exhaustive and complete
        if not cycles:
            return LiftVerdict("unknown", reason=f"no cycle with this label at "
                               f"vertex {v} within bounds")
        per_vertex.append(cycles)

    if not sigma.divides(g):
        candidate = path_calculus.CentralCandidate(
            ctx, {v: ((Fraction(1), cycles[0]),)
                  for v, cycles in zip(q.vertices, per_vertex)}, g)
        verdict = path_calculus.is_central(candidate, bounds.oracle)
        if verdict.is_central:
            return LiftVerdict("central", candidate)
        if verdict.status == "unknown":
            return LiftVerdict("unknown", reason=verdict.reason)
        raise RuntimeError(
            "a sigma-free homotopy-center monomial failed the centrality check; "
            "this contradicts the structure theory")

    solution = _solve_central_coefficients(q, ctx, per_vertex, bounds)
    if solution == "unknown":
        return LiftVerdict("unknown", reason="oracle budget exhausted")
    if solution is None:
        if exhaustive:
            return LiftVerdict("not-centralizable",
                               reason="no rational combination is central")
        return LiftVerdict("unknown", reason="cycle enumeration was truncated")
    components = {}
    for v, cycles in zip(q.vertices, per_vertex):
        terms = tuple((solution[(v, k)], cyc) for k, cyc in enumerate(cycles)
                      if solution[(v, k)] != 0)
        components[v] = terms
    candidate = path_calculus.CentralCandidate(ctx, components, g)
    verdict = path_calculus.is_central(candidate, bounds.oracle)
    if verdict.is_central:
        return LiftVerdict("central", candidate)
    if verdict.status == "unknown":
        return LiftVerdict("unknown", reason=verdict.reason)
    raise RuntimeError("solver produced a non-central combination")


def _solve_central_coefficients(q, ctx, per_vertex, bounds):
    """Feasibility of: sum of coefficient-weighted cycles commutes with all arrows.

    Unknowns are one rational per (vertex, cycle); every vertex's
    coefficients must sum to 1 so the candidate maps onto the monomial.
    Returns a dict, None when infeasible, or "unknown" on oracle timeout.
    """
    var_index = {}
    for v, cycles in zip(q.vertices, per_vertex):
        for k, _ in enumerate(cycles):
            var_index[(v, k)] = len(var_index)
    nvars = len(var_index)
    rows = []

    for arrow in q.arrows:
        arrow_path = Path(q, arrow.tail, (arrow.ident,))
        terms = []
        for k, cyc in enumerate(per_vertex[arrow.tail]):
            terms.append((var_index[(arrow.tail, k)], 1, cyc.compose(arrow_path)))
        for k, cyc in enumerate(per_vertex[arrow.head]):
            terms.append((var_index[(arrow.head, k)], -1, arrow_path.compose(cyc)))
        classes: list[tuple[Path, dict]] = []
        for vi, sign, product in terms:
            for rep, coeffs in classes:
                verdict = path_calculus.paths_equal(rep, product, bounds.oracle)
                if verdict.is_unknown:
                    return "unknown"
                if verdict.is_equal:
                    coeffs[vi] = coeffs.get(vi, 0) + sign
                    break
            else:
                classes.append((product, {vi: sign}))
        for _, coeffs in classes:
            row = [Fraction(0)] * (nvars + 1)
            for vi, c in coeffs.items():
                row[vi] = Fraction(c)
            rows.append(row)

    for v in q.vertices:
        row = [Fraction(0)] * (nvars + 1)
        for k, _ in enumerate(per_vertex[v]):
            row[var_index[(v, k)]] = Fraction(1)
        row[-1] = Fraction(1)
        rows.append(row)

    solution = _solve_linear(rows, nvars)
    if solution is None:
        return None
    return {key: solution[idx] for key, idx in var_index.items()}


def _solve_linear(rows, nvars):
    """Gaussian elimination over the rationals; None when inconsistent."""
    matrix = [row[:] for row in rows]
    pivots = []
    r = 0
    for c in range(nvars):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][c] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        pv = matrix[r][c]
        matrix[r] = [x / pv for x in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][c] != 0:
                f = matrix[i][c]
                matrix[i] = [x - f * y for x, y in zip(matrix[i], matrix[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(matrix)):
        if matrix[i][-1] != 0:
            return None
    solution = [Fraction(0)] * nvars
    for row_idx, c in enumerate(pivots):
        solution[c] = matrix[row_idx][-1]
    return solution


# --- normality, witnesses, report -------------------------------------------

def is_normal(R: HomotopyCenter, S: MonomialSemigroup) -> bool:
    """Closure check: every nonconstant R generator times any S generator stays in R."""
    rgens = [m for m in R.gens_truncated if not m.is_one()]
    for r in rgens:
        for s in S.generators:
            prod = r * s
            if R.exact or prod.degree() <= R.degree_cap:
                if not R.contains(prod):
                    return False
    return True


@dataclass(frozen=True)
class NonnoetherianWitness:
    s: Monomial
    N: int
    chain: tuple[tuple[Monomial, ...], ...]  # strictly growing ideal generator lists


def _ideal_member(R: HomotopyCenter, gens, m: Monomial) -> bool:
    return any(g.divides(m) and R.contains(m / g) for g in gens)


def nonnoetherian_witness(R: HomotopyCenter) -> NonnoetherianWitness | None:
    """A monomial s in S minus R driving a strictly ascending ideal chain.

    Returns None exactly when R equals the cycle algebra.
    """
    if R.equals_cycle_algebra():
        return None
    sigma = R.sigma
    candidates = sorted(R.S.monomials_up_to(R.degree_cap))
    s = next((m for m in candidates
              if not m.is_one() and not sigma.divides(m) and not R.contains(m)),
             None)
    if s is None:
        raise SaturationFailure("R != S but no witness monomial below the cap")
    for n in (2, 3):
        if R.contains(s ** n):
            raise RuntimeError("witness power unexpectedly lies in R")
    N = None
    for n in range(1, R.degree_cap):
        if all(R.contains((s ** k) * (sigma ** n)) for k in (1, 2, 3)):
            N = n
            break
    if N is None:
        raise SaturationFailure("no sigma power pushed the witness into R")
    chain = []
    gens: list[Monomial] = []
    for k in (1, 2, 3):
        new = (s ** k) * (sigma ** N)
        if _ideal_member(R, gens, new):
            raise RuntimeError("ideal chain failed to grow strictly")
        gens.append(new)
        chain.append(tuple(gens))
    return NonnoetherianWitness(s, N, tuple(chain))


@dataclass
class CenterReport:
    """Everything the analysis derives about the center geometry."""

    num_vertices: int
    num_arrows: int
    num_faces: int
    cancellative: bool
    uncovered: tuple[int, ...]
    contracted: tuple[int, ...] | None
    contraction_mode: str                  # "auto" | "explicit" | "none"
    S_generators: tuple[Monomial, ...] | None
    dimension: int | None
    R: HomotopyCenter | None
    r_equals_s: bool | None
    normal: bool | None
    zhat_equals_r: bool | None             # within the truncation
    nonliftable: Monomial | None
    lifts: tuple                            # (generator, lift status) pairs
    witness: NonnoetherianWitness | None
    m0_ideal_gens: tuple[Monomial, ...] | None
    caveats: tuple[str, ...]
    names: tuple[str, ...] | None = None

    # The localizations of R at its special points and the associated loci
    # are not computed objects; the report carries them descriptively.
    notes: tuple[str, ...] = ()

    def fmt(self, m: Monomial) -> str:
        return m.format(self.names)

    def describe_S(self) -> str:
        if self.S_generators is None:
            return "unavailable"
        gens = display_sorted(self.S_generators, self.names)
        return "k[" + ", ".join(self.fmt(g) for g in gens) + "]"

    def describe_R(self) -> str:
        if self.R is None:
            return "unavailable"
        if self.r_equals_s:
            return "S (equal to the cycle algebra)"
        gens = display_sorted(self.R.ideal_gens, self.names)
        ideal = "(" + ", ".join(self.fmt(g) for g in gens) + ")S"
        if self.R.sigma_power <= 1:
            return f"k + {ideal}"
        return f"k[{self.fmt(self.R.sigma)}] + {ideal}"

    def to_dict(self) -> dict:
        def fmt_list(mons):
            if mons is None:
                return None
            return [self.fmt(m) for m in display_sorted(mons, self.names)]

        data = {
            "schema": "dimeralg-report/1",
            "quiver": {"vertices": self.num_vertices, "arrows": self.num_arrows,
                       "faces": self.num_faces},
            "cancellative": self.cancellative,
            "uncovered_arrows": sorted(self.uncovered),
            "contraction": {
                "mode": self.contraction_mode,
                "arrows": sorted(self.contracted) if self.contracted is not None else None,
            },
            "cycle_algebra": fmt_list(self.S_generators),
            "dimension": self.dimension,
            "homotopy_center": None,
            "flags": {
                "r_equals_s": self.r_equals_s,
                "normal": self.normal,
                "reduced_center_equals_r": self.zhat_equals_r,
            },
            "m0_ideal": fmt_list(self.m0_ideal_gens),
            "central_lifts": [[self.fmt(g), status] for g, status in self.lifts],
            "nonliftable": self.fmt(self.nonliftable) if self.nonliftable else None,
            "witness": None,
            "caveats": list(self.caveats),
            "notes": list(self.notes),
        }
        if self.R is not None:
            data["homotopy_center"] = {
                "display": self.describe_R(),
                "sigma_power": self.R.sigma_power,
                "ideal_generators": fmt_list(self.R.ideal_gens),
                "generators_truncated": fmt_list(self.R.gens_truncated),
                "exact": self.R.exact,
                "degree_cap": self.R.degree_cap,
            }
        if self.witness is not None:
            data["witness"] = {
                "s": self.fmt(self.witness.s),
                "N": self.witness.N,
                "chain": [[self.fmt(g) for g in step] for step in self.witness.chain],
            }
        return data


def depiction_report(q: DimerQuiver, contraction=None,
                     bounds: CenterBounds | None = None,
                     names=None) -> CenterReport:
    """Assemble the full report; failures become caveats, never silence."""
    from .contraction import (ContractionError, SearchSpaceExceededError,
                              find_cyclic_contraction, is_cyclic)

    bounds = bounds or CenterBounds()
    caveats: list[str] = []
    cert = is_cancellative(q)

    mode = "explicit"
    if contraction is None:
        mode = "auto"
        try:
            contraction = find_cyclic_contraction(q, bounds)
        except (SearchSpaceExceededError, SaturationFailure) as exc:
            caveats.append(f"auto contraction search failed: {exc}")
            contraction = None
        if contraction is None and not caveats:
            caveats.append("no contraction to a cancellative dimer quiver exists "
                           "within the search space")

    S_gens = dimension = R = None
    r_equals_s = normal = zhat = None
    nonliftable = witness = m0 = None
    lifts: list = []
    if contraction is not None:
        try:
            cyc = is_cyclic(contraction, bounds)
            if not cyc.cyclic:
                caveats.append("the supplied contraction is not cyclic")
            S = cyc.cycle_algebra
            S_gens = S.generators
            dimension = krull_dimension(S)
            R = homotopy_center(q, contraction, bounds)
            caveats.extend(R.caveats)
            r_equals_s = R.equals_cycle_algebra()
            normal = is_normal(R, S)
            witness = nonnoetherian_witness(R)
            m0 = tuple(_ideal_generators(
                R.monomials, R.sigma, max(R.sigma_power, 1), S))
            # sigma-free generators always lift; only sigma-divisible ones
            # can obstruct, and those are tried in ascending degree
            zhat = True
            skipped = 0
            for g in sorted(R.gens_truncated):
                if not R.sigma.divides(g):
                    lifts.append((g, "central"))
                    continue
                if g.degree() > bounds.lift_degree_cap:
                    skipped += 1
                    continue
                verdict = central_lift(q, contraction, g, bounds)
                lifts.append((g, verdict.status))
                if verdict.status == "not-centralizable":
                    zhat = False
                    nonliftable = g
                    break
                if verdict.status == "unknown":
                    zhat = None
                    caveats.append(f"central lift undecided for {g.exps}: "
                                   f"{verdict.reason}")
                    break
            if zhat is True and skipped:
                zhat = None
                caveats.append(f"central lifts above degree "
                               f"{bounds.lift_degree_cap} were not attempted "
                               f"({skipped} generators)")
        except (SaturationFailure, ContractionError) as exc:
            caveats.append(str(exc))

    notes = (
        "the localizations of R and of the reduced center at the origin are "
        "nonnoetherian whenever R differs from S",
        "the complement of the isomorphism locus in Max S is the zero set of "
        "the listed m0-ideal",
    )
    if witness is not None:
        notes = notes + (
            "the origin of Max R is a smeared-out point: its geometric "
            "dimension is at least 1 (witnessed by the chain monomial)",
        )

    return CenterReport(
        q.num_vertices, len(q.arrows), len(q.faces),
        cert.cancellative, tuple(sorted(cert.uncovered)),
        tuple(sorted(contraction.contracted)) if contraction is not None else None,
        mode if contraction is not None else "none",
        S_gens, dimension, R, r_equals_s, normal, zhat, nonliftable,
        tuple(lifts), witness, m0, tuple(caveats),
        tuple(names) if names else None, notes)


def hilbert_counts(sg: MonomialSemigroup, cap: int) -> tuple[int, ...]:
    """Number of semigroup monomials in each degree up to ``cap``."""
    counts = [0] * (cap + 1)
    counts[0] = 1
    for m in sg.monomials_up_to(cap):
        counts[m.degree()] += 1
    return tuple(counts)
