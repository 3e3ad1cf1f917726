"""Path equality modulo the dimer relations, and its consequences.

The relation ideal identifies the two complementary paths of every arrow
(the boundaries of its two faces with the arrow removed).  Equality of two
paths is semidecided by a bounded bidirectional closure under subpath
replacement; endpoint, lift and label invariants certify most inequalities
without any search.  A verdict is only ``unknown`` when a budget was hit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .quiver import DimerQuiver, Path
from .matchings import is_cancellative
from .grading import GradingContext, Monomial, build_context, label


@dataclass(frozen=True)
class RelationPair:
    """The two complementary paths of an arrow, one from each of its faces."""

    arrow: int
    left: Path
    right: Path


def face_relations(q: DimerQuiver) -> tuple[RelationPair, ...]:
    """One relation pair per arrow, extracted from its two faces."""
    cached = q._cache.get("face_relations")
    if cached is not None:
        return cached
    rels = []
    for a in q.arrows:
        f1, f2 = sorted(q.faces_of_arrow(a.ident))
        rels.append(RelationPair(a.ident,
                                 _complement(q, f1, a.ident),
                                 _complement(q, f2, a.ident)))
    result = tuple(rels)
    q._cache["face_relations"] = result
    return result


def _complement(q: DimerQuiver, face_id: int, arrow_id: int) -> Path:
    boundary = q.faces[face_id].boundary
    i = boundary.index(arrow_id)
    rest = boundary[i + 1:] + boundary[:i]
    return Path(q, q.arrow(arrow_id).head, rest)


@dataclass(frozen=True)
class PathBudget:
    length_cap: int | None = None    # default: 3 * (longest face + longer input)
    node_budget: int = 100_000

    def resolved_cap(self, q: DimerQuiver, p1: Path, p2: Path) -> int:
        if self.length_cap is not None:
            return self.length_cap
        longest_face = max(len(f.boundary) for f in q.faces)
        return 3 * (longest_face + max(len(p1), len(p2)))


@dataclass(frozen=True)
class EquivalenceVerdict:
    status: str                     # "equal" | "not-equal" | "unknown"
    reason: str = ""
    trace: tuple | None = None      # rewrite chain for "equal" verdicts

    @property
    def is_equal(self) -> bool:
        return self.status == "equal"

    @property
    def is_not_equal(self) -> bool:
        return self.status == "not-equal"

    @property
    def is_unknown(self) -> bool:
        return self.status == "unknown"


def _rewrite_rules(q: DimerQuiver):
    cached = q._cache.get("rewrite_rules")
    if cached is not None:
        return cached
    rules = []
    for rel in face_relations(q):
        l, r = rel.left.arrows, rel.right.arrows
        if l != r:
            rules.append((l, r))
            rules.append((r, l))
    result = tuple(rules)
    q._cache["rewrite_rules"] = result
    return result


def _eta_context(q: DimerQuiver) -> GradingContext:
    return build_context(q, "perfect")


def _successors(q, arrows, rules, cap):
    """All single-rewrite neighbours; second item flags a cap suppression."""
    out = []
    suppressed = False
    n = len(arrows)
    for src, dst in rules:
        m = len(src)
        if m > n:
            continue
        grow = n - m + len(dst)
        for i in range(n - m + 1):
            if arrows[i:i + m] == src:
                if grow > cap:
                    suppressed = True
                    continue
                out.append((arrows[:i] + dst + arrows[i + m:], (src, dst, i)))
    return out, suppressed


def paths_equal(p: Path, q_path: Path, budget: PathBudget | None = None, *,
                allow_fast_path: bool = True) -> EquivalenceVerdict:
    """Decide p = q modulo the dimer relations, within budget.

    Certified ``not-equal`` comes either from an invariant (endpoint, lift,
    or perfect-matching label mismatch) or from two saturated, disjoint
    rewrite closures.  On a cancellative quiver, equal simple-matching
    labels plus equal lift endpoints already certify equality.
    """
    quiver = p.quiver
    if quiver is not q_path.quiver:
        raise ValueError("paths live on different quivers")
    if p.base != q_path.base or p.head != q_path.head:
        raise ValueError("paths do not share tail and head")
    budget = budget or PathBudget()

    if p.arrows == q_path.arrows:
        return EquivalenceVerdict("equal", "identical paths", trace=())
    if p.displacement != q_path.displacement:
        return EquivalenceVerdict(
            "not-equal",
            f"lift displacement {p.displacement} != {q_path.displacement}")
    eta = _eta_context(quiver)
    if label(eta, p) != label(eta, q_path):
        return EquivalenceVerdict("not-equal", "perfect-matching labels differ")

    if allow_fast_path and is_cancellative(quiver).cancellative:
        tau = build_context(quiver, "simple")
        if label(tau, p) == label(tau, q_path):
            return EquivalenceVerdict("equal", "cancellative fast path", trace=None)
        return EquivalenceVerdict("not-equal",
                                  "simple-matching labels differ (cancellative)")

    rules = _rewrite_rules(quiver)
    cap = budget.resolved_cap(quiver, p, q_path)

    start_a, start_b = p.arrows, q_path.arrows
    seen = {start_a: ("A", None, None), start_b: ("B", None, None)}
    frontier_a, frontier_b = [start_a], [start_b]
    suppressed = False
    nodes = 2

    def chain_to_start(node):
        chain = []
        cur = node
        while cur is not None:
            _, parent, step = seen[cur]
            chain.append((cur, step))
            cur = parent
        return chain

    def build_trace(expanding, meet, step):
        # full certificate: start_a ... expanding -> meet ... start_b (or mirrored)
        left = list(reversed(chain_to_start(expanding)))
        right = chain_to_start(meet)
        return tuple(left + [(meet, step)] + right[1:])

    while frontier_a or frontier_b:
        # expand the smaller live frontier first
        if frontier_a and (not frontier_b or len(frontier_a) <= len(frontier_b)):
            frontier, side = frontier_a, "A"
        else:
            frontier, side = frontier_b, "B"
        new_frontier = []
        for arrows in frontier:
            succs, sup = _successors(quiver, arrows, rules, cap)
            suppressed = suppressed or sup
            for nxt, step in succs:
                if nxt in seen:
                    if seen[nxt][0] != side:
                        return EquivalenceVerdict("equal", "closures met",
                                                  trace=build_trace(arrows, nxt, step))
                    continue
                seen[nxt] = (side, arrows, step)
                nodes += 1
                if nodes > budget.node_budget:
                    return EquivalenceVerdict("unknown", "node budget exhausted")
                new_frontier.append(nxt)
        if side == "A":
            frontier_a = new_frontier
        else:
            frontier_b = new_frontier

    if suppressed:
        return EquivalenceVerdict("unknown", "length cap truncated the closure")
    return EquivalenceVerdict("not-equal", "closures saturated without meeting")


# --- non-cancellative pairs --------------------------------------------------

@dataclass(frozen=True)
class NoncancellativePair:
    p: Path
    q: Path
    witness: Path | None      # r with rp = rq (applied after) or pr = qr (before)
    witness_side: str | None  # "after" or "before"


def _iter_paths(q: DimerQuiver, max_len: int):
    """All paths up to ``max_len``, by length then base then arrows.

    Length-0 paths (vertex idempotents) come first: a vertex may pair with
    a lift-trivial cycle, which is the degenerate shape permanent 2-cycles
    produce.
    """
    for length in range(0, max_len + 1):
        for base in q.vertices:
            stack = [(base, ())]
            out = []

            def extend(at, arrows):
                if len(arrows) == length:
                    out.append(arrows)
                    return
                for ident in q.out_arrows(at):
                    extend(q.arrow(ident).head, arrows + (ident,))

            extend(base, ())
            for arrows in sorted(out):
                yield Path(q, base, arrows)


def find_noncancellative_pair(q: DimerQuiver, length_bound: int,
                              budget: PathBudget | None = None
                              ) -> NoncancellativePair | None:
    """Bounded search for two distinct paths with equal invariants.

    Candidates share tail, head, lift displacement and perfect-matching
    label; a certified not-equal verdict makes them a non-cancellative pair.
    Returns None when nothing is found within the bound, which is not a
    proof of cancellativity.
    """
    eta = _eta_context(q)
    budget = budget or PathBudget()
    groups: dict[tuple, list[Path]] = {}
    for p in _iter_paths(q, length_bound):
        key = (p.base, p.head, p.displacement, label(eta, p))
        reps = groups.setdefault(key, [])
        for rep in reps:
            verdict = paths_equal(rep, p, budget, allow_fast_path=False)
            if verdict.is_not_equal:
                witness, side = _find_witness(rep, p, budget)
                return NoncancellativePair(rep, p, witness, side)
            if verdict.is_equal:
                break
        else:
            reps.append(p)
    return None


def _find_witness(p: Path, q_path: Path, budget: PathBudget, max_power: int = 3):
    from .quiver import unit_cycle_at

    for m in range(1, max_power + 1):
        after = unit_cycle_at(p.quiver, p.head).power(m)
        if paths_equal(p.compose(after), q_path.compose(after), budget,
                       allow_fast_path=False).is_equal:
            return after, "after"
        before = unit_cycle_at(p.quiver, p.base).power(m)
        if paths_equal(before.compose(p), before.compose(q_path), budget,
                       allow_fast_path=False).is_equal:
            return before, "before"
    return None, None


# --- two-cycles --------------------------------------------------------------

@dataclass(frozen=True)
class TwoCycleInfo:
    face: int
    a: int            # the arrow whose complementary cycle absorbs the other
    b: int
    permanent: bool
    case: str | None  # "ii" or "iii" for permanent ones


def permanent_two_cycles(q: DimerQuiver) -> tuple[TwoCycleInfo, ...]:
    """Classify every length-2 face as removable or permanent.

    A 2-cycle on arrows u, v is permanent exactly when one arrow is a
    subpath of the other's complementary path; it falls in the leftmost
    ("ii") shape when that occurrence is the temporally last arrow.
    """
    out = []
    for f in q.faces:
        if len(f.boundary) != 2:
            continue
        u, v = f.boundary
        comp = {}
        for ident in (u, v):
            other_faces = [fi for fi in q.faces_of_arrow(ident) if fi != f.ident]
            comp[ident] = _complement(q, other_faces[0], ident)
        info = None
        for a, b in ((v, u), (u, v)):
            s = comp[a].arrows
            if b in s:
                case = "ii" if s[-1] == b else "iii"
                info = TwoCycleInfo(f.ident, a, b, True, case)
                break
        if info is None:
            info = TwoCycleInfo(f.ident, v, u, False, None)
        out.append(info)
    return tuple(out)


# --- centrality --------------------------------------------------------------

@dataclass(frozen=True)
class CentralCandidate:
    """Per-vertex rational combinations of cycles sharing one label."""

    ctx: GradingContext
    components: dict  # vertex -> tuple of (Fraction, Path)
    image: Monomial

    def validate(self):
        for v, terms in self.components.items():
            for _, cyc in terms:
                if cyc.base != v or cyc.head != v:
                    raise ValueError(f"component at {v} is not a cycle there")
                if label(self.ctx, cyc) != self.image:
                    raise ValueError("component label differs from the image")


@dataclass(frozen=True)
class CentralityVerdict:
    status: str                 # "central" | "not-central" | "unknown"
    violating_arrow: int | None = None
    reason: str = ""

    @property
    def is_central(self):
        return self.status == "central"


def is_central(candidate: CentralCandidate, budget: PathBudget | None = None
               ) -> CentralityVerdict:
    """Check a·c = c·a for every arrow, pairing summands with the oracle."""
    candidate.validate()
    q = candidate.ctx.quiver
    budget = budget or PathBudget()
    for arrow in q.arrows:
        terms = []
        for coeff, cyc in candidate.components.get(arrow.tail, ()):
            terms.append((Fraction(coeff), cyc.compose(Path(q, arrow.tail, (arrow.ident,)))))
        for coeff, cyc in candidate.components.get(arrow.head, ()):
            terms.append((-Fraction(coeff),
                          Path(q, arrow.tail, (arrow.ident,)).compose(cyc)))
        classes: list[list] = []   # [representative, coefficient-sum]
        for coeff, path in terms:
            placed = False
            for entry in classes:
                verdict = paths_equal(entry[0], path, budget)
                if verdict.is_unknown:
                    return CentralityVerdict("unknown", arrow.ident,
                                             "oracle budget exhausted")
                if verdict.is_equal:
                    entry[1] += coeff
                    placed = True
                    break
            if not placed:
                classes.append([path, coeff])
        for rep, total in classes:
            if total != 0:
                return CentralityVerdict(
                    "not-central", arrow.ident,
                    f"unmatched summand {rep} with coefficient {total}")
    return CentralityVerdict("central")
