"""Monomial labels on arrows and paths from matching families.

Each matching family (all perfect matchings, all simple matchings, or the
simple matchings of a contraction target pulled back along the contraction)
induces a multiplicative label: an arrow maps to the product of the
variables of the family members containing it.  Labels are invariant under
the dimer relations, which makes them cheap certificates of inequality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quiver import DimerQuiver, Path
from .matchings import Matching, perfect_matchings, simple_matchings


class FamilyEmptyError(ValueError):
    """No matching of the requested kind exists."""


class Monomial:
    """Exponent vector over a fixed matching family; multiplication adds."""

    __slots__ = ("exps",)

    def __init__(self, exps):
        self.exps = tuple(exps)

    @classmethod
    def one(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    def is_one(self) -> bool:
        return not any(self.exps)

    def degree(self) -> int:
        return sum(self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(a + b for a, b in zip(self.exps, other.exps))

    def __pow__(self, n: int) -> "Monomial":
        return Monomial(e * n for e in self.exps)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(a - b for a, b in zip(self.exps, other.exps))

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __lt__(self, other):
        return (self.degree(), self.exps) < (other.degree(), other.exps)

    def format(self, names=None) -> str:
        if self.is_one():
            return "1"
        if names is None:
            names = [f"x{i}" for i in range(len(self.exps))]
        parts = []
        for name, e in sorted(zip(names, self.exps), key=lambda t: _name_key(t[0])):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "".join(parts)

    def __repr__(self):
        return f"Monomial{self.exps}"


_LETTER_ORDER = {"x": 0, "y": 1, "z": 2, "w": 3}


def _name_key(name: str):
    return (_LETTER_ORDER.get(name, 100), name)


def display_sorted(monomials, names=None) -> list[Monomial]:
    """Deterministic display order: by degree, then letter-heavy first."""

    def key(m: Monomial):
        if names is None:
            return (m.degree(), tuple(-e for e in m.exps))
        ordered = sorted(zip(names, m.exps), key=lambda t: _name_key(t[0]))
        return (m.degree(), tuple(-e for _, e in ordered))

    return sorted(monomials, key=key)


@dataclass(frozen=True)
class GradingContext:
    """An indexed matching family with the induced arrow-label table."""

    quiver: DimerQuiver                 # quiver whose paths get labeled
    kind: str                           # "perfect" or "simple"
    family: tuple[Matching, ...]
    labels: tuple[Monomial, ...]        # per arrow id of ``quiver``
    sigma: Monomial                     # all-ones exponent vector
    contraction: object = None          # set when labels are pulled back
    names: tuple[str, ...] | None = None

    @property
    def nvars(self) -> int:
        return len(self.family)

    def label_of_arrow(self, ident: int) -> Monomial:
        return self.labels[ident]

    def with_names(self, names) -> "GradingContext":
        return GradingContext(self.quiver, self.kind, self.family, self.labels,
                              self.sigma, self.contraction, tuple(names))


def build_context(q: DimerQuiver, kind: str, contraction=None) -> GradingContext:
    """Label table for a matching family.

    ``kind`` is "perfect" or "simple".  With ``contraction`` given, the
    family is taken from the contraction target and pulled back: arrows map
    to the label of their image, contracted arrows to 1.
    """
    ckey = None if contraction is None else tuple(sorted(contraction.contracted))
    key = ("grading", kind, ckey)
    cached = q._cache.get(key)
    if cached is not None:
        return cached

    if contraction is not None:
        if kind != "simple":
            raise ValueError("pulled-back labels are defined over simple matchings")
        target = contraction.target
        family = simple_matchings(target)
        if not family:
            raise FamilyEmptyError("contraction target has no simple matchings")
        nvars = len(family)
        target_label = {}
        for a in target.arrows:
            exps = [1 if a.ident in m.arrows else 0 for m in family]
            target_label[a.ident] = Monomial(exps)
        labels = []
        for a in q.arrows:
            image = contraction.arrow_map.get(a.ident)
            labels.append(Monomial.one(nvars) if image is None else target_label[image])
    else:
        family = perfect_matchings(q) if kind == "perfect" else simple_matchings(q)
        if not family:
            raise FamilyEmptyError(f"quiver has no {kind} matchings")
        nvars = len(family)
        labels = [Monomial([1 if a.ident in m.arrows else 0 for m in family])
                  for a in q.arrows]

    ctx = GradingContext(q, kind, family, tuple(labels), Monomial((1,) * nvars),
                         contraction)
    q._cache[key] = ctx
    return ctx


def label(ctx: GradingContext, p: Path) -> Monomial:
    """Product of the arrow labels along ``p``; the idempotent labels to 1."""
    exps = [0] * ctx.nvars
    for ident in p.arrows:
        for i, e in enumerate(ctx.labels[ident].exps):
            exps[i] += e
    return Monomial(exps)


def sigma(ctx: GradingContext) -> Monomial:
    """Label of every unit cycle: the product of all family variables."""
    return ctx.sigma
