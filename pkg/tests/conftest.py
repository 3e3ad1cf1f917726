"""Shared fixtures: parsed quivers and the canonical analyses, computed once."""

from __future__ import annotations

import pytest

import dimeralg as da
from dimeralg.fixtures import FIXTURES, LETTERS, fixture_quiver, parse_letters

ALL_FIXTURES = sorted(FIXTURES)

# canonical contraction per fixture (what `analyze` uses); None = no contraction
CANONICAL = {
    "c3": (),
    "conif2": (5,),
    "conif2_target": (),
    "ex1": (1, 3),
    "ex2": (5,),
    "ex3": (10,),
    "isor": (0, 3, 8, 9, 12, 14, 16),
    "sigall": (0, 2, 3, 5),
    "nested2": (8, 9, 10, 11, 20, 21, 22, 23),
    "perm2": None,
}

NONCANCELLATIVE_WITH_CONTRACTION = [
    "conif2", "ex1", "ex2", "ex3", "isor", "sigall", "nested2"]


@pytest.fixture(scope="session")
def quivers():
    return {name: fixture_quiver(name) for name in ALL_FIXTURES}


class Analysis:
    def __init__(self, name, q):
        self.name = name
        self.quiver = q
        self.contraction = None
        self.S = None
        self.R = None
        self.names = None
        spec = CANONICAL[name]
        if spec is not None:
            self.contraction = da.contract(q, spec)
            self.S = da.cycle_algebra(q, self.contraction)
            self.R = da.homotopy_center(q, self.contraction)
        if name in LETTERS:
            _, table = parse_letters(LETTERS[name])
            self.names = tuple(table[i] for i in range(len(table)))

    def mono(self, **letters):
        """Monomial from letter exponents, e.g. mono(x=2, z=1)."""
        assert self.names is not None
        return da.Monomial(letters.get(n, 0) for n in self.names)

    @property
    def sigma(self):
        return self.R.sigma


@pytest.fixture(scope="session")
def analyses(quivers):
    return {name: Analysis(name, quivers[name]) for name in ALL_FIXTURES}
