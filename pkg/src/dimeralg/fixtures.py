"""Built-in quiver corpus used by the tests and the CLI fixture seeder.

Each entry is the exact text of a quiver file; letters files map the simple
matchings of the canonical analysis target to short variable names so that
reports print in the familiar x, y, z, w alphabet.
"""

from __future__ import annotations

from .quiver import DimerQuiver, parse_quiver

FIXTURES: dict[str, str] = {}
LETTERS: dict[str, str] = {}


def _add(name: str, text: str, letters: str | None = None):
    FIXTURES[name] = text.lstrip("\n")
    if letters is not None:
        LETTERS[name] = letters.lstrip("\n")


_add("c3", """
# one vertex, three loops, two triangular faces (hexagonal tiling)
vertices 1
arrow 0 0 0 1 0
arrow 1 0 0 0 1
arrow 2 0 0 -1 -1
face 0 0 1 2
face 1 0 2 1
""", """
# cancellative: analysis runs through the identity contraction
contract none
0 x
1 y
2 z
""")

_add("conif2", """
# two grid vertices and one interior vertex; arrow 5 contracts onto the
# cancellative target in conif2_target
vertices 3
arrow 0 1 0 -1 1
arrow 1 1 0 0 0
arrow 2 0 2 1 0
arrow 3 0 2 0 1
arrow 4 2 1 0 -1
arrow 5 2 1 0 0
arrow 6 0 0 0 -1
face 0 0 2 4
face 1 4 1 3
face 2 5 1 6 3
face 3 6 2 5 0
""", """
contract 5
0 x
1 y
2 z
""")

_add("conif2_target", """
# contraction target of conif2: two vertices, one loop at each
vertices 2
arrow 0 1 0 -1 1
arrow 1 1 0 0 0
arrow 2 0 1 1 0
arrow 3 0 1 0 1
arrow 4 1 1 0 -1
arrow 5 0 0 0 -1
face 0 0 2 4
face 1 4 1 3
face 2 3 1 5
face 3 5 2 0
""", """
contract none
0 x
1 y
2 z
""")

_add("ex1", """
# four vertices around two hexagonal faces; arrows 4 and 5 contract onto the
# two-vertex square target
vertices 4
arrow 0 0 1 0 0
arrow 1 2 0 -1 1
arrow 2 0 1 1 0
arrow 3 1 3 0 -1
arrow 4 1 2 0 0
arrow 5 3 0 0 0
face 0 0 4 1 2 3 5
face 1 2 4 1 0 3 5
""", """
contract 1 3
0 x
1 y
2 z
3 w
""")

_add("ex2", """
# three vertices, six triangular faces; contracting arrow 5 (or arrow 8)
# reaches a cancellative target
vertices 3
arrow 0 1 0 0 0
arrow 1 0 2 0 0
arrow 2 2 1 0 0
arrow 3 1 1 0 1
arrow 4 1 0 -1 0
arrow 5 0 1 1 -1
arrow 6 1 1 -1 1
arrow 7 2 1 1 0
arrow 8 1 2 0 -1
face 0 0 1 2
face 1 3 8 2
face 2 3 4 5
face 3 7 6 8
face 4 7 4 1
face 5 6 0 5
""", """
contract 5
0 y
1 z
2 w
3 x
""")

_add("ex3", """
# five vertices; arrow 10 contracts onto a four-vertex square target
vertices 5
arrow 0 0 1 0 0
arrow 1 1 4 0 0
arrow 2 3 1 -1 0
arrow 3 1 0 1 0
arrow 4 2 3 1 0
arrow 5 3 0 0 1
arrow 6 0 4 0 -1
arrow 7 4 2 0 0
arrow 8 2 0 0 1
arrow 9 0 2 -1 -1
arrow 10 4 3 0 0
face 0 2 3 0 1 10
face 1 4 5 9
face 2 5 6 10
face 3 7 8 6
face 4 1 7 4 2
face 5 0 3 9 8
""", """
contract 10
0 x
1 w
2 y
3 z
""")

_add("isor", """
# nine vertices; the seven arrows 0, 3, 8, 9, 12, 14, 16 contract onto a
# two-vertex target with one loop at each vertex
vertices 9
arrow 0 5 0 0 0
arrow 1 1 5 0 0
arrow 2 4 6 0 0
arrow 3 6 2 0 0
arrow 4 4 6 -1 0
arrow 5 6 7 0 0
arrow 6 7 4 0 0
arrow 7 7 4 1 0
arrow 8 1 7 0 -1
arrow 9 8 2 0 1
arrow 10 0 8 -1 -1
arrow 11 0 1 0 0
arrow 12 2 1 0 0
arrow 13 2 3 0 0
arrow 14 3 0 1 0
arrow 15 0 4 0 0
arrow 16 4 0 0 1
face 0 11 1 0
face 1 15 2 3 12 1 0
face 2 2 5 6
face 3 5 7 4
face 4 13 14 15 4 3
face 5 16 11 8 6
face 6 7 16 10 9 12 8
face 7 13 14 10 9
""", """
# canonical contraction: arrows 0 3 8 9 12 14 16
contract 0 3 8 9 12 14 16
0 x
1 y
2 z
""")

_add("sigall", """
# six vertices; arrows 0, 3, 5, 6 contract onto the square (conifold) target
vertices 6
arrow 0 0 4 0 0
arrow 1 4 1 0 0
arrow 2 2 0 -1 1
arrow 3 0 5 1 -1
arrow 4 5 1 0 1
arrow 5 1 3 0 -1
arrow 6 1 2 0 0
arrow 7 3 0 0 0
face 0 0 1 6 2 3 4 5 7
face 1 3 4 6 2 0 1 5 7
""", """
contract 0 2 3 5
0 x
1 y
2 z
3 w
""")

_add("perm2", """
# square target plus two pendant bigons at vertex 0; the bigon on arrows
# 4, 5 is a permanent 2-cycle
vertices 4
arrow 0 0 1 0 0
arrow 1 1 0 1 0
arrow 2 0 1 0 1
arrow 3 1 0 -1 -1
arrow 4 0 2 0 0
arrow 5 2 0 0 0
arrow 6 0 3 0 0
arrow 7 3 0 0 0
face 0 4 5
face 1 6 7 4 5
face 2 0 1 2 3 6 7
face 3 2 1 0 3
""")

_add("nested2", """
# conifold with two nested squares; arrows 8-11 and 20-23 contract
vertices 10
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
arrow 16 3 6 0 0
arrow 17 4 7 0 0
arrow 18 5 8 0 0
arrow 19 2 9 0 0
arrow 20 6 2 0 0
arrow 21 7 3 0 0
arrow 22 8 4 0 0
arrow 23 9 5 0 0
arrow 24 6 7 0 0
arrow 25 7 8 0 0
arrow 26 8 9 0 0
arrow 27 9 6 0 0
face 0 0 4 8
face 1 1 5 9
face 2 2 6 10
face 3 3 7 11
face 4 8 7 15
face 5 9 4 12
face 6 10 5 13
face 7 11 6 14
face 8 12 16 20
face 9 13 17 21
face 10 14 18 22
face 11 15 19 23
face 12 20 19 27
face 13 21 16 24
face 14 22 17 25
face 15 23 18 26
face 16 24 25 26 27
face 17 2 1 0 3
""", """
# canonical contraction: arrows 8 9 10 11 20 21 22 23
contract 8 9 10 11 20 21 22 23
0 x
1 z
2 y
3 w
""")


def fixture_quiver(name: str) -> DimerQuiver:
    return parse_quiver(FIXTURES[name])


def parse_letters(text: str):
    """Return (contract_arrows | None, {index: name}) from a letters file."""
    contract = None
    names: dict[int, str] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "contract":
            contract = None if toks[1:] == ["none"] else tuple(int(t) for t in toks[1:])
        else:
            names[int(toks[0])] = toks[1]
    return contract, names


def seed_fixtures(directory) -> list[str]:
    """Write the corpus as .dimer/.letters files; returns the paths written."""
    import os

    os.makedirs(directory, exist_ok=True)
    written = []
    for name, text in sorted(FIXTURES.items()):
        path = os.path.join(directory, f"{name}.dimer")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        written.append(path)
        letters = LETTERS.get(name)
        if letters is not None:
            lpath = os.path.join(directory, f"{name}.letters")
            with open(lpath, "w", encoding="utf-8") as fh:
                fh.write(letters)
            written.append(lpath)
    return written
