"""Corner labelling of diagram regions and the reduced Alexander polynomial.

At each crossing the four region corners receive values t, -t, 1, -1: the
two corners on the left of the oriented over-strand are dotted and carry the
t-weight, with -t on the one lying left of the under-strand and t on the one
lying right of it; the undotted pair carries 1 (under-left) and -1
(under-right).  Summing corner values of each region at each crossing gives
a matrix whose minors compute the Alexander polynomial; normalization by a
unit makes the constant term positive.

(The single-chirality picture that fixes this rule is ambiguous about which
strand the dots follow; tying them to the under-strand breaks coefficient
symmetry and the tree-sum identity on any mixed-sign diagram, so the
over-strand reading is the only consistent one.)
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, OVER_D, UnsupportedDiagram
from .poly import LaurentPoly, ONE, poly_det, normalize_reduced

_T = LaurentPoly({1: 1})
_MT = LaurentPoly({1: -1})
_ONE = LaurentPoly({0: 1})
_MONE = LaurentPoly({0: -1})

# corner index -> value, for corners 0=SE, 1=NE, 2=NW, 3=SW with the incoming
# under-strand pointing north, keyed by the outgoing over-strand slot
_CORNER_VALUES = {
    OVER_D: (_T, _MONE, _ONE, _MT),   # over-strand heading west: dots south
    1: (_MONE, _T, _MT, _ONE),        # over-strand heading east: dots north
}
_DOTTED = {
    OVER_D: (True, False, False, True),
    1: (False, True, True, False),
}


@dataclass(frozen=True)
class CornerLabel:
    face: int
    value: LaurentPoly
    dotted: bool


class CornerTable:
    "Per-crossing corner labels, indexed by crossing and corner position."

    def __init__(self, labels: list[tuple[CornerLabel, CornerLabel, CornerLabel, CornerLabel]]):
        self.labels = labels

    def corners(self, ci: int):
        return self.labels[ci]

    def __len__(self):
        return len(self.labels)


def corner_labels(d: Diagram) -> CornerTable:
    if d.n == 0:
        raise UnsupportedDiagram("corner labels need at least one crossing")
    rows = []
    for ci in range(d.n):
        over_out = d.crossings[ci].over_out_slot
        rows.append(tuple(
            CornerLabel(d.face_of_corner(ci, k), _CORNER_VALUES[over_out][k],
                        _DOTTED[over_out][k])
            for k in range(4)
        ))
    return CornerTable(rows)


def dotted_white_corner(d: Diagram, ci: int) -> int:
    "The dotted one of the two white corners at a crossing (0..3)."
    w1, w2 = d.white_corners(ci)
    return w1 if _DOTTED[d.crossings[ci].over_out_slot][w1] else w2


def alexander_matrix(d: Diagram, p: int, q: int) -> list[list[LaurentPoly]]:
    """Region-by-crossing matrix with the rows of faces p and q deleted.

    ``p`` and ``q`` must be adjacent faces (sharing an arc).  A face meeting
    a crossing in two corners contributes the sum of both corner values.
    """
    if not _faces_adjacent(d, p, q):
        raise UnsupportedDiagram(f"faces {p} and {q} are not adjacent")
    table = corner_labels(d)
    rows = []
    for f in d.faces:
        if f.index in (p, q):
            continue
        row = []
        for ci in range(d.n):
            entry = LaurentPoly()
            for lab in table.corners(ci):
                if lab.face == f.index:
                    entry = entry + lab.value
            row.append(entry)
        rows.append(row)
    return rows


def _faces_adjacent(d: Diagram, p: int, q: int) -> bool:
    ids = {f.index for f in d.faces}
    if p not in ids or q not in ids or p == q:
        return False
    return any(set(d.faces_of_arc(a)) == {p, q} for a in d.arcs)


def default_region_pair(d: Diagram) -> tuple[int, int]:
    "Lexicographically smallest pair of adjacent faces; fixed for reproducibility."
    for p in range(len(d.faces)):
        for q in range(p + 1, len(d.faces)):
            if _faces_adjacent(d, p, q):
                return p, q
    raise UnsupportedDiagram("no adjacent face pair")


def reduced_alexander(d: Diagram) -> LaurentPoly:
    """The reduced Alexander polynomial: the exact determinant of the matrix
    for the default region pair, normalized to a positive constant term."""
    if d.n == 0:
        return ONE
    p, q = default_region_pair(d)
    return normalize_reduced(poly_det(alexander_matrix(d, p, q)))
