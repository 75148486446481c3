"""Oriented link diagrams as validated PD codes.

A diagram is a list of crossings ``X(a,b,c,d)`` whose entries are arc labels
listed counterclockwise starting at the incoming under-strand.  Arc labels
run 1..2n, consecutive along each link component (wrapping at the end of the
component), which fixes the orientation of every strand.  The tuple order
gives each crossing a rotation, so the diagram carries a spherical embedding:
faces are traced from it, and Seifert circles, checkerboard colouring and
the diagram classification flags are all derived combinatorially.

Slot layout at a crossing, with the incoming under-strand drawn pointing
north: slot 0 = a (south, under in), 1 = b (east), 2 = c (north, under out),
3 = d (west).  Corner k sits between slots k and k+1, so corner 0 = SE,
1 = NE, 2 = NW, 3 = SW.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace
from typing import Optional


class PDError(ValueError):
    "Malformed or inconsistent PD input."


class UnsupportedDiagram(ValueError):
    "Structurally valid input that an operation's precondition rejects."


UNDER_IN, OVER_B, UNDER_OUT, OVER_D = 0, 1, 2, 3

_TOKEN_RE = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")


@dataclass(frozen=True)
class Crossing:
    slots: tuple[int, int, int, int]       # arc labels at slots 0..3
    over_out_slot: int                     # 1 or 3: slot of the outgoing over-strand
    sign: int                              # +1 or -1

    @property
    def over_in_slot(self) -> int:
        return 4 - self.over_out_slot      # 3 <-> 1


@dataclass(frozen=True)
class Face:
    index: int
    darts: tuple[tuple[int, int], ...]     # (crossing, slot) departure darts, in trace order
    corners: tuple[tuple[int, int], ...]   # (crossing, corner index), one per dart
    arcs: tuple[int, ...]                  # arc crossed at each dart
    color: Optional[str] = None

    def __len__(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class SeifertCircle:
    arcs: tuple[int, ...]                  # cyclic, in strand order
    special: bool
    inside_face: Optional[int]             # face index when the circle bounds one


@dataclass(frozen=True)
class DiagramFlags:
    alternating: bool
    special: bool
    positive: bool
    negative: bool
    reduced: bool
    looks_prime: bool


@dataclass(frozen=True)
class GenusData:
    s: int                                 # Seifert circles
    c: int                                 # crossings
    chi: int                               # s - c
    one_minus_chi: int                     # c - s + 1


class Diagram:
    """Validated oriented link diagram.  Immutable after construction."""

    def __init__(self, rows, name: str | None = None,
                 _colors: dict[int, str] | None = None):
        self.name = name
        self.rows = tuple(tuple(int(x) for x in r) for r in rows)
        for r in self.rows:
            if len(r) != 4:
                raise PDError(f"crossing {r} does not have 4 arc ends")
        self.n = len(self.rows)
        self._validate_labels()
        self.components, over_out = self._trace_strands()
        self.crossings = tuple(
            Crossing(self.rows[i], over_out[i], +1 if over_out[i] == OVER_B else -1)
            for i in range(self.n)
        )
        self.faces, self._dart_face = self._trace_faces()
        if _colors:
            self.faces = tuple(replace(f, color=_colors.get(f.index)) for f in self.faces)
        self._face_of_corner = {
            corner: f.index for f in self.faces for corner in f.corners
        }
        self._circles: Optional[tuple[SeifertCircle, ...]] = None

    # -- construction helpers -----------------------------------------

    def _validate_labels(self) -> None:
        occ: dict[int, list[tuple[int, int]]] = {}
        for i, row in enumerate(self.rows):
            for s, label in enumerate(row):
                if label < 1:
                    raise PDError(f"arc label {label} is not a positive integer")
                occ.setdefault(label, []).append((i, s))
        for label, ends in occ.items():
            if len(ends) != 2:
                raise PDError(f"arc {label} appears {len(ends)} times, expected 2")
        expected = set(range(1, 2 * self.n + 1))
        if set(occ) != expected:
            raise PDError(f"arc labels must be exactly 1..{2 * self.n}")
        self.arc_ends: dict[int, tuple[tuple[int, int], tuple[int, int]]] = {
            a: (ends[0], ends[1]) for a, ends in occ.items()
        }

    def other_end(self, ci: int, s: int) -> tuple[int, int]:
        e1, e2 = self.arc_ends[self.rows[ci][s]]
        return e2 if e1 == (ci, s) else e1

    def _trace_strands(self):
        """Trace each closed strand, orient it, and infer the over-strand
        direction at every crossing.

        Orientation comes from the under-strand slots where possible (slot 0
        is always an entry, slot 2 an exit) and from ascending arc labels
        otherwise; the two sources must agree everywhere.
        """
        if self.n == 0:
            return ((),), {}
        seen: set[tuple[int, int]] = set()
        entering: dict[tuple[int, int], bool] = {}
        components = []
        for start_label in range(1, 2 * self.n + 1):
            start = self.arc_ends[start_label][0]
            if start in seen:
                continue
            walk: list[tuple[int, int]] = []   # arrival end of each arc, in walk order
            end = start
            while True:
                walk.append(end)
                seen.add(end)
                ci, s = end
                exit_slot = (s + 2) % 4
                seen.add((ci, exit_slot))
                nxt = self.other_end(ci, exit_slot)
                if nxt == start:
                    break
                end = nxt
            labels = [self.rows[ci][s] for ci, s in walk]
            lo = min(labels)
            m = len(labels)
            if sorted(labels) != list(range(lo, lo + m)):
                raise PDError("component arc labels are not a contiguous range")

            def succ_label(v: int) -> int:
                return (v - lo + 1) % m + lo

            fwd = all(labels[(i + 1) % m] == succ_label(labels[i]) for i in range(m))
            rev = all(labels[i - 1] == succ_label(labels[i]) for i in range(m))
            slot_votes = {s == UNDER_IN for _, s in walk if s % 2 == 0}
            if len(slot_votes) > 1:
                raise PDError("inconsistent strand succession")
            if slot_votes:
                forward = slot_votes.pop()
                if not (fwd if forward else rev):
                    raise PDError("inconsistent strand succession")
            elif fwd != rev:
                forward = fwd
            else:
                raise PDError("cannot orient a component that never passes under")
            for ci, s in walk:
                entering[(ci, s)] = forward
                entering[(ci, (s + 2) % 4)] = not forward
            ordered = labels if forward else labels[::-1]
            k = ordered.index(lo)
            components.append(tuple(ordered[k:] + ordered[:k]))

        comp_of = {}
        for comp in components:
            for a in comp:
                comp_of[a] = comp
        over_out: dict[int, int] = {}
        for i in range(self.n):
            if entering[(i, UNDER_IN)] is not True or entering[(i, UNDER_OUT)] is not False:
                raise PDError("inconsistent strand succession at a crossing")
            in_b, in_d = entering[(i, OVER_B)], entering[(i, OVER_D)]
            if in_b == in_d:
                raise PDError("over-strand direction is inconsistent")
            over_out[i] = OVER_B if in_d else OVER_D
            # the over direction must read x -> x+1; the wrap step hi -> lo is
            # admissible only when the pair is not plainly consecutive (this
            # settles the two-arc ambiguity, rejecting e.g. X(1,1,2,2))
            x = self.rows[i][OVER_D if in_d else OVER_B]
            y = self.rows[i][over_out[i]]
            comp = comp_of[x]
            if y != x + 1 and not (x == max(comp) and y == min(comp) and len(comp) > 2):
                raise PDError("inconsistent strand succession on the over-strand")
        components.sort(key=lambda comp: comp[0])

        # connectivity of the underlying 4-valent graph (split links rejected)
        reached = {0}
        frontier = [0]
        while frontier:
            ci = frontier.pop()
            for s in range(4):
                cj, _ = self.other_end(ci, s)
                if cj not in reached:
                    reached.add(cj)
                    frontier.append(cj)
        if len(reached) != self.n:
            raise PDError("diagram is disconnected (split links are not supported)")
        return tuple(components), over_out

    def _trace_faces(self):
        if self.n == 0:
            # the round unknot splits the sphere into two crossing-free faces
            return (Face(0, (), (), ()), Face(1, (), (), ())), {}
        unvisited = {(i, s) for i in range(self.n) for s in range(4)}
        faces = []
        dart_face: dict[tuple[int, int], int] = {}
        while unvisited:
            start = min(unvisited)
            darts, corners, arcs = [], [], []
            d = start
            while True:
                unvisited.discard(d)
                dart_face[d] = len(faces)
                darts.append(d)
                arcs.append(self.rows[d[0]][d[1]])
                cj, sp = self.other_end(*d)
                corners.append((cj, sp))
                d = (cj, (sp + 1) % 4)
                if d == start:
                    break
            faces.append(Face(len(faces), tuple(darts), tuple(corners), tuple(arcs)))
        if self.n - 2 * self.n + len(faces) != 2:
            raise PDError("diagram does not embed in the sphere")
        return tuple(faces), dart_face

    # -- basic queries -------------------------------------------------

    @property
    def arcs(self) -> list[int]:
        return list(range(1, 2 * self.n + 1))

    def face_of_corner(self, ci: int, corner: int) -> int:
        return self._face_of_corner[(ci, corner)]

    def faces_of_arc(self, arc: int) -> tuple[int, int]:
        d1, d2 = self.arc_ends[arc]
        return self._dart_face[d1], self._dart_face[d2]

    def smoothing_corners(self, ci: int) -> tuple[int, int]:
        "Corners cut by the Seifert smoothing; they lie inside Seifert circles."
        return (1, 3) if self.crossings[ci].over_out_slot == OVER_D else (0, 2)

    def white_corners(self, ci: int) -> tuple[int, int]:
        return (0, 2) if self.crossings[ci].over_out_slot == OVER_D else (1, 3)

    def with_face_colors(self, colors: dict[int, str]) -> "Diagram":
        return Diagram(list(self.rows), name=self.name, _colors=colors)

    # -- serialization ---------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"name": self.name or "", "pd": [list(r) for r in self.rows]}

    def to_pd_text(self) -> str:
        return " ".join(f"X({a},{b},{c},{d})" for a, b, c, d in self.rows)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Diagram":
        try:
            rows = [tuple(r) for r in obj["pd"]]
        except (KeyError, TypeError) as exc:
            raise PDError(f"bad diagram JSON: {exc}") from exc
        return cls(rows, name=obj.get("name") or None)

    def __repr__(self) -> str:
        return f"Diagram({self.to_pd_text()!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Diagram) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)


def parse_pd(text: str, name: str | None = None) -> Diagram:
    """Parse a whitespace-separated list of ``X(a,b,c,d)`` tokens.

    The empty string is the 0-crossing round unknot.
    """
    stripped = text.strip()
    if not stripped:
        return Diagram([], name=name)
    rows = []
    pos = 0
    for m in _TOKEN_RE.finditer(stripped):
        if stripped[pos:m.start()].strip():
            raise PDError(f"unrecognized PD text: {stripped[pos:m.start()]!r}")
        rows.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
    if stripped[pos:].strip():
        raise PDError(f"unrecognized PD text: {stripped[pos:]!r}")
    return Diagram(rows, name=name)


def parse_json_line(line: str) -> Diagram:
    return Diagram.from_json_obj(json.loads(line))


# -- Seifert circles ---------------------------------------------------


def seifert_circles(d: Diagram) -> list[SeifertCircle]:
    """Smooth every crossing coherently with the orientation and collect the
    resulting closed curves.  Every arc lies on exactly one circle, and a
    circle is special when its arcs bound a face outright."""
    if d._circles is not None:
        return list(d._circles)
    if d.n == 0:
        d._circles = (SeifertCircle((), True, 0),)
        return list(d._circles)
    succ: dict[int, int] = {}
    for i, x in enumerate(d.crossings):
        a, b, c, dd = x.slots
        if x.over_out_slot == OVER_D:
            succ[a], succ[b] = dd, c
        else:
            succ[a], succ[dd] = b, c
    face_by_arcs = {}
    for f in d.faces:
        face_by_arcs.setdefault(tuple(sorted(f.arcs)), f.index)
    circles = []
    left = set(d.arcs)
    while left:
        a0 = min(left)
        cyc = [a0]
        left.discard(a0)
        a = succ[a0]
        while a != a0:
            cyc.append(a)
            left.discard(a)
            a = succ[a]
        inside = face_by_arcs.get(tuple(sorted(cyc)))
        circles.append(SeifertCircle(tuple(cyc), inside is not None, inside))
    d._circles = tuple(circles)
    return circles


def genus_data(d: Diagram) -> GenusData:
    s = len(seifert_circles(d))
    return GenusData(s=s, c=d.n, chi=s - d.n, one_minus_chi=d.n - s + 1)


# -- classification flags ----------------------------------------------


def _is_alternating(d: Diagram) -> bool:
    for a in d.arcs:
        (c1, s1), (c2, s2) = d.arc_ends[a]
        if (s1 % 2) == (s2 % 2):
            return False
    return True


def _crossing_graph_connected(d: Diagram, removed_arcs: set[int]) -> bool:
    if d.n == 0:
        return True
    adj: dict[int, set[int]] = {i: set() for i in range(d.n)}
    for a in d.arcs:
        if a in removed_arcs:
            continue
        (c1, _), (c2, _) = d.arc_ends[a]
        adj[c1].add(c2)
        adj[c2].add(c1)
    reached = {0}
    frontier = [0]
    while frontier:
        u = frontier.pop()
        for v in adj[u]:
            if v not in reached:
                reached.add(v)
                frontier.append(v)
    return len(reached) == d.n


def _first_two_edge_cut(d: Diagram):
    "Smallest pair of arcs whose removal separates the crossings, if any."
    if d.n < 2:
        return None
    arcs = d.arcs
    for i, x in enumerate(arcs):
        for y in arcs[i + 1:]:
            if not _crossing_graph_connected(d, {x, y}):
                return x, y
    return None


def _is_reduced(d: Diagram) -> bool:
    "No nugatory crossings: opposite corners of a crossing never share a face."
    for i in range(d.n):
        if d.face_of_corner(i, 0) == d.face_of_corner(i, 2):
            return False
        if d.face_of_corner(i, 1) == d.face_of_corner(i, 3):
            return False
    return True


def classify_diagram(d: Diagram) -> DiagramFlags:
    if d.n == 0:
        return DiagramFlags(True, True, True, True, True, True)
    circles = seifert_circles(d)
    signs = [x.sign for x in d.crossings]
    return DiagramFlags(
        alternating=_is_alternating(d),
        special=all(c.special for c in circles),
        positive=all(s == +1 for s in signs),
        negative=all(s == -1 for s in signs),
        reduced=_is_reduced(d),
        looks_prime=_first_two_edge_cut(d) is None,
    )


def reflect(d: Diagram) -> Diagram:
    "Mirror image: reverses every rotation, swapping positive and negative crossings."
    rows = [(a, dd, c, b) for a, b, c, dd in d.rows]
    return Diagram(rows, name=d.name)


# -- checkerboard colouring ---------------------------------------------


def checkerboard(d: Diagram) -> Diagram:
    """Two-colour the faces so that faces bounded by Seifert circles are black.

    Requires a special (and alternating) diagram; the black faces then form
    the discs of the Seifert surface.
    """
    if d.n == 0:
        return d.with_face_colors({0: "black", 1: "white"})
    flags = classify_diagram(d)
    if not flags.alternating:
        raise UnsupportedDiagram("checkerboard requires an alternating diagram")
    if not flags.special:
        raise UnsupportedDiagram("checkerboard requires a special diagram")
    circle_faces = {c.inside_face for c in seifert_circles(d)}
    color: dict[int, str] = {}
    start = min(circle_faces)
    color[start] = "black"
    frontier = [start]
    while frontier:
        f = frontier.pop()
        for arc in d.faces[f].arcs:
            g1, g2 = d.faces_of_arc(arc)
            other = g1 if g2 == f else g2
            if other == f:
                raise UnsupportedDiagram("face adjacent to itself, cannot checkerboard")
            want = "white" if color[f] == "black" else "black"
            if color.get(other, want) != want:
                raise UnsupportedDiagram("checkerboard colouring conflict")
            if other not in color:
                color[other] = want
                frontier.append(other)
    blacks = {f for f, col in color.items() if col == "black"}
    if blacks != circle_faces:
        raise UnsupportedDiagram("Seifert circle faces do not form one colour class")
    return d.with_face_colors(color)


# -- decomposition into prime special pieces ------------------------------


def _arc_orientation(d: Diagram, arc: int):
    "Return (origin end, terminus end) of an arc."
    e1, e2 = d.arc_ends[arc]

    def is_exit(end):
        ci, s = end
        if s == UNDER_OUT:
            return True
        if s == UNDER_IN:
            return False
        return s == d.crossings[ci].over_out_slot

    if is_exit(e1):
        if is_exit(e2):
            raise PDError(f"arc {arc} leaves two crossings")
        return e1, e2
    if not is_exit(e2):
        raise PDError(f"arc {arc} enters two crossings")
    return e2, e1


def _rebuild(kept: list[int], slot_tokens: dict[tuple[int, int], tuple],
             token_ends: dict[tuple, tuple], name: str | None) -> Diagram:
    """Relabel a surgered diagram and revalidate it through the constructor.

    ``slot_tokens`` maps (crossing, slot) of kept crossings to arc tokens;
    ``token_ends`` maps each token to its (origin end, terminus end).
    """
    succ: dict[tuple, tuple] = {}
    for tok, (_, (ci, s)) in token_ends.items():
        succ[tok] = slot_tokens[(ci, (s + 2) % 4)]
    labels: dict[tuple, int] = {}
    nxt = 1
    for tok in sorted(token_ends, key=min):
        if tok in labels:
            continue
        comp = [tok]
        cur = succ[tok]
        while cur != tok:
            comp.append(cur)
            cur = succ[cur]
        # start numbering after an under-passage, so the label wrap never
        # lands on an over-strand step (which the parser rejects)
        starts = [i for i, t in enumerate(comp) if token_ends[t][0][1] == UNDER_OUT]
        if starts:
            k = min(starts, key=lambda i: min(comp[i]))
            comp = comp[k:] + comp[:k]
        for t in comp:
            labels[t] = nxt
            nxt += 1
    rows = [tuple(labels[slot_tokens[(ci, s)]] for s in range(4)) for ci in sorted(kept)]
    return Diagram(rows, name=name)


def _split_at_two_edge_cut(d: Diagram, x: int, y: int):
    adj: dict[int, set[int]] = {i: set() for i in range(d.n)}
    for a in d.arcs:
        if a in (x, y):
            continue
        (c1, _), (c2, _) = d.arc_ends[a]
        adj[c1].add(c2)
        adj[c2].add(c1)
    side = {0: 0}
    frontier = [0]
    while frontier:
        u = frontier.pop()
        for v in adj[u]:
            if v not in side:
                side[v] = 0
                frontier.append(v)
    for ci in range(d.n):
        side.setdefault(ci, 1)

    x_o, x_t = _arc_orientation(d, x)
    y_o, y_t = _arc_orientation(d, y)
    if side[x_o[0]] == side[x_t[0]] or side[y_o[0]] == side[y_t[0]]:
        raise UnsupportedDiagram("cut arcs do not straddle the separating curve")
    if side[x_o[0]] != side[y_t[0]]:
        x_o, x_t, y_o, y_t = y_o, y_t, x_o, x_t
    pieces = []
    for which in (0, 1):
        kept = [ci for ci in range(d.n) if side[ci] == which]
        slot_tokens: dict[tuple[int, int], tuple] = {}
        token_ends: dict[tuple, tuple] = {}
        for a in d.arcs:
            if a in (x, y):
                continue
            o, t = _arc_orientation(d, a)
            if side[o[0]] == which:
                tok = (a,)
                token_ends[tok] = (o, t)
                slot_tokens[o] = tok
                slot_tokens[t] = tok
        if side[x_o[0]] == which:
            tok = (x, y)
            token_ends[tok] = (x_o, y_t)
            slot_tokens[x_o] = tok
            slot_tokens[y_t] = tok
        else:
            tok = (y, x)
            token_ends[tok] = (y_o, x_t)
            slot_tokens[y_o] = tok
            slot_tokens[x_t] = tok
        pieces.append(_rebuild(kept, slot_tokens, token_ends, d.name))
    return pieces[0], pieces[1]


def _split_along_circle(d: Diagram, circle: SeifertCircle):
    carcs = set(circle.arcs)
    parent = {f.index: f.index for f in d.faces}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in d.arcs:
        if a in carcs:
            continue
        f1, f2 = d.faces_of_arc(a)
        parent[find(f1)] = find(f2)
    groups = sorted({find(f.index) for f in d.faces})
    if len(groups) != 2:
        raise UnsupportedDiagram("splitting circle does not separate the sphere")
    glabel = {g: i for i, g in enumerate(groups)}

    def arc_side(a: int) -> int:
        return glabel[find(d.faces_of_arc(a)[0])]

    crossing_side: dict[int, int] = {}
    for ci in range(d.n):
        non_c = [d.rows[ci][s] for s in range(4) if d.rows[ci][s] not in carcs]
        if len(non_c) == 0:
            raise UnsupportedDiagram("circle meets a crossing twice; split not supported")
        if len(non_c) != 2:
            raise UnsupportedDiagram("crossing is only half on the splitting circle")
        sides = {arc_side(a) for a in non_c}
        if len(sides) != 1:
            raise UnsupportedDiagram("crossing straddles the splitting circle")
        crossing_side[ci] = sides.pop()

    seq = list(circle.arcs)
    m = len(seq)
    pieces = []
    for which in (0, 1):
        kept = [ci for ci in range(d.n) if crossing_side[ci] == which]
        if not kept:
            raise UnsupportedDiagram("splitting circle has an empty side")
        slot_tokens: dict[tuple[int, int], tuple] = {}
        token_ends: dict[tuple, tuple] = {}
        for a in d.arcs:
            if a not in carcs and arc_side(a) == which:
                o, t = _arc_orientation(d, a)
                tok = (a,)
                token_ends[tok] = (o, t)
                slot_tokens[o] = tok
                slot_tokens[t] = tok
        # fuse runs of circle arcs across crossings smoothed away on this side
        kept_pos = [i for i, a in enumerate(seq)
                    if crossing_side[_arc_orientation(d, a)[1][0]] == which]
        if not kept_pos:
            raise UnsupportedDiagram("splitting circle never meets the kept side")
        for idx, p in enumerate(kept_pos):
            prev = kept_pos[idx - 1]
            length = ((p - prev - 1) % m) + 1
            chain = [seq[(prev + 1 + k) % m] for k in range(length)]
            o = _arc_orientation(d, chain[0])[0]
            t = _arc_orientation(d, chain[-1])[1]
            tok = tuple(chain)
            token_ends[tok] = (o, t)
            slot_tokens[o] = tok
            slot_tokens[t] = tok
        pieces.append(_rebuild(kept, slot_tokens, token_ends, d.name))
    return pieces[0], pieces[1]


def decompose_trace(d: Diagram):
    """Split at connected sums and along non-special Seifert circles until all
    pieces are prime and special.  Returns the pieces and a provenance trace."""
    if d.n == 0:
        return [d], []
    if not _is_alternating(d):
        raise UnsupportedDiagram("decompose requires an alternating diagram")
    cut = _first_two_edge_cut(d)
    if cut is not None:
        x, y = cut
        d1, d2 = _split_at_two_edge_cut(d, x, y)
        p1, t1 = decompose_trace(d1)
        p2, t2 = decompose_trace(d2)
        step = {"split": "connected-sum", "arcs": [x, y],
                "pieces": [d1.to_pd_text(), d2.to_pd_text()]}
        return p1 + p2, [step] + t1 + t2
    for circle in seifert_circles(d):
        if not circle.special:
            d1, d2 = _split_along_circle(d, circle)
            p1, t1 = decompose_trace(d1)
            p2, t2 = decompose_trace(d2)
            step = {"split": "star-product", "circle": list(circle.arcs),
                    "pieces": [d1.to_pd_text(), d2.to_pd_text()]}
            return p1 + p2, [step] + t1 + t2
    return [d], []


def decompose(d: Diagram) -> list[Diagram]:
    pieces, _ = decompose_trace(d)
    return pieces
