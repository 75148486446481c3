"""Constructive PD-code builders used to assemble the test corpus.

Diagrams are assembled as wiring graphs: numbered crossings with four ports
(NE, NW, SW, SE in counterclockwise order) joined by unoriented segments;
each strand passage crosses a diagonal (NE-SW or NW-SE).  Orientation is
chosen per component and over/under per crossing, then the result is emitted
as PD text and re-validated through the package parser.
"""

from __future__ import annotations

from itertools import product

from linktrees.diagram import Diagram, PDError, classify_diagram, parse_pd

CCW = ("NE", "NW", "SW", "SE")
DIAG = {"NE": "SW", "SW": "NE", "NW": "SE", "SE": "NW"}

Port = tuple[int, str]


def _over_ports(diag: str) -> tuple[str, str]:
    return ("NW", "SE") if diag == "NWSE" else ("NE", "SW")


def _segment_map(n: int, segments) -> dict[Port, Port]:
    seg_at: dict[Port, Port] = {}
    for p, q in segments:
        if p in seg_at or q in seg_at:
            raise ValueError(f"port reused: {p} {q}")
        seg_at[p] = q
        seg_at[q] = p
    ports = {(ci, c) for ci in range(n) for c in CCW}
    if set(seg_at) != ports:
        raise ValueError("segments must cover every port exactly once")
    return seg_at


def _trace_curves(n: int, seg_at) -> list[list[tuple[Port, Port]]]:
    "Closed curves as passage lists (entry port, exit port), crossing diagonals."
    curves = []
    seen: set[Port] = set()
    for start in [(ci, c) for ci in range(n) for c in CCW]:
        if start in seen:
            continue
        curve = []
        p = start
        while True:
            q = (p[0], DIAG[p[1]])
            curve.append((p, q))
            seen.add(p)
            seen.add(q)
            p = seg_at[q]
            if p == start:
                break
        curves.append(curve)
    return curves


def compile_pd(n: int, segments, over_diag, orientation) -> str | None:
    """Emit PD text for a wiring diagram, or None when the choices clash.

    ``over_diag`` maps crossing -> "NWSE" | "NESW", or is the string
    "alternating" to solve for an assignment making every arc alternate.
    ``orientation`` holds one reversal bit per closed curve (trace order).
    """
    seg_at = _segment_map(n, segments)
    curves = _trace_curves(n, seg_at)
    if len(orientation) != len(curves):
        raise ValueError("one orientation bit per component required")

    if over_diag == "alternating":
        over_diag = _solve_alternating(n, seg_at)
        if over_diag is None:
            return None

    entry: dict[Port, bool] = {}
    arc_of_port: dict[Port, int] = {}
    label = 0
    for flip, curve in zip(orientation, curves):
        passes = curve if not flip else [(q, p) for p, q in reversed(curve)]
        # start labelling at an under-passage so the label wrap never lands on
        # an over-strand (the parser insists over-passes read x -> x+1)
        for k, (p, _) in enumerate(passes):
            if p[1] not in _over_ports(over_diag[p[0]]):
                passes = passes[k:] + passes[:k]
                break
        for p, q in passes:
            entry[p] = True
            entry[q] = False
            label += 1
            arc_of_port[q] = label
            arc_of_port[seg_at[q]] = label

    rows = []
    for ci in range(n):
        under = "NESW" if over_diag[ci] == "NWSE" else "NWSE"
        under_ends = (under[:2], under[2:])
        ins = [c for c in under_ends if entry[(ci, c)]]
        if len(ins) != 1:
            return None
        k = CCW.index(ins[0])
        rows.append(tuple(arc_of_port[(ci, CCW[(k + j) % 4])] for j in range(4)))
    try:
        return Diagram(rows).to_pd_text()
    except PDError:
        return None


def _solve_alternating(n: int, seg_at) -> dict[int, str] | None:
    "Choose the over diagonal per crossing so each arc has one over and one under end."
    over: dict[int, str] = {}

    def is_over(ci, corner, diag):
        return corner in (("NW", "SE") if diag == "NWSE" else ("NE", "SW"))

    for start in range(n):
        if start in over:
            continue
        over[start] = "NWSE"
        stack = [start]
        while stack:
            ci = stack.pop()
            for corner in CCW:
                cj, corner2 = seg_at[(ci, corner)]
                want_over = not is_over(ci, corner, over[ci])
                need = "NWSE" if is_over(cj, corner2, "NWSE") == want_over else "NESW"
                if cj in over:
                    if over[cj] != need:
                        return None
                else:
                    over[cj] = need
                    stack.append(cj)
    return over


def orientation_variants(n: int, segments, over_diag) -> list[str]:
    "All valid PD texts over the per-component orientation choices."
    seg_at = _segment_map(n, segments)
    curves = _trace_curves(n, seg_at)
    out = []
    for bits in product((False, True), repeat=len(curves)):
        pd = compile_pd(n, segments, over_diag, bits)
        if pd:
            out.append(pd)
    return sorted(set(out))


# -- concrete families -------------------------------------------------------


def braid_wiring(word: list[int], strands: int):
    "Wiring of a braid closure: (crossing count, segments, over map)."
    n = len(word)
    if n == 0:
        raise ValueError("empty braid word")
    current: dict[int, Port | tuple] = {p: ("top", p) for p in range(1, strands + 1)}
    raw = []
    over = {}
    for k, g in enumerate(word):
        i = abs(g)
        if not 1 <= i < strands:
            raise ValueError(f"generator {g} out of range")
        raw.append((current[i], (k, "NW")))
        raw.append((current[i + 1], (k, "NE")))
        current[i] = (k, "SW")
        current[i + 1] = (k, "SE")
        over[k] = "NWSE" if g > 0 else "NESW"
    for p in range(1, strands + 1):
        if current[p][0] == "top":
            raise ValueError(f"strand {p} meets no crossing")
        raw.append((current[p], ("top", p)))
    # splice out the closure markers
    attach: dict[tuple, list] = {}
    segments = []
    for a, b in raw:
        if a[0] == "top" or b[0] == "top":
            marker = a if a[0] == "top" else b
            other = b if a[0] == "top" else a
            attach.setdefault(marker, []).append(other)
        else:
            segments.append((a, b))
    for marker, ends in attach.items():
        segments.append((ends[0], ends[1]))
    return n, segments, over


def braid_pd(word: list[int], strands: int) -> str:
    "Closure of a braid word, all strands oriented downward; +i puts NW-SE over."
    n, segments, over = braid_wiring(word, strands)
    seg_at = _segment_map(n, segments)
    curves = _trace_curves(n, seg_at)
    bits = []
    for curve in curves:
        entries = {p[1] for p, _ in curve}
        if entries <= {"NW", "NE"}:
            bits.append(False)
        elif entries <= {"SW", "SE"}:
            bits.append(True)
        else:
            raise ValueError("braid wiring produced a mixed curve")
    pd = compile_pd(n, segments, over, tuple(bits))
    if pd is None:
        raise ValueError("braid closure failed to compile")
    return pd


def braid_closure_variants(word: list[int], strands: int) -> list[str]:
    "Braid closure under every choice of component orientations."
    n, segments, over = braid_wiring(word, strands)
    return orientation_variants(n, segments, over)


def twist_link_variants(k: int) -> list[str]:
    """A vertical twist region of k same-chirality crossings closed by caps at
    top and bottom (the clasp family); all strand orientations tried."""
    segments = []
    for j in range(k - 1):
        segments.append(((j, "SW"), (j + 1, "NW")))
        segments.append(((j, "SE"), (j + 1, "NE")))
    segments.append(((0, "NW"), (0, "NE")))
    segments.append(((k - 1, "SW"), (k - 1, "SE")))
    return orientation_variants(k, segments, {j: "NWSE" for j in range(k)})


def pretzel_variants(twists: tuple[int, int, int]) -> list[str]:
    "Three vertical twist columns side by side, closed around top and bottom."
    segments = []
    offs = []
    o = 0
    for t in twists:
        offs.append(o)
        for j in range(t - 1):
            segments.append(((o + j, "SW"), (o + j + 1, "NW")))
            segments.append(((o + j, "SE"), (o + j + 1, "NE")))
        o += t
    n = o
    tl = [(offs[i], "NW") for i in range(3)]
    tr = [(offs[i], "NE") for i in range(3)]
    bl = [(offs[i] + twists[i] - 1, "SW") for i in range(3)]
    br = [(offs[i] + twists[i] - 1, "SE") for i in range(3)]
    segments += [(tl[0], tr[2]), (tr[0], tl[1]), (tr[1], tl[2]),
                 (bl[0], br[2]), (br[0], bl[1]), (br[1], bl[2])]
    return orientation_variants(n, segments, {j: "NWSE" for j in range(n)})


def medial_variants(g) -> list[str]:
    """Diagrams whose crossing wiring is the medial of an embedded digraph:
    one crossing per edge, arcs joining rotation-consecutive edges around
    each vertex, over/under solved for alternation.  Candidates for a
    diagram whose white-region digraph is g."""
    edge_ids = sorted(g.edges)
    cindex = {e: i for i, e in enumerate(edge_ids)}
    out = []
    for handed in (False, True):
        segments = []
        for v in g.vertices:
            rot = g.rotation[v]
            k = len(rot)
            for j in range(k):
                e1, end1 = rot[j]
                e2, end2 = rot[(j + 1) % k]
                p1 = (cindex[e1], _medial_port(end1, "next", handed))
                p2 = (cindex[e2], _medial_port(end2, "prev", handed))
                segments.append((p1, p2))
        try:
            out.extend(orientation_variants(len(edge_ids), segments, "alternating"))
        except ValueError:
            continue
    return sorted(set(out))


def _medial_port(end: int, which: str, handed: bool) -> str:
    """Tail-side ports sit on the {NE, NW} pair, head-side on {SW, SE}; the
    two ports of a pair flank that white region's corner of the crossing."""
    if end == 0:
        pair = ("NE", "NW")
    else:
        pair = ("SW", "SE")
    first = (which == "prev") != handed
    return pair[0] if first else pair[1]


def connected_sum_variants(d1: Diagram, d2: Diagram) -> list[str]:
    "All alternating splices of two diagrams, cutting one arc of each."
    out = []
    for a1 in d1.arcs:
        for a2 in d2.arcs:
            pd = _splice(d1, a1, d2, a2)
            if pd is None:
                continue
            try:
                d = parse_pd(pd)
            except PDError:
                continue
            if classify_diagram(d).alternating:
                out.append(pd)
    return sorted(set(out))


def _splice(d1: Diagram, a1: int, d2: Diagram, a2: int) -> str | None:
    from linktrees.diagram import _arc_orientation, _rebuild
    off = d1.n
    kept = list(range(d1.n + d2.n))
    slot_tokens = {}
    token_ends = {}

    def add(d, arc, offset, skip):
        if arc == skip:
            return
        o, t = _arc_orientation(d, arc)
        shift = off if offset else 0
        tok = (offset * 1000 + arc,)
        token_ends[tok] = ((o[0] + shift, o[1]), (t[0] + shift, t[1]))
        slot_tokens[token_ends[tok][0]] = tok
        slot_tokens[token_ends[tok][1]] = tok

    for a in d1.arcs:
        add(d1, a, 0, a1)
    for a in d2.arcs:
        add(d2, a, 1, a2)
    o1, t1 = _arc_orientation(d1, a1)
    o2, t2 = _arc_orientation(d2, a2)
    o2 = (o2[0] + off, o2[1])
    t2 = (t2[0] + off, t2[1])
    for tok, ends in (((1, a1, a2), (o1, t2)), ((2, a2, a1), (o2, t1))):
        token_ends[tok] = ends
        slot_tokens[ends[0]] = tok
        slot_tokens[ends[1]] = tok
    try:
        return _rebuild(kept, slot_tokens, token_ends, None).to_pd_text()
    except (PDError, KeyError, ValueError):
        return None
