"""The three digraphs built from a special alternating diagram.

* The white-region digraph (Murasugi): one vertex per white region, one edge
  per crossing, oriented from the undotted white corner to the dotted one.
* The arc digraph with its H/K edge partition (Crowell): the underlying
  diagram graph with every arc oriented from its overcrossing end to its
  undercrossing end; of the two arcs arriving at a crossing, the one on the
  left of the oriented over-strand goes to H and carries weight -t, the
  other to K with weight 1.  Summing the weight product over all spanning
  arborescences from any root gives the Alexander polynomial.
* The collapsed graphs: contracting every Seifert circle lying in H (resp.
  K) to a point.

All three have the same arborescence count from every root: the constant
term of the reduced Alexander polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alexander import dotted_white_corner
from .diagram import (Diagram, UnsupportedDiagram, checkerboard,
                      _is_alternating, OVER_D)
from .digraph import PlanarDigraph, contract, delete, iter_arborescences
from .poly import LaurentPoly, ONE, ZERO


def murasugi_digraph(d: Diagram) -> PlanarDigraph:
    """White-region digraph of a special alternating diagram.

    Vertices are the white faces; each crossing contributes one edge from
    its undotted white corner's region to its dotted one.  The rotation at a
    vertex lists the crossings in the order the face boundary meets them, so
    the digraph inherits a sphere embedding with in- and out-edges
    alternating at every vertex.
    """
    colored = checkerboard(d)
    if d.n == 0:
        return PlanarDigraph([0 if colored.faces[0].color == "white" else 1], {}, {})
    white = {f.index for f in colored.faces if f.color == "white"}
    edges: dict[int, tuple[int, int]] = {}
    for ci in range(d.n):
        w1, w2 = d.white_corners(ci)
        f1, f2 = d.face_of_corner(ci, w1), d.face_of_corner(ci, w2)
        if f1 not in white or f2 not in white:
            raise UnsupportedDiagram("white corners not coloured white; diagram not special")
        dotted = dotted_white_corner(d, ci)
        head = d.face_of_corner(ci, dotted)
        tail = f2 if head == f1 else f1
        edges[ci] = (tail, head)
    rotation: dict[int, list] = {f: [] for f in white}
    for f in colored.faces:
        if f.index not in white:
            continue
        for (ci, corner) in f.corners:
            rotation[f.index].append((ci, 1 if corner == dotted_white_corner(d, ci) else 0))
    g = PlanarDigraph(sorted(white), edges, rotation)
    for v in g.vertices:
        if not _alternates(g, v):
            raise UnsupportedDiagram("white-region digraph fails in/out alternation")
    return g


def _alternates(g: PlanarDigraph, v) -> bool:
    rot = g.rotation[v]
    if not rot:
        return True
    if len(rot) % 2:
        return False
    return all(rot[i][1] != rot[(i + 1) % len(rot)][1] for i in range(len(rot)))


@dataclass(frozen=True)
class CrowellGraph:
    graph: PlanarDigraph                 # vertices = crossings, edges = arcs
    hk: dict[int, str]                   # arc -> "H" | "K"
    alpha: dict[int, LaurentPoly]        # arc -> -t | 1


def crowell_graph(d: Diagram) -> CrowellGraph:
    """Orient every arc from its overcrossing end to its undercrossing end
    and split the two arcs entering each crossing into H and K by the side
    of the over-strand they arrive on (left = H, weight -t)."""
    if d.n == 0:
        raise UnsupportedDiagram("the 0-crossing unknot has no crossing graph")
    if not _is_alternating(d):
        raise UnsupportedDiagram("arc orientation over->under needs an alternating diagram")
    edges: dict[int, tuple[int, int]] = {}
    for a in d.arcs:
        (c1, s1), (c2, s2) = d.arc_ends[a]
        if s1 % 2 == 1:                  # over end at c1
            edges[a] = (c1, c2)
        else:
            edges[a] = (c2, c1)
    rotation = {ci: [(d.rows[ci][s], 0 if s % 2 else 1) for s in range(4)]
                for ci in range(d.n)}
    g = PlanarDigraph(range(d.n), edges, rotation)
    hk: dict[int, str] = {}
    alpha: dict[int, LaurentPoly] = {}
    minus_t = LaurentPoly({1: -1})
    for ci, x in enumerate(d.crossings):
        h_slot = 0 if x.over_out_slot == OVER_D else 2
        k_slot = 2 - h_slot
        h_arc, k_arc = d.rows[ci][h_slot], d.rows[ci][k_slot]
        hk[h_arc] = "H"
        hk[k_arc] = "K"
        alpha[h_arc] = minus_t
        alpha[k_arc] = ONE
    labeled = PlanarDigraph(g.vertices, g.edges, g.rotation, labels=hk)
    return CrowellGraph(labeled, hk, alpha)


def crowell_polynomial(cg: CrowellGraph, v) -> LaurentPoly:
    """Sum over all spanning arborescences with origin v of the product of
    edge weights; equals the Alexander polynomial up to a unit."""
    total = ZERO
    for tree in iter_arborescences(cg.graph, v):
        term = ONE
        for e in tree:
            term = term * cg.alpha[e]
        total = total + term
    return total


def collapse_tagged_cycles(g: PlanarDigraph, tag: str) -> PlanarDigraph:
    """Contract every directed cycle made of edges labelled ``tag`` to a point.

    For the arc digraph of a special diagram the tagged edges are exactly
    the Seifert circles of that tag, so this computes the collapsed graph.
    A graph with no tagged cycles is returned unchanged.
    """
    tagged = {e for e, t in g.labels.items() if t == tag}
    out_edge: dict[int, int] = {}
    in_count: dict[int, int] = {}
    for e in tagged:
        t_, h = g.edges[e]
        if t_ in out_edge:
            raise UnsupportedDiagram(f"two {tag}-edges share an initial vertex")
        if h in in_count:
            raise UnsupportedDiagram(f"two {tag}-edges share a terminal vertex")
        out_edge[t_] = e
        in_count[h] = 1
    cycles = []
    left = set(out_edge)
    while left:
        v0 = min(left)
        path = []
        v = v0
        while v in out_edge and v in left:
            left.discard(v)
            e = out_edge[v]
            path.append(e)
            v = g.edges[e][1]
        if v == v0:
            cycles.append(path)
    if not cycles:
        return g
    for cyc in cycles:
        for e in cyc:
            # earlier contractions may have turned later cycle edges into loops
            if g.is_loop(e):
                g = delete(g, e)
            else:
                g = contract(g, e)
    return g


def collapse_H(cg: CrowellGraph) -> PlanarDigraph:
    "Contract every Seifert circle lying in H to a point."
    return collapse_tagged_cycles(cg.graph, "H")


def collapse_K(cg: CrowellGraph) -> PlanarDigraph:
    "Contract every Seifert circle lying in K to a point."
    return collapse_tagged_cycles(cg.graph, "K")
