"""End-to-end analysis and the bounded enumeration of admissible digraphs.

The pipeline computes the reduced Alexander polynomial by determinant and by
tree sum (asserting they agree), decomposes the diagram into prime special
pieces, reduces each piece's white-region digraph with moves 1 and 2, and
classifies the result against the four reference graphs.  Verdicts follow
the leading-coefficient criterion: constant term 1 means fibred, constant
term below 4 means the incompressible Seifert surface is unique.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .alexander import reduced_alexander
from .diagram import (Diagram, UnsupportedDiagram, checkerboard, classify_diagram,
                      decompose_trace, genus_data)
from .digraph import (PlanarDigraph, canonical_code, count_arborescences_delcon,
                      g_alpha, g_beta, g_delta, g_delta_reflected, g_gamma,
                      gamma_member, is_prime, iso_embedded, iso_up_to_reflection,
                      reduce_digraph)
from .linkgraphs import crowell_graph, crowell_polynomial, murasugi_digraph
from .poly import LaurentPoly, normalize_reduced


def classify_reduced(g: PlanarDigraph) -> str:
    """Match a move-reduced digraph against the reference family, up to
    reflection, distinguishing the chiral pair when they are not isomorphic."""
    if iso_up_to_reflection(g, g_alpha()):
        return "Alpha"
    if iso_up_to_reflection(g, g_beta()):
        return "Beta"
    if iso_up_to_reflection(g, g_gamma()):
        return "Gamma"
    delta = g_delta()
    if iso_embedded(g, delta):
        return "Delta"
    if iso_embedded(g, g_delta_reflected()):
        return "Delta" if iso_embedded(delta, g_delta_reflected()) else "DeltaReflected"
    return "Other"


@dataclass
class PieceReport:
    pd: str
    delta0: LaurentPoly
    value_at_0: int
    classification: str
    reduction_trace: list = field(default_factory=list)

    def to_json_obj(self) -> dict:
        return {
            "pd": self.pd,
            "delta0": self.delta0.to_pairs(),
            "delta0_text": self.delta0.to_text(),
            "value_at_0": self.value_at_0,
            "classification": self.classification,
            "reduction_trace": self.reduction_trace,
        }


@dataclass
class AnalysisReport:
    name: str
    delta0: LaurentPoly
    value_at_0: int
    degree: int
    genus_check: bool
    pieces: list[PieceReport]
    reduction_trace: list
    classification: str
    fibred: str
    unique_incompressible: str
    rationale: list[str]

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "delta0": self.delta0.to_pairs(),
            "delta0_text": self.delta0.to_text(),
            "value_at_0": self.value_at_0,
            "degree": self.degree,
            "genus_check": "pass" if self.genus_check else "fail",
            "pieces": [p.to_json_obj() for p in self.pieces],
            "reduction_trace": self.reduction_trace,
            "classification": self.classification,
            "fibred": self.fibred,
            "unique_incompressible": self.unique_incompressible,
            "rationale": self.rationale,
        }


def analyze_link(d: Diagram) -> AnalysisReport:
    """Full report for a connected, reduced, alternating diagram whose prime
    special pieces drive the fibredness and uniqueness verdicts."""
    flags = classify_diagram(d)
    if not flags.alternating:
        raise UnsupportedDiagram("unsupported input: diagram is not alternating")
    if not flags.reduced:
        raise UnsupportedDiagram("unsupported input: diagram has a nugatory crossing")

    delta_det = reduced_alexander(d)
    if d.n:
        cg = crowell_graph(d)
        root = cg.graph.vertices[0]
        delta_tree = normalize_reduced(crowell_polynomial(cg, root))
        if delta_tree != delta_det:
            raise RuntimeError("determinant and tree-sum methods disagree; "
                               "this indicates a bug, not bad input")
    value = delta_det.eval_at_zero()
    degree = 0 if delta_det.is_zero() else delta_det.degree()
    gd = genus_data(d)
    genus_ok = degree == gd.one_minus_chi

    pieces_d, _split_trace = decompose_trace(d)
    pieces = []
    moves_all = []
    piece_value_product = 1
    for piece in pieces_d:
        pf = classify_diagram(piece)
        for flag_name, ok in (("alternating", pf.alternating), ("special", pf.special),
                              ("looks_prime", pf.looks_prime)):
            if not ok:
                raise UnsupportedDiagram(
                    f"unsupported input: decomposition piece fails '{flag_name}'")
        p_delta = reduced_alexander(piece)
        p_value = p_delta.eval_at_zero()
        piece_value_product *= p_value
        if piece.n:
            reduced_g, moves = reduce_digraph(murasugi_digraph(piece))
        else:
            reduced_g, moves = g_alpha(), []
        tag = classify_reduced(reduced_g)
        pieces.append(PieceReport(piece.to_pd_text(), p_delta, p_value, tag, moves))
        moves_all.extend(dict(m, piece=len(pieces) - 1) for m in moves)
    if piece_value_product != value:
        raise RuntimeError("piece product law violated; this indicates a bug")

    if any(p.classification == "Other" for p in pieces):
        top = "Other"
    else:
        top = max(pieces, key=lambda p: p.value_at_0).classification

    fibred = "yes" if value == 1 else "no"
    unique = "yes" if value < 4 else "not decided"
    rationale = [
        f"constant term of the reduced Alexander polynomial is {value}"
        + (f" = {' * '.join(str(p.value_at_0) for p in pieces)} over the prime special pieces"
           if len(pieces) > 1 else ""),
        "fibredness criterion (special alternating pieces): constant term 1 "
        "iff the white-region digraph reduces to the single-vertex graph"
        + (" [met]" if value == 1 else " [not met]"),
        "uniqueness criterion (Juhasz-type leading-coefficient bound): "
        "constant term below 4 gives a unique incompressible Seifert surface"
        + (" [met]" if value < 4 else " [not decided by this criterion]"),
    ]
    return AnalysisReport(
        name=d.name or "",
        delta0=delta_det,
        value_at_0=value,
        degree=degree,
        genus_check=genus_ok,
        pieces=pieces,
        reduction_trace=moves_all,
        classification=top,
        fibred=fibred,
        unique_incompressible=unique,
        rationale=rationale,
    )


# -- membership of the admissible diagram class ---------------------------


def white_bigon_count(d: Diagram) -> int:
    colored = checkerboard(d)
    return sum(1 for f in colored.faces if f.color == "white" and len(f) == 2)


def _has_separating_two_cut(g: PlanarDigraph) -> bool:
    from .digraph import _connected_without
    ids = sorted(g.edges)
    for i, e1 in enumerate(ids):
        if not _connected_without(g, {e1}):
            return True
        for e2 in ids[i + 1:]:
            if not _connected_without(g, {e1, e2}):
                return True
    return False


def lambda_member(d: Diagram) -> bool:
    """Admissibility of a diagram for the digraph correspondence: connected,
    special alternating of uniform sign, no nugatory crossings, prime, no
    white bigons, and black-twist-reduced (checked on the white-region
    digraph: no separating curve through two of its edges)."""
    flags = classify_diagram(d)
    if not (flags.alternating and flags.special and (flags.positive or flags.negative)
            and flags.reduced and flags.looks_prime):
        return False
    if d.n == 0:
        return True
    if white_bigon_count(d) > 0:
        return False
    return not _has_separating_two_cut(murasugi_digraph(d))


# -- bounded enumeration ----------------------------------------------------


def enumerate_phi(n: int, vcap: int) -> list[PlanarDigraph]:
    """All admissible digraphs (connected, sphere-embedded, prime, in/out
    alternating) with at most ``vcap`` vertices, valence at most 2n, face
    boundaries of length at most n, and at most n spanning arborescences
    from the best root; one representative per class up to isomorphism and
    reflection.

    The finiteness theorem is non-constructive, hence the explicit vertex
    cap; rotation systems are generated by backtracking over slot matchings
    with face-length pruning.
    """
    if n < 1 or vcap < 1:
        raise ValueError("need n >= 1 and vcap >= 1")
    found: dict[tuple, PlanarDigraph] = {}
    alpha = g_alpha()
    found[canonical_code(alpha)] = alpha
    valences = list(range(4, 2 * n + 1, 2))
    for nv in range(2, vcap + 1):
        for profile in itertools.combinations_with_replacement(valences, nv):
            e_count = sum(profile) // 2
            if (n - 2) * e_count < n * (nv - 2):
                continue   # some face would have to be longer than n
            for g in _matchings(profile, n):
                if not (g.is_connected() and is_prime(g)):
                    continue
                if min(count_arborescences_delcon(g, v) for v in g.vertices) > n:
                    continue
                if not gamma_member(g):
                    continue
                code = canonical_code(g)
                if code not in found:
                    found[code] = g
    return [found[k] for k in sorted(found, key=repr)]


def _matchings(profile: tuple[int, ...], n: int):
    """Backtracking generator of genus-0 alternating rotation systems with the
    given valences, no loops, and all face boundaries of length at most n."""
    nv = len(profile)
    slots: list[tuple[int, int]] = []
    base: dict[int, int] = {}
    for v, deg in enumerate(profile):
        base[v] = len(slots)
        slots.extend((v, i) for i in range(deg))
    total = len(slots)

    def is_out(idx: int) -> bool:
        return slots[idx][1] % 2 == 0

    def sigma(idx: int) -> int:
        v, i = slots[idx]
        return base[v] + (i + 1) % profile[v]

    partner = [-1] * total
    fwd = [-1] * total    # face successor: sigma(partner)
    bwd = [-1] * total

    def face_ok(d0: int) -> bool:
        "Walk the face chain through dart d0: closed faces and open chains must stay short."
        head = d0
        steps = 0
        while bwd[head] != -1:
            head = bwd[head]
            steps += 1
            if head == d0:
                return steps <= n          # closed face of `steps` edges
            if steps > n + 1:
                return False
        length = 0
        cur = head
        while fwd[cur] != -1:
            cur = fwd[cur]
            length += 1
            if length > n - 1:
                return False               # closing would exceed the face bound
        return True

    def assign(a: int, b: int) -> bool:
        partner[a], partner[b] = b, a
        fwd[a], fwd[b] = sigma(b), sigma(a)
        bwd[sigma(b)], bwd[sigma(a)] = a, b
        return face_ok(a) and face_ok(b)

    def unassign(a: int, b: int):
        bwd[fwd[a]] = -1
        bwd[fwd[b]] = -1
        partner[a] = partner[b] = -1
        fwd[a] = fwd[b] = -1

    def build() -> PlanarDigraph | None:
        edges = {}
        rotation: dict[int, list] = {v: [] for v in range(1, nv + 1)}
        slot_edge: dict[int, tuple[int, int]] = {}
        eid = 0
        for idx in range(total):
            if is_out(idx):
                edges[eid] = (slots[idx][0] + 1, slots[partner[idx]][0] + 1)
                slot_edge[idx] = (eid, 0)
                slot_edge[partner[idx]] = (eid, 1)
                eid += 1
        for idx in range(total):
            v, _ = slots[idx]
            rotation[v + 1].append(slot_edge[idx])
        faces = 0
        seen = [False] * total
        for idx in range(total):
            if seen[idx]:
                continue
            faces += 1
            cur = idx
            while not seen[cur]:
                seen[cur] = True
                cur = fwd[cur]
        if nv - len(edges) + faces != 2:
            return None
        return PlanarDigraph(range(1, nv + 1), edges, rotation)

    def rec(touched: list[bool]):
        free = next((i for i in range(total) if partner[i] == -1), None)
        if free is None:
            g = build()
            if g is not None:
                yield g
            return
        if not touched[slots[free][0]]:
            return   # the first component is already saturated: disconnected
        need_out = not is_out(free)
        fresh_seen: set[int] = set()
        for cand in range(free + 1, total):
            if partner[cand] != -1 or is_out(cand) != need_out:
                continue
            v = slots[cand][0]
            if v == slots[free][0]:
                continue   # loops can never survive the primality filter
            if not touched[v]:
                key = profile[v]
                if key in fresh_seen:
                    continue   # identical untouched vertices are interchangeable
                if slots[cand][1] not in (0, 1):
                    continue   # fresh vertex: rotating its slots is a relabeling
                fresh_seen.add(key)
                was_fresh = True
            else:
                was_fresh = False
            if assign(free, cand):
                touched[v] = True
                yield from rec(touched)
                if was_fresh:
                    touched[v] = False
            unassign(free, cand)

    touched = [False] * nv
    touched[0] = True
    yield from rec(touched)
