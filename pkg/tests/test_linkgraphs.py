import pytest

from linktrees.alexander import reduced_alexander
from linktrees.corpus import load_corpus
from linktrees.diagram import UnsupportedDiagram, classify_diagram, parse_pd, seifert_circles
from linktrees.digraph import (count_arborescences_bruteforce as brute,
                               count_arborescences_delcon as delcon,
                               gamma_member)
from linktrees.linkgraphs import (collapse_H, collapse_K,
                                  collapse_tagged_cycles, crowell_graph,
                                  crowell_polynomial, murasugi_digraph)
from linktrees.poly import LaurentPoly, normalize_reduced

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def corpus(name):
    for e in load_corpus():
        if e.name == name:
            return e
    raise KeyError(name)


def special_alternating_entries():
    for e in load_corpus():
        flags = classify_diagram(e.diagram)
        if e.diagram.n and flags.special and flags.alternating:
            yield e


# -- white-region digraph -------------------------------------------------------


def test_murasugi_trefoil_is_three_cycle():
    g = murasugi_digraph(parse_pd(TREFOIL))
    assert len(g.vertices) == 3 and len(g.edges) == 3
    assert all(g.in_degree(v) == 1 and g.out_degree(v) == 1 for v in g.vertices)
    assert all(brute(g, v) == 1 for v in g.vertices)


def test_murasugi_hopf():
    g = murasugi_digraph(corpus("hopf").diagram)
    assert len(g.vertices) == 2 and len(g.edges) == 2
    assert all(brute(g, v) == 1 for v in g.vertices)


def test_murasugi_seven4_counts():
    g = murasugi_digraph(corpus("seven_4").diagram)
    assert all(brute(g, v) == 4 for v in g.vertices)


def test_murasugi_unknot_single_vertex():
    g = murasugi_digraph(parse_pd(""))
    assert len(g.vertices) == 1 and len(g.edges) == 0


def test_murasugi_rejects_nonspecial():
    with pytest.raises(UnsupportedDiagram):
        murasugi_digraph(corpus("figure_eight").diagram)


def test_murasugi_alternation_and_sphere():
    # in- and out-edges alternate around every vertex, and the embedding
    # closes with one face per black region
    for e in special_alternating_entries():
        g = murasugi_digraph(e.diagram)
        for v in g.vertices:
            rot = g.rotation[v]
            assert all(rot[i][1] != rot[(i + 1) % len(rot)][1] for i in range(len(rot)))
        blacks = len(e.diagram.faces) - len(g.vertices)
        assert g.num_faces() == blacks


# -- arc digraph with the H/K split ------------------------------------------------


def test_crowell_trefoil_structure():
    cg = crowell_graph(parse_pd(TREFOIL))
    assert len(cg.graph.vertices) == 3 and len(cg.graph.edges) == 6
    assert sorted(cg.hk.values()).count("H") == 3
    assert sorted(cg.hk.values()).count("K") == 3


def test_crowell_one_H_and_one_K_in_edge_per_vertex():
    for e in load_corpus():
        if e.diagram.n == 0 or not classify_diagram(e.diagram).alternating:
            continue
        cg = crowell_graph(e.diagram)
        for v in cg.graph.vertices:
            tags = sorted(cg.hk[a] for a in cg.graph.in_edges(v))
            assert tags == ["H", "K"]


def test_crowell_alpha_weights():
    cg = crowell_graph(parse_pd(TREFOIL))
    minus_t = LaurentPoly({1: -1})
    one = LaurentPoly({0: 1})
    for a, tag in cg.hk.items():
        assert cg.alpha[a] == (minus_t if tag == "H" else one)


def test_special_circles_lie_wholly_in_H_or_K():
    for e in special_alternating_entries():
        cg = crowell_graph(e.diagram)
        for circle in seifert_circles(e.diagram):
            tags = {cg.hk[a] for a in circle.arcs}
            assert len(tags) == 1


def test_crowell_rejects_nonalternating():
    from pd_builders import braid_pd
    bad = parse_pd(braid_pd([1, 1, 2, 2], 3))
    with pytest.raises(UnsupportedDiagram):
        crowell_graph(bad)


# -- tree-sum polynomial -------------------------------------------------------------


def test_tree_sum_trefoil():
    cg = crowell_graph(parse_pd(TREFOIL))
    want = LaurentPoly({0: 1, 1: -1, 2: 1})
    for v in cg.graph.vertices:
        assert normalize_reduced(crowell_polynomial(cg, v)) == want


def test_tree_sum_root_independent_after_normalization():
    for e in load_corpus():
        if e.diagram.n == 0 or not classify_diagram(e.diagram).alternating:
            continue
        cg = crowell_graph(e.diagram)
        values = {normalize_reduced(crowell_polynomial(cg, v)) for v in cg.graph.vertices}
        assert len(values) == 1


def test_tree_sum_equals_determinant():
    for e in load_corpus():
        if e.diagram.n == 0 or not classify_diagram(e.diagram).alternating:
            continue
        cg = crowell_graph(e.diagram)
        v = cg.graph.vertices[0]
        assert normalize_reduced(crowell_polynomial(cg, v)) == reduced_alexander(e.diagram)


def test_constant_term_counts_K_maximal_trees():
    # the constant term equals the number of spanning arborescences of the
    # collapsed H-graph, i.e. of trees using as few H-edges as possible
    for e in special_alternating_entries():
        cg = crowell_graph(e.diagram)
        value = reduced_alexander(e.diagram).eval_at_zero()
        hd = collapse_H(cg)
        assert all(brute(hd, v) == value for v in hd.vertices)


# -- collapsed graphs ------------------------------------------------------------------


def test_collapse_trefoil():
    cg = crowell_graph(parse_pd(TREFOIL))
    hd, kd = collapse_H(cg), collapse_K(cg)
    assert len(hd.vertices) == 1 and len(kd.vertices) == 1
    assert all(brute(hd, v) == 1 for v in hd.vertices)
    assert all(brute(kd, v) == 1 for v in kd.vertices)


def test_collapse_seven4_counts_match():
    e = corpus("seven_4")
    value = 4
    cg = crowell_graph(e.diagram)
    md = murasugi_digraph(e.diagram)
    for g in (md, collapse_H(cg), collapse_K(cg)):
        assert all(delcon(g, v) == value for v in g.vertices)


def test_collapse_idempotent_when_no_tagged_cycles():
    cg = crowell_graph(parse_pd(TREFOIL))
    hd = collapse_H(cg)
    assert collapse_tagged_cycles(hd, "H") is hd


def test_collapse_alternation():
    for e in special_alternating_entries():
        cg = crowell_graph(e.diagram)
        for g in (collapse_H(cg), collapse_K(cg)):
            for v in g.vertices:
                rot = g.rotation[v]
                if rot:
                    assert all(rot[i][1] != rot[(i + 1) % len(rot)][1]
                               for i in range(len(rot)))


# -- the diagram-class to digraph-class map --------------------------------------------


def test_admissible_diagrams_give_admissible_digraphs():
    from linktrees.classify import lambda_member
    hits = 0
    for e in load_corpus():
        if e.diagram.n and lambda_member(e.diagram):
            hits += 1
            assert gamma_member(murasugi_digraph(e.diagram))
    assert hits >= 2


def test_tree_counts_equal_constant_term_everywhere():
    for e in special_alternating_entries():
        value = reduced_alexander(e.diagram).eval_at_zero()
        cg = crowell_graph(e.diagram)
        for g in (murasugi_digraph(e.diagram), collapse_H(cg), collapse_K(cg)):
            assert all(brute(g, v) == value for v in g.vertices)


def test_dual_tree_pairing():
    # the crossings not used by a spanning arborescence of the white-region
    # digraph form a spanning tree of the black-region (dual) graph
    from linktrees.digraph import iter_arborescences
    for e in special_alternating_entries():
        g = murasugi_digraph(e.diagram)
        if len(g.edges) > 8:
            continue
        faces = g.faces()
        side_faces = {}
        for i, f in enumerate(faces):
            for (edge, end) in f:
                side_faces.setdefault(edge, []).append(i)
        assert all(len(v) == 2 for v in side_faces.values())
        for root in g.vertices:
            for tree in iter_arborescences(g, root):
                complement = [edge for edge in g.edges if edge not in tree]
                # spanning tree of the dual: right edge count and connected
                assert len(complement) == len(faces) - 1
                adj = {i: set() for i in range(len(faces))}
                for edge in complement:
                    a, b = side_faces[edge]
                    adj[a].add(b)
                    adj[b].add(a)
                seen = {0}
                stack = [0]
                while stack:
                    u = stack.pop()
                    for w in adj[u]:
                        if w not in seen:
                            seen.add(w)
                            stack.append(w)
                assert len(seen) == len(faces)
