"""Directed multigraphs with spherical embeddings.

A graph is stored as a rotation system: for every vertex, the counterclockwise
cyclic order of its incident edge-ends.  Loops and multiedges are allowed.
Faces are traced from the rotation, and construction checks the Euler count,
so every instance really is embedded in the sphere (component by component).

Darts are (edge, end) pairs with end 0 at the tail and end 1 at the head.
"""

from __future__ import annotations

from typing import Iterable, Optional

Dart = tuple[int, int]


class PlanarDigraph:
    def __init__(self, vertices: Iterable[int], edges: dict[int, tuple[int, int]],
                 rotation: dict[int, Iterable[Dart]],
                 labels: dict[int, str] | None = None):
        self.vertices = tuple(sorted(vertices))
        self.edges = {int(e): (t, h) for e, (t, h) in sorted(edges.items())}
        self.rotation = {v: tuple(tuple(d) for d in rotation.get(v, ())) for v in self.vertices}
        self.labels = dict(labels) if labels else {}
        self._dart_vertex: dict[Dart, int] = {}
        for v, rot in self.rotation.items():
            for d in rot:
                if d in self._dart_vertex:
                    raise ValueError(f"dart {d} appears twice in the rotation system")
                self._dart_vertex[d] = v
        for e, (t, h) in self.edges.items():
            for end, want in ((0, t), (1, h)):
                got = self._dart_vertex.get((e, end))
                if got != want:
                    raise ValueError(f"edge {e} end {end} should sit at vertex {want}, found {got}")
        if len(self._dart_vertex) != 2 * len(self.edges):
            raise ValueError("rotation system does not cover the edge ends exactly")
        if self.num_faces() - len(self.edges) + len(self.vertices) != 2 * self.num_components():
            raise ValueError("rotation system is not a sphere embedding")

    # -- basic structure ------------------------------------------------

    def darts(self) -> list[Dart]:
        return [(e, end) for e in self.edges for end in (0, 1)]

    def vertex_of(self, d: Dart) -> int:
        return self._dart_vertex[d]

    def alpha(self, d: Dart) -> Dart:
        return (d[0], 1 - d[1])

    def sigma(self, d: Dart, reverse: bool = False) -> Dart:
        rot = self.rotation[self._dart_vertex[d]]
        i = rot.index(d)
        return rot[(i - 1) if reverse else (i + 1) % len(rot)]

    def is_loop(self, e: int) -> bool:
        t, h = self.edges[e]
        return t == h

    def in_degree(self, v: int) -> int:
        return sum(1 for t, h in self.edges.values() if h == v)

    def out_degree(self, v: int) -> int:
        return sum(1 for t, h in self.edges.values() if t == v)

    def valence(self, v: int) -> int:
        return len(self.rotation[v])

    def in_edges(self, v: int) -> list[int]:
        return [e for e, (t, h) in self.edges.items() if h == v]

    def num_components(self) -> int:
        if not self.vertices:
            return 0
        seen: set[int] = set()
        comps = 0
        for v0 in self.vertices:
            if v0 in seen:
                continue
            comps += 1
            stack = [v0]
            seen.add(v0)
            while stack:
                u = stack.pop()
                for (e, end) in self.rotation[u]:
                    w = self._dart_vertex[(e, 1 - end)]
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return comps

    def is_connected(self) -> bool:
        return self.num_components() <= 1

    def faces(self) -> list[tuple[Dart, ...]]:
        "Orbits of sigma(alpha(d)); each orbit is one face boundary."
        left = set(self.darts())
        out = []
        while left:
            d0 = min(left)
            orbit = []
            d = d0
            while True:
                left.discard(d)
                orbit.append(d)
                d = self.sigma(self.alpha(d))
                if d == d0:
                    break
            out.append(tuple(orbit))
        return out

    def num_faces(self) -> int:
        # faces of an edgeless component degenerate to one region per vertex
        isolated = sum(1 for v in self.vertices if not self.rotation[v])
        return len(self.faces()) + isolated

    def reflected(self) -> "PlanarDigraph":
        rot = {v: tuple(reversed(r)) for v, r in self.rotation.items()}
        return PlanarDigraph(self.vertices, self.edges, rot, self.labels)

    # -- serialization ----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": e, "tail": t, "head": h,
                       **({"label": self.labels[e]} if e in self.labels else {})}
                      for e, (t, h) in self.edges.items()],
            "rotation": {str(v): [[e, end] for e, end in rot]
                         for v, rot in self.rotation.items()},
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PlanarDigraph":
        edges = {int(e["id"]): (e["tail"], e["head"]) for e in obj["edges"]}
        labels = {int(e["id"]): e["label"] for e in obj["edges"] if "label" in e}
        rotation = {int(v): [tuple(d) for d in rot] for v, rot in obj["rotation"].items()}
        return cls(obj["vertices"], edges, rotation, labels or None)

    def to_dot(self, colors: dict[str, str] | None = None) -> str:
        colors = colors or {}
        lines = ["digraph G {"]
        for v in self.vertices:
            lines.append(f"  {v};")
        for e, (t, h) in self.edges.items():
            attrs = []
            if e in self.labels:
                attrs.append(f'label="{self.labels[e]}"')
                col = colors.get(self.labels[e])
                if col:
                    attrs.append(f'color="{col}"')
            at = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(f"  {t} -> {h}{at};")
        lines.append("}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return (f"PlanarDigraph(V={len(self.vertices)}, "
                f"E={[(e, t, h) for e, (t, h) in self.edges.items()]})")


# -- edits ----------------------------------------------------------------


def delete(g: PlanarDigraph, e: int) -> PlanarDigraph:
    if e not in g.edges:
        raise ValueError(f"no edge {e}")
    edges = {k: v for k, v in g.edges.items() if k != e}
    rotation = {v: [d for d in rot if d[0] != e] for v, rot in g.rotation.items()}
    labels = {k: v for k, v in g.labels.items() if k != e}
    return PlanarDigraph(g.vertices, edges, rotation, labels)


def contract(g: PlanarDigraph, e: int) -> PlanarDigraph:
    "Contract a non-loop edge, splicing the two rotations at its ends."
    if e not in g.edges:
        raise ValueError(f"no edge {e}")
    if g.is_loop(e):
        raise ValueError("cannot contract a loop")
    t, h = g.edges[e]
    fused = max(g.vertices) + 1

    def split_at(v: int, dart: Dart) -> list[Dart]:
        rot = list(g.rotation[v])
        i = rot.index(dart)
        return rot[i + 1:] + rot[:i]

    new_rot_fused = split_at(t, (e, 0)) + split_at(h, (e, 1))
    vertices = [v for v in g.vertices if v not in (t, h)] + [fused]
    edges = {}
    for k, (a, b) in g.edges.items():
        if k == e:
            continue
        edges[k] = (fused if a in (t, h) else a, fused if b in (t, h) else b)
    rotation = {v: g.rotation[v] for v in g.vertices if v not in (t, h)}
    rotation[fused] = new_rot_fused
    labels = {k: v for k, v in g.labels.items() if k != e}
    return PlanarDigraph(vertices, edges, rotation, labels)


def contracted_vertex(g: PlanarDigraph) -> int:
    "Vertex id that contract() will assign to the fused vertex."
    return max(g.vertices) + 1


# -- arborescence counting -------------------------------------------------


def _acyclic_choice(g: PlanarDigraph, root, choice: dict[int, int]) -> bool:
    "choice maps each non-root vertex to its chosen in-edge; check for cycles."
    state: dict[int, int] = {}
    for v0 in choice:
        v = v0
        path = []
        while v in choice and state.get(v, 0) == 0:
            state[v] = 1
            path.append(v)
            v = g.edges[choice[v]][0]
        if v in choice and state.get(v) == 1 and v in path:
            return False
        for u in path:
            state[u] = 2
    return True


def count_arborescences_bruteforce(g: PlanarDigraph, v) -> int:
    "Exhaustive choice of one non-loop in-edge per non-root vertex, filtered for acyclicity."
    return sum(1 for _ in iter_arborescences(g, v))


def iter_arborescences(g: PlanarDigraph, v):
    "Yield the edge sets of all spanning arborescences with origin v."
    if v not in g.vertices:
        raise ValueError(f"no vertex {v}")
    nonroot = [w for w in g.vertices if w != v]
    options = []
    for w in nonroot:
        ins = [e for e in g.in_edges(w) if not g.is_loop(e)]
        if not ins:
            return
        options.append(ins)

    def rec(i: int, choice: dict[int, int]):
        if i == len(nonroot):
            if _acyclic_choice(g, v, choice):
                yield frozenset(choice.values())
            return
        w = nonroot[i]
        for e in options[i]:
            choice[w] = e
            yield from rec(i + 1, choice)
        del choice[w]

    yield from rec(0, {})


def _int_det(rows: list[list[int]]) -> int:
    "Fraction-free integer determinant (Bareiss)."
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for i in range(n - 1):
        if a[i][i] == 0:
            for r in range(i + 1, n):
                if a[r][i] != 0:
                    a[i], a[r] = a[r], a[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
            a[r][i] = 0
        prev = a[i][i]
    return sign * a[n - 1][n - 1]


def count_arborescences_matrixtree(g: PlanarDigraph, v) -> int:
    """Determinant of the in-degree Laplacian with row and column of the root
    removed; loops are ignored.  Directed matrix-tree theorem."""
    if v not in g.vertices:
        raise ValueError(f"no vertex {v}")
    others = [w for w in g.vertices if w != v]
    idx = {w: i for i, w in enumerate(others)}
    n = len(others)
    m = [[0] * n for _ in range(n)]
    for e, (t, h) in g.edges.items():
        if t == h:
            continue
        if h in idx:
            m[idx[h]][idx[h]] += 1
            if t in idx:
                m[idx[t]][idx[h]] -= 1
    return _int_det(m)


def canonical_code(g: PlanarDigraph, root=None) -> tuple:
    """Canonical encoding of the embedded digraph, minimized over starting
    darts and over reflection, so it is invariant under isomorphism and
    mirror image.  The root (if given) is encoded by its discovery index."""
    if not g.edges:
        return ("V", len(g.vertices), -1 if root is None else 0)
    best = None
    for mirror in (False, True):
        h = g.reflected() if mirror else g
        for d0 in h.darts():
            code = _dart_code(h, d0, root)
            if best is None or code < best:
                best = code
    return best


def _dart_code(g: PlanarDigraph, d0: Dart, root) -> tuple:
    edge_no: dict[int, int] = {}
    vert_no: dict[int, int] = {}
    out: list[int] = []
    v0 = g.vertex_of(d0)
    vert_no[v0] = 0
    queue: list[tuple[int, Dart]] = [(v0, d0)]
    qi = 0
    while qi < len(queue):
        v, entry = queue[qi]
        qi += 1
        rot = g.rotation[v]
        i = rot.index(entry)
        for k in range(len(rot)):
            e, end = rot[(i + k) % len(rot)]
            if e not in edge_no:
                edge_no[e] = len(edge_no)
            out.append(edge_no[e] * 2 + end)
            w = g.vertex_of((e, 1 - end))
            if w not in vert_no:
                vert_no[w] = len(vert_no)
                queue.append((w, (e, 1 - end)))
        out.append(-1)
    if len(vert_no) != len(g.vertices):
        # disconnected: encode remaining components independently (rare path)
        rest = sorted(v for v in g.vertices if v not in vert_no)
        out.append(-2)
        out.append(len(rest))
    return (tuple(out), -1 if root is None else vert_no.get(root, -3))


def iso_embedded(g1: PlanarDigraph, g2: PlanarDigraph) -> bool:
    "Isomorphism of embedded digraphs: preserves heads, tails and rotation."
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False
    if not g1.edges:
        return True
    if sorted(len(r) for r in g1.rotation.values()) != sorted(len(r) for r in g2.rotation.values()):
        return False
    if not (g1.is_connected() and g2.is_connected()):
        # fall back to canonical codes for the rare disconnected comparison
        return canonical_code(g1) == canonical_code(g2) and \
            _mirror_free_code(g1) == _mirror_free_code(g2)
    d1 = g1.darts()[0]
    for d2 in g2.darts():
        if d1[1] != d2[1]:
            continue
        if _try_dart_map(g1, g2, d1, d2):
            return True
    return False


def _mirror_free_code(g: PlanarDigraph) -> tuple:
    if not g.edges:
        return ("V", len(g.vertices))
    return min(_dart_code(g, d0, None) for d0 in g.darts())


def _try_dart_map(g1, g2, d1: Dart, d2: Dart) -> bool:
    mapping = {d1: d2}
    stack = [d1]
    while stack:
        a = stack.pop()
        b = mapping[a]
        for fa, fb in ((g1.alpha(a), g2.alpha(b)),
                       (g1.sigma(a), g2.sigma(b))):
            if fa[1] != fb[1]:
                return False
            if fa in mapping:
                if mapping[fa] != fb:
                    return False
            else:
                mapping[fa] = fb
                stack.append(fa)
    if len(set(mapping.values())) != len(mapping) or len(mapping) != 2 * len(g1.edges):
        return False
    return True


def iso_up_to_reflection(g1: PlanarDigraph, g2: PlanarDigraph) -> bool:
    return iso_embedded(g1, g2) or iso_embedded(g1, g2.reflected())


def delete_contract_split(g: PlanarDigraph, e: int, root):
    """The two rooted children of the arborescence count recursion at edge e.

    Trees avoiding e live in g - e.  Trees containing e contract to trees of
    g/e, but the correspondence is a bijection only onto trees whose fused
    vertex is entered through a former in-edge of e's tail: an in-edge of the
    head other than e would lift to a second parent.  The contraction child
    therefore also drops the head's other in-edges.  (Without that proviso
    the count identity fails, e.g. on the triangle with one edge each way.)
    """
    if g.is_loop(e):
        raise ValueError("split needs a non-loop edge")
    t, h = g.edges[e]
    if root == h:
        raise ValueError("split root must differ from the contracted head")
    others = [f for f in g.in_edges(h) if f != e]
    contracted = contract(g, e)
    for f in others:
        contracted = delete(contracted, f)
    fused = contracted_vertex(g)
    new_root = fused if root == t else root
    return (delete(g, e), root), (contracted, new_root)


def count_arborescences_delcon(g: PlanarDigraph, v, _memo=None) -> int:
    """Count spanning arborescences by the delete/contract recursion on an
    in-edge of a non-root vertex, dropping loops outright and memoizing on
    the canonical form of the rooted graph."""
    if v not in g.vertices:
        raise ValueError(f"no vertex {v}")
    if _memo is None:
        _memo = {}
    for e in sorted(g.edges):
        if g.is_loop(e):
            return count_arborescences_delcon(delete(g, e), v, _memo)
    if not g.is_connected():
        return 0
    if len(g.vertices) == 1:
        return 1
    pick = None
    for w in g.vertices:
        if w == v:
            continue
        ins = g.in_edges(w)
        if not ins:
            return 0
        if pick is None:
            pick = min(ins)
    key = canonical_code(g, v)
    if key in _memo:
        return _memo[key]
    (g_del, r_del), (g_con, r_con) = delete_contract_split(g, pick, v)
    total = (count_arborescences_delcon(g_del, r_del, _memo)
             + count_arborescences_delcon(g_con, r_con, _memo))
    _memo[key] = total
    return total


# -- structural predicates --------------------------------------------------


def is_O_connected(g: PlanarDigraph) -> bool:
    "Strong connectivity of the directed multigraph."
    if not g.vertices:
        return True

    def reach(forward: bool) -> set:
        start = g.vertices[0]
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for e, (t, h) in g.edges.items():
                if forward and t == u and h not in seen:
                    seen.add(h)
                    stack.append(h)
                elif not forward and h == u and t not in seen:
                    seen.add(t)
                    stack.append(t)
        return seen

    n = len(g.vertices)
    return len(reach(True)) == n and len(reach(False)) == n


def _connected_without(g: PlanarDigraph, removed_edges: set[int], removed_vertex=None) -> bool:
    verts = [v for v in g.vertices if v != removed_vertex]
    if not verts:
        return True
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for e, (t, h) in g.edges.items():
        if e in removed_edges or removed_vertex in (t, h):
            continue
        adj[t].add(h)
        adj[h].add(t)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


def is_prime(g: PlanarDigraph) -> bool:
    """No loop, no cut vertex, and no curve crossing the edges exactly twice
    with vertices on both sides (bridges and separating edge pairs)."""
    if not g.is_connected():
        return False
    if any(g.is_loop(e) for e in g.edges):
        return False
    if len(g.vertices) > 1:
        for v in g.vertices:
            if not _connected_without(g, set(), removed_vertex=v):
                return False
    ids = sorted(g.edges)
    for e in ids:
        if not _connected_without(g, {e}):
            return False
    for i, e1 in enumerate(ids):
        for e2 in ids[i + 1:]:
            if not _connected_without(g, {e1, e2}):
                return False
    return True


def alternates(g: PlanarDigraph, v) -> bool:
    rot = g.rotation[v]
    if len(rot) % 2:
        return False
    return all(rot[i][1] != rot[(i + 1) % len(rot)][1] for i in range(len(rot)))


def gamma_member(g: PlanarDigraph) -> bool:
    """Connected, spherically embedded, prime, with in- and out-edges
    alternating around every vertex."""
    ok = g.is_connected() and is_prime(g) and all(alternates(g, v) for v in g.vertices)
    if ok and len(g.edges):
        # the definition forces every in-degree away from 1
        assert all(g.in_degree(v) != 1 for v in g.vertices), "alternating prime graph with in-degree 1"
    return ok


def arborescence_with_leaf(g: PlanarDigraph, w):
    """Some root v != w and spanning arborescence from v in which w is a leaf
    (no outgoing tree edge), found exhaustively; None when none exists."""
    if w not in g.vertices:
        raise ValueError(f"no vertex {w}")
    for v in g.vertices:
        if v == w:
            continue
        for tree in iter_arborescences(g, v):
            if not any(g.edges[e][0] == w for e in tree):
                return v, tree
    return None


# -- reduction moves ---------------------------------------------------------


def innermost_loops(g: PlanarDigraph) -> list[int]:
    "Loops whose two darts are adjacent in the rotation: they bound an empty disc."
    out = []
    for e in sorted(g.edges):
        t, h = g.edges[e]
        if t != h:
            continue
        rot = g.rotation[t]
        n = len(rot)
        for i in range(n):
            if rot[i][0] == e and rot[(i + 1) % n][0] == e:
                out.append(e)
                break
    return out


def move1(g: PlanarDigraph) -> Optional[PlanarDigraph]:
    "Remove one innermost loop; None when no loop bounds an empty disc."
    loops = innermost_loops(g)
    if not loops:
        return None
    return delete(g, loops[0])


def _move2_edge(g: PlanarDigraph) -> Optional[int]:
    for e in sorted(g.edges):
        t, h = g.edges[e]
        if t != h and g.in_degree(h) == 1:
            return e
    return None


def move2(g: PlanarDigraph) -> Optional[PlanarDigraph]:
    "Contract one edge whose head has no other incoming edge; None if none."
    e = _move2_edge(g)
    if e is None:
        return None
    return contract(g, e)


def reduce_digraph(g: PlanarDigraph):
    """Apply moves 1 and 2 until neither applies.  Returns the fixpoint and
    the move trace; both moves preserve arborescence counts at surviving roots."""
    trace = []
    while True:
        loops = innermost_loops(g)
        if loops:
            e = loops[0]
            trace.append({"move": 1, "edge": e, "vertex": g.edges[e][0]})
            g = delete(g, e)
            continue
        e = _move2_edge(g)
        if e is not None:
            t, h = g.edges[e]
            trace.append({"move": 2, "edge": e, "tail": t, "head": h,
                          "fused": contracted_vertex(g)})
            g = contract(g, e)
            continue
        return g, trace


# -- reference graphs ---------------------------------------------------------


def g_alpha() -> PlanarDigraph:
    "One vertex, no edges."
    return PlanarDigraph([1], {}, {1: []})


def _two_vertex_ladder(k: int) -> PlanarDigraph:
    """Two vertices joined by 2k edges of alternating direction, embedded as
    parallel strands; every face is a bigon."""
    edges = {}
    rot1 = []
    rot2 = []
    for i in range(2 * k):
        if i % 2 == 0:
            edges[i] = (1, 2)
            rot1.append((i, 0))
            rot2.append((i, 1))
        else:
            edges[i] = (2, 1)
            rot1.append((i, 1))
            rot2.append((i, 0))
    rot2.reverse()
    return PlanarDigraph([1, 2], edges, {1: rot1, 2: rot2})


def g_beta() -> PlanarDigraph:
    "Two vertices, two edges each way."
    return _two_vertex_ladder(2)


def g_gamma() -> PlanarDigraph:
    "Two vertices, three edges each way."
    return _two_vertex_ladder(3)


def g_delta() -> PlanarDigraph:
    """Three vertices, each adjacent pair joined by one edge each way, with
    the alternating genus-0 rotation; three arborescences from any root."""
    edges = {
        1: (1, 2), 2: (2, 1),   # a, b
        3: (2, 3), 4: (3, 2),   # c, d
        5: (3, 1), 6: (1, 3),   # e, f
    }
    rotation = {
        1: [(1, 0), (2, 1), (6, 0), (5, 1)],
        2: [(3, 0), (4, 1), (2, 0), (1, 1)],
        3: [(5, 0), (6, 1), (4, 0), (3, 1)],
    }
    return PlanarDigraph([1, 2, 3], edges, rotation)


def g_delta_reflected() -> PlanarDigraph:
    return g_delta().reflected()


REFERENCE_GRAPHS = {
    "Alpha": g_alpha,
    "Beta": g_beta,
    "Gamma": g_gamma,
    "Delta": g_delta,
}
