"""Independent oracles used only by the test suite.

These deliberately avoid the algorithms of the package under test:
determinants are computed by first-row cofactor expansion, and
arborescences by filtering all (|V|-1)-subsets of the edge set.
"""

from __future__ import annotations

from itertools import combinations

from linktrees.poly import LaurentPoly, ONE, ZERO


def cofactor_det(m: list[list[LaurentPoly]]) -> LaurentPoly:
    "Determinant by Laplace expansion along the first row."
    k = len(m)
    if k == 0:
        return ONE
    if k == 1:
        return m[0][0]
    total = ZERO
    for j in range(k):
        if m[0][j].is_zero():
            continue
        minor = [[row[c] for c in range(k) if c != j] for row in m[1:]]
        term = m[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def arborescences_by_subsets(edges: dict[int, tuple[int, int]],
                             vertices: list[int], root) -> list[frozenset[int]]:
    """All spanning arborescences with the given origin, by brute subset search.

    ``edges`` maps edge id -> (tail, head).  Every vertex except the root must
    have exactly one incoming edge, the root none, and the edge set must reach
    every vertex from the root.
    """
    nonroot = [v for v in vertices if v != root]
    found = []
    ids = sorted(edges)
    for subset in combinations(ids, len(nonroot)):
        heads = [edges[e][1] for e in subset]
        if sorted(heads) != sorted(nonroot):
            continue
        # walk outward from the root
        reached = {root}
        frontier = [root]
        by_tail: dict[object, list[int]] = {}
        for e in subset:
            by_tail.setdefault(edges[e][0], []).append(e)
        while frontier:
            u = frontier.pop()
            for e in by_tail.get(u, ()):
                h = edges[e][1]
                if h not in reached:
                    reached.add(h)
                    frontier.append(h)
        if len(reached) == len(vertices):
            found.append(frozenset(subset))
    return found


def count_arborescences_oracle(edges, vertices, root) -> int:
    return len(arborescences_by_subsets(edges, vertices, root))
