"""Regenerate the bundled corpus of PD codes with oracle-derived polynomials.

Every expected polynomial is computed by the cofactor-expansion determinant
oracle (never by the package's elimination routine) and cross-checked against
the published Alexander polynomials of these links, so a conventions bug in
the main code cannot leak into the expected values.

Run as a script to rewrite src/linktrees/corpus/links.jsonl.
"""

from __future__ import annotations

import json
from pathlib import Path

from linktrees.alexander import alexander_matrix, default_region_pair
from linktrees.diagram import genus_data, parse_pd, reflect, seifert_circles
from linktrees.poly import LaurentPoly, normalize_reduced

from oracles import cofactor_det
from pd_builders import (braid_closure_variants, braid_pd, connected_sum_variants,
                         medial_variants, pretzel_variants)

TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def oracle_delta0(d) -> LaurentPoly:
    if d.n == 0:
        return LaurentPoly({0: 1})
    p, q = default_region_pair(d)
    return normalize_reduced(cofactor_det(alexander_matrix(d, p, q)))


def _pick(variants, predicate, what):
    for pd in variants:
        if predicate(parse_pd(pd)):
            return pd
    raise RuntimeError(f"no variant found for {what}")


def build_entries() -> list[dict]:
    tre = parse_pd(TREFOIL_PD)
    entries = [
        ("unknot", ""),
        ("trefoil", TREFOIL_PD),
        ("figure_eight", braid_pd([1, -2, 1, -2], 3)),
        ("hopf", braid_pd([1, 1], 2)),
        ("torus_2_4", braid_pd([1] * 4, 2)),
        ("torus_2_5", braid_pd([1] * 5, 2)),
        ("torus_2_6", braid_pd([1] * 6, 2)),
        ("torus_2_4_rev", _pick(braid_closure_variants([1] * 4, 2),
                                lambda d: genus_data(d).s == 4, "antiparallel (2,4)")),
        ("torus_2_6_rev", _pick(braid_closure_variants([1] * 6, 2),
                                lambda d: genus_data(d).s == 6, "antiparallel (2,6)")),
        ("seven_4", pretzel_variants((3, 1, 3))[0]),
        ("granny", connected_sum_variants(tre, tre)[0]),
        ("square", connected_sum_variants(tre, reflect(tre))[0]),
        ("borromean_special", _pick(
            medial_variants(__import__("linktrees.digraph", fromlist=["g_delta"]).g_delta()),
            lambda d: all(c.special for c in seifert_circles(d)), "special octahedral")),
    ]
    # published one-variable Alexander polynomials, as a second net under the oracle
    published = {
        "unknot": [[0, 1]],
        "trefoil": [[0, 1], [1, -1], [2, 1]],
        "figure_eight": [[0, 1], [1, -3], [2, 1]],
        "hopf": [[0, 1], [1, -1]],
        "torus_2_4": [[0, 1], [1, -1], [2, 1], [3, -1]],
        "torus_2_5": [[0, 1], [1, -1], [2, 1], [3, -1], [4, 1]],
        "torus_2_6": [[0, 1], [1, -1], [2, 1], [3, -1], [4, 1], [5, -1]],
        "torus_2_4_rev": [[0, 2], [1, -2]],
        "torus_2_6_rev": [[0, 3], [1, -3]],
        "seven_4": [[0, 4], [1, -7], [2, 4]],
        "granny": [[0, 1], [1, -2], [2, 3], [3, -2], [4, 1]],
        "square": [[0, 1], [1, -2], [2, 3], [3, -2], [4, 1]],
        "borromean_special": [[0, 3], [1, -6], [2, 3]],
    }
    out = []
    for name, pd in entries:
        d = parse_pd(pd, name=name)
        delta = oracle_delta0(d)
        if delta.to_pairs() != published[name]:
            raise RuntimeError(f"{name}: oracle {delta.to_pairs()} != published {published[name]}")
        out.append({"name": name, "pd": [list(r) for r in d.rows], "delta0": delta.to_pairs()})
    return out


def corpus_path() -> Path:
    return Path(__file__).resolve().parent.parent / "src" / "linktrees" / "corpus" / "links.jsonl"


def main():
    lines = [json.dumps(e, separators=(", ", ": ")) for e in build_entries()]
    corpus_path().write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} entries to {corpus_path()}")


if __name__ == "__main__":
    main()
