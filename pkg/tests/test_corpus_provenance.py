"""The bundled corpus must be reproducible from the builders and the oracle.

Every expected polynomial in the shipped file has to equal the value the
cofactor-expansion oracle computes from the PD code, and the codes themselves
must be the ones the deterministic builders produce.
"""

import json

from linktrees.corpus import load_corpus

from make_corpus import build_entries, corpus_path, oracle_delta0


def test_bundled_corpus_matches_generator():
    regenerated = build_entries()
    shipped = [json.loads(line) for line in corpus_path().read_text().splitlines() if line]
    assert shipped == regenerated


def test_expected_values_are_oracle_values():
    for entry in load_corpus():
        assert entry.delta0 is not None
        assert oracle_delta0(entry.diagram) == entry.delta0


def test_corpus_names_unique_and_expected():
    names = [e.name for e in load_corpus()]
    assert len(set(names)) == len(names)
    assert {"unknot", "trefoil", "figure_eight", "hopf", "torus_2_4", "torus_2_5",
            "torus_2_6", "seven_4", "granny", "square"} <= set(names)
