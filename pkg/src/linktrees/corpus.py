"""Bundled corpus of PD codes with their expected reduced Alexander polynomials.

Corpus files are JSON lines: {"name": ..., "pd": [[a,b,c,d], ...],
"delta0": [[exponent, coefficient], ...]}.  The environment variable
SEIFERT_CORPUS overrides the bundled file.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .diagram import Diagram, PDError
from .poly import LaurentPoly


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    diagram: Diagram
    delta0: Optional[LaurentPoly]


def corpus_text(path: str | None = None) -> str:
    path = path or os.environ.get("SEIFERT_CORPUS")
    if path:
        return Path(path).read_text()
    return resources.files("linktrees").joinpath("corpus/links.jsonl").read_text()


def load_corpus(path: str | None = None) -> list[CorpusEntry]:
    entries = []
    for lineno, line in enumerate(corpus_text(path).splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise PDError(f"corpus line {lineno}: bad JSON: {exc}") from exc
        d = Diagram.from_json_obj(obj)
        delta = LaurentPoly.from_pairs(obj["delta0"]) if "delta0" in obj else None
        entries.append(CorpusEntry(obj.get("name", f"line{lineno}"), d, delta))
    return entries


def find_entry(name: str, path: str | None = None) -> CorpusEntry:
    for e in load_corpus(path):
        if e.name == name:
            return e
    raise KeyError(f"no corpus entry named {name!r}")
