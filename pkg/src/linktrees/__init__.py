"""Reduced Alexander polynomials of alternating links, two ways.

The determinant route labels diagram regions and takes an exact minor; the
spanning-tree route sums weights over arborescences of digraphs built from
the diagram.  Reducing the white-region digraph by loop removal and
unique-parent contraction classifies it against a four-graph family, which
decides fibredness and uniqueness of the incompressible Seifert surface for
small leading coefficients.
"""

from .alexander import alexander_matrix, corner_labels, reduced_alexander
from .classify import (AnalysisReport, analyze_link, classify_reduced,
                       enumerate_phi, lambda_member)
from .corpus import CorpusEntry, find_entry, load_corpus
from .diagram import (Diagram, DiagramFlags, Face, GenusData, PDError,
                      SeifertCircle, UnsupportedDiagram, checkerboard,
                      classify_diagram, decompose, decompose_trace, genus_data,
                      parse_pd, reflect, seifert_circles)
from .digraph import (PlanarDigraph, arborescence_with_leaf, canonical_code,
                      contract, count_arborescences_bruteforce,
                      count_arborescences_delcon, count_arborescences_matrixtree,
                      delete, delete_contract_split, g_alpha, g_beta, g_delta,
                      g_delta_reflected, g_gamma, gamma_member, is_O_connected,
                      is_prime, iso_embedded, iso_up_to_reflection, move1, move2,
                      reduce_digraph)
from .linkgraphs import (CrowellGraph, collapse_H, collapse_K, crowell_graph,
                         crowell_polynomial, murasugi_digraph)
from .poly import LaurentPoly, normalize_reduced, poly_det

__version__ = "0.1.0"
