"""Concept lattices over kNN-binarized data.

Thin Python façade over the C++ core: generate or load a dataset, binarize
it into a transaction database, mine all formal concepts, build the Hasse
diagram of their extents, and score the resulting cluster hierarchy with
dendrogram purity against a Ward-linkage HAC baseline.
"""

from ._core import (
    ClusterHierarchy,
    Concept,
    ConceptSet,
    Dataset,
    Dendrogram,
    DpResult,
    LatticeGraph,
    Merge,
    Partition,
    TransactionDatabase,
    build_hasse,
    closure,
    dendrogram_clusters,
    dendrogram_purity,
    derive_extent,
    derive_intent,
    export_dot,
    export_json,
    generate_synth,
    hac_ward,
    knn_binarize,
    lca,
    load_csv,
    load_hierarchy,
    load_lattice,
    mine_concepts,
    purity,
    read_concepts,
    read_transactions,
    write_clusters,
    write_concepts,
    write_csv,
    write_transactions,
)

__all__ = [
    "ClusterHierarchy",
    "Concept",
    "ConceptSet",
    "Dataset",
    "Dendrogram",
    "DpResult",
    "LatticeGraph",
    "Merge",
    "Partition",
    "TransactionDatabase",
    "build_hasse",
    "closure",
    "dendrogram_clusters",
    "dendrogram_purity",
    "derive_extent",
    "derive_intent",
    "export_dot",
    "export_json",
    "generate_synth",
    "hac_ward",
    "knn_binarize",
    "lca",
    "load_csv",
    "load_hierarchy",
    "load_lattice",
    "mine_concepts",
    "purity",
    "read_concepts",
    "read_transactions",
    "write_clusters",
    "write_concepts",
    "write_csv",
    "write_transactions",
]
