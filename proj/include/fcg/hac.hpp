#pragma once

#include <cstddef>
#include <vector>

#include "fcg/dataset.hpp"
#include "fcg/eval.hpp"

namespace fcg {

// One agglomeration step. Node ids: leaves are 0..n-1, the merge recorded at
// step t creates node n+t. height is the Ward linkage at which the pair was
// merged: (n_a * n_b / (n_a + n_b)) * ||centroid_a - centroid_b||^2.
struct Merge {
    std::size_t left = 0;
    std::size_t right = 0;
    double height = 0.0;
    std::size_t size = 0;

    bool operator==(const Merge&) const = default;
};

struct Dendrogram {
    std::size_t n = 0;
    std::vector<Merge> merges;  // n-1 entries, chronological
};

// Ward's-method agglomerative clustering via the Lance-Williams recurrence.
// Ties on the minimum linkage are broken by the smallest (left, right) id
// pair. Deterministic for a given dataset.
Dendrogram hac_ward(const Dataset& data);

// The 2n-1 dendrogram node sets (n singletons + n-1 merged clusters),
// ordered: leaves first, then merges chronologically.
ClusterHierarchy dendrogram_clusters(const Dendrogram& dendrogram);

}  // namespace fcg
