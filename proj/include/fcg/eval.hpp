#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace fcg {

// Ground-truth partition of {0..n-1} into disjoint covering classes.
class Partition {
public:
    Partition(std::size_t n, std::vector<std::vector<std::size_t>> classes);

    // Classes ordered by ascending label value.
    static Partition from_labels(const std::vector<int>& labels);

    std::size_t n() const { return n_; }
    const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }

private:
    std::size_t n_;
    std::vector<std::vector<std::size_t>> classes_;  // each sorted ascending
};

// A set of clusters over {0..n-1} that contains the full set, so the least
// common ancestor of any pair exists. Cluster extents from the lattice and
// the 2n-1 dendrogram nodes both fit this shape.
class ClusterHierarchy {
public:
    ClusterHierarchy(std::size_t n, std::vector<std::vector<std::size_t>> clusters);

    std::size_t n() const { return n_; }
    const std::vector<std::vector<std::size_t>>& clusters() const { return clusters_; }

private:
    std::size_t n_;
    std::vector<std::vector<std::size_t>> clusters_;  // each sorted ascending
};

// Smallest cluster containing both i and j; ties broken by lexicographically
// smallest member list. Requires i != j.
std::vector<std::size_t> lca(std::size_t i, std::size_t j, const ClusterHierarchy& hierarchy);

// pur(F, G) = |F ∩ G| / |F| for sorted index sets; F must be non-empty.
double purity(const std::vector<std::size_t>& f, const std::vector<std::size_t>& g);

struct DpResult {
    double dp = 0.0;
    std::size_t num_clusters = 0;
    std::uint64_t num_pairs = 0;
};

// DP = (1/|Q|) Σ_l Σ_{i<j in C_l} pur(lca(i,j), C_l) over the unordered
// same-class pairs Q. Throws when every class is a singleton.
DpResult dendrogram_purity(const ClusterHierarchy& hierarchy, const Partition& truth);

// Cluster-list JSON: { "n": int, "clusters": [[ints]] }. load_hierarchy also
// accepts the lattice JSON schema (nodes/members).
void write_clusters(const ClusterHierarchy& hierarchy, const std::filesystem::path& path);
ClusterHierarchy load_hierarchy(const std::filesystem::path& path);

}  // namespace fcg
