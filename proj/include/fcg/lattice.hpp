#pragma once

#include <cstddef>
#include <filesystem>
#include <utility>
#include <vector>

#include "fcg/miner.hpp"

namespace fcg {

// Hasse diagram of the concept extents ordered by inclusion: one node per
// extent, one edge per covering pair, directed from subset to superset.
// Node ids are assigned by (ascending cluster size, lexicographic members),
// so edges always point from a lower id to a higher one.
struct LatticeGraph {
    std::vector<std::vector<std::size_t>> nodes;              // member lists, ascending
    std::vector<std::pair<std::size_t, std::size_t>> edges;   // (from, to) node ids

    bool operator==(const LatticeGraph&) const = default;
};

LatticeGraph build_hasse(const ConceptSet& concepts);
// Same construction from bare clusters (n = number of data points).
LatticeGraph build_hasse(const std::vector<std::vector<std::size_t>>& extents, std::size_t n);

// Graphviz digraph; node labels list the member indices, "{}" for the empty
// cluster.
void export_dot(const LatticeGraph& graph, const std::filesystem::path& path);

// JSON schema: { "nodes": [ { "id": int, "members": [ints] } ],
//                "edges": [ [from, to] ] }
void export_json(const LatticeGraph& graph, const std::filesystem::path& path);
LatticeGraph load_lattice(const std::filesystem::path& path);

}  // namespace fcg
