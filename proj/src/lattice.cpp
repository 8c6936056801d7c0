#include "fcg/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "fcg/bitset.hpp"

namespace fcg {

namespace {

// Extents sorted by (size, lexicographic members); returns the covering
// edges of the inclusion order. Nodes are scanned in increasing size; the
// lower covers of a node are the maximal strict subsets among the earlier
// nodes, found by a decreasing-size scan that skips anything already below
// an accepted cover.
std::vector<std::pair<std::size_t, std::size_t>> covering_edges(
    const std::vector<Bitset>& bits, const std::vector<std::size_t>& sizes) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> covers;
    for (std::size_t v = 1; v < bits.size(); ++v) {
        covers.clear();
        std::size_t u = v;
        while (u-- > 0) {
            if (sizes[u] == sizes[v]) continue;  // equal size, distinct -> incomparable
            if (!bits[u].is_subset_of(bits[v])) continue;
            bool maximal = true;
            for (std::size_t w : covers) {
                if (bits[u].is_subset_of(bits[w])) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) covers.push_back(u);
        }
        std::sort(covers.begin(), covers.end());
        for (std::size_t u2 : covers) edges.emplace_back(u2, v);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

LatticeGraph build_hasse(const std::vector<std::vector<std::size_t>>& extents, std::size_t n) {
    std::vector<std::vector<std::size_t>> nodes = extents;
    for (auto& members : nodes) {
        std::sort(members.begin(), members.end());
        if (std::adjacent_find(members.begin(), members.end()) != members.end())
            throw std::invalid_argument("duplicate member within a cluster");
        if (!members.empty() && members.back() >= n)
            throw std::invalid_argument("cluster member index out of range");
    }
    std::sort(nodes.begin(), nodes.end(),
              [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
        throw std::invalid_argument("duplicate extents");

    std::vector<Bitset> bits;
    std::vector<std::size_t> sizes;
    bits.reserve(nodes.size());
    sizes.reserve(nodes.size());
    for (const auto& members : nodes) {
        bits.push_back(Bitset::from_indices(n, members));
        sizes.push_back(members.size());
    }

    LatticeGraph g;
    g.nodes = std::move(nodes);
    g.edges = covering_edges(bits, sizes);
    return g;
}

LatticeGraph build_hasse(const ConceptSet& concepts) {
    std::vector<std::vector<std::size_t>> extents;
    extents.reserve(concepts.concepts.size());
    std::size_t n = concepts.n;
    for (const auto& c : concepts.concepts) {
        if (!c.extent.empty()) n = std::max(n, c.extent.back() + 1);
        extents.push_back(c.extent);
    }
    return build_hasse(extents, n);
}

void export_dot(const LatticeGraph& graph, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    std::string buf = "digraph lattice {\n  rankdir=LR;\n";
    for (std::size_t v = 0; v < graph.nodes.size(); ++v) {
        buf += "  \"" + std::to_string(v) + "\" [label=\"{";
        const auto& members = graph.nodes[v];
        for (std::size_t l = 0; l < members.size(); ++l) {
            if (l) buf += ',';
            buf += std::to_string(members[l]);
        }
        buf += "}\"];\n";
    }
    for (const auto& [from, to] : graph.edges)
        buf += "  \"" + std::to_string(from) + "\" -> \"" + std::to_string(to) + "\";\n";
    buf += "}\n";
    out << buf;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

void export_json(const LatticeGraph& graph, const std::filesystem::path& path) {
    nlohmann::ordered_json doc;
    auto& nodes = doc["nodes"] = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < graph.nodes.size(); ++v)
        nodes.push_back({{"id", v}, {"members", graph.nodes[v]}});
    auto& edges = doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [from, to] : graph.edges)
        edges.push_back({from, to});
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

LatticeGraph load_lattice(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("invalid lattice JSON in " + path.string() + ": " + e.what());
    }
    LatticeGraph g;
    const auto& nodes = doc.at("nodes");
    g.nodes.resize(nodes.size());
    for (const auto& node : nodes) {
        const auto id = node.at("id").get<std::size_t>();
        if (id >= g.nodes.size()) throw std::runtime_error("node id out of range in lattice JSON");
        g.nodes[id] = node.at("members").get<std::vector<std::size_t>>();
    }
    for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::runtime_error("malformed edge in lattice JSON");
        g.edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return g;
}

}  // namespace fcg
