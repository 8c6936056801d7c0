#include "fcg/eval.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

#include "json.hpp"

#include "fcg/bitset.hpp"

namespace fcg {

namespace {

void sort_and_check(std::vector<std::size_t>& ids, std::size_t n, const char* what) {
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw std::invalid_argument(std::string("duplicate point index within a ") + what);
    if (!ids.empty() && ids.back() >= n)
        throw std::invalid_argument(std::string(what) + " index out of range");
}

bool lex_members_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

Partition::Partition(std::size_t n, std::vector<std::vector<std::size_t>> classes)
    : n_(n), classes_(std::move(classes)) {
    if (classes_.empty()) throw std::invalid_argument("partition needs at least one class");
    std::vector<bool> seen(n_, false);
    std::size_t covered = 0;
    for (auto& cls : classes_) {
        sort_and_check(cls, n_, "class");
        for (auto i : cls) {
            if (seen[i]) throw std::invalid_argument("partition classes are not disjoint");
            seen[i] = true;
            ++covered;
        }
    }
    if (covered != n_) throw std::invalid_argument("partition does not cover all points");
}

Partition Partition::from_labels(const std::vector<int>& labels) {
    if (labels.empty()) throw std::invalid_argument("empty label vector");
    std::map<int, std::vector<std::size_t>> by_label;
    for (std::size_t i = 0; i < labels.size(); ++i) by_label[labels[i]].push_back(i);
    std::vector<std::vector<std::size_t>> classes;
    classes.reserve(by_label.size());
    for (auto& [label, members] : by_label) classes.push_back(std::move(members));
    return Partition(labels.size(), std::move(classes));
}

ClusterHierarchy::ClusterHierarchy(std::size_t n, std::vector<std::vector<std::size_t>> clusters)
    : n_(n), clusters_(std::move(clusters)) {
    if (n_ < 1) throw std::invalid_argument("hierarchy needs at least one point");
    bool has_root = false;
    for (auto& cluster : clusters_) {
        sort_and_check(cluster, n_, "cluster");
        if (cluster.size() == n_) has_root = true;
    }
    if (!has_root)
        throw std::invalid_argument("hierarchy must contain the full point set as root");
}

std::vector<std::size_t> lca(std::size_t i, std::size_t j, const ClusterHierarchy& hierarchy) {
    if (i == j) throw std::invalid_argument("lca requires two distinct points");
    if (i >= hierarchy.n() || j >= hierarchy.n())
        throw std::invalid_argument("point index out of range");
    const std::vector<std::size_t>* best = nullptr;
    for (const auto& cluster : hierarchy.clusters()) {
        if (!std::binary_search(cluster.begin(), cluster.end(), i)) continue;
        if (!std::binary_search(cluster.begin(), cluster.end(), j)) continue;
        if (!best || lex_members_less(cluster, *best)) best = &cluster;
    }
    return *best;  // the root contains every pair
}

double purity(const std::vector<std::size_t>& f, const std::vector<std::size_t>& g) {
    if (f.empty()) throw std::invalid_argument("purity of an empty cluster is undefined");
    std::size_t common = 0;
    auto it_f = f.begin();
    auto it_g = g.begin();
    while (it_f != f.end() && it_g != g.end()) {
        if (*it_f < *it_g)
            ++it_f;
        else if (*it_g < *it_f)
            ++it_g;
        else {
            ++common;
            ++it_f;
            ++it_g;
        }
    }
    return static_cast<double>(common) / static_cast<double>(f.size());
}

DpResult dendrogram_purity(const ClusterHierarchy& hierarchy, const Partition& truth) {
    if (hierarchy.n() != truth.n())
        throw std::invalid_argument("hierarchy and partition cover different point counts");
    const std::size_t n = hierarchy.n();

    std::uint64_t pairs = 0;
    for (const auto& cls : truth.classes()) {
        const std::uint64_t s = cls.size();
        pairs += s * (s - 1) / 2;
    }
    if (pairs == 0)
        throw std::invalid_argument("dendrogram purity undefined: all classes are singletons");

    // Clusters in (size, lexicographic) order so that the first hit of a
    // containment walk is the minimum-cardinality, tie-broken LCA.
    const auto& clusters = hierarchy.clusters();
    std::vector<std::size_t> order(clusters.size());
    for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lex_members_less(clusters[a], clusters[b]);
    });

    std::vector<Bitset> bits;
    bits.reserve(order.size());
    std::vector<std::vector<std::uint32_t>> containing(n);  // point -> ordered cluster positions
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const auto& members = clusters[order[pos]];
        bits.push_back(Bitset::from_indices(n, members));
        for (auto p : members) containing[p].push_back(static_cast<std::uint32_t>(pos));
    }

    double sum = 0.0;
    for (const auto& cls : truth.classes()) {
        if (cls.size() < 2) continue;
        const Bitset cls_bits = Bitset::from_indices(n, cls);
        for (std::size_t a = 0; a < cls.size(); ++a) {
            for (std::size_t b = a + 1; b < cls.size(); ++b) {
                const std::size_t i = cls[a];
                const std::size_t j = cls[b];
                for (auto pos : containing[i]) {
                    if (!bits[pos].test(j)) continue;
                    sum += static_cast<double>(Bitset::and_count(bits[pos], cls_bits)) /
                           static_cast<double>(clusters[order[pos]].size());
                    break;
                }
            }
        }
    }

    DpResult r;
    r.dp = sum / static_cast<double>(pairs);
    r.num_clusters = clusters.size();
    r.num_pairs = pairs;
    return r;
}

void write_clusters(const ClusterHierarchy& hierarchy, const std::filesystem::path& path) {
    nlohmann::ordered_json doc;
    doc["n"] = hierarchy.n();
    doc["clusters"] = hierarchy.clusters();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

ClusterHierarchy load_hierarchy(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("invalid cluster JSON in " + path.string() + ": " + e.what());
    }
    std::vector<std::vector<std::size_t>> clusters;
    std::size_t n = 0;
    if (doc.contains("nodes")) {  // lattice schema
        for (const auto& node : doc.at("nodes")) {
            clusters.push_back(node.at("members").get<std::vector<std::size_t>>());
            for (auto p : clusters.back()) n = std::max(n, p + 1);
        }
    } else {
        n = doc.at("n").get<std::size_t>();
        clusters = doc.at("clusters").get<std::vector<std::vector<std::size_t>>>();
    }
    return ClusterHierarchy(n, std::move(clusters));
}

}  // namespace fcg
