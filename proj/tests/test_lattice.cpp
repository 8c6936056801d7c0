#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "fcg/lattice.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using fcg::LatticeGraph;
using testutil::TempDir;

namespace {

using Ids = std::vector<std::size_t>;
using Clusters = std::vector<Ids>;
using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

// reachable[v] = set of nodes w with a directed path v -> w (v included)
std::vector<std::set<std::size_t>> reachability(const LatticeGraph& g) {
    std::vector<std::vector<std::size_t>> adj(g.nodes.size());
    for (const auto& [from, to] : g.edges) adj[from].push_back(to);
    std::vector<std::set<std::size_t>> reach(g.nodes.size());
    // edges point from smaller to larger id, so a reverse sweep suffices
    for (std::size_t v = g.nodes.size(); v-- > 0;) {
        reach[v].insert(v);
        for (auto w : adj[v]) reach[v].insert(reach[w].begin(), reach[w].end());
    }
    return reach;
}

}  // namespace

TEST_CASE("build_hasse on the worked example") {
    const Clusters extents{{}, {2}, {0, 2}, {1, 2}, {0, 1, 2}};
    const LatticeGraph g = fcg::build_hasse(extents, 3);
    CHECK(g.nodes == Clusters{{}, {2}, {0, 2}, {1, 2}, {0, 1, 2}});
    CHECK(g.edges == Edges{{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
}

TEST_CASE("build_hasse trivial shapes") {
    CHECK(fcg::build_hasse(Clusters{{0, 1}}, 2).edges.empty());
    const LatticeGraph chain = fcg::build_hasse(Clusters{{1}, {1, 2}, {1, 2, 3}}, 4);
    CHECK(chain.edges == Edges{{0, 1}, {1, 2}});  // no shortcut 0 -> 2
}

TEST_CASE("build_hasse validates input") {
    CHECK_THROWS_WITH_AS(fcg::build_hasse(Clusters{{0}, {0}}, 2),
                         doctest::Contains("duplicate extents"), std::invalid_argument);
    CHECK_THROWS_AS(fcg::build_hasse(Clusters{{5}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(fcg::build_hasse(Clusters{{0, 0}}, 2), std::invalid_argument);
}

TEST_CASE("build_hasse equals the transitive-reduction oracle") {
    fcg::Rng rng(777);
    for (int iter = 0; iter < 30; ++iter) {
        Clusters clusters;
        if (iter % 2 == 0) {
            // real concept extents
            const auto db = oracle::random_knn_db(rng, 10);
            for (const auto& c : fcg::mine_concepts(db, 0).concepts)
                clusters.push_back(c.extent);
        } else {
            // arbitrary distinct cluster families
            const std::size_t n = oracle::pick(rng, 2, 10);
            std::set<Ids> family;
            const std::size_t count = oracle::pick(rng, 1, 20);
            for (std::size_t c = 0; c < count; ++c) {
                Ids members;
                for (std::size_t p = 0; p < n; ++p)
                    if (rng.next() & 1) members.push_back(p);
                family.insert(members);
            }
            clusters.assign(family.begin(), family.end());
        }
        const LatticeGraph g = fcg::build_hasse(clusters, 12);
        CHECK(g.edges == oracle::hasse_edges(clusters));
    }
}

TEST_CASE("reachability equals inclusion") {
    fcg::Rng rng(31415);
    for (int iter = 0; iter < 10; ++iter) {
        const auto db = oracle::random_knn_db(rng, 8);
        const auto cs = fcg::mine_concepts(db, 0);
        if (cs.concepts.size() > 64) continue;
        Clusters extents;
        for (const auto& c : cs.concepts) extents.push_back(c.extent);
        const LatticeGraph g = fcg::build_hasse(extents, db.size());
        const auto reach = reachability(g);
        for (std::size_t v = 0; v < g.nodes.size(); ++v)
            for (std::size_t w = 0; w < g.nodes.size(); ++w) {
                const bool subset =
                    std::includes(g.nodes[w].begin(), g.nodes[w].end(), g.nodes[v].begin(),
                                  g.nodes[v].end());
                CHECK(subset == (reach[v].count(w) == 1));
            }
    }
}

TEST_CASE("lattice of a full mining run has one source and one sink") {
    fcg::Rng rng(12);
    const auto db = oracle::random_knn_db(rng, 12);
    const auto g = fcg::build_hasse(fcg::mine_concepts(db, 0));
    CHECK(g.nodes.back().size() == db.size());  // top holds every point
    std::vector<std::size_t> indegree(g.nodes.size(), 0);
    for (const auto& e : g.edges) ++indegree[e.second];
    CHECK(std::count(indegree.begin(), indegree.end(), 0) == 1);
    CHECK(indegree[0] == 0);  // the unique source is the smallest extent
}

TEST_CASE("dot export") {
    TempDir dir("dot");
    const LatticeGraph g = fcg::build_hasse(Clusters{{}, {0, 1}}, 2);
    fcg::export_dot(g, dir / "g.dot");
    const std::string dot = testutil::slurp(dir / "g.dot");
    CHECK(dot.find("\"0\" -> \"1\"") != std::string::npos);
    CHECK(dot.find("label=\"{}\"") != std::string::npos);
    CHECK(dot.find("label=\"{0,1}\"") != std::string::npos);
    CHECK(dot.rfind("digraph", 0) == 0);
}

TEST_CASE("lattice JSON round trip") {
    TempDir dir("lat");
    fcg::Rng rng(3);
    const auto db = oracle::random_knn_db(rng, 10);
    const auto g = fcg::build_hasse(fcg::mine_concepts(db, 0));
    fcg::export_json(g, dir / "g.json");
    CHECK(fcg::load_lattice(dir / "g.json") == g);

    testutil::spit(dir / "bad.json", "[");
    CHECK_THROWS_AS(fcg::load_lattice(dir / "bad.json"), std::runtime_error);
}

TEST_CASE("build_hasse from a ConceptSet matches the extent overload") {
    fcg::Rng rng(21);
    const auto db = oracle::random_knn_db(rng, 10);
    const auto cs = fcg::mine_concepts(db, 1);
    Clusters extents;
    for (const auto& c : cs.concepts) extents.push_back(c.extent);
    CHECK(fcg::build_hasse(cs) == fcg::build_hasse(extents, db.size()));
}
