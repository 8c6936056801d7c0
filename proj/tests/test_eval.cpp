#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "fcg/eval.hpp"
#include "fcg/hac.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using fcg::ClusterHierarchy;
using fcg::Partition;
using testutil::TempDir;

namespace {

using Ids = std::vector<std::size_t>;
using Clusters = std::vector<Ids>;

// Random hierarchy: assorted subsets plus the mandatory root.
ClusterHierarchy random_hierarchy(fcg::Rng& rng, std::size_t n, std::size_t max_clusters) {
    Clusters clusters;
    Ids root(n);
    for (std::size_t p = 0; p < n; ++p) root[p] = p;
    clusters.push_back(root);
    const std::size_t extra = oracle::pick(rng, 0, max_clusters - 1);
    for (std::size_t c = 0; c < extra; ++c) {
        Ids members;
        for (std::size_t p = 0; p < n; ++p)
            if (rng.next() % 3 == 0) members.push_back(p);
        clusters.push_back(std::move(members));
    }
    return ClusterHierarchy(n, std::move(clusters));
}

// Random partition with at least one class of size >= 2.
std::vector<int> random_pair_labels(fcg::Rng& rng, std::size_t n) {
    std::vector<int> labels(n);
    for (auto& l : labels) l = static_cast<int>(rng.next() % 3);
    labels[0] = 0;
    labels[1] = 0;
    return labels;
}

}  // namespace

TEST_CASE("partition construction and from_labels") {
    const Partition p = Partition::from_labels({5, 3, 3, 5});
    CHECK(p.n() == 4);
    CHECK(p.classes() == Clusters{{1, 2}, {0, 3}});  // ascending label order

    CHECK_THROWS_AS(Partition(3, {{0, 1}}), std::invalid_argument);          // not covering
    CHECK_THROWS_AS(Partition(3, {{0, 1}, {1, 2}}), std::invalid_argument);  // overlapping
    CHECK_THROWS_AS(Partition(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(3, {{0, 1, 2, 3}}), std::invalid_argument);    // out of range
}

TEST_CASE("hierarchy requires the full set as root") {
    CHECK_NOTHROW(ClusterHierarchy(3, {{0, 1, 2}, {1}}));
    CHECK_THROWS_WITH_AS(ClusterHierarchy(3, {{0, 1}, {2}}), doctest::Contains("root"),
                         std::invalid_argument);
    CHECK_THROWS_AS(ClusterHierarchy(3, {{0, 1, 2}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(ClusterHierarchy(3, {{0, 1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("lca picks the smallest container with a lexicographic tie-break") {
    const ClusterHierarchy h1(4, {{0, 1}, {2, 3}, {0, 1, 2, 3}});
    CHECK(fcg::lca(0, 1, h1) == Ids{0, 1});
    CHECK(fcg::lca(0, 2, h1) == Ids{0, 1, 2, 3});

    const ClusterHierarchy h2(4, {{0, 1, 2}, {0, 1, 3}, {0, 1, 2, 3}});
    CHECK(fcg::lca(0, 1, h2) == Ids{0, 1, 2});  // size tie, {0,1,2} < {0,1,3}

    CHECK_THROWS_AS(fcg::lca(1, 1, h1), std::invalid_argument);
    CHECK_THROWS_AS(fcg::lca(0, 9, h1), std::invalid_argument);
}

TEST_CASE("purity formula") {
    CHECK(fcg::purity({0, 1, 2, 3}, {0, 1}) == 0.5);
    CHECK(fcg::purity({2, 5}, {2, 5}) == 1.0);
    CHECK(fcg::purity({0, 1}, {2, 3}) == 0.0);
    CHECK_THROWS_AS(fcg::purity({}, {0}), std::invalid_argument);
}

TEST_CASE("dendrogram purity on the worked examples") {
    const Partition truth(4, {{0, 1}, {2, 3}});
    CHECK(fcg::dendrogram_purity(ClusterHierarchy(4, {{0, 1}, {2, 3}, {0, 1, 2, 3}}), truth).dp ==
          1.0);
    CHECK(fcg::dendrogram_purity(ClusterHierarchy(4, {{0, 1, 2, 3}}), truth).dp == 0.5);
    const auto r = fcg::dendrogram_purity(ClusterHierarchy(4, {{0, 1, 2}, {0, 1, 2, 3}}), truth);
    CHECK(r.dp == doctest::Approx(7.0 / 12.0).epsilon(1e-15));
    CHECK(r.num_clusters == 2);
    CHECK(r.num_pairs == 2);
}

TEST_CASE("dendrogram purity input validation") {
    const ClusterHierarchy h(4, {{0, 1, 2, 3}});
    CHECK_THROWS_WITH_AS(fcg::dendrogram_purity(h, Partition(4, {{0}, {1}, {2}, {3}})),
                         doctest::Contains("singleton"), std::invalid_argument);
    CHECK_THROWS_AS(fcg::dendrogram_purity(h, Partition::from_labels({0, 0, 1})),
                    std::invalid_argument);  // n mismatch
}

TEST_CASE("dendrogram purity matches the brute-force definition") {
    fcg::Rng rng(1001);
    for (int iter = 0; iter < 40; ++iter) {
        const std::size_t n = oracle::pick(rng, 2, 25);
        const auto h = random_hierarchy(rng, n, 40);
        const auto truth = Partition::from_labels(random_pair_labels(rng, n));
        const double got = fcg::dendrogram_purity(h, truth).dp;
        const double want = oracle::dendrogram_purity(h.clusters(), truth.classes());
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
        CHECK(got >= 0.0);
        CHECK(got <= 1.0);
    }
}

TEST_CASE("dp is 1 when the hierarchy respects the classes") {
    fcg::Rng rng(808);
    for (int iter = 0; iter < 10; ++iter) {
        const std::size_t n = oracle::pick(rng, 4, 20);
        auto labels = random_pair_labels(rng, n);
        const auto truth = Partition::from_labels(labels);
        Clusters clusters(truth.classes());
        Ids root(n);
        for (std::size_t p = 0; p < n; ++p) root[p] = p;
        clusters.push_back(root);
        if (truth.classes().size() > 1) {  // a union of whole classes is also pure
            Ids merged = truth.classes()[0];
            merged.insert(merged.end(), truth.classes()[1].begin(), truth.classes()[1].end());
            std::sort(merged.begin(), merged.end());
            clusters.push_back(merged);
        }
        CHECK(fcg::dendrogram_purity(ClusterHierarchy(n, clusters), truth).dp == 1.0);
    }
}

TEST_CASE("root-only hierarchy has a closed-form dp") {
    fcg::Rng rng(99);
    for (int iter = 0; iter < 10; ++iter) {
        const std::size_t n = oracle::pick(rng, 3, 30);
        const auto truth = Partition::from_labels(random_pair_labels(rng, n));
        Ids root(n);
        for (std::size_t p = 0; p < n; ++p) root[p] = p;
        double num = 0.0, den = 0.0;
        for (const auto& cls : truth.classes()) {
            const double s = static_cast<double>(cls.size());
            const double pairs = s * (s - 1) / 2.0;
            num += (s / static_cast<double>(n)) * pairs;
            den += pairs;
        }
        const double got = fcg::dendrogram_purity(ClusterHierarchy(n, {root}), truth).dp;
        CHECK(got == doctest::Approx(num / den).epsilon(1e-12));
    }
}

TEST_CASE("dp ignores the empty cluster and is permutation equivariant") {
    fcg::Rng rng(606);
    const std::size_t n = 12;
    const auto h = random_hierarchy(rng, n, 20);
    const auto labels = random_pair_labels(rng, n);
    const auto truth = Partition::from_labels(labels);
    const double base = fcg::dendrogram_purity(h, truth).dp;

    Clusters with_empty = h.clusters();
    with_empty.push_back({});
    CHECK(fcg::dendrogram_purity(ClusterHierarchy(n, with_empty), truth).dp == base);

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.next() % i]);
    Clusters mapped;
    for (const auto& c : h.clusters()) {
        Ids members;
        for (auto p : c) members.push_back(perm[p]);
        std::sort(members.begin(), members.end());
        mapped.push_back(std::move(members));
    }
    std::vector<int> mapped_labels(n);
    for (std::size_t i = 0; i < n; ++i) mapped_labels[perm[i]] = labels[i];
    const double permuted = fcg::dendrogram_purity(ClusterHierarchy(n, mapped),
                                                   Partition::from_labels(mapped_labels))
                                .dp;
    CHECK(permuted == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("lca on a dendrogram matches a walk up the tree") {
    fcg::Rng rng(404);
    const auto data = oracle::random_dataset(rng, 20, 2, false);
    const auto dendro = fcg::hac_ward(data);
    const auto h = fcg::dendrogram_clusters(dendro);
    const std::size_t n = data.size();

    // parent[] over dendrogram node ids
    std::vector<std::size_t> parent(2 * n - 1, SIZE_MAX);
    for (std::size_t t = 0; t < dendro.merges.size(); ++t) {
        parent[dendro.merges[t].left] = n + t;
        parent[dendro.merges[t].right] = n + t;
    }
    auto tree_lca = [&](std::size_t i, std::size_t j) {
        std::vector<bool> on_path(2 * n - 1, false);
        for (std::size_t v = i; v != SIZE_MAX; v = parent[v]) on_path[v] = true;
        std::size_t v = j;
        while (!on_path[v]) v = parent[v];
        return h.clusters()[v];
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) CHECK(fcg::lca(i, j, h) == tree_lca(i, j));
}

TEST_CASE("cluster JSON round trip and lattice input") {
    TempDir dir("eval");
    const ClusterHierarchy h(3, {{0, 1, 2}, {1, 2}, {0}});
    fcg::write_clusters(h, dir / "c.json");
    const auto back = fcg::load_hierarchy(dir / "c.json");
    CHECK(back.n() == 3);
    CHECK(back.clusters() == h.clusters());

    testutil::spit(dir / "lat.json",
                   R"({"nodes":[{"id":0,"members":[1]},{"id":1,"members":[0,1,2]}],"edges":[[0,1]]})");
    const auto lat = fcg::load_hierarchy(dir / "lat.json");
    CHECK(lat.n() == 3);
    CHECK(lat.clusters() == Clusters{{1}, {0, 1, 2}});

    testutil::spit(dir / "noroot.json", R"({"n":3,"clusters":[[0,1]]})");
    CHECK_THROWS_AS(fcg::load_hierarchy(dir / "noroot.json"), std::invalid_argument);
}
