#include "fcg/hac.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace fcg {

namespace {

// Triangular index for the symmetric linkage store over node ids a < b.
inline std::size_t tri(std::size_t a, std::size_t b) {
    return b * (b - 1) / 2 + a;
}

}  // namespace

Dendrogram hac_ward(const Dataset& data) {
    const std::size_t n = data.size();
    if (n < 2) throw std::invalid_argument("hac_ward needs at least 2 points");
    const std::size_t total = 2 * n - 1;

    // dist[tri(a,b)] holds the Ward linkage between live nodes a < b.
    // Singletons start at half the squared Euclidean distance, which makes
    // every recurrence-maintained value equal the Ward objective
    // n_a*n_b/(n_a+n_b) * ||c_a - c_b||^2 exactly.
    std::vector<double> dist(tri(0, total));
    for (std::size_t b = 1; b < n; ++b) {
        auto pb = data.point(b);
        for (std::size_t a = 0; a < b; ++a) {
            auto pa = data.point(a);
            double d2 = 0.0;
            for (std::size_t f = 0; f < data.dim(); ++f) {
                const double diff = pa[f] - pb[f];
                d2 += diff * diff;
            }
            dist[tri(a, b)] = 0.5 * d2;
        }
    }

    std::vector<std::size_t> size(total, 1);
    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;

    Dendrogram out;
    out.n = n;
    out.merges.reserve(n - 1);

    for (std::size_t t = 0; t + 1 < n; ++t) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 1;
        for (std::size_t x = 0; x + 1 < active.size(); ++x) {
            for (std::size_t y = x + 1; y < active.size(); ++y) {
                const double d = dist[tri(active[x], active[y])];
                if (d < best) {
                    best = d;
                    bi = x;
                    bj = y;
                }
            }
        }
        const std::size_t a = active[bi];
        const std::size_t b = active[bj];
        const std::size_t q = n + t;
        size[q] = size[a] + size[b];
        out.merges.push_back({a, b, best, size[q]});

        // Lance-Williams update with Ward coefficients for every other
        // live node c: d(q,c) = alpha_a d(a,c) + alpha_b d(b,c) + beta d(a,b).
        for (std::size_t x = 0; x < active.size(); ++x) {
            if (x == bi || x == bj) continue;
            const std::size_t c = active[x];
            const double na = static_cast<double>(size[a]);
            const double nb = static_cast<double>(size[b]);
            const double nc = static_cast<double>(size[c]);
            const double denom = na + nb + nc;
            const double dac = dist[tri(std::min(a, c), std::max(a, c))];
            const double dbc = dist[tri(std::min(b, c), std::max(b, c))];
            dist[tri(c, q)] = ((na + nc) * dac + (nb + nc) * dbc - nc * best) / denom;
        }

        active.erase(active.begin() + static_cast<std::ptrdiff_t>(bj));
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(bi));
        active.push_back(q);
    }
    return out;
}

ClusterHierarchy dendrogram_clusters(const Dendrogram& dendrogram) {
    const std::size_t n = dendrogram.n;
    if (dendrogram.merges.size() + 1 != n)
        throw std::invalid_argument("dendrogram must contain exactly n-1 merges");

    std::vector<std::vector<std::size_t>> sets(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) sets[i] = {i};
    for (std::size_t t = 0; t < dendrogram.merges.size(); ++t) {
        const auto& m = dendrogram.merges[t];
        const std::size_t q = n + t;
        if (m.left >= q || m.right >= q)
            throw std::invalid_argument("merge references a node that does not exist yet");
        auto& out = sets[q];
        out.resize(sets[m.left].size() + sets[m.right].size());
        std::merge(sets[m.left].begin(), sets[m.left].end(), sets[m.right].begin(),
                   sets[m.right].end(), out.begin());
    }
    return ClusterHierarchy(n, std::move(sets));
}

}  // namespace fcg
