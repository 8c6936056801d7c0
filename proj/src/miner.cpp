#include "fcg/miner.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "fcg/bitset.hpp"

namespace fcg {

namespace {

void check_extent(const std::vector<std::size_t>& extent, const TransactionDatabase& db) {
    for (auto i : extent)
        if (i >= db.size()) throw std::out_of_range("transaction index out of range");
}

void check_intent(const std::vector<std::size_t>& intent, const TransactionDatabase& db) {
    for (auto j : intent)
        if (j >= db.universe()) throw std::out_of_range("item index out of range");
}

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Depth-first prefix-preserving closure extension over the column bitsets.
struct LcmState {
    const std::vector<Bitset>& col;
    std::size_t min_support;
    Bitset intent;  // current closed itemset
    std::vector<Concept>& out;

    void expand(const Bitset& extent, std::size_t core) {
        out.push_back({extent.to_indices(), intent.to_indices()});
        const std::size_t m = col.size();
        Bitset child(extent.size());
        std::vector<std::size_t> added;
        for (std::size_t e = core; e < m; ++e) {
            if (intent.test(e)) continue;
            child.assign_and(extent, col[e]);
            if (child.count() < min_support) continue;
            // Canonical iff the closure adds nothing below e.
            bool canonical = true;
            for (std::size_t j = 0; j < e; ++j) {
                if (!intent.test(j) && child.is_subset_of(col[j])) {
                    canonical = false;
                    break;
                }
            }
            if (!canonical) continue;
            added.clear();
            added.push_back(e);
            intent.set(e);
            for (std::size_t j = e + 1; j < m; ++j) {
                if (!intent.test(j) && child.is_subset_of(col[j])) {
                    added.push_back(j);
                    intent.set(j);
                }
            }
            expand(child, e + 1);
            for (std::size_t j : added) intent.reset(j);
        }
    }
};

}  // namespace

std::vector<std::size_t> derive_intent(const std::vector<std::size_t>& extent,
                                       const TransactionDatabase& db) {
    check_extent(extent, db);
    auto ids = sorted_unique(extent);
    if (ids.empty()) {
        std::vector<std::size_t> all(db.universe());
        for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
        return all;
    }
    std::vector<std::size_t> common = db.transaction(ids[0]);
    std::vector<std::size_t> tmp;
    for (std::size_t r = 1; r < ids.size() && !common.empty(); ++r) {
        const auto& row = db.transaction(ids[r]);
        tmp.clear();
        std::set_intersection(common.begin(), common.end(), row.begin(), row.end(),
                              std::back_inserter(tmp));
        common.swap(tmp);
    }
    return common;
}

std::vector<std::size_t> derive_extent(const std::vector<std::size_t>& intent,
                                       const TransactionDatabase& db) {
    check_intent(intent, db);
    auto items = sorted_unique(intent);
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < db.size(); ++i) {
        const auto& row = db.transaction(i);
        if (std::includes(row.begin(), row.end(), items.begin(), items.end()))
            result.push_back(i);
    }
    return result;
}

std::vector<std::size_t> closure(const std::vector<std::size_t>& itemset,
                                 const TransactionDatabase& db) {
    return derive_intent(derive_extent(itemset, db), db);
}

ConceptSet mine_concepts(const TransactionDatabase& db, std::size_t min_support) {
    const std::size_t n = db.size();
    const std::size_t m = db.universe();
    if (min_support > n) {
        std::ostringstream msg;
        msg << "min_support " << min_support << " exceeds transaction count " << n;
        throw std::invalid_argument(msg.str());
    }

    std::vector<Bitset> col(m, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
        for (auto j : db.transaction(i)) col[j].set(i);

    ConceptSet cs;
    cs.n = m;
    cs.min_support = min_support;

    LcmState state{col, min_support, Bitset(m), cs.concepts};
    Bitset root = Bitset::all_set(n);
    for (std::size_t j = 0; j < m; ++j)
        if (root.is_subset_of(col[j])) state.intent.set(j);
    state.expand(root, 0);

    std::sort(cs.concepts.begin(), cs.concepts.end(), [](const Concept& a, const Concept& b) {
        if (a.extent.size() != b.extent.size()) return a.extent.size() > b.extent.size();
        return a.intent < b.intent;
    });
    return cs;
}

void write_concepts(const ConceptSet& cs, const std::filesystem::path& path) {
    nlohmann::ordered_json doc;
    doc["n"] = cs.n;
    doc["min_support"] = cs.min_support;
    auto& arr = doc["concepts"] = nlohmann::ordered_json::array();
    for (const auto& c : cs.concepts)
        arr.push_back({{"extent", c.extent}, {"intent", c.intent}});
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

ConceptSet read_concepts(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("invalid concepts JSON in " + path.string() + ": " + e.what());
    }
    ConceptSet cs;
    cs.n = doc.at("n").get<std::size_t>();
    cs.min_support = doc.at("min_support").get<std::size_t>();
    for (const auto& c : doc.at("concepts")) {
        Concept cc;
        cc.extent = c.at("extent").get<std::vector<std::size_t>>();
        cc.intent = c.at("intent").get<std::vector<std::size_t>>();
        cs.concepts.push_back(std::move(cc));
    }
    return cs;
}

}  // namespace fcg
