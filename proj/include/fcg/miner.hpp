#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include "fcg/binarize.hpp"

namespace fcg {

// A formal concept: extent = transaction indices, intent = item indices,
// with derive_intent(extent) == intent and derive_extent(intent) == extent.
struct Concept {
    std::vector<std::size_t> extent;  // ascending
    std::vector<std::size_t> intent;  // ascending

    std::size_t support() const { return extent.size(); }
    bool operator==(const Concept&) const = default;
};

struct ConceptSet {
    std::size_t n = 0;  // universe size (= transaction count for kNN databases)
    std::size_t min_support = 0;
    std::vector<Concept> concepts;

    bool operator==(const ConceptSet&) const = default;
};

// Derivation operators of the formal context (objects = transactions,
// attributes = items). The empty extent derives the full item universe; the
// empty intent derives all transactions.
std::vector<std::size_t> derive_intent(const std::vector<std::size_t>& extent,
                                       const TransactionDatabase& db);
std::vector<std::size_t> derive_extent(const std::vector<std::size_t>& intent,
                                       const TransactionDatabase& db);
std::vector<std::size_t> closure(const std::vector<std::size_t>& itemset,
                                 const TransactionDatabase& db);

// Enumerates every concept with support >= min_support via prefix-preserving
// closure extension (each closed itemset is generated exactly once). With
// min_support = 0 this includes the bottom concept (empty extent) when it
// exists. Concepts are ordered by descending support, ties by
// lexicographically smaller intent.
ConceptSet mine_concepts(const TransactionDatabase& db, std::size_t min_support = 0);

// JSON round-trip: { "n": int, "min_support": int, "concepts": [...] }.
void write_concepts(const ConceptSet& cs, const std::filesystem::path& path);
ConceptSet read_concepts(const std::filesystem::path& path);

}  // namespace fcg
