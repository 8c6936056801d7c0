#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fcg/dataset.hpp"

namespace fcg {

enum class Metric { euclidean };

Metric parse_metric(const std::string& name);
std::string to_string(Metric metric);

// A transaction database over the item universe {0, ..., universe-1}.
// Transactions are kept sorted ascending; duplicates within one transaction
// are rejected.
class TransactionDatabase {
public:
    TransactionDatabase(std::size_t universe, std::vector<std::vector<std::size_t>> rows);

    std::size_t universe() const { return universe_; }
    std::size_t size() const { return rows_.size(); }
    const std::vector<std::size_t>& transaction(std::size_t i) const { return rows_.at(i); }
    const std::vector<std::vector<std::size_t>>& transactions() const { return rows_; }

    // Set when every transaction has the same length (as produced by
    // knn_binarize), empty otherwise.
    std::optional<std::size_t> uniform_size() const;

    bool operator==(const TransactionDatabase& other) const = default;

private:
    std::size_t universe_;
    std::vector<std::vector<std::size_t>> rows_;
};

// Binarizes a numerical dataset: transaction i holds the indices of the k
// points nearest to point i (ties broken towards the lower index). The point
// itself is excluded unless include_self is set.
TransactionDatabase knn_binarize(const Dataset& data, std::size_t k, bool include_self = false,
                                 Metric metric = Metric::euclidean);

// Plain text transaction format: one transaction per line, items as
// space-separated ascending integers, empty line for an empty transaction.
// When no explicit universe is given it is inferred as
// max(line count, largest item + 1).
TransactionDatabase read_transactions(const std::filesystem::path& path,
                                      std::optional<std::size_t> universe = std::nullopt);
void write_transactions(const TransactionDatabase& db, const std::filesystem::path& path);

}  // namespace fcg
