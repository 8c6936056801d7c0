#include "fcg/binarize.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fcg {

Metric parse_metric(const std::string& name) {
    if (name == "euclidean") return Metric::euclidean;
    throw std::invalid_argument("unknown metric: " + name);
}

std::string to_string(Metric metric) {
    switch (metric) {
        case Metric::euclidean: return "euclidean";
    }
    return "?";
}

TransactionDatabase::TransactionDatabase(std::size_t universe,
                                         std::vector<std::vector<std::size_t>> rows)
    : universe_(universe), rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        auto& row = rows_[i];
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
            std::ostringstream msg;
            msg << "duplicate item in transaction " << i;
            throw std::invalid_argument(msg.str());
        }
        if (!row.empty() && row.back() >= universe_) {
            std::ostringstream msg;
            msg << "item " << row.back() << " in transaction " << i << " exceeds universe "
                << universe_;
            throw std::invalid_argument(msg.str());
        }
    }
}

std::optional<std::size_t> TransactionDatabase::uniform_size() const {
    if (rows_.empty()) return std::nullopt;
    const std::size_t k = rows_[0].size();
    for (const auto& row : rows_)
        if (row.size() != k) return std::nullopt;
    return k;
}

TransactionDatabase knn_binarize(const Dataset& data, std::size_t k, bool include_self,
                                 Metric metric) {
    (void)metric;  // only euclidean for now, validated at parse time
    const std::size_t n = data.size();
    const std::size_t max_k = include_self ? n : n - 1;
    if (k < 1 || k > max_k) {
        std::ostringstream msg;
        msg << "k must be in [1, " << max_k << "], got " << k;
        throw std::invalid_argument(msg.str());
    }

    std::vector<std::vector<std::size_t>> rows(n);
    std::vector<std::pair<double, std::size_t>> cand;
    cand.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        cand.clear();
        auto pi = data.point(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i && !include_self) continue;
            auto pj = data.point(j);
            double d2 = 0.0;
            for (std::size_t f = 0; f < data.dim(); ++f) {
                const double diff = pi[f] - pj[f];
                d2 += diff * diff;
            }
            if (!std::isfinite(d2)) {
                std::ostringstream msg;
                msg << "non-finite distance between points " << i << " and " << j;
                throw std::runtime_error(msg.str());
            }
            cand.emplace_back(d2, j);
        }
        std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(k),
                          cand.end());
        auto& row = rows[i];
        row.reserve(k);
        for (std::size_t l = 0; l < k; ++l) row.push_back(cand[l].second);
        std::sort(row.begin(), row.end());
    }
    return TransactionDatabase(n, std::move(rows));
}

TransactionDatabase read_transactions(const std::filesystem::path& path,
                                      std::optional<std::size_t> universe) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());

    std::vector<std::vector<std::size_t>> rows;
    std::size_t max_item = 0;
    bool any_item = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::size_t> row;
        const char* p = line.data();
        const char* end = p + line.size();
        while (p < end) {
            while (p < end && *p == ' ') ++p;
            if (p == end) break;
            std::size_t item;
            auto [ptr, ec] = std::from_chars(p, end, item);
            if (ec != std::errc{} || (ptr < end && *ptr != ' ')) {
                std::ostringstream msg;
                msg << "invalid transaction item on line " << lineno << " of " << path.string();
                throw std::runtime_error(msg.str());
            }
            row.push_back(item);
            max_item = std::max(max_item, item);
            any_item = true;
            p = ptr;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("empty transaction file: " + path.string());

    const std::size_t inferred = std::max(rows.size(), any_item ? max_item + 1 : std::size_t{0});
    const std::size_t u = universe.value_or(inferred);
    if (any_item && u < max_item + 1)
        throw std::runtime_error("universe smaller than largest item in " + path.string());
    return TransactionDatabase(u, std::move(rows));
}

void write_transactions(const TransactionDatabase& db, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    std::string buf;
    for (std::size_t i = 0; i < db.size(); ++i) {
        const auto& row = db.transaction(i);
        for (std::size_t l = 0; l < row.size(); ++l) {
            if (l) buf += ' ';
            buf += std::to_string(row[l]);
        }
        buf += '\n';
    }
    out << buf;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace fcg
