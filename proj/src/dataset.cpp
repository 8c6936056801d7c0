#include "fcg/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "fcg/rng.hpp"

namespace fcg {

namespace {

bool parse_double(std::string_view cell, double& out) {
    const char* first = cell.data();
    const char* last = first + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

bool parse_int(std::string_view cell, long& out) {
    const char* first = cell.data();
    const char* last = first + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string::size_type start = 0;
    while (true) {
        auto pos = line.find(',', start);
        if (pos == std::string::npos) {
            cells.emplace_back(trim(std::string_view(line).substr(start)));
            break;
        }
        cells.emplace_back(trim(std::string_view(line).substr(start, pos - start)));
        start = pos + 1;
    }
    return cells;
}

void format_double(std::string& out, double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, ptr);
}

}  // namespace

Dataset::Dataset(std::vector<double> values, std::size_t dim,
                 std::optional<std::vector<int>> labels)
    : values_(std::move(values)), dim_(dim), labels_(std::move(labels)) {
    if (dim_ < 1) throw std::invalid_argument("dataset dimension must be >= 1");
    if (values_.size() % dim_ != 0)
        throw std::invalid_argument("dataset values not divisible by dimension");
    const std::size_t n = values_.size() / dim_;
    if (n < 2) throw std::invalid_argument("dataset must contain at least 2 points");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("dataset contains non-finite value");
    if (labels_ && labels_->size() != n)
        throw std::invalid_argument("label count does not match point count");
}

SynthKind parse_synth_kind(const std::string& name) {
    if (name == "synth1") return SynthKind::synth1;
    if (name == "synth2") return SynthKind::synth2;
    if (name == "synth3") return SynthKind::synth3;
    throw std::invalid_argument("unknown synthetic dataset kind: " + name);
}

std::string to_string(SynthKind kind) {
    switch (kind) {
        case SynthKind::synth1: return "synth1";
        case SynthKind::synth2: return "synth2";
        case SynthKind::synth3: return "synth3";
    }
    return "?";
}

void SynthSpec::validate() const {
    if (n < 2) throw std::invalid_argument("synthetic dataset needs n >= 2");
    if (m < 1) throw std::invalid_argument("synthetic dataset needs m >= 1");
    if (kind == SynthKind::synth3 && m != 2)
        throw std::invalid_argument("synth3 is defined for m = 2 only");
}

Dataset generate_synth(const SynthSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    std::vector<double> values;
    values.reserve(spec.n * spec.m);
    std::vector<int> labels;
    labels.reserve(spec.n);

    auto emit_cluster = [&](int label, std::size_t count, const std::vector<double>& means,
                            double stddev) {
        for (std::size_t p = 0; p < count; ++p) {
            for (std::size_t f = 0; f < spec.m; ++f)
                values.push_back(rng.gaussian(means[f], stddev));
            labels.push_back(label);
        }
    };

    switch (spec.kind) {
        case SynthKind::synth1:
        case SynthKind::synth2: {
            const std::size_t n1 = spec.n / 2;          // cluster 1
            const std::size_t n0 = spec.n - n1;         // cluster 0 gets the odd point
            const double sigma1 = spec.kind == SynthKind::synth1 ? 1.0 : 2.0;
            emit_cluster(0, n0, std::vector<double>(spec.m, 0.0), 1.0);
            emit_cluster(1, n1, std::vector<double>(spec.m, 2.0), sigma1);
            break;
        }
        case SynthKind::synth3: {
            const std::size_t s0 = spec.n / 2;
            const std::size_t s1 = (spec.n + 3) / 4;
            const std::size_t s2 = spec.n - s0 - s1;
            const std::size_t sizes[3] = {s0, s1, s2};
            std::vector<std::vector<double>> means(3, std::vector<double>(spec.m));
            for (auto& mu : means)
                for (auto& v : mu) v = rng.uniform(-25.0, 25.0);
            for (int c = 0; c < 3; ++c) emit_cluster(c, sizes[c], means[c], 1.0);
            break;
        }
    }
    return Dataset(std::move(values), spec.m, std::move(labels));
}

namespace {

struct RawCsv {
    std::vector<std::string> header;  // empty when the file has no header
    std::vector<std::vector<std::string>> rows;
    std::size_t columns = 0;
};

RawCsv read_raw_csv(const std::filesystem::path& path, const std::vector<std::size_t>& non_feature,
                    bool expect_header) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());

    std::vector<std::vector<std::string>> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && lines.empty()) continue;  // tolerate leading blank lines
        if (line.empty()) break;                      // trailing blank line ends the data
        lines.push_back(split_csv_line(line));
    }
    if (lines.empty()) throw std::runtime_error("empty CSV file: " + path.string());

    RawCsv raw;
    raw.columns = lines[0].size();
    for (std::size_t r = 1; r < lines.size(); ++r)
        if (lines[r].size() != raw.columns) {
            std::ostringstream msg;
            msg << "ragged CSV row: line " << r + 1 << " has " << lines[r].size()
                << " cells, expected " << raw.columns;
            throw std::runtime_error(msg.str());
        }

    // Header rule: the first row is a header iff some feature cell in it is
    // not numeric (or a header was demanded by a named label column).
    bool header = expect_header;
    if (!header) {
        for (std::size_t c = 0; c < raw.columns && !header; ++c) {
            if (std::find(non_feature.begin(), non_feature.end(), c) != non_feature.end())
                continue;
            double v;
            if (!parse_double(lines[0][c], v)) header = true;
        }
    }
    if (header) {
        raw.header = std::move(lines[0]);
        lines.erase(lines.begin());
    }
    raw.rows = std::move(lines);
    return raw;
}

}  // namespace

Dataset load_csv(const std::filesystem::path& path,
                 const std::optional<std::string>& label_column, bool ignore_labels) {
    std::optional<std::size_t> label_index;
    std::optional<std::string> label_name;
    if (label_column && !ignore_labels) {
        long idx;
        if (parse_int(*label_column, idx) && idx >= 0)
            label_index = static_cast<std::size_t>(idx);
        else
            label_name = *label_column;
    }

    std::vector<std::size_t> non_feature;
    if (label_index) non_feature.push_back(*label_index);
    RawCsv raw = read_raw_csv(path, non_feature, label_name.has_value());

    if (label_name) {
        auto it = std::find(raw.header.begin(), raw.header.end(), *label_name);
        if (it == raw.header.end())
            throw std::runtime_error("label column '" + *label_name + "' not found in header");
        label_index = static_cast<std::size_t>(it - raw.header.begin());
    } else if (!label_index && !ignore_labels && !raw.header.empty()) {
        // A column literally named "label" is picked up automatically so that
        // files produced by write_csv round-trip without extra flags.
        auto it = std::find(raw.header.begin(), raw.header.end(), "label");
        if (it != raw.header.end()) label_index = static_cast<std::size_t>(it - raw.header.begin());
    }

    if (label_index && *label_index >= raw.columns)
        throw std::runtime_error("label column index out of range");
    if (raw.rows.size() < 2) throw std::runtime_error("CSV needs at least 2 data rows");

    const std::size_t m = raw.columns - (label_index ? 1 : 0);
    if (m < 1) throw std::runtime_error("CSV has no feature columns");

    std::vector<double> values;
    values.reserve(raw.rows.size() * m);
    std::vector<std::string> label_cells;

    for (std::size_t r = 0; r < raw.rows.size(); ++r) {
        for (std::size_t c = 0; c < raw.columns; ++c) {
            if (label_index && c == *label_index) {
                label_cells.push_back(raw.rows[r][c]);
                continue;
            }
            double v;
            if (!parse_double(raw.rows[r][c], v)) {
                std::ostringstream msg;
                msg << "non-numeric cell at row " << r << ", column " << c;
                throw std::runtime_error(msg.str());
            }
            if (!std::isfinite(v)) {
                std::ostringstream msg;
                msg << "non-finite value at row " << r << ", column " << c;
                throw std::runtime_error(msg.str());
            }
            values.push_back(v);
        }
    }

    std::optional<std::vector<int>> labels;
    if (label_index) {
        std::vector<int> out;
        out.reserve(label_cells.size());
        bool all_int = true;
        for (const auto& cell : label_cells) {
            long v;
            if (!parse_int(cell, v) || v < INT32_MIN || v > INT32_MAX) {
                all_int = false;
                break;
            }
        }
        if (all_int) {
            for (const auto& cell : label_cells) {
                long v;
                parse_int(cell, v);
                out.push_back(static_cast<int>(v));
            }
        } else {
            std::unordered_map<std::string, int> ids;  // first appearance order
            for (const auto& cell : label_cells) {
                auto [it, inserted] = ids.emplace(cell, static_cast<int>(ids.size()));
                out.push_back(it->second);
            }
        }
        labels = std::move(out);
    }

    return Dataset(std::move(values), m, std::move(labels));
}

void write_csv(const Dataset& data, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());

    std::string buf;
    for (std::size_t f = 0; f < data.dim(); ++f) {
        if (f) buf += ',';
        buf += 'f';
        buf += std::to_string(f);
    }
    if (data.has_labels()) buf += ",label";
    buf += '\n';

    for (std::size_t i = 0; i < data.size(); ++i) {
        auto p = data.point(i);
        for (std::size_t f = 0; f < data.dim(); ++f) {
            if (f) buf += ',';
            format_double(buf, p[f]);
        }
        if (data.has_labels()) {
            buf += ',';
            buf += std::to_string(data.labels()[i]);
        }
        buf += '\n';
    }
    out << buf;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace fcg
