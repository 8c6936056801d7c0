#include "fcg/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

#include "fcg/hac.hpp"
#include "fcg/lattice.hpp"
#include "fcg/miner.hpp"

namespace fcg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void append_double(std::string& out, double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, ptr);
}

}  // namespace

std::vector<int> load_labels_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open labels file: " + path.string());
    std::vector<std::string> cells;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        cells.push_back(line);
    }
    if (cells.empty()) throw std::runtime_error("empty labels file: " + path.string());

    std::vector<int> labels;
    labels.reserve(cells.size());
    bool all_int = true;
    for (const auto& cell : cells) {
        long v;
        const char* first = cell.data();
        const char* last = first + cell.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last) {
            all_int = false;
            break;
        }
    }
    if (all_int) {
        for (const auto& cell : cells) {
            long v = 0;
            std::from_chars(cell.data(), cell.data() + cell.size(), v);
            labels.push_back(static_cast<int>(v));
        }
    } else {
        std::unordered_map<std::string, int> ids;
        for (const auto& cell : cells) {
            auto [it, inserted] = ids.emplace(cell, static_cast<int>(ids.size()));
            labels.push_back(it->second);
        }
    }
    return labels;
}

namespace {

void warn_large_k(std::size_t k, std::size_t n) {
    if (10 * k >= 9 * n)
        std::cerr << "warning: k=" << k << " is close to the dataset size n=" << n
                  << "; neighborhood structure degrades in this regime\n";
}

std::vector<std::vector<std::size_t>> concept_extents(const ConceptSet& cs) {
    std::vector<std::vector<std::size_t>> extents;
    extents.reserve(cs.concepts.size());
    for (const auto& c : cs.concepts) extents.push_back(c.extent);
    return extents;
}

}  // namespace

std::size_t MinSupport::resolve(std::size_t n) const {
    if (!fraction) return absolute;
    return static_cast<std::size_t>(std::ceil(*fraction * static_cast<double>(n)));
}

MinSupport MinSupport::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty min-support value");
    const bool all_digits = std::all_of(text.begin(), text.end(),
                                        [](unsigned char c) { return std::isdigit(c); });
    MinSupport ms;
    if (all_digits) {
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), ms.absolute);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw std::invalid_argument("invalid min-support value: " + text);
        return ms;
    }
    double f;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), f);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !(f >= 0.0 && f <= 1.0))
        throw std::invalid_argument(
            "min-support must be a non-negative integer or a fraction in [0,1]: " + text);
    ms.fraction = f;
    return ms;
}

ExportFormat parse_format(const std::string& name) {
    if (name == "dot") return ExportFormat::dot;
    if (name == "json") return ExportFormat::json;
    if (name == "both") return ExportFormat::both;
    throw std::invalid_argument("unknown format: " + name);
}

Dataset pipeline_dataset(const PipelineConfig& config, std::size_t trial) {
    if (config.synth_kind && config.input)
        throw std::invalid_argument("provide either an input file or a synthetic kind, not both");
    if (config.synth_kind) {
        SynthSpec spec{*config.synth_kind, config.n, config.m, config.seed + trial};
        return generate_synth(spec);
    }
    if (!config.input)
        throw std::invalid_argument("no input: provide an input file or a synthetic kind");
    Dataset data = load_csv(*config.input, config.label_column, config.ignore_labels);
    if (config.labels_path && !config.ignore_labels) {
        auto labels = load_labels_file(*config.labels_path);
        return Dataset(data.values(), data.dim(), std::move(labels));
    }
    return data;
}

PipelineResult run_pipeline(const PipelineConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
    const bool write_files = !config.output_dir.empty();
    if (write_files) std::filesystem::create_directories(config.output_dir);

    PipelineResult result;
    nlohmann::ordered_json timings = nlohmann::ordered_json::array();
    const auto t_total = Clock::now();

    std::size_t resolved_k = 0;
    std::size_t resolved_ms = 0;
    std::size_t data_n = 0, data_m = 0;
    double sum_concepts = 0.0, sum_ours = 0.0, sum_hac = 0.0;
    bool labelled = false;

    for (std::size_t t = 0; t < config.trials; ++t) {
        TrialMetrics tm;
        tm.seed = config.seed + t;
        nlohmann::ordered_json timing;
        timing["seed"] = tm.seed;

        Dataset data = pipeline_dataset(config, t);
        data_n = data.size();
        data_m = data.dim();
        resolved_k = config.k.value_or(data.size() / 2);
        resolved_ms = config.min_support.resolve(data.size());
        labelled = data.has_labels();
        warn_large_k(resolved_k, data.size());

        auto t0 = Clock::now();
        TransactionDatabase db =
            knn_binarize(data, resolved_k, config.include_self, config.metric);
        timing["binarize_ms"] = ms_since(t0);

        t0 = Clock::now();
        ConceptSet cs = mine_concepts(db, resolved_ms);
        timing["mine_ms"] = ms_since(t0);
        tm.num_concepts = cs.concepts.size();
        sum_concepts += static_cast<double>(tm.num_concepts);

        std::optional<ClusterHierarchy> hac_hierarchy;
        if (data.has_labels()) {
            const Partition truth = Partition::from_labels(data.labels());

            t0 = Clock::now();
            tm.ours = dendrogram_purity(ClusterHierarchy(data.size(), concept_extents(cs)),
                                        truth);
            timing["eval_ms"] = ms_since(t0);
            sum_ours += tm.ours->dp;

            t0 = Clock::now();
            hac_hierarchy = dendrogram_clusters(hac_ward(data));
            tm.hac = dendrogram_purity(*hac_hierarchy, truth);
            timing["hac_ms"] = ms_since(t0);
            sum_hac += tm.hac->dp;
        }

        if (write_files && config.trials == 1) {
            if (config.synth_kind) write_csv(data, config.output_dir / "data.csv");
            write_transactions(db, config.output_dir / "transactions.txt");
            write_concepts(cs, config.output_dir / "concepts.json");

            t0 = Clock::now();
            LatticeGraph graph = build_hasse(cs);
            timing["hasse_ms"] = ms_since(t0);
            if (config.format != ExportFormat::dot)
                export_json(graph, config.output_dir / "lattice.json");
            if (config.format != ExportFormat::json)
                export_dot(graph, config.output_dir / "lattice.dot");
            if (hac_hierarchy)
                write_clusters(*hac_hierarchy, config.output_dir / "hac_clusters.json");
        }

        timings.push_back(std::move(timing));
        result.trials.push_back(std::move(tm));
    }

    const double trials_d = static_cast<double>(config.trials);
    result.mean_num_concepts = sum_concepts / trials_d;
    if (labelled) {
        result.mean_dp_ours = sum_ours / trials_d;
        result.mean_dp_hac = sum_hac / trials_d;
    }

    if (write_files) {
        nlohmann::ordered_json doc;
        auto& cfg = doc["config"];
        cfg["input"] = config.synth_kind ? to_string(*config.synth_kind)
                                         : config.input->string();
        cfg["n"] = data_n;
        cfg["m"] = data_m;
        cfg["k"] = resolved_k;
        cfg["min_support"] = resolved_ms;
        cfg["include_self"] = config.include_self;
        cfg["metric"] = to_string(config.metric);
        cfg["seed"] = config.seed;
        cfg["trials"] = config.trials;
        auto& arr = doc["trials"] = nlohmann::ordered_json::array();
        for (const auto& tm : result.trials) {
            nlohmann::ordered_json row;
            row["seed"] = tm.seed;
            row["num_concepts"] = tm.num_concepts;
            if (tm.ours) {
                row["dp_ours"] = tm.ours->dp;
                row["num_pairs"] = tm.ours->num_pairs;
            }
            if (tm.hac) {
                row["dp_hac"] = tm.hac->dp;
                row["num_hac_clusters"] = tm.hac->num_clusters;
            }
            arr.push_back(std::move(row));
        }
        doc["mean_num_concepts"] = result.mean_num_concepts;
        if (result.mean_dp_ours) {
            doc["mean_dp_ours"] = *result.mean_dp_ours;
            doc["mean_dp_hac"] = *result.mean_dp_hac;
        }
        std::ofstream out(config.output_dir / "metrics.json", std::ios::binary);
        if (!out) throw std::runtime_error("cannot write metrics.json");
        out << doc.dump(2) << '\n';

        nlohmann::ordered_json tdoc;
        tdoc["trials"] = std::move(timings);
        tdoc["total_ms"] = ms_since(t_total);
        std::ofstream tout(config.output_dir / "timings.json", std::ios::binary);
        if (!tout) throw std::runtime_error("cannot write timings.json");
        tout << tdoc.dump(2) << '\n';
    }
    return result;
}

SweepRange SweepRange::parse(const std::string& text) {
    SweepRange r;
    std::size_t first = text.find(':');
    std::size_t second = first == std::string::npos ? std::string::npos
                                                    : text.find(':', first + 1);
    auto parse_part = [&](std::size_t lo, std::size_t hi, std::size_t& out) {
        auto [ptr, ec] = std::from_chars(text.data() + lo, text.data() + hi, out);
        if (ec != std::errc{} || ptr != text.data() + hi)
            throw std::invalid_argument("invalid sweep range (want FROM:TO:STEP): " + text);
    };
    if (first == std::string::npos || second == std::string::npos)
        throw std::invalid_argument("invalid sweep range (want FROM:TO:STEP): " + text);
    parse_part(0, first, r.from);
    parse_part(first + 1, second, r.to);
    parse_part(second + 1, text.size(), r.step);
    if (r.step == 0 || r.from == 0 || r.to < r.from)
        throw std::invalid_argument("sweep range must be non-empty and ascending: " + text);
    return r;
}

std::vector<std::size_t> SweepRange::values() const {
    std::vector<std::size_t> ks;
    for (std::size_t k = from; k <= to; k += step) ks.push_back(k);
    return ks;
}

std::vector<SweepRow> run_ksweep(const PipelineConfig& config, const SweepRange& range) {
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
    const auto ks = range.values();

    std::vector<double> sum_ours(ks.size(), 0.0);
    double sum_hac = 0.0;

    for (std::size_t t = 0; t < config.trials; ++t) {
        Dataset data = pipeline_dataset(config, t);
        if (!data.has_labels())
            throw std::invalid_argument("k-sweep requires labelled data");
        for (std::size_t k : ks)
            if (k >= data.size()) {
                std::ostringstream msg;
                msg << "sweep k=" << k << " must be smaller than n=" << data.size();
                throw std::invalid_argument(msg.str());
            }
        const Partition truth = Partition::from_labels(data.labels());
        const auto hac_dp = dendrogram_purity(dendrogram_clusters(hac_ward(data)), truth);
        sum_hac += hac_dp.dp;

        const std::size_t ms = config.min_support.resolve(data.size());
        for (std::size_t ki = 0; ki < ks.size(); ++ki) {
            warn_large_k(ks[ki], data.size());
            TransactionDatabase db =
                knn_binarize(data, ks[ki], config.include_self, config.metric);
            ConceptSet cs = mine_concepts(db, ms);
            const auto dp = dendrogram_purity(
                ClusterHierarchy(data.size(), concept_extents(cs)), truth);
            sum_ours[ki] += dp.dp;
        }
    }

    const double trials_d = static_cast<double>(config.trials);
    std::vector<SweepRow> rows;
    rows.reserve(ks.size());
    for (std::size_t ki = 0; ki < ks.size(); ++ki)
        rows.push_back({ks[ki], sum_ours[ki] / trials_d, sum_hac / trials_d});

    if (!config.output_dir.empty()) {
        std::filesystem::create_directories(config.output_dir);
        std::string csv = "k,dp_ours,dp_hac\n";
        for (const auto& row : rows) {
            csv += std::to_string(row.k);
            csv += ',';
            append_double(csv, row.dp_ours);
            csv += ',';
            append_double(csv, row.dp_hac);
            csv += '\n';
        }
        std::ofstream out(config.output_dir / "ksweep.csv", std::ios::binary);
        if (!out) throw std::runtime_error("cannot write ksweep.csv");
        out << csv;
        if (!out) throw std::runtime_error("write failed: ksweep.csv");
    }
    return rows;
}

}  // namespace fcg
