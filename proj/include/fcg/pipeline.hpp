#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fcg/binarize.hpp"
#include "fcg/dataset.hpp"
#include "fcg/eval.hpp"

namespace fcg {

// Minimum support given either as an absolute extent size or as a fraction
// of n (rounded up).
struct MinSupport {
    std::size_t absolute = 0;
    std::optional<double> fraction;

    std::size_t resolve(std::size_t n) const;
    static MinSupport parse(const std::string& text);
};

enum class ExportFormat { dot, json, both };
ExportFormat parse_format(const std::string& name);

struct PipelineConfig {
    // Input: either a CSV file or a synthetic generator spec.
    std::optional<std::filesystem::path> input;
    std::optional<std::string> label_column;
    std::optional<std::filesystem::path> labels_path;  // one label per line
    bool ignore_labels = false;
    std::optional<SynthKind> synth_kind;
    std::size_t n = 100;  // synth only
    std::size_t m = 2;    // synth only

    std::optional<std::size_t> k;  // default floor(n/2)
    MinSupport min_support;
    bool include_self = false;
    Metric metric = Metric::euclidean;
    std::uint64_t seed = 1;
    std::size_t trials = 1;

    std::filesystem::path output_dir;
    ExportFormat format = ExportFormat::both;
};

struct TrialMetrics {
    std::uint64_t seed = 0;
    std::size_t num_concepts = 0;
    std::optional<DpResult> ours;
    std::optional<DpResult> hac;
};

struct PipelineResult {
    std::vector<TrialMetrics> trials;
    double mean_num_concepts = 0.0;
    std::optional<double> mean_dp_ours;
    std::optional<double> mean_dp_hac;
};

// One label per line; integer labels are used as-is, anything else is
// mapped to 0,1,2,... by first appearance.
std::vector<int> load_labels_file(const std::filesystem::path& path);

// Loads or generates the dataset for one trial (synth kinds draw from
// seed, seed+1, ... per trial; file inputs are identical across trials).
Dataset pipeline_dataset(const PipelineConfig& config, std::size_t trial);

// binarize -> mine -> build_hasse; with labels also DP evaluation and the
// HAC baseline. With trials == 1 the artifacts (transactions, concepts,
// lattice, HAC clusters) are written next to metrics.json in output_dir;
// multi-trial benchmark runs write metrics.json/timings.json only. Wall
// clock goes to timings.json, never into metrics.json, so reruns are
// byte-identical.
PipelineResult run_pipeline(const PipelineConfig& config);

struct SweepRange {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t step = 1;

    static SweepRange parse(const std::string& text);  // "FROM:TO:STEP"
    std::vector<std::size_t> values() const;
};

struct SweepRow {
    std::size_t k = 0;
    double dp_ours = 0.0;
    double dp_hac = 0.0;
};

// One pipeline run per k per trial; the HAC baseline is computed once per
// trial (it does not depend on k). Writes ksweep.csv into output_dir.
std::vector<SweepRow> run_ksweep(const PipelineConfig& config, const SweepRange& range);

}  // namespace fcg
