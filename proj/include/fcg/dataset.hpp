#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fcg {

/// Immutable collection of n m-dimensional points with optional integer
/// class labels. All values are validated to be finite at construction.
class Dataset {
public:
    Dataset(std::vector<double> values, std::size_t dim,
            std::optional<std::vector<int>> labels = std::nullopt);

    std::size_t size() const { return values_.size() / dim_; }  // n
    std::size_t dim() const { return dim_; }                    // m

    std::span<const double> point(std::size_t i) const {
        return {values_.data() + i * dim_, dim_};
    }

    bool has_labels() const { return labels_.has_value(); }
    const std::vector<int>& labels() const { return *labels_; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;  // row-major n x m
    std::size_t dim_;
    std::optional<std::vector<int>> labels_;
};

enum class SynthKind { synth1, synth2, synth3 };

SynthKind parse_synth_kind(const std::string& name);
std::string to_string(SynthKind kind);

struct SynthSpec {
    SynthKind kind = SynthKind::synth1;
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t seed = 0;

    void validate() const;  // throws std::invalid_argument
};

/// Deterministic synthetic dataset generation; identical spec -> identical
/// bits. synth1: two equal clusters, per-feature N(0,1) vs N(2,1).
/// synth2: same, second cluster N(2,4). synth3: three 2-D clusters with
/// sizes (floor(n/2), ceil(n/4), rest), unit variance, means drawn
/// uniformly from [-25,25] per cluster per feature.
Dataset generate_synth(const SynthSpec& spec);

/// Column selector: a non-negative integer string is a 0-based index,
/// anything else is matched against the header by name.
Dataset load_csv(const std::filesystem::path& path,
                 const std::optional<std::string>& label_column = std::nullopt,
                 bool ignore_labels = false);

void write_csv(const Dataset& data, const std::filesystem::path& path);

}  // namespace fcg
