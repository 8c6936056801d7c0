#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fcg/binarize.hpp"
#include "fcg/dataset.hpp"
#include "fcg/eval.hpp"
#include "fcg/hac.hpp"
#include "fcg/lattice.hpp"
#include "fcg/miner.hpp"
#include "fcg/pipeline.hpp"

namespace {

namespace fs = std::filesystem;

void note_written(const fs::path& path) { std::cerr << "wrote " << path.string() << '\n'; }

struct InputOpts {
    std::string input;
    std::string label_column;
    std::string labels_path;
    bool ignore_labels = false;

    void attach(CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--input", input, "input CSV file");
        if (required) opt->required();
        cmd->add_option("--label-column", label_column,
                        "label column: 0-based index or header name (default: a column "
                        "named 'label' if present)");
        cmd->add_option("--labels", labels_path, "separate labels file, one label per line");
        cmd->add_flag("--ignore-labels", ignore_labels, "treat every column as a feature");
    }

    fcg::Dataset load() const {
        fcg::Dataset data = fcg::load_csv(
            input, label_column.empty() ? std::nullopt : std::optional<std::string>(label_column),
            ignore_labels);
        if (!labels_path.empty() && !ignore_labels)
            return fcg::Dataset(data.values(), data.dim(), fcg::load_labels_file(labels_path));
        return data;
    }

    void fill(fcg::PipelineConfig& cfg) const {
        if (!input.empty()) cfg.input = input;
        if (!label_column.empty()) cfg.label_column = label_column;
        if (!labels_path.empty()) cfg.labels_path = labels_path;
        cfg.ignore_labels = ignore_labels;
    }
};

fcg::Partition truth_partition(const fcg::Dataset& data) {
    if (!data.has_labels())
        throw std::runtime_error(
            "missing labels: dendrogram purity needs ground truth (use --label-column or "
            "--labels)");
    return fcg::Partition::from_labels(data.labels());
}

int run(int argc, char** argv) {
    CLI::App app{
        "fcagraph: closed-itemset concept lattices as cluster hierarchies for numerical "
        "data, with a Ward HAC baseline and dendrogram-purity evaluation"};
    app.require_subcommand(1);

    // ---- synth ----------------------------------------------------------
    auto* synth = app.add_subcommand("synth", "generate a labelled synthetic dataset CSV");
    struct {
        std::string kind;
        std::size_t n = 100, m = 2;
        std::uint64_t seed = 1;
        std::string output;
    } sy;
    synth->add_option("--kind", sy.kind, "synth1 | synth2 | synth3")->required();
    synth->add_option("--n", sy.n, "number of points");
    synth->add_option("--m", sy.m, "number of features");
    synth->add_option("--seed", sy.seed, "random seed");
    synth->add_option("--output", sy.output, "output directory")->required();
    synth->callback([&] {
        fcg::SynthSpec spec{fcg::parse_synth_kind(sy.kind), sy.n, sy.m, sy.seed};
        fs::create_directories(sy.output);
        const fs::path out = fs::path(sy.output) / "data.csv";
        fcg::write_csv(fcg::generate_synth(spec), out);
        note_written(out);
    });

    // ---- binarize -------------------------------------------------------
    auto* binarize = app.add_subcommand("binarize",
                                        "k-nearest-neighbor binarization of a CSV dataset");
    struct {
        InputOpts in;
        std::optional<std::size_t> k;
        bool include_self = false;
        std::string metric = "euclidean";
        std::string output;
    } bz;
    bz.in.attach(binarize);
    binarize->add_option("--k", bz.k, "neighborhood size (default: floor(n/2))");
    binarize->add_flag("--include-self", bz.include_self,
                       "count each point as its own nearest neighbor");
    binarize->add_option("--metric", bz.metric, "distance metric (euclidean)");
    binarize->add_option("--output", bz.output, "output directory")->required();
    binarize->callback([&] {
        fcg::Dataset data = bz.in.load();
        const std::size_t k = bz.k.value_or(data.size() / 2);
        auto db = fcg::knn_binarize(data, k, bz.include_self, fcg::parse_metric(bz.metric));
        fs::create_directories(bz.output);
        const fs::path out = fs::path(bz.output) / "transactions.txt";
        fcg::write_transactions(db, out);
        note_written(out);
    });

    // ---- mine -----------------------------------------------------------
    auto* mine = app.add_subcommand("mine", "enumerate all closed itemsets (formal concepts)");
    struct {
        std::string input;
        std::string min_support = "0";
        std::string output;
    } mn;
    mine->add_option("--input", mn.input, "transactions file")->required();
    mine->add_option("--min-support", mn.min_support,
                     "minimum extent size: absolute count or fraction of n");
    mine->add_option("--output", mn.output, "output directory")->required();
    mine->callback([&] {
        auto db = fcg::read_transactions(mn.input);
        const auto ms = fcg::MinSupport::parse(mn.min_support).resolve(db.size());
        auto cs = fcg::mine_concepts(db, ms);
        fs::create_directories(mn.output);
        const fs::path out = fs::path(mn.output) / "concepts.json";
        fcg::write_concepts(cs, out);
        note_written(out);
    });

    // ---- lattice --------------------------------------------------------
    auto* lattice = app.add_subcommand("lattice", "build the Hasse diagram of concept extents");
    struct {
        std::string input;
        std::string format = "both";
        std::string output;
    } lt;
    lattice->add_option("--input", lt.input, "concepts JSON file")->required();
    lattice->add_option("--format", lt.format, "dot | json | both");
    lattice->add_option("--output", lt.output, "output directory")->required();
    lattice->callback([&] {
        const auto format = fcg::parse_format(lt.format);
        auto graph = fcg::build_hasse(fcg::read_concepts(lt.input));
        fs::create_directories(lt.output);
        if (format != fcg::ExportFormat::dot) {
            const fs::path out = fs::path(lt.output) / "lattice.json";
            fcg::export_json(graph, out);
            note_written(out);
        }
        if (format != fcg::ExportFormat::json) {
            const fs::path out = fs::path(lt.output) / "lattice.dot";
            fcg::export_dot(graph, out);
            note_written(out);
        }
    });

    // ---- eval -----------------------------------------------------------
    auto* eval = app.add_subcommand(
        "eval", "dendrogram purity of a cluster collection against ground-truth labels");
    struct {
        std::string clusters;
        InputOpts in;
        std::string output;
    } ev;
    eval->add_option("--clusters", ev.clusters, "lattice JSON or cluster-list JSON")->required();
    ev.in.attach(eval);
    eval->add_option("--output", ev.output, "output directory (writes metrics.json)");
    eval->callback([&] {
        const auto hierarchy = fcg::load_hierarchy(ev.clusters);
        const auto truth = truth_partition(ev.in.load());
        const auto r = fcg::dendrogram_purity(hierarchy, truth);
        nlohmann::ordered_json doc;
        doc["dp"] = r.dp;
        doc["num_clusters"] = r.num_clusters;
        doc["num_pairs"] = r.num_pairs;
        std::cout << doc.dump(2) << '\n';
        if (!ev.output.empty()) {
            fs::create_directories(ev.output);
            const fs::path out = fs::path(ev.output) / "metrics.json";
            std::ofstream f(out, std::ios::binary);
            if (!f) throw std::runtime_error("cannot write " + out.string());
            f << doc.dump(2) << '\n';
            note_written(out);
        }
    });

    // ---- hac ------------------------------------------------------------
    auto* hac = app.add_subcommand("hac",
                                   "Ward-linkage agglomerative clustering baseline");
    struct {
        InputOpts in;
        std::string output;
    } hc;
    hc.in.attach(hac);
    hac->add_option("--output", hc.output, "output directory")->required();
    hac->callback([&] {
        fcg::Dataset data = hc.in.load();
        const auto hierarchy = fcg::dendrogram_clusters(fcg::hac_ward(data));
        fs::create_directories(hc.output);
        const fs::path out = fs::path(hc.output) / "hac_clusters.json";
        fcg::write_clusters(hierarchy, out);
        note_written(out);
    });

    // ---- pipeline / ksweep ----------------------------------------------
    struct SharedRun {
        InputOpts in;
        std::string kind;
        std::size_t n = 100, m = 2;
        std::optional<std::size_t> k;
        std::string min_support = "0";
        bool include_self = false;
        std::string metric = "euclidean";
        std::uint64_t seed = 1;
        std::size_t trials = 1;
        std::string output;

        void attach(CLI::App* cmd) {
            in.attach(cmd, /*required=*/false);
            cmd->add_option("--kind", kind, "synthetic input: synth1 | synth2 | synth3");
            cmd->add_option("--n", n, "synthetic dataset size");
            cmd->add_option("--m", m, "synthetic feature count");
            cmd->add_option("--k", k, "neighborhood size (default: floor(n/2))");
            cmd->add_option("--min-support", min_support,
                            "minimum extent size: absolute count or fraction of n");
            cmd->add_flag("--include-self", include_self,
                          "count each point as its own nearest neighbor");
            cmd->add_option("--metric", metric, "distance metric (euclidean)");
            cmd->add_option("--seed", seed, "master seed; trial t uses seed+t");
            cmd->add_option("--trials", trials, "number of trials to average");
        }

        fcg::PipelineConfig config() const {
            fcg::PipelineConfig cfg;
            in.fill(cfg);
            if (!kind.empty()) cfg.synth_kind = fcg::parse_synth_kind(kind);
            cfg.n = n;
            cfg.m = m;
            cfg.k = k;
            cfg.min_support = fcg::MinSupport::parse(min_support);
            cfg.include_self = include_self;
            cfg.metric = fcg::parse_metric(metric);
            cfg.seed = seed;
            cfg.trials = trials;
            cfg.output_dir = output;
            return cfg;
        }
    };

    auto* pipeline = app.add_subcommand(
        "pipeline", "binarize, mine and build the lattice; with labels also evaluate "
                    "dendrogram purity against the HAC baseline");
    SharedRun pl;
    std::string pl_format = "both";
    pl.attach(pipeline);
    pipeline->add_option("--format", pl_format, "lattice export: dot | json | both");
    pipeline->add_option("--output", pl.output, "output directory")->required();
    pipeline->callback([&] {
        auto cfg = pl.config();
        cfg.format = fcg::parse_format(pl_format);
        const auto result = fcg::run_pipeline(cfg);
        nlohmann::ordered_json doc;
        doc["mean_num_concepts"] = result.mean_num_concepts;
        if (result.mean_dp_ours) {
            doc["mean_dp_ours"] = *result.mean_dp_ours;
            doc["mean_dp_hac"] = *result.mean_dp_hac;
        }
        std::cout << doc.dump(2) << '\n';
        note_written(cfg.output_dir / "metrics.json");
    });

    auto* ksweep = app.add_subcommand(
        "ksweep", "run the pipeline over a range of k values and tabulate dendrogram purity");
    SharedRun ks;
    std::string sweep = "10:90:10";
    ks.attach(ksweep);
    ksweep->add_option("--sweep", sweep, "k range as FROM:TO:STEP");
    ksweep->add_option("--output", ks.output, "output directory (writes ksweep.csv)");
    ksweep->callback([&] {
        const auto rows = fcg::run_ksweep(ks.config(), fcg::SweepRange::parse(sweep));
        std::cout << "k,dp_ours,dp_hac\n";
        for (const auto& row : rows)
            std::cout << row.k << ',' << row.dp_ours << ',' << row.dp_hac << '\n';
        if (!ks.output.empty()) note_written(fs::path(ks.output) / "ksweep.csv");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        nlohmann::json err;
        err["error"] = e.what();
        std::cerr << err.dump() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        nlohmann::json err;
        err["error"] = e.what();
        std::cerr << err.dump() << '\n';
        return 1;
    }
}
