#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "fcg/binarize.hpp"
#include "fcg/dataset.hpp"
#include "fcg/eval.hpp"
#include "fcg/hac.hpp"
#include "fcg/lattice.hpp"
#include "fcg/miner.hpp"
#include "fcg/pipeline.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Concept lattices over kNN-binarized data, with dendrogram-purity "
              "evaluation and a Ward-linkage baseline";

    py::class_<fcg::Dataset>(m, "Dataset")
        .def(py::init<std::vector<double>, std::size_t, std::optional<std::vector<int>>>(),
             py::arg("values"), py::arg("dim"), py::arg("labels") = std::nullopt)
        .def_property_readonly("n", &fcg::Dataset::size)
        .def_property_readonly("dim", &fcg::Dataset::dim)
        .def_property_readonly("values", &fcg::Dataset::values)
        .def_property_readonly("labels",
                               [](const fcg::Dataset& d) -> std::optional<std::vector<int>> {
                                   if (!d.has_labels()) return std::nullopt;
                                   return d.labels();
                               })
        .def("point",
             [](const fcg::Dataset& d, std::size_t i) {
                 if (i >= d.size()) throw py::index_error("point index out of range");
                 auto span = d.point(i);
                 return std::vector<double>(span.begin(), span.end());
             },
             py::arg("i"))
        .def("__len__", &fcg::Dataset::size)
        .def("__repr__", [](const fcg::Dataset& d) {
            return "Dataset(n=" + std::to_string(d.size()) + ", dim=" + std::to_string(d.dim()) +
                   (d.has_labels() ? ", labelled)" : ")");
        });

    m.def(
        "generate_synth",
        [](const std::string& kind, std::size_t n, std::size_t m_, std::uint64_t seed) {
            return fcg::generate_synth({fcg::parse_synth_kind(kind), n, m_, seed});
        },
        py::arg("kind"), py::arg("n") = 100, py::arg("m") = 2, py::arg("seed") = 1);
    m.def("load_csv", &fcg::load_csv, py::arg("path"),
          py::arg("label_column") = std::nullopt, py::arg("ignore_labels") = false);
    m.def("write_csv", &fcg::write_csv, py::arg("data"), py::arg("path"));

    py::class_<fcg::TransactionDatabase>(m, "TransactionDatabase")
        .def(py::init<std::size_t, std::vector<std::vector<std::size_t>>>(),
             py::arg("universe"), py::arg("rows"))
        .def_property_readonly("universe", &fcg::TransactionDatabase::universe)
        .def_property_readonly("rows", &fcg::TransactionDatabase::transactions)
        .def("__len__", &fcg::TransactionDatabase::size)
        .def("__eq__", [](const fcg::TransactionDatabase& a,
                          const fcg::TransactionDatabase& b) { return a == b; })
        .def("__repr__", [](const fcg::TransactionDatabase& db) {
            return "TransactionDatabase(universe=" + std::to_string(db.universe()) +
                   ", rows=" + std::to_string(db.size()) + ")";
        });

    m.def(
        "knn_binarize",
        [](const fcg::Dataset& data, std::size_t k, bool include_self,
           const std::string& metric) {
            return fcg::knn_binarize(data, k, include_self, fcg::parse_metric(metric));
        },
        py::arg("data"), py::arg("k"), py::arg("include_self") = false,
        py::arg("metric") = "euclidean");
    m.def("read_transactions", &fcg::read_transactions, py::arg("path"),
          py::arg("universe") = std::nullopt);
    m.def("write_transactions", &fcg::write_transactions, py::arg("db"), py::arg("path"));

    py::class_<fcg::Concept>(m, "Concept")
        .def_readonly("extent", &fcg::Concept::extent)
        .def_readonly("intent", &fcg::Concept::intent)
        .def_property_readonly("support", &fcg::Concept::support)
        .def("__eq__", [](const fcg::Concept& a, const fcg::Concept& b) { return a == b; })
        .def("__repr__", [](const fcg::Concept& c) {
            return "Concept(support=" + std::to_string(c.support()) +
                   ", |intent|=" + std::to_string(c.intent.size()) + ")";
        });

    py::class_<fcg::ConceptSet>(m, "ConceptSet")
        .def_readonly("n", &fcg::ConceptSet::n)
        .def_readonly("min_support", &fcg::ConceptSet::min_support)
        .def_readonly("concepts", &fcg::ConceptSet::concepts)
        .def("__len__", [](const fcg::ConceptSet& cs) { return cs.concepts.size(); });

    m.def("derive_intent", &fcg::derive_intent, py::arg("extent"), py::arg("db"));
    m.def("derive_extent", &fcg::derive_extent, py::arg("intent"), py::arg("db"));
    m.def("closure", &fcg::closure, py::arg("itemset"), py::arg("db"));
    m.def("mine_concepts", &fcg::mine_concepts, py::arg("db"), py::arg("min_support") = 0);
    m.def("write_concepts", &fcg::write_concepts, py::arg("concepts"), py::arg("path"));
    m.def("read_concepts", &fcg::read_concepts, py::arg("path"));

    py::class_<fcg::LatticeGraph>(m, "LatticeGraph")
        .def_readonly("nodes", &fcg::LatticeGraph::nodes)
        .def_readonly("edges", &fcg::LatticeGraph::edges)
        .def("__repr__", [](const fcg::LatticeGraph& g) {
            return "LatticeGraph(nodes=" + std::to_string(g.nodes.size()) +
                   ", edges=" + std::to_string(g.edges.size()) + ")";
        });

    m.def("build_hasse",
          py::overload_cast<const fcg::ConceptSet&>(&fcg::build_hasse), py::arg("concepts"));
    m.def("build_hasse",
          py::overload_cast<const std::vector<std::vector<std::size_t>>&, std::size_t>(
              &fcg::build_hasse),
          py::arg("extents"), py::arg("n"));
    m.def("export_dot", &fcg::export_dot, py::arg("graph"), py::arg("path"));
    m.def("export_json", &fcg::export_json, py::arg("graph"), py::arg("path"));
    m.def("load_lattice", &fcg::load_lattice, py::arg("path"));

    py::class_<fcg::Partition>(m, "Partition")
        .def(py::init<std::size_t, std::vector<std::vector<std::size_t>>>(), py::arg("n"),
             py::arg("classes"))
        .def_static("from_labels", &fcg::Partition::from_labels, py::arg("labels"))
        .def_property_readonly("n", &fcg::Partition::n)
        .def_property_readonly("classes", &fcg::Partition::classes);

    py::class_<fcg::ClusterHierarchy>(m, "ClusterHierarchy")
        .def(py::init<std::size_t, std::vector<std::vector<std::size_t>>>(), py::arg("n"),
             py::arg("clusters"))
        .def_property_readonly("n", &fcg::ClusterHierarchy::n)
        .def_property_readonly("clusters", &fcg::ClusterHierarchy::clusters);

    py::class_<fcg::DpResult>(m, "DpResult")
        .def_readonly("dp", &fcg::DpResult::dp)
        .def_readonly("num_clusters", &fcg::DpResult::num_clusters)
        .def_readonly("num_pairs", &fcg::DpResult::num_pairs)
        .def("__repr__", [](const fcg::DpResult& r) {
            return "DpResult(dp=" + std::to_string(r.dp) + ")";
        });

    m.def("lca", &fcg::lca, py::arg("i"), py::arg("j"), py::arg("hierarchy"));
    m.def("purity", &fcg::purity, py::arg("f"), py::arg("g"));
    m.def("dendrogram_purity", &fcg::dendrogram_purity, py::arg("hierarchy"), py::arg("truth"));
    m.def("write_clusters", &fcg::write_clusters, py::arg("hierarchy"), py::arg("path"));
    m.def("load_hierarchy", &fcg::load_hierarchy, py::arg("path"));

    py::class_<fcg::Merge>(m, "Merge")
        .def_readonly("left", &fcg::Merge::left)
        .def_readonly("right", &fcg::Merge::right)
        .def_readonly("height", &fcg::Merge::height)
        .def_readonly("size", &fcg::Merge::size)
        .def("__repr__", [](const fcg::Merge& mg) {
            return "Merge(" + std::to_string(mg.left) + ", " + std::to_string(mg.right) +
                   ", height=" + std::to_string(mg.height) + ")";
        });

    py::class_<fcg::Dendrogram>(m, "Dendrogram")
        .def_readonly("n", &fcg::Dendrogram::n)
        .def_readonly("merges", &fcg::Dendrogram::merges);

    m.def("hac_ward", &fcg::hac_ward, py::arg("data"));
    m.def("dendrogram_clusters", &fcg::dendrogram_clusters, py::arg("dendrogram"));
}
