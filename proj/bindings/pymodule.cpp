#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cfgwc/cfgwc.hpp"
#include "cfgwc/context.hpp"
#include "cfgwc/dataset.hpp"
#include "cfgwc/fcm.hpp"
#include "cfgwc/geo.hpp"
#include "cfgwc/pipeline.hpp"
#include "cfgwc/validity.hpp"

namespace py = pybind11;
using namespace cfgwc;

namespace {

std::vector<std::vector<double>> to_rows(const Matrix& m) {
    std::vector<std::vector<double>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows[i].assign(m.row(i), m.row(i) + m.cols());
    return rows;
}

Matrix from_rows(const std::vector<std::vector<double>>& rows, const char* what) {
    if (rows.empty()) throw std::invalid_argument(std::string(what) + ": empty matrix");
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw std::invalid_argument(std::string(what) + ": ragged rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

FcmParams make_params(std::size_t c, double m, double eps, std::size_t max_iter,
                      std::uint64_t seed) {
    FcmParams p;
    p.c = c;
    p.m = m;
    p.eps = eps;
    p.max_iter = max_iter;
    p.seed = seed;
    return p;
}

}  // namespace

PYBIND11_MODULE(_cfgwc, mod) {
    mod.doc() = "Context-constrained fuzzy geographically weighted clustering";
    mod.attr("__version__") = "0.1.0";

    py::class_<Dataset>(mod, "Dataset")
        .def_readonly("ids", &Dataset::ids)
        .def_readonly("feature_names", &Dataset::feature_names)
        .def_readonly("populations", &Dataset::populations)
        .def_readonly("default_coords", &Dataset::default_coords)
        .def_readonly("default_population", &Dataset::default_population)
        .def_readonly("normalized", &Dataset::normalized)
        .def_readonly("category_codes", &Dataset::category_codes)
        .def_property_readonly("features", [](const Dataset& d) { return to_rows(d.features); })
        .def_property_readonly("coords", [](const Dataset& d) { return to_rows(d.coords); })
        .def_property_readonly("n", &Dataset::size)
        .def_property_readonly("r", &Dataset::dim)
        .def("__repr__", [](const Dataset& d) {
            return "<Dataset n=" + std::to_string(d.size()) + " r=" + std::to_string(d.dim()) + ">";
        });

    py::class_<ContextSeries>(mod, "ContextSeries")
        .def(py::init([](std::vector<double> values, std::string name) {
                 return ContextSeries{std::move(values), std::move(name)};
             }),
             py::arg("values"), py::arg("name") = "series")
        .def_readonly("values", &ContextSeries::values)
        .def_readonly("name", &ContextSeries::name);

    py::class_<ContextVector>(mod, "ContextVector")
        .def_readonly("f", &ContextVector::f)
        .def_property_readonly("method",
                               [](const ContextVector& c) { return std::string(to_string(c.method)); })
        .def_property_readonly("mu", [](const ContextVector& c) { return c.mu; })
        .def_property_readonly("sigma", [](const ContextVector& c) { return c.sigma; })
        .def_property_readonly("cluster", [](const ContextVector& c) { return c.cluster; })
        .def_property_readonly("cluster_center",
                               [](const ContextVector& c) { return c.cluster_center; })
        .def_readonly("clamped", &ContextVector::clamped)
        .def_readonly("source", &ContextVector::source);

    py::class_<PartitionMatrix>(mod, "PartitionMatrix")
        .def(py::init([](const std::vector<std::vector<double>>& u, std::vector<double> targets) {
                 return PartitionMatrix{from_rows(u, "PartitionMatrix"), std::move(targets)};
             }),
             py::arg("u"), py::arg("row_target"))
        .def_property_readonly("u", [](const PartitionMatrix& p) { return to_rows(p.u); })
        .def_readonly("row_target", &PartitionMatrix::row_target);

    py::class_<Centers>(mod, "Centers")
        .def(py::init([](const std::vector<std::vector<double>>& v) {
                 return Centers{from_rows(v, "Centers")};
             }),
             py::arg("v"))
        .def_property_readonly("v", [](const Centers& c) { return to_rows(c.v); });

    py::class_<ClusteringResult>(mod, "ClusteringResult")
        .def_readonly("partition", &ClusteringResult::partition)
        .def_readonly("centers", &ClusteringResult::centers)
        .def_readonly("objective_trace", &ClusteringResult::objective_trace)
        .def_readonly("iterations", &ClusteringResult::iterations)
        .def_readonly("converged", &ClusteringResult::converged);

    py::class_<WeightMatrix>(mod, "WeightMatrix")
        .def(py::init([](const std::vector<std::vector<double>>& w) {
                 return WeightMatrix{from_rows(w, "WeightMatrix")};
             }),
             py::arg("w"))
        .def_property_readonly("w", [](const WeightMatrix& m) { return to_rows(m.w); })
        .def_property_readonly("n", &WeightMatrix::size);

    py::class_<IfvReport>(mod, "IfvReport")
        .def_readonly("ifv", &IfvReport::ifv)
        .def_readonly("sd_max", &IfvReport::sd_max)
        .def_readonly("sigma_bar", &IfvReport::sigma_bar)
        .def_readonly("per_cluster_terms", &IfvReport::per_cluster_terms)
        .def_readonly("clamped", &IfvReport::clamped)
        .def_readonly("degenerate_centers", &IfvReport::degenerate_centers);

    py::class_<SyntheticSpec>(mod, "SyntheticSpec")
        .def(py::init<>())
        .def_readwrite("n_areas", &SyntheticSpec::n_areas)
        .def_readwrite("n_clusters", &SyntheticSpec::n_clusters)
        .def_readwrite("means", &SyntheticSpec::means)
        .def_readwrite("spreads", &SyntheticSpec::spreads)
        .def_readwrite("region_span", &SyntheticSpec::region_span)
        .def_readwrite("region_sigma", &SyntheticSpec::region_sigma)
        .def_readwrite("pop_min", &SyntheticSpec::pop_min)
        .def_readwrite("pop_max", &SyntheticSpec::pop_max);

    py::class_<CfgwcConfig>(mod, "CfgwcConfig")
        .def(py::init<>())
        .def_readwrite("c", &CfgwcConfig::c)
        .def_readwrite("m", &CfgwcConfig::m)
        .def_readwrite("alpha", &CfgwcConfig::alpha)
        .def_readwrite("beta", &CfgwcConfig::beta)
        .def_readwrite("a", &CfgwcConfig::a)
        .def_readwrite("b", &CfgwcConfig::b)
        .def_readwrite("eps", &CfgwcConfig::eps)
        .def_readwrite("max_iter", &CfgwcConfig::max_iter)
        .def_readwrite("seed", &CfgwcConfig::seed);

    mod.def(
        "load_csv",
        [](const std::string& path, const std::string& id, const std::string& population,
           const std::string& coord_x, const std::string& coord_y,
           const std::vector<std::string>& features) {
            CsvSchema schema;
            schema.id = id;
            schema.population = population;
            schema.coord_x = coord_x;
            schema.coord_y = coord_y;
            schema.features = features;
            return load_csv(path, schema);
        },
        py::arg("path"), py::arg("id"), py::arg("population") = "", py::arg("coord_x") = "",
        py::arg("coord_y") = "", py::arg("features") = std::vector<std::string>{});
    mod.def("write_csv", &write_csv, py::arg("dataset"), py::arg("path"));
    mod.def(
        "encode_categoricals",
        [](const std::vector<std::string>& column) {
            std::vector<std::string> labels;
            auto codes = encode_categoricals(column, &labels);
            return py::make_tuple(codes, labels);
        },
        py::arg("column"));
    mod.def("extract_context", &extract_context, py::arg("dataset"), py::arg("column"));
    mod.def("normalize_minmax", &normalize_minmax, py::arg("dataset"));
    mod.def(
        "generate_synthetic",
        [](const SyntheticSpec& spec, std::uint64_t seed) { return generate_synthetic(spec, seed); },
        py::arg("spec"), py::arg("seed"));

    mod.def(
        "pairwise_distances",
        [](const std::vector<std::vector<double>>& coords, const std::string& metric) {
            return to_rows(pairwise_distances(from_rows(coords, "coords"), parse_metric(metric)));
        },
        py::arg("coords"), py::arg("metric") = "euclidean");
    mod.def(
        "gravity_weights",
        [](const std::vector<double>& populations, const std::vector<std::vector<double>>& distances,
           double a, double b) {
            return gravity_weights(populations, from_rows(distances, "distances"), a, b);
        },
        py::arg("populations"), py::arg("distances"), py::arg("a") = 1.0, py::arg("b") = 1.0);

    mod.def("init_partition", &init_partition, py::arg("n"), py::arg("c"), py::arg("row_target"),
            py::arg("seed"));
    mod.def(
        "update_centers",
        [](const Dataset& ds, const PartitionMatrix& p, double m) { return update_centers(ds, p, m); },
        py::arg("dataset"), py::arg("partition"), py::arg("m") = 2.0);
    mod.def(
        "update_memberships",
        [](const Dataset& ds, const Centers& centers, double m) {
            return update_memberships(ds, centers, m);
        },
        py::arg("dataset"), py::arg("centers"), py::arg("m") = 2.0);
    mod.def(
        "fcm_run",
        [](const Dataset& ds, std::size_t c, double m, double eps, std::size_t max_iter,
           std::uint64_t seed) { return fcm_run(ds, make_params(c, m, eps, max_iter, seed)); },
        py::arg("dataset"), py::arg("c") = 3, py::arg("m") = 2.0, py::arg("eps") = 1e-5,
        py::arg("max_iter") = 300, py::arg("seed") = 0);
    mod.def(
        "fcm_run_series",
        [](const ContextSeries& series, std::size_t c, double m, double eps, std::size_t max_iter,
           std::uint64_t seed) { return fcm_run(series, make_params(c, m, eps, max_iter, seed)); },
        py::arg("series"), py::arg("c") = 3, py::arg("m") = 2.0, py::arg("eps") = 1e-5,
        py::arg("max_iter") = 300, py::arg("seed") = 0);

    mod.def(
        "context_f1",
        [](const ContextSeries& series, std::size_t c, const std::string& target, double m,
           double eps, std::size_t max_iter, std::uint64_t seed) {
            return context_f1(series, c, F1Target::parse(target),
                              make_params(c, m, eps, max_iter, seed));
        },
        py::arg("series"), py::arg("c") = 3, py::arg("target") = "highest", py::arg("m") = 2.0,
        py::arg("eps") = 1e-5, py::arg("max_iter") = 300, py::arg("seed") = 0);
    mod.def("context_f2", &context_f2, py::arg("series"));
    mod.def("context_random", &context_random, py::arg("n"), py::arg("seed"));
    mod.def("context_from_file", &context_from_file, py::arg("path"));

    mod.def(
        "cfgwc_run",
        [](const Dataset& ds, const ContextVector& ctx, const WeightMatrix& weights,
           const CfgwcConfig& config) { return cfgwc_run(ds, ctx, weights, config); },
        py::arg("dataset"), py::arg("context"), py::arg("weights"), py::arg("config"));
    mod.def(
        "objective",
        [](const Dataset& ds, const PartitionMatrix& p, const Centers& v, double m) {
            return objective(ds, p, v, m);
        },
        py::arg("dataset"), py::arg("partition"), py::arg("centers"), py::arg("m") = 2.0);

    mod.def("sd_max", &sd_max, py::arg("centers"));
    mod.def(
        "sigma_bar",
        [](const Dataset& ds, const Centers& centers) { return sigma_bar(ds, centers); },
        py::arg("dataset"), py::arg("centers"));
    mod.def(
        "ifv",
        [](const Dataset& ds, const PartitionMatrix& p, const Centers& v) { return ifv(ds, p, v); },
        py::arg("dataset"), py::arg("partition"), py::arg("centers"));

    mod.def("emit_geojson", &emit_geojson, py::arg("dataset"), py::arg("partition"),
            py::arg("context"));
    mod.def(
        "run",
        [](const std::string& config_path) {
            const PipelineConfig cfg = PipelineConfig::load(config_path);
            const PipelineRun run = execute_run(cfg);
            write_run_artifacts(run, cfg);
            return summary_json(run, cfg);
        },
        py::arg("config_path"), "Run the full pipeline; writes artifacts and returns the summary");
    mod.def(
        "compare",
        [](const std::string& config_path, std::size_t seeds) {
            const PipelineConfig cfg = PipelineConfig::load(config_path);
            return compare_json(run_comparison(cfg, seeds));
        },
        py::arg("config_path"), py::arg("seeds") = 20,
        "Compare context methods over paired seeds; returns the report as JSON");
    mod.def("derive_seed", &derive_seed, py::arg("base"), py::arg("component"));
}
