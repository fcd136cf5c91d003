#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cfgwc/cfgwc.hpp"
#include "cfgwc/context.hpp"
#include "cfgwc/dataset.hpp"
#include "cfgwc/geo.hpp"
#include "cfgwc/validity.hpp"

namespace cfgwc {

/// Flat sectioned config file (INI style). Schema is documented in the
/// README; unknown sections or keys are rejected.
struct PipelineConfig {
    // [data]
    std::string data_file;
    CsvSchema schema;
    bool synth = false;
    SyntheticSpec synth_spec;
    std::uint64_t synth_seed = 1;
    bool normalize = false;

    // [context]
    ContextMethod method = ContextMethod::F2;
    std::string context_column;  // f1 / f2; empty -> first feature
    F1Target f1_target;
    std::string context_file;                    // method = file
    std::vector<ContextMethod> compare_methods;  // for `compare`; default f1,f2,random

    // [geo]
    DistanceMetric metric = DistanceMetric::Euclidean;
    std::string weights_file;  // optional externally computed weights

    // [clustering] + gravity exponents from [geo]
    CfgwcConfig clustering;

    // [output]
    std::string out_dir = "out";
    bool write_geojson = false;
    bool export_weights = false;

    static PipelineConfig load(const std::string& path);
    static PipelineConfig parse(const std::string& text);
};

struct RunSummary {
    std::string context_method;
    std::size_t iterations = 0;
    bool converged = false;
    double final_objective = 0.0;
    IfvReport validity;
    double wall_ms = 0.0;
    std::vector<std::string> warnings;
};

struct PipelineRun {
    Dataset dataset;
    ContextVector context;
    WeightMatrix weights;
    ClusteringResult result;
    RunSummary summary;
};

/// Loads (or generates) the data, builds the context vector and the weight
/// matrix, runs the constrained clustering and scores it. Pure computation;
/// nothing is written to disk.
PipelineRun execute_run(const PipelineConfig& cfg);

/// Writes memberships.csv, centers.csv, summary.json and optionally
/// points.geojson / weights.csv into cfg.out_dir.
void write_run_artifacts(const PipelineRun& run, const PipelineConfig& cfg);

std::string summary_json(const PipelineRun& run, const PipelineConfig& cfg);

struct MethodStats {
    std::vector<double> ifv;  // one value per seed, in seed order
    double median = 0.0;
    double min = 0.0;
    double max = 0.0;
};

struct CompareReport {
    std::size_t seeds = 0;
    std::uint64_t base_seed = 0;
    std::vector<std::string> method_order;
    std::map<std::string, MethodStats> methods;
    // pairwise win counts, keyed "a_vs_b" -> {wins for a, wins for b, ties}
    struct Wins {
        std::size_t first = 0, second = 0, ties = 0;
    };
    std::map<std::string, Wins> pairwise;
};

/// Runs every configured method over `seeds` paired seeds (method i and
/// method j see the same per-seed RNG stream) and aggregates IFV scores.
CompareReport run_comparison(const PipelineConfig& cfg, std::size_t seeds);

std::string compare_json(const CompareReport& report);
std::string compare_table(const CompareReport& report);

/// GeoJSON FeatureCollection of the clustered points: one Point feature per
/// row with id, argmax cluster, every membership and the context value.
std::string emit_geojson(const Dataset& ds, const PartitionMatrix& partition,
                         const ContextVector& context);

double median(std::vector<double> values);

}  // namespace cfgwc
