#include <filesystem>
#include <fstream>
#include <sstream>

#include "cfgwc/pipeline.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"

using namespace cfgwc;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string demo_config(const fs::path& csv, const fs::path& out, const std::string& extra = "") {
    return "[data]\nfile = " + csv.string() + "\nid = Name\n" + extra +
           "\n[context]\nmethod = f2\ncolumn = Income\n"
           "[clustering]\nc = 3\nseed = 11\n"
           "[output]\ndir = " + out.string() + "\ngeojson = true\n";
}

}  // namespace

TEST_CASE("config parsing") {
    const PipelineConfig cfg = PipelineConfig::parse(
        "[data]\nsynth = true\nn = 30\n"
        "[context]\nmethod = f1\ntarget = lowest\nmethods = f1, random\n"
        "[geo]\nmetric = euclidean\na = 1.5\nb = 0.5\n"
        "[clustering]\nc = 4\nm = 2.5\nalpha = 0.6\nbeta = 0.4\nseed = 3\n"
        "[output]\ndir = somewhere\n");
    CHECK(cfg.synth);
    CHECK(cfg.synth_spec.n_areas == 30);
    CHECK(cfg.synth_spec.n_clusters == 4);  // follows clustering.c unless blobs= is given
    CHECK(cfg.method == ContextMethod::F1);
    CHECK(cfg.f1_target.kind == F1Target::Kind::Lowest);
    CHECK(cfg.compare_methods == std::vector<ContextMethod>{ContextMethod::F1, ContextMethod::Random});
    CHECK(cfg.clustering.a == 1.5);
    CHECK(cfg.clustering.b == 0.5);
    CHECK(cfg.clustering.m == 2.5);
    CHECK(cfg.out_dir == "somewhere");

    CHECK_THROWS_WITH_AS(PipelineConfig::parse("[data]\nsynth = true\nbogus = 1\n"),
                         doctest::Contains("unknown key"), std::runtime_error);
    CHECK_THROWS_WITH_AS(PipelineConfig::parse("[nope]\nx = 1\n"),
                         doctest::Contains("unknown section"), std::runtime_error);
    CHECK_THROWS_WITH_AS(PipelineConfig::parse("[data]\nsynth = maybe\n"),
                         doctest::Contains("boolean"), std::runtime_error);
    CHECK_THROWS_WITH_AS(PipelineConfig::parse("[data]\nsynth = false\n"),
                         doctest::Contains("file="), std::runtime_error);
    CHECK_THROWS_WITH_AS(
        PipelineConfig::parse("[data]\nsynth = true\n[clustering]\nalpha = 0.5\nbeta = 0.6\n"),
        doctest::Contains("alpha"), std::invalid_argument);
}

TEST_CASE("pipeline run on the demographic sample") {
    const auto dir = fixtures::temp_dir("pipe_demo");
    const auto csv = fixtures::write_file(dir, "demo.csv", fixtures::kDemoCsv);
    const auto out = dir / "out";
    const PipelineConfig cfg = PipelineConfig::parse(demo_config(csv, out));

    const PipelineRun run = execute_run(cfg);
    CHECK(run.dataset.size() == 8);
    CHECK(*run.context.mu == doctest::Approx(42077.5));
    CHECK(run.summary.converged);

    bool pop_warning = false, coord_warning = false;
    for (const auto& w : run.summary.warnings) {
        if (w.find("population") != std::string::npos) pop_warning = true;
        if (w.find("unit-grid") != std::string::npos) coord_warning = true;
    }
    CHECK(pop_warning);
    CHECK(coord_warning);

    write_run_artifacts(run, cfg);
    const std::string memberships = read_file(out / "memberships.csv");
    CHECK(std::count(memberships.begin(), memberships.end(), '\n') == 9);  // header + 8 rows
    CHECK(memberships.rfind("id,u_1,u_2,u_3,f,cluster", 0) == 0);
    const std::string centers = read_file(out / "centers.csv");
    CHECK(std::count(centers.begin(), centers.end(), '\n') == 4);

    const auto summary = nlohmann::json::parse(read_file(out / "summary.json"));
    CHECK(summary["context"]["mu"].get<double>() == doctest::Approx(42077.5));
    CHECK(summary["dataset"]["n"] == 8);
    CHECK(summary["ifv"]["value"].get<double>() > 0.0);
    CHECK(summary["config"]["clustering"]["seed"] == 11);
    CHECK(summary["dataset"]["encodings"]["Occupation"][0] == "Student");
}

TEST_CASE("geojson output follows the FeatureCollection structure") {
    const auto dir = fixtures::temp_dir("pipe_geojson");
    const auto csv = fixtures::write_file(dir, "demo.csv", fixtures::kDemoCsv);
    const auto out = dir / "out";
    const PipelineConfig cfg = PipelineConfig::parse(demo_config(csv, out));
    const PipelineRun run = execute_run(cfg);
    write_run_artifacts(run, cfg);

    const auto geo = nlohmann::json::parse(read_file(out / "points.geojson"));
    REQUIRE(geo["type"] == "FeatureCollection");
    REQUIRE(geo["features"].is_array());
    REQUIRE(geo["features"].size() == 8);
    for (const auto& feature : geo["features"]) {
        CHECK(feature["type"] == "Feature");
        CHECK(feature["geometry"]["type"] == "Point");
        REQUIRE(feature["geometry"]["coordinates"].is_array());
        REQUIRE(feature["geometry"]["coordinates"].size() == 2);
        CHECK(feature["geometry"]["coordinates"][0].is_number());
        const auto& props = feature["properties"];
        CHECK(props.contains("id"));
        CHECK(props.contains("cluster"));
        CHECK(props.contains("f"));
        for (int j = 1; j <= 3; ++j)
            CHECK(props.contains("membership_" + std::to_string(j)));
        CHECK(props["synthetic_geometry"] == true);  // grid-defaulted coordinates
    }
}

TEST_CASE("unit context file with beta zero reproduces plain fcm") {
    const auto dir = fixtures::temp_dir("pipe_reduction");
    const auto csv = fixtures::write_file(dir, "demo.csv", fixtures::kDemoCsv);
    std::string ones;
    for (int i = 0; i < 8; ++i) ones += "1.0\n";
    const auto ctx_file = fixtures::write_file(dir, "ones.txt", ones);

    const PipelineConfig cfg = PipelineConfig::parse(
        "[data]\nfile = " + csv.string() + "\nid = Name\n" +
        "[context]\nmethod = file\nfile = " + ctx_file.string() + "\n" +
        "[clustering]\nc = 3\nalpha = 1\nbeta = 0\nseed = 7\n" +
        "[output]\ndir = " + (dir / "out").string() + "\n");
    const PipelineRun run = execute_run(cfg);

    FcmParams params;
    params.c = 3;
    params.seed = derive_seed(7, "init");  // the run seed the pipeline derives
    const ClusteringResult direct = fcm_run(run.dataset, params);
    CHECK(run.result.partition == direct.partition);
    CHECK(run.result.centers == direct.centers);
}

TEST_CASE("a missing data file fails before any artifact is written") {
    const auto dir = fixtures::temp_dir("pipe_missing");
    const auto out = dir / "out";
    const PipelineConfig cfg = PipelineConfig::parse(demo_config(dir / "absent.csv", out));
    try {
        const PipelineRun run = execute_run(cfg);
        write_run_artifacts(run, cfg);
        FAIL("expected a load error");
    } catch (const std::runtime_error&) {
    }
    CHECK_FALSE(fs::exists(out));
}

TEST_CASE("artifacts are identical across repeated runs") {
    const auto dir = fixtures::temp_dir("pipe_identical");
    const auto csv = fixtures::write_file(dir, "demo.csv", fixtures::kDemoCsv);
    const auto out = dir / "out";
    const PipelineConfig cfg = PipelineConfig::parse(demo_config(csv, out));

    write_run_artifacts(execute_run(cfg), cfg);
    const std::string memberships = read_file(out / "memberships.csv");
    const std::string centers = read_file(out / "centers.csv");
    const std::string geojson = read_file(out / "points.geojson");
    auto first = nlohmann::json::parse(read_file(out / "summary.json"));

    write_run_artifacts(execute_run(cfg), cfg);
    CHECK(read_file(out / "memberships.csv") == memberships);
    CHECK(read_file(out / "centers.csv") == centers);
    CHECK(read_file(out / "points.geojson") == geojson);

    auto second = nlohmann::json::parse(read_file(out / "summary.json"));
    first.erase("wall_ms");  // the one field that may differ between runs
    second.erase("wall_ms");
    CHECK(first == second);
}

TEST_CASE("comparison report over paired seeds") {
    const PipelineConfig cfg = PipelineConfig::parse(
        "[data]\nsynth = true\nn = 24\nblobs = 3\nsynth_seed = 2\n"
        "[context]\nmethod = f1\n"
        "[clustering]\nc = 3\nseed = 5\n"
        "[output]\ndir = unused\n");

    const CompareReport report = run_comparison(cfg, 3);
    CHECK(report.seeds == 3);
    CHECK(report.method_order == std::vector<std::string>{"f1", "f2", "random"});
    for (const auto& name : report.method_order)
        CHECK(report.methods.at(name).ifv.size() == 3);
    CHECK(report.pairwise.size() == 3);
    const CompareReport again = run_comparison(cfg, 3);
    CHECK(compare_json(report) == compare_json(again));

    const auto table = compare_table(report);
    CHECK(table.find("f1") != std::string::npos);
    CHECK(table.find("pairwise") != std::string::npos);

    PipelineConfig single = cfg;
    single.compare_methods = {ContextMethod::F2};
    const CompareReport lone = run_comparison(single, 1);
    CHECK(lone.pairwise.empty());
    CHECK(compare_json(lone).find("pairwise") == std::string::npos);

    CHECK_THROWS_AS(run_comparison(cfg, 0), std::invalid_argument);
}

TEST_CASE("normalize flag scales features but context sees raw values") {
    const auto dir = fixtures::temp_dir("pipe_norm");
    const auto csv = fixtures::write_file(dir, "demo.csv", fixtures::kDemoCsv);
    const PipelineConfig cfg =
        PipelineConfig::parse(demo_config(csv, dir / "out", "normalize = true\n"));
    const PipelineRun run = execute_run(cfg);
    CHECK(run.dataset.normalized);
    for (std::size_t k = 0; k < run.dataset.size(); ++k)
        for (std::size_t j = 0; j < run.dataset.dim(); ++j) {
            CHECK(run.dataset.features(k, j) >= 0.0);
            CHECK(run.dataset.features(k, j) <= 1.0);
        }
    CHECK(*run.context.mu == doctest::Approx(42077.5));  // raw income, not scaled
}

TEST_CASE("weights export round trips through the pipeline") {
    const auto dir = fixtures::temp_dir("pipe_weights");
    const auto csv = fixtures::write_file(dir, "demo.csv", fixtures::kDemoCsv);
    const auto out = dir / "out";
    PipelineConfig cfg = PipelineConfig::parse(demo_config(csv, out));
    cfg.export_weights = true;
    const PipelineRun run = execute_run(cfg);
    write_run_artifacts(run, cfg);
    const WeightMatrix back = read_weights_csv((out / "weights.csv").string());
    CHECK(back.size() == 8);

    // Re-injecting the exported matrix reproduces the run.
    PipelineConfig cfg2 = cfg;
    cfg2.weights_file = (out / "weights.csv").string();
    cfg2.out_dir = (dir / "out2").string();
    const PipelineRun run2 = execute_run(cfg2);
    CHECK(convergence_delta(run2.result.partition, run.result.partition) < 1e-9);
}

TEST_CASE("median helper") {
    CHECK(median({3.0, 1.0, 2.0}) == 2.0);
    CHECK(median({4.0, 1.0, 2.0, 3.0}) == doctest::Approx(2.5));
    CHECK_THROWS_AS(median({}), std::invalid_argument);
}
