#include "cfgwc/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cfgwc {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(trim(item));
    return parts;
}

using Section = std::map<std::string, std::string>;
using IniData = std::map<std::string, Section>;

IniData parse_ini(const std::string& text) {
    IniData data;
    std::string section;
    std::stringstream ss(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            data[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key = value");
        if (section.empty())
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": key outside any [section]");
        data[section][trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return data;
}

bool to_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw std::runtime_error("config: " + key + " must be a boolean, got '" + v + "'");
}

double to_double(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw std::runtime_error("config: " + key + " must be a number, got '" + v + "'");
    }
}

std::uint64_t to_u64(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const unsigned long long u = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return u;
    } catch (const std::exception&) {
        throw std::runtime_error("config: " + key + " must be a non-negative integer, got '" + v +
                                 "'");
    }
}

ContextMethod parse_method(const std::string& v) {
    if (v == "f1") return ContextMethod::F1;
    if (v == "f2") return ContextMethod::F2;
    if (v == "random") return ContextMethod::Random;
    if (v == "file") return ContextMethod::File;
    throw std::runtime_error("config: unknown context method '" + v + "'");
}

// Per-cluster vectors: "v,v,...;v,v,...". One row per cluster.
std::vector<std::vector<double>> parse_rows(const std::string& v, const std::string& key) {
    std::vector<std::vector<double>> rows;
    for (const auto& part : split(v, ';')) {
        std::vector<double> row;
        for (const auto& cell : split(part, ',')) row.push_back(to_double(cell, key));
        rows.push_back(std::move(row));
    }
    return rows;
}

void reject_unknown(const IniData& data,
                    const std::map<std::string, std::set<std::string>>& known) {
    for (const auto& [section, entries] : data) {
        const auto it = known.find(section);
        if (it == known.end()) throw std::runtime_error("config: unknown section [" + section + "]");
        for (const auto& [key, value] : entries)
            if (!it->second.count(key))
                throw std::runtime_error("config: unknown key '" + key + "' in [" + section + "]");
    }
}

std::string format6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

ContextVector make_context(const PipelineConfig& cfg, ContextMethod method, const Dataset& ds,
                           std::uint64_t context_seed) {
    switch (method) {
        case ContextMethod::F2: {
            const std::string column =
                cfg.context_column.empty() ? ds.feature_names.front() : cfg.context_column;
            return context_f2(extract_context(ds, column));
        }
        case ContextMethod::F1: {
            const std::string column =
                cfg.context_column.empty() ? ds.feature_names.front() : cfg.context_column;
            FcmParams params;
            params.c = cfg.clustering.c;
            params.m = cfg.clustering.m;
            params.eps = cfg.clustering.eps;
            params.max_iter = cfg.clustering.max_iter;
            params.seed = context_seed;
            return context_f1(extract_context(ds, column), cfg.clustering.c, cfg.f1_target,
                              params);
        }
        case ContextMethod::Random:
            return context_random(ds.size(), context_seed);
        case ContextMethod::File: {
            if (cfg.context_file.empty())
                throw std::runtime_error("config: context method 'file' needs file=");
            ContextVector ctx = context_from_file(cfg.context_file);
            if (ctx.size() != ds.size())
                throw std::runtime_error("context file has " + std::to_string(ctx.size()) +
                                         " values but the dataset has " +
                                         std::to_string(ds.size()) + " rows");
            return ctx;
        }
    }
    throw std::logic_error("unreachable context method");
}

WeightMatrix build_weights(const PipelineConfig& cfg, const Dataset& ds) {
    if (!cfg.weights_file.empty()) {
        WeightMatrix wm = read_weights_csv(cfg.weights_file);
        if (wm.size() != ds.size())
            throw std::runtime_error("weights file is " + std::to_string(wm.size()) +
                                     " x " + std::to_string(wm.size()) + " but the dataset has " +
                                     std::to_string(ds.size()) + " rows");
        return wm;
    }
    const Matrix dist = pairwise_distances(ds.coords, cfg.metric);
    return gravity_weights(ds.populations, dist, cfg.clustering.a, cfg.clustering.b);
}

std::string target_string(const F1Target& target) {
    switch (target.kind) {
        case F1Target::Kind::Highest: return "highest";
        case F1Target::Kind::Lowest: return "lowest";
        case F1Target::Kind::RowMax: return "rowmax";
        case F1Target::Kind::Index: return std::to_string(target.index + 1);
    }
    return "?";
}

ordered_json config_echo(const PipelineConfig& cfg) {
    ordered_json j;
    if (cfg.synth) {
        j["data"] = {{"synth", true},
                     {"n", cfg.synth_spec.n_areas},
                     {"blobs", cfg.synth_spec.n_clusters},
                     {"synth_seed", cfg.synth_seed},
                     {"region_span", cfg.synth_spec.region_span},
                     {"region_sigma", cfg.synth_spec.region_sigma},
                     {"pop_min", cfg.synth_spec.pop_min},
                     {"pop_max", cfg.synth_spec.pop_max}};
    } else {
        j["data"] = {{"file", cfg.data_file}, {"id", cfg.schema.id}};
    }
    j["data"]["normalize"] = cfg.normalize;
    j["context"] = {{"method", to_string(cfg.method)}};
    if (!cfg.context_column.empty()) j["context"]["column"] = cfg.context_column;
    if (cfg.method == ContextMethod::F1) j["context"]["target"] = target_string(cfg.f1_target);
    if (!cfg.context_file.empty()) j["context"]["file"] = cfg.context_file;
    j["geo"] = {{"metric", cfg.metric == DistanceMetric::Euclidean ? "euclidean" : "haversine"},
                {"a", cfg.clustering.a},
                {"b", cfg.clustering.b}};
    if (!cfg.weights_file.empty()) j["geo"]["weights_file"] = cfg.weights_file;
    j["clustering"] = {{"c", cfg.clustering.c},     {"m", cfg.clustering.m},
                       {"alpha", cfg.clustering.alpha}, {"beta", cfg.clustering.beta},
                       {"eps", cfg.clustering.eps}, {"max_iter", cfg.clustering.max_iter},
                       {"seed", cfg.clustering.seed}};
    j["output"] = {{"dir", cfg.out_dir},
                   {"geojson", cfg.write_geojson},
                   {"weights", cfg.export_weights}};
    return j;
}

ordered_json context_block(const ContextVector& ctx, const PipelineConfig& cfg) {
    ordered_json j;
    j["method"] = to_string(ctx.method);
    if (ctx.method == ContextMethod::F1 || ctx.method == ContextMethod::F2) {
        j["column"] = cfg.context_column;
    }
    if (ctx.mu) j["mu"] = *ctx.mu;
    if (ctx.sigma) j["sigma"] = *ctx.sigma;
    if (ctx.cluster) j["cluster"] = *ctx.cluster + 1;
    if (ctx.cluster_center) j["cluster_center"] = *ctx.cluster_center;
    if (ctx.clamped > 0) j["clamped"] = ctx.clamped;
    if (!ctx.source.empty()) j["source"] = ctx.source;
    return j;
}

}  // namespace

PipelineConfig PipelineConfig::parse(const std::string& text) {
    static const std::map<std::string, std::set<std::string>> known = {
        {"data",
         {"file", "id", "population", "coords", "features", "normalize", "synth", "n", "blobs",
          "synth_seed", "means", "spreads", "region_span", "region_sigma", "pop_min", "pop_max"}},
        {"context", {"method", "column", "target", "file", "methods"}},
        {"geo", {"metric", "a", "b", "weights_file"}},
        {"clustering", {"c", "m", "alpha", "beta", "eps", "max_iter", "seed"}},
        {"output", {"dir", "geojson", "weights"}},
    };
    const IniData data = parse_ini(text);
    reject_unknown(data, known);

    PipelineConfig cfg;
    const auto get = [&](const std::string& section, const std::string& key) -> const std::string* {
        const auto sit = data.find(section);
        if (sit == data.end()) return nullptr;
        const auto kit = sit->second.find(key);
        return kit == sit->second.end() ? nullptr : &kit->second;
    };

    if (const auto* v = get("clustering", "c")) cfg.clustering.c = to_u64(*v, "clustering.c");
    if (const auto* v = get("clustering", "m")) cfg.clustering.m = to_double(*v, "clustering.m");
    if (const auto* v = get("clustering", "alpha"))
        cfg.clustering.alpha = to_double(*v, "clustering.alpha");
    if (const auto* v = get("clustering", "beta"))
        cfg.clustering.beta = to_double(*v, "clustering.beta");
    if (const auto* v = get("clustering", "eps")) cfg.clustering.eps = to_double(*v, "clustering.eps");
    if (const auto* v = get("clustering", "max_iter"))
        cfg.clustering.max_iter = to_u64(*v, "clustering.max_iter");
    if (const auto* v = get("clustering", "seed")) cfg.clustering.seed = to_u64(*v, "clustering.seed");

    if (const auto* v = get("data", "synth")) cfg.synth = to_bool(*v, "data.synth");
    if (const auto* v = get("data", "file")) cfg.data_file = *v;
    if (const auto* v = get("data", "id")) cfg.schema.id = *v;
    if (const auto* v = get("data", "population")) cfg.schema.population = *v;
    if (const auto* v = get("data", "coords")) {
        const auto parts = split(*v, ',');
        if (parts.size() != 2) throw std::runtime_error("config: data.coords needs two column names");
        cfg.schema.coord_x = parts[0];
        cfg.schema.coord_y = parts[1];
    }
    if (const auto* v = get("data", "features")) cfg.schema.features = split(*v, ',');
    if (const auto* v = get("data", "normalize")) cfg.normalize = to_bool(*v, "data.normalize");
    cfg.synth_spec.n_clusters = cfg.clustering.c;
    if (const auto* v = get("data", "n")) cfg.synth_spec.n_areas = to_u64(*v, "data.n");
    if (const auto* v = get("data", "blobs")) cfg.synth_spec.n_clusters = to_u64(*v, "data.blobs");
    if (const auto* v = get("data", "synth_seed")) cfg.synth_seed = to_u64(*v, "data.synth_seed");
    if (const auto* v = get("data", "means")) cfg.synth_spec.means = parse_rows(*v, "data.means");
    if (const auto* v = get("data", "spreads"))
        cfg.synth_spec.spreads = parse_rows(*v, "data.spreads");
    if (const auto* v = get("data", "region_span"))
        cfg.synth_spec.region_span = to_double(*v, "data.region_span");
    if (const auto* v = get("data", "region_sigma"))
        cfg.synth_spec.region_sigma = to_double(*v, "data.region_sigma");
    if (const auto* v = get("data", "pop_min")) cfg.synth_spec.pop_min = to_double(*v, "data.pop_min");
    if (const auto* v = get("data", "pop_max")) cfg.synth_spec.pop_max = to_double(*v, "data.pop_max");

    if (const auto* v = get("context", "method")) cfg.method = parse_method(*v);
    if (const auto* v = get("context", "column")) cfg.context_column = *v;
    if (const auto* v = get("context", "target")) cfg.f1_target = F1Target::parse(*v);
    if (const auto* v = get("context", "file")) cfg.context_file = *v;
    if (const auto* v = get("context", "methods"))
        for (const auto& name : split(*v, ',')) cfg.compare_methods.push_back(parse_method(name));

    if (const auto* v = get("geo", "metric")) cfg.metric = parse_metric(*v);
    if (const auto* v = get("geo", "a")) cfg.clustering.a = to_double(*v, "geo.a");
    if (const auto* v = get("geo", "b")) cfg.clustering.b = to_double(*v, "geo.b");
    if (const auto* v = get("geo", "weights_file")) cfg.weights_file = *v;

    if (const auto* v = get("output", "dir")) cfg.out_dir = *v;
    if (const auto* v = get("output", "geojson")) cfg.write_geojson = to_bool(*v, "output.geojson");
    if (const auto* v = get("output", "weights")) cfg.export_weights = to_bool(*v, "output.weights");

    if (!cfg.synth && cfg.data_file.empty())
        throw std::runtime_error("config: [data] needs either file= or synth=true");
    if (!cfg.synth && cfg.schema.id.empty())
        throw std::runtime_error("config: [data] id= is required for CSV input");
    cfg.clustering.validate();
    return cfg;
}

PipelineConfig PipelineConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

PipelineRun execute_run(const PipelineConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    PipelineRun run;
    run.dataset = cfg.synth ? generate_synthetic(cfg.synth_spec, cfg.synth_seed)
                            : load_csv(cfg.data_file, cfg.schema);
    if (cfg.normalize) run.dataset = normalize_minmax(run.dataset);

    PipelineConfig effective = cfg;
    if (effective.context_column.empty()) effective.context_column = run.dataset.feature_names.front();
    run.context = make_context(effective, cfg.method, run.dataset,
                               derive_seed(cfg.clustering.seed, "context"));

    const bool needs_weights = cfg.clustering.beta > 0.0 || cfg.export_weights;
    if (needs_weights) run.weights = build_weights(cfg, run.dataset);

    CfgwcConfig cc = cfg.clustering;
    cc.seed = derive_seed(cfg.clustering.seed, "init");
    run.result = cfgwc_run(run.dataset, run.context, run.weights, cc);

    RunSummary& s = run.summary;
    s.context_method = to_string(run.context.method);
    s.iterations = run.result.iterations;
    s.converged = run.result.converged;
    s.final_objective = run.result.objective_trace.empty() ? 0.0 : run.result.objective_trace.back();
    s.validity = ifv(run.dataset, run.result.partition, run.result.centers);

    if (run.dataset.default_population)
        s.warnings.push_back("population column absent; defaulted to 1.0 per area");
    if (run.dataset.default_coords)
        s.warnings.push_back("coordinate columns absent; synthetic unit-grid geography in use");
    if (run.context.clamped > 0)
        s.warnings.push_back("context: " + std::to_string(run.context.clamped) +
                             " value(s) clamped to the 1e-06 floor");
    if (needs_weights && cfg.clustering.beta > 0.0) {
        std::vector<std::string> isolated;
        for (std::size_t k = 0; k < run.weights.size(); ++k) {
            double total = 0.0;
            for (std::size_t i = 0; i < run.weights.size(); ++i)
                if (i != k) total += run.weights.w(k, i);
            if (total == 0.0) isolated.push_back(run.dataset.ids[k]);
        }
        if (!isolated.empty()) {
            std::string msg = "isolated areas with zero spatial weight:";
            for (const auto& id : isolated) msg += " " + id;
            s.warnings.push_back(msg);
        }
    }
    if (!run.result.converged)
        s.warnings.push_back("clustering hit max_iter without meeting eps");
    if (s.validity.clamped > 0)
        s.warnings.push_back("ifv: " + std::to_string(s.validity.clamped) +
                             " membership(s) clamped to 1e-12 for the entropy term");
    if (s.validity.degenerate_centers)
        s.warnings.push_back("ifv: identical centers (sd_max = 0)");

    s.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    return run;
}

std::string emit_geojson(const Dataset& ds, const PartitionMatrix& partition,
                         const ContextVector& context) {
    if (partition.u.rows() != ds.size() || context.size() != ds.size())
        throw std::invalid_argument("emit_geojson: shape mismatch");
    const std::size_t c = partition.u.cols();
    ordered_json root;
    root["type"] = "FeatureCollection";
    root["features"] = ordered_json::array();
    for (std::size_t k = 0; k < ds.size(); ++k) {
        ordered_json feature;
        feature["type"] = "Feature";
        feature["geometry"] = {{"type", "Point"},
                               {"coordinates", {ds.coords(k, 0), ds.coords(k, 1)}}};
        ordered_json props;
        props["id"] = ds.ids[k];
        std::size_t arg = 0;
        for (std::size_t j = 1; j < c; ++j)
            if (partition.u(k, j) > partition.u(k, arg)) arg = j;
        props["cluster"] = arg + 1;
        for (std::size_t j = 0; j < c; ++j)
            props["membership_" + std::to_string(j + 1)] = partition.u(k, j);
        props["f"] = context.f[k];
        if (ds.default_coords) props["synthetic_geometry"] = true;
        feature["properties"] = std::move(props);
        root["features"].push_back(std::move(feature));
    }
    return root.dump(2) + "\n";
}

std::string summary_json(const PipelineRun& run, const PipelineConfig& cfg) {
    ordered_json j;
    j["config"] = config_echo(cfg);
    ordered_json dsj = {{"n", run.dataset.size()}, {"r", run.dataset.dim()}};
    dsj["feature_names"] = run.dataset.feature_names;
    if (!run.dataset.category_codes.empty()) {
        ordered_json enc;
        for (const auto& [column, labels] : run.dataset.category_codes) enc[column] = labels;
        dsj["encodings"] = enc;
    }
    j["dataset"] = dsj;
    PipelineConfig effective = cfg;
    if (effective.context_column.empty() && !run.dataset.feature_names.empty())
        effective.context_column = run.dataset.feature_names.front();
    j["context"] = context_block(run.context, effective);
    j["clustering"] = {{"iterations", run.summary.iterations},
                       {"converged", run.summary.converged},
                       {"final_objective", run.summary.final_objective}};
    j["ifv"] = {{"value", run.summary.validity.ifv},
                {"sd_max", run.summary.validity.sd_max},
                {"sigma_bar", run.summary.validity.sigma_bar},
                {"per_cluster_terms", run.summary.validity.per_cluster_terms},
                {"clamped", run.summary.validity.clamped},
                {"degenerate_centers", run.summary.validity.degenerate_centers}};
    j["wall_ms"] = run.summary.wall_ms;
    j["warnings"] = run.summary.warnings;
    return j.dump(2) + "\n";
}

void write_run_artifacts(const PipelineRun& run, const PipelineConfig& cfg) {
    const std::size_t c = run.result.partition.u.cols();

    // Build every artifact in memory first so a failure leaves nothing behind.
    std::string memberships = "id";
    for (std::size_t j = 1; j <= c; ++j) memberships += ",u_" + std::to_string(j);
    memberships += ",f,cluster\n";
    for (std::size_t k = 0; k < run.dataset.size(); ++k) {
        memberships += run.dataset.ids[k];
        std::size_t arg = 0;
        for (std::size_t j = 0; j < c; ++j) {
            memberships += ',' + format6(run.result.partition.u(k, j));
            if (run.result.partition.u(k, j) > run.result.partition.u(k, arg)) arg = j;
        }
        memberships += ',' + format6(run.context.f[k]) + ',' + std::to_string(arg + 1) + '\n';
    }

    std::string centers = "cluster";
    for (const auto& name : run.dataset.feature_names) centers += ',' + name;
    centers += '\n';
    for (std::size_t j = 0; j < c; ++j) {
        centers += std::to_string(j + 1);
        for (std::size_t d = 0; d < run.result.centers.v.cols(); ++d)
            centers += ',' + format6(run.result.centers.v(j, d));
        centers += '\n';
    }

    const std::string summary = summary_json(run, cfg);
    const std::string geojson =
        cfg.write_geojson ? emit_geojson(run.dataset, run.result.partition, run.context) : "";

    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    const auto write_file = [&](const std::string& name, const std::string& content) {
        const fs::path path = fs::path(cfg.out_dir) / name;
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
        out << content;
        if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
    };
    write_file("memberships.csv", memberships);
    write_file("centers.csv", centers);
    write_file("summary.json", summary);
    if (cfg.write_geojson) write_file("points.geojson", geojson);
    if (cfg.export_weights)
        write_weights_csv(run.weights, (fs::path(cfg.out_dir) / "weights.csv").string());
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of empty set");
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

CompareReport run_comparison(const PipelineConfig& cfg, std::size_t seeds) {
    if (seeds == 0) throw std::invalid_argument("compare: seeds must be >= 1");
    std::vector<ContextMethod> methods = cfg.compare_methods;
    if (methods.empty())
        methods = {ContextMethod::F1, ContextMethod::F2, ContextMethod::Random};
    for (const auto m : methods)
        if (m == ContextMethod::File)
            throw std::invalid_argument("compare: methods must be among f1, f2, random");

    Dataset ds = cfg.synth ? generate_synthetic(cfg.synth_spec, cfg.synth_seed)
                           : load_csv(cfg.data_file, cfg.schema);
    if (cfg.normalize) ds = normalize_minmax(ds);
    const WeightMatrix weights =
        cfg.clustering.beta > 0.0 ? build_weights(cfg, ds) : WeightMatrix{};

    PipelineConfig effective = cfg;
    if (effective.context_column.empty()) effective.context_column = ds.feature_names.front();

    CompareReport report;
    report.seeds = seeds;
    report.base_seed = cfg.clustering.seed;
    for (const auto method : methods) {
        const std::string name = to_string(method);
        if (report.methods.count(name)) continue;
        report.method_order.push_back(name);
        MethodStats stats;
        for (std::size_t i = 0; i < seeds; ++i) {
            const std::uint64_t run_seed =
                derive_seed(cfg.clustering.seed, "compare-" + std::to_string(i));
            const ContextVector ctx =
                make_context(effective, method, ds, derive_seed(run_seed, "context"));
            CfgwcConfig cc = cfg.clustering;
            cc.seed = derive_seed(run_seed, "init");
            const ClusteringResult res = cfgwc_run(ds, ctx, weights, cc);
            stats.ifv.push_back(ifv(ds, res.partition, res.centers).ifv);
        }
        stats.median = median(stats.ifv);
        stats.min = *std::min_element(stats.ifv.begin(), stats.ifv.end());
        stats.max = *std::max_element(stats.ifv.begin(), stats.ifv.end());
        report.methods[name] = std::move(stats);
    }

    for (std::size_t i = 0; i < report.method_order.size(); ++i) {
        for (std::size_t j = i + 1; j < report.method_order.size(); ++j) {
            const auto& a = report.method_order[i];
            const auto& b = report.method_order[j];
            CompareReport::Wins wins;
            for (std::size_t s = 0; s < seeds; ++s) {
                const double va = report.methods[a].ifv[s];
                const double vb = report.methods[b].ifv[s];
                if (va > vb)
                    ++wins.first;
                else if (vb > va)
                    ++wins.second;
                else
                    ++wins.ties;
            }
            report.pairwise[a + "_vs_" + b] = wins;
        }
    }
    return report;
}

std::string compare_json(const CompareReport& report) {
    ordered_json j;
    j["seeds"] = report.seeds;
    j["base_seed"] = report.base_seed;
    ordered_json methods;
    for (const auto& name : report.method_order) {
        const auto& stats = report.methods.at(name);
        methods[name] = {{"ifv", stats.ifv},
                         {"median", stats.median},
                         {"min", stats.min},
                         {"max", stats.max}};
    }
    j["methods"] = methods;
    if (report.method_order.size() > 1) {
        ordered_json pw;
        for (const auto& [key, wins] : report.pairwise)
            pw[key] = {{"first", wins.first}, {"second", wins.second}, {"ties", wins.ties}};
        j["pairwise"] = pw;
    }
    return j.dump(2) + "\n";
}

std::string compare_table(const CompareReport& report) {
    char buf[160];
    std::string out = "method      median         min         max\n";
    for (const auto& name : report.method_order) {
        const auto& stats = report.methods.at(name);
        std::snprintf(buf, sizeof(buf), "%-8s %11.6f %11.6f %11.6f\n", name.c_str(), stats.median,
                      stats.min, stats.max);
        out += buf;
    }
    if (report.method_order.size() > 1) {
        out += "pairwise IFV wins (first/second/tie):\n";
        for (const auto& [key, wins] : report.pairwise) {
            std::snprintf(buf, sizeof(buf), "  %-20s %zu/%zu/%zu\n", key.c_str(), wins.first,
                          wins.second, wins.ties);
            out += buf;
        }
    }
    return out;
}

}  // namespace cfgwc
