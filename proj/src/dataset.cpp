#include "cfgwc/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cfgwc {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Minimal CSV field splitter; handles double-quoted fields with "" escapes.
std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(trim(cur));
    return fields;
}

bool parse_double(const std::string& s, double& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && !s.empty();
}

std::size_t find_column(const std::vector<std::string>& header, const std::string& name,
                        const std::string& role) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
        throw std::runtime_error("column '" + name + "' (" + role + ") not found in header");
    return static_cast<std::size_t>(it - header.begin());
}

std::string format_cell(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

std::vector<double> encode_categoricals(const std::vector<std::string>& column,
                                        std::vector<std::string>* categories) {
    if (column.empty()) throw std::invalid_argument("encode_categoricals: empty column");
    std::vector<std::string> labels;
    std::vector<double> codes;
    codes.reserve(column.size());
    for (const auto& cell : column) {
        auto it = std::find(labels.begin(), labels.end(), cell);
        if (it == labels.end()) {
            labels.push_back(cell);
            it = labels.end() - 1;
        }
        codes.push_back(static_cast<double>(it - labels.begin()) + 1.0);
    }
    if (categories) *categories = labels;
    return codes;
}

Dataset load_csv(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    if (schema.id.empty()) throw std::invalid_argument("schema: id column is required");

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("'" + path + "': empty file");
    if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);  // UTF-8 BOM
    const auto header = split_csv_line(line);

    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw std::runtime_error("'" + path + "': row " + std::to_string(rows.size() + 1) +
                                     " has " + std::to_string(fields.size()) + " fields, expected " +
                                     std::to_string(header.size()));
        rows.push_back(std::move(fields));
    }
    const std::size_t n = rows.size();
    if (n < 2) throw std::runtime_error("'" + path + "': need at least 2 data rows, got " +
                                        std::to_string(n));

    const std::size_t id_col = find_column(header, schema.id, "id");
    const bool has_pop = !schema.population.empty();
    const std::size_t pop_col = has_pop ? find_column(header, schema.population, "population") : 0;
    const bool has_coords = !schema.coord_x.empty() || !schema.coord_y.empty();
    if (has_coords && (schema.coord_x.empty() || schema.coord_y.empty()))
        throw std::invalid_argument("schema: both coordinate columns are required");
    const std::size_t x_col = has_coords ? find_column(header, schema.coord_x, "coord x") : 0;
    const std::size_t y_col = has_coords ? find_column(header, schema.coord_y, "coord y") : 0;

    std::vector<std::size_t> feature_cols;
    if (!schema.features.empty()) {
        for (const auto& name : schema.features)
            feature_cols.push_back(find_column(header, name, "feature"));
    } else {
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (c == id_col || (has_pop && c == pop_col) ||
                (has_coords && (c == x_col || c == y_col)))
                continue;
            feature_cols.push_back(c);
        }
    }
    if (feature_cols.empty()) throw std::runtime_error("'" + path + "': no feature columns");

    Dataset ds;
    ds.ids.reserve(n);
    std::set<std::string> seen;
    for (std::size_t k = 0; k < n; ++k) {
        const std::string& id = rows[k][id_col];
        if (id.empty())
            throw std::runtime_error("'" + path + "': missing value at row " +
                                     std::to_string(k + 1) + ", column '" + schema.id + "'");
        if (!seen.insert(id).second)
            throw std::runtime_error("'" + path + "': duplicate id '" + id + "'");
        ds.ids.push_back(id);
    }

    // Column typing: every cell numeric -> numeric; none numeric -> encode;
    // a mixture is ambiguous and rejected.
    ds.features = Matrix(n, feature_cols.size());
    for (std::size_t fj = 0; fj < feature_cols.size(); ++fj) {
        const std::size_t col = feature_cols[fj];
        const std::string& name = header[col];
        ds.feature_names.push_back(name);

        std::size_t numeric = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const std::string& cell = rows[k][col];
            if (cell.empty())
                throw std::runtime_error("'" + path + "': missing value at row " +
                                         std::to_string(k + 1) + ", column '" + name + "'");
            double v;
            if (parse_double(cell, v)) ++numeric;
        }
        if (numeric == n) {
            for (std::size_t k = 0; k < n; ++k) {
                double v = 0.0;
                parse_double(rows[k][col], v);
                if (!std::isfinite(v))
                    throw std::runtime_error("'" + path + "': non-finite value at row " +
                                             std::to_string(k + 1) + ", column '" + name + "'");
                ds.features(k, fj) = v;
            }
        } else if (numeric == 0) {
            std::vector<std::string> cells;
            cells.reserve(n);
            for (std::size_t k = 0; k < n; ++k) cells.push_back(rows[k][col]);
            std::vector<std::string> labels;
            const auto codes = encode_categoricals(cells, &labels);
            for (std::size_t k = 0; k < n; ++k) ds.features(k, fj) = codes[k];
            ds.category_codes[name] = labels;
        } else {
            for (std::size_t k = 0; k < n; ++k) {
                double v;
                if (!parse_double(rows[k][col], v))
                    throw std::runtime_error("'" + path + "': unparseable cell at row " +
                                             std::to_string(k + 1) + ", column '" + name +
                                             "': '" + rows[k][col] + "'");
            }
        }
    }

    ds.populations.assign(n, 1.0);
    if (has_pop) {
        for (std::size_t k = 0; k < n; ++k) {
            const std::string& cell = rows[k][pop_col];
            if (cell.empty())
                throw std::runtime_error("'" + path + "': missing value at row " +
                                         std::to_string(k + 1) + ", column '" +
                                         schema.population + "'");
            double v;
            if (!parse_double(cell, v))
                throw std::runtime_error("'" + path + "': unparseable cell at row " +
                                         std::to_string(k + 1) + ", column '" +
                                         schema.population + "': '" + cell + "'");
            if (!(v > 0.0) || !std::isfinite(v))
                throw std::runtime_error("'" + path + "': population must be positive at row " +
                                         std::to_string(k + 1));
            ds.populations[k] = v;
        }
    } else {
        ds.default_population = true;
    }

    ds.coords = Matrix(n, 2);
    if (has_coords) {
        const std::size_t coord_cols[2] = {x_col, y_col};
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t fj = 0; fj < 2; ++fj) {
                const std::string& cell = rows[k][coord_cols[fj]];
                double v;
                if (cell.empty() || !parse_double(cell, v) || !std::isfinite(v))
                    throw std::runtime_error("'" + path + "': bad coordinate at row " +
                                             std::to_string(k + 1) + ", column '" +
                                             header[coord_cols[fj]] + "'");
                ds.coords(k, fj) = v;
            }
        }
    } else {
        // Unit grid by row index, so downstream distances are well defined.
        const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
        for (std::size_t k = 0; k < n; ++k) {
            ds.coords(k, 0) = static_cast<double>(k % side);
            ds.coords(k, 1) = static_cast<double>(k / side);
        }
        ds.default_coords = true;
    }
    return ds;
}

void write_csv(const Dataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "id";
    for (const auto& name : ds.feature_names) out << ',' << name;
    out << ",pop,gx,gy\n";
    const Matrix& feats = ds.normalized ? ds.raw_features : ds.features;
    for (std::size_t k = 0; k < ds.size(); ++k) {
        out << ds.ids[k];
        for (std::size_t j = 0; j < feats.cols(); ++j) out << ',' << format_cell(feats(k, j));
        out << ',' << format_cell(ds.populations[k]) << ',' << format_cell(ds.coords(k, 0)) << ','
            << format_cell(ds.coords(k, 1)) << '\n';
    }
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

ContextSeries extract_context(const Dataset& ds, const std::string& column) {
    const auto it = std::find(ds.feature_names.begin(), ds.feature_names.end(), column);
    if (it == ds.feature_names.end())
        throw std::invalid_argument("unknown feature column '" + column + "'");
    const auto j = static_cast<std::size_t>(it - ds.feature_names.begin());
    const Matrix& feats = ds.normalized ? ds.raw_features : ds.features;
    ContextSeries series;
    series.name = column;
    series.values.reserve(ds.size());
    for (std::size_t k = 0; k < ds.size(); ++k) series.values.push_back(feats(k, j));
    return series;
}

Dataset normalize_minmax(const Dataset& ds) {
    Dataset out = ds;
    out.raw_features = ds.normalized ? ds.raw_features : ds.features;
    out.normalized = true;
    for (std::size_t j = 0; j < out.raw_features.cols(); ++j) {
        double lo = out.raw_features(0, j), hi = lo;
        for (std::size_t k = 1; k < out.raw_features.rows(); ++k) {
            lo = std::min(lo, out.raw_features(k, j));
            hi = std::max(hi, out.raw_features(k, j));
        }
        const double span = hi - lo;
        for (std::size_t k = 0; k < out.raw_features.rows(); ++k)
            out.features(k, j) = span > 0.0 ? (out.raw_features(k, j) - lo) / span : 0.0;
    }
    return out;
}

Dataset generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed,
                           std::vector<std::size_t>* labels) {
    const std::size_t n = spec.n_areas;
    const std::size_t k = spec.n_clusters;
    if (k < 2 || n < k)
        throw std::invalid_argument("generate_synthetic: need n_areas >= n_clusters >= 2");
    if (!(spec.pop_min > 0.0) || spec.pop_max < spec.pop_min)
        throw std::invalid_argument("generate_synthetic: bad population range");
    if (!(spec.region_span > 0.0) || !(spec.region_sigma > 0.0))
        throw std::invalid_argument("generate_synthetic: bad region geometry");

    auto means = spec.means;
    auto spreads = spec.spreads;
    if (means.empty()) {
        // Default layout: a shared context attribute plus a segmenting one.
        means.resize(k);
        for (std::size_t c = 0; c < k; ++c) means[c] = {50.0, 100.0 * static_cast<double>(c)};
    }
    if (spreads.empty()) spreads.assign(k, {15.0, 4.0});
    if (means.size() != k || spreads.size() != k)
        throw std::invalid_argument("generate_synthetic: means/spreads must have one row per cluster");
    const std::size_t r = means[0].size();
    for (std::size_t c = 0; c < k; ++c) {
        if (means[c].size() != r || spreads[c].size() != r)
            throw std::invalid_argument("generate_synthetic: ragged means/spreads");
        for (double s : spreads[c])
            if (!(s > 0.0)) throw std::invalid_argument("generate_synthetic: spreads must be positive");
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // Blob regions on a circle so that feature blobs map to geographic areas.
    const double cx = spec.region_span / 2.0;
    const double radius = spec.region_span / 2.0;
    std::vector<std::pair<double, double>> regions(k);
    for (std::size_t c = 0; c < k; ++c) {
        const double ang = 2.0 * M_PI * static_cast<double>(c) / static_cast<double>(k);
        regions[c] = {cx + radius * std::cos(ang), cx + radius * std::sin(ang)};
    }

    Dataset ds;
    ds.features = Matrix(n, r);
    ds.coords = Matrix(n, 2);
    ds.populations.resize(n);
    ds.ids.reserve(n);
    if (labels) labels->resize(n);

    std::size_t width = 1;
    for (std::size_t v = n; v >= 10; v /= 10) ++width;
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t c = t % k;  // round-robin blob assignment
        if (labels) (*labels)[t] = c;
        const std::string num = std::to_string(t);
        ds.ids.push_back("a" + std::string(width - num.size(), '0') + num);
        for (std::size_t j = 0; j < r; ++j)
            ds.features(t, j) = means[c][j] + spreads[c][j] * gauss(rng);
        ds.coords(t, 0) = regions[c].first + spec.region_sigma * gauss(rng);
        ds.coords(t, 1) = regions[c].second + spec.region_sigma * gauss(rng);
        ds.populations[t] = spec.pop_min + (spec.pop_max - spec.pop_min) * unit(rng);
    }
    for (std::size_t j = 0; j < r; ++j) ds.feature_names.push_back("x" + std::to_string(j));
    return ds;
}

}  // namespace cfgwc
