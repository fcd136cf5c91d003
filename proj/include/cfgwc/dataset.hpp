#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cfgwc/core.hpp"

namespace cfgwc {

/// Geo-demographic dataset: N points in r-dimensional feature space, each
/// with a planar (or lon/lat) coordinate pair and a population count.
/// Treated as immutable once built; safe to share across concurrent runs.
struct Dataset {
    std::vector<std::string> ids;
    Matrix features;  // N x r
    std::vector<std::string> feature_names;
    Matrix coords;  // N x 2
    std::vector<double> populations;

    // Set when the source had no coordinate / population columns and the
    // loader substituted unit-grid positions resp. 1.0.
    bool default_coords = false;
    bool default_population = false;

    // Present when min-max normalization was applied; keeps the raw values
    // so context extraction still sees the original attribute.
    bool normalized = false;
    Matrix raw_features;

    // Per-column category labels, in code order (code = index + 1), for
    // columns that were encoded at load time.
    std::map<std::string, std::vector<std::string>> category_codes;

    std::size_t size() const { return ids.size(); }
    std::size_t dim() const { return features.cols(); }
};

/// Raw values of one context attribute, in dataset row order.
struct ContextSeries {
    std::vector<double> values;
    std::string name;
};

/// Column-role mapping for load_csv. Columns not claimed by a role become
/// features unless an explicit feature list is given.
struct CsvSchema {
    std::string id;                     // required
    std::string population;             // optional; empty -> 1.0 per row
    std::string coord_x, coord_y;       // optional pair; empty -> unit grid
    std::vector<std::string> features;  // optional; empty -> all remaining
};

/// Loads a CSV with a header row. Text columns are encoded via
/// encode_categoricals; blank cells are rejected with row/column info.
Dataset load_csv(const std::string& path, const CsvSchema& schema);

/// Writes id, features, population and coordinates back to CSV.
/// Numeric cells are emitted at 6 decimal places.
void write_csv(const Dataset& ds, const std::string& path);

/// Maps each distinct string to 1.0, 2.0, ... in order of first appearance.
/// If `categories` is given it receives the labels in code order.
std::vector<double> encode_categoricals(const std::vector<std::string>& column,
                                        std::vector<std::string>* categories = nullptr);

/// Returns the raw (pre-normalization) values of one feature column.
ContextSeries extract_context(const Dataset& ds, const std::string& column);

/// Min-max scales every feature column to [0,1]; raw values are kept on the
/// returned dataset. Constant columns map to 0.
Dataset normalize_minmax(const Dataset& ds);

/// Parameters for the synthetic benchmark generator. Points are drawn from
/// n_clusters feature blobs in round-robin row order; each blob owns a
/// geographic region so spatial proximity tracks feature similarity.
///
/// The default feature layout (for empty means/spreads) has two dimensions:
/// a population-wide context attribute ~ N(50, 15^2), identical across
/// blobs, and a segmenting attribute with blob means 0, 100, 200, ...
/// (spread 4) that carries the cluster structure.
struct SyntheticSpec {
    std::size_t n_areas = 60;
    std::size_t n_clusters = 3;
    std::vector<std::vector<double>> means;    // n_clusters x r; empty -> defaults
    std::vector<std::vector<double>> spreads;  // n_clusters x r; empty -> defaults
    double region_span = 100.0;   // blob regions sit on a circle of this diameter
    double region_sigma = 3.0;    // in-region coordinate scatter
    double pop_min = 500.0;
    double pop_max = 5000.0;
};

/// Deterministic for a fixed seed. If `labels` is non-null it receives the
/// generating blob index of each row (row t belongs to blob t % n_clusters).
Dataset generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed,
                           std::vector<std::size_t>* labels = nullptr);

}  // namespace cfgwc
