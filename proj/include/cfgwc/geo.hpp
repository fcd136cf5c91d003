#pragma once

#include <string>
#include <vector>

#include "cfgwc/core.hpp"

namespace cfgwc {

enum class DistanceMetric { Euclidean, Haversine };

DistanceMetric parse_metric(const std::string& name);

/// Symmetric N x N distance matrix with zero diagonal. Haversine expects
/// (lon, lat) in degrees and returns kilometers on a 6371 km sphere.
Matrix pairwise_distances(const Matrix& coords, DistanceMetric metric);

/// Gravity-model spatial influence weights: w[i][j] = (pop_i*pop_j)^b / d_ij^a
/// off the diagonal, 0 on it. Symmetric and non-negative by construction.
struct WeightMatrix {
    Matrix w;
    std::size_t size() const { return w.rows(); }
};

/// Throws if two distinct areas coincide (d = 0): any floor value would
/// silently dominate the matrix, so the caller must jitter or merge them.
WeightMatrix gravity_weights(const std::vector<double>& populations,
                             const Matrix& distances, double a, double b);

// Row-major CSV, N header-less rows; lets externally computed weights
// (e.g. road-network based) be injected.
void write_weights_csv(const WeightMatrix& wm, const std::string& path);
WeightMatrix read_weights_csv(const std::string& path);

}  // namespace cfgwc
