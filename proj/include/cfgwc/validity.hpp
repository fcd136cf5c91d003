#pragma once

#include <vector>

#include "cfgwc/dataset.hpp"
#include "cfgwc/fcm.hpp"

namespace cfgwc {

/// IFV spatial cluster-validity index; larger is better.
///
/// IFV = mean_j [ mean_k(u_kj^2) * (log2 C - mean_k(log2 u_kj))^2 ]
///       * sd_max / sigma_bar
///
/// The entropy bracket is a per-cluster constant multiplying the mean
/// squared membership. Memberships are used as-is (row sums may be f_k < 1);
/// zeros are clamped at 1e-12 so the log is defined, and the report says
/// when that happened.
struct IfvReport {
    double ifv = 0.0;
    double sd_max = 0.0;
    double sigma_bar = 0.0;
    std::vector<double> per_cluster_terms;
    std::size_t clamped = 0;          // memberships raised to 1e-12
    bool degenerate_centers = false;  // sd_max == 0, forcing ifv == 0
};

/// Maximum squared distance between any two centers.
double sd_max(const Centers& centers);

/// Mean over clusters of the mean squared point-to-center distance.
double sigma_bar(const Matrix& points, const Centers& centers);
double sigma_bar(const Dataset& ds, const Centers& centers);

IfvReport ifv(const Matrix& points, const PartitionMatrix& partition, const Centers& centers);
IfvReport ifv(const Dataset& ds, const PartitionMatrix& partition, const Centers& centers);

}  // namespace cfgwc
