#pragma once

#include <cstdint>
#include <vector>

#include "cfgwc/core.hpp"
#include "cfgwc/dataset.hpp"

namespace cfgwc {

/// N x C membership matrix. Row k sums to row_target[k]: 1.0 for plain FCM,
/// the context value f_k for the constrained scheme.
struct PartitionMatrix {
    Matrix u;
    std::vector<double> row_target;

    friend bool operator==(const PartitionMatrix&, const PartitionMatrix&) = default;
};

struct Centers {
    Matrix v;  // C x r
    std::size_t count() const { return v.rows(); }

    friend bool operator==(const Centers&, const Centers&) = default;
};

struct ClusteringResult {
    PartitionMatrix partition;
    Centers centers;
    std::vector<double> objective_trace;  // one value per iteration
    std::size_t iterations = 0;
    bool converged = false;
};

struct FcmParams {
    std::size_t c = 3;
    double m = 2.0;
    double eps = 1e-5;
    std::size_t max_iter = 300;
    std::uint64_t seed = 0;
};

/// Random start: each row is c uniform positives rescaled to its target sum.
/// Deterministic for a fixed seed. Targets must lie in (0, 1].
PartitionMatrix init_partition(std::size_t n, std::size_t c,
                               const std::vector<double>& row_target, std::uint64_t seed);

/// Each center is the u^m-weighted mean of the points. Throws if a cluster
/// has zero total weight.
Centers update_centers(const Matrix& points, const PartitionMatrix& partition, double m);
Centers update_centers(const Dataset& ds, const PartitionMatrix& partition, double m);

/// Plain FCM membership update (row sums 1). A point coinciding with
/// exactly one center takes membership 1 there; ties split equally.
PartitionMatrix update_memberships(const Matrix& points, const Centers& centers, double m);
PartitionMatrix update_memberships(const Dataset& ds, const Centers& centers, double m);

/// Alternates center and membership updates until the max-abs partition
/// change drops below eps or max_iter is reached.
ClusteringResult fcm_run(const Matrix& points, const FcmParams& params);
ClusteringResult fcm_run(const Dataset& ds, const FcmParams& params);
ClusteringResult fcm_run(const ContextSeries& series, const FcmParams& params);

/// Permutation p such that candidate column p[j] best matches reference
/// column j, by minimal total center distance (exhaustive; c must be small).
std::vector<std::size_t> align_clusters(const Centers& candidate, const Centers& reference);

PartitionMatrix permute_columns(const PartitionMatrix& partition,
                                const std::vector<std::size_t>& perm);

}  // namespace cfgwc
