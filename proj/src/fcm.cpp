#include "cfgwc/fcm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cfgwc/cfgwc.hpp"

namespace cfgwc {

PartitionMatrix init_partition(std::size_t n, std::size_t c,
                               const std::vector<double>& row_target, std::uint64_t seed) {
    if (c < 2) throw std::invalid_argument("init_partition: need at least 2 clusters");
    if (n < c) throw std::invalid_argument("init_partition: need n >= c");
    if (row_target.size() != n)
        throw std::invalid_argument("init_partition: row_target length must be n");
    for (std::size_t k = 0; k < n; ++k)
        if (!(row_target[k] > 0.0) || row_target[k] > 1.0)
            throw std::invalid_argument("init_partition: row target out of (0, 1] at row " +
                                        std::to_string(k + 1));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    PartitionMatrix out{Matrix(n, c), row_target};
    std::vector<double> g(c);
    for (std::size_t k = 0; k < n; ++k) {
        double sum = 0.0;
        for (std::size_t j = 0; j < c; ++j) {
            g[j] = 1.0 - unit(rng);  // (0, 1]
            sum += g[j];
        }
        const double scale = row_target[k] / sum;
        for (std::size_t j = 0; j < c; ++j) out.u(k, j) = g[j] * scale;
    }
    return out;
}

Centers update_centers(const Matrix& points, const PartitionMatrix& partition, double m) {
    const std::size_t n = points.rows();
    const std::size_t r = points.cols();
    const std::size_t c = partition.u.cols();
    if (partition.u.rows() != n) throw std::invalid_argument("update_centers: shape mismatch");
    if (!(m > 1.0)) throw std::invalid_argument("update_centers: m must be > 1");

    Centers centers{Matrix(c, r)};
    for (std::size_t j = 0; j < c; ++j) {
        double mass = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double w = std::pow(partition.u(k, j), m);
            mass += w;
            for (std::size_t d = 0; d < r; ++d) centers.v(j, d) += w * points(k, d);
        }
        if (!(mass > 0.0))
            throw std::runtime_error("update_centers: cluster " + std::to_string(j + 1) +
                                     " has zero total weight (degenerate cluster)");
        for (std::size_t d = 0; d < r; ++d) centers.v(j, d) /= mass;
    }
    return centers;
}

Centers update_centers(const Dataset& ds, const PartitionMatrix& partition, double m) {
    return update_centers(ds.features, partition, m);
}

PartitionMatrix update_memberships(const Matrix& points, const Centers& centers, double m) {
    return cfgwc_memberships(points, centers, std::vector<double>(points.rows(), 1.0), m);
}

PartitionMatrix update_memberships(const Dataset& ds, const Centers& centers, double m) {
    return update_memberships(ds.features, centers, m);
}

ClusteringResult fcm_run(const Matrix& points, const FcmParams& params) {
    CfgwcConfig config;
    config.c = params.c;
    config.m = params.m;
    config.alpha = 1.0;
    config.beta = 0.0;
    config.eps = params.eps;
    config.max_iter = params.max_iter;
    config.seed = params.seed;
    return cfgwc_run(points, std::vector<double>(points.rows(), 1.0), WeightMatrix{}, config);
}

ClusteringResult fcm_run(const Dataset& ds, const FcmParams& params) {
    return fcm_run(ds.features, params);
}

ClusteringResult fcm_run(const ContextSeries& series, const FcmParams& params) {
    Matrix points(series.values.size(), 1);
    for (std::size_t k = 0; k < series.values.size(); ++k) points(k, 0) = series.values[k];
    return fcm_run(points, params);
}

std::vector<std::size_t> align_clusters(const Centers& candidate, const Centers& reference) {
    const std::size_t c = candidate.count();
    if (reference.count() != c || candidate.v.cols() != reference.v.cols())
        throw std::invalid_argument("align_clusters: center shapes differ");
    if (c > 8) throw std::invalid_argument("align_clusters: exhaustive matching needs c <= 8");

    std::vector<std::size_t> perm(c);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> best = perm;
    double best_cost = -1.0;
    do {
        double cost = 0.0;
        for (std::size_t j = 0; j < c; ++j)
            cost += squared_distance(candidate.v.row(perm[j]), reference.v.row(j),
                                     candidate.v.cols());
        if (best_cost < 0.0 || cost < best_cost) {
            best_cost = cost;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

PartitionMatrix permute_columns(const PartitionMatrix& partition,
                                const std::vector<std::size_t>& perm) {
    const std::size_t c = partition.u.cols();
    if (perm.size() != c) throw std::invalid_argument("permute_columns: bad permutation size");
    PartitionMatrix out{Matrix(partition.u.rows(), c), partition.row_target};
    for (std::size_t k = 0; k < partition.u.rows(); ++k)
        for (std::size_t j = 0; j < c; ++j) out.u(k, j) = partition.u(k, perm[j]);
    return out;
}

}  // namespace cfgwc
