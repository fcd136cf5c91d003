#pragma once

#include <cstdint>
#include <vector>

#include "cfgwc/context.hpp"
#include "cfgwc/dataset.hpp"
#include "cfgwc/fcm.hpp"
#include "cfgwc/geo.hpp"

namespace cfgwc {

struct CfgwcConfig {
    std::size_t c = 3;        // clusters
    double m = 2.0;           // fuzzifier, > 1
    double alpha = 0.7;       // weight on a point's own membership
    double beta = 0.3;        // weight on the spatial neighbor term
    double a = 1.0;           // gravity distance exponent
    double b = 1.0;           // gravity population exponent
    double eps = 1e-5;        // max-abs partition change threshold
    std::size_t max_iter = 300;
    std::uint64_t seed = 0;

    void validate() const;  // throws std::invalid_argument
};

/// Context-constrained membership update: row k of the plain FCM row scaled
/// so it sums to f_k. Coincidence with exactly one center gives that center
/// the full f_k; ties among coincident centers split it equally.
PartitionMatrix cfgwc_memberships(const Matrix& points, const Centers& centers,
                                  const std::vector<double>& f, double m);

/// SIM-PF adjustment: blends each row with the weighted average of the other
/// areas' rows (weights w[k][i], i != k), then rescales the row to sum to
/// f_k. An area with zero total neighbor weight keeps its row unchanged;
/// such rows are reported through `isolated` when given. beta = 0 returns
/// the input untouched.
PartitionMatrix simpf_adjust(const PartitionMatrix& partition, const WeightMatrix& weights,
                             const std::vector<double>& f, double alpha, double beta,
                             std::vector<std::size_t>* isolated = nullptr);

/// Weighted within-cluster scatter: sum of u_kj^m * ||X_k - V_j||^2.
double objective(const Matrix& points, const PartitionMatrix& partition,
                 const Centers& centers, double m);
double objective(const Dataset& ds, const PartitionMatrix& partition,
                 const Centers& centers, double m);

/// Max absolute entrywise difference. Throws on shape mismatch.
double convergence_delta(const PartitionMatrix& u_new, const PartitionMatrix& u_old);

/// Full constrained run: random init with row targets f, then center update,
/// constrained membership update and (for beta > 0) SIM-PF adjustment each
/// iteration, until the partition change drops below eps or max_iter.
///
/// With beta = 0 and f identically 1 this is exactly fcm_run (bit for bit):
/// both delegate to the same engine.
ClusteringResult cfgwc_run(const Matrix& points, const std::vector<double>& f,
                           const WeightMatrix& weights, const CfgwcConfig& config);
ClusteringResult cfgwc_run(const Dataset& ds, const ContextVector& context,
                           const WeightMatrix& weights, const CfgwcConfig& config);

}  // namespace cfgwc
