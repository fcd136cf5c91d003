#include "cfgwc/cfgwc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cfgwc {

void CfgwcConfig::validate() const {
    if (c < 2) throw std::invalid_argument("config: need at least 2 clusters");
    if (!(m > 1.0)) throw std::invalid_argument("config: fuzzifier m must be > 1");
    if (!(eps > 0.0)) throw std::invalid_argument("config: eps must be positive");
    if (max_iter == 0) throw std::invalid_argument("config: max_iter must be positive");
    if (alpha < 0.0 || alpha > 1.0 || beta < 0.0 || beta > 1.0)
        throw std::invalid_argument("config: alpha and beta must lie in [0, 1]");
    if (std::abs(alpha + beta - 1.0) > 1e-12)
        throw std::invalid_argument("config: alpha + beta must equal 1");
}

namespace {

void validate_context(const std::vector<double>& f, std::size_t n) {
    if (f.size() != n)
        throw std::invalid_argument("context vector length " + std::to_string(f.size()) +
                                    " does not match N = " + std::to_string(n));
    for (std::size_t k = 0; k < n; ++k)
        if (!(f[k] > 0.0) || f[k] > 1.0 || !std::isfinite(f[k]))
            throw std::invalid_argument("context value out of (0, 1] at row " +
                                        std::to_string(k + 1));
}

}  // namespace

PartitionMatrix cfgwc_memberships(const Matrix& points, const Centers& centers,
                                  const std::vector<double>& f, double m) {
    const std::size_t n = points.rows();
    const std::size_t c = centers.count();
    const std::size_t r = points.cols();
    if (centers.v.cols() != r)
        throw std::invalid_argument("cfgwc_memberships: center dimension mismatch");
    validate_context(f, n);
    if (!(m > 1.0)) throw std::invalid_argument("cfgwc_memberships: m must be > 1");

    PartitionMatrix out{Matrix(n, c), f};
    const double expo = 1.0 / (m - 1.0);
    std::vector<double> dsq(c);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t coincident = 0;
        for (std::size_t j = 0; j < c; ++j) {
            dsq[j] = squared_distance(points.row(k), centers.v.row(j), r);
            if (dsq[j] == 0.0) ++coincident;
        }
        if (coincident > 0) {
            // Point sits on a center: full target there, split across ties.
            const double share = f[k] / static_cast<double>(coincident);
            for (std::size_t j = 0; j < c; ++j) out.u(k, j) = dsq[j] == 0.0 ? share : 0.0;
            continue;
        }
        for (std::size_t j = 0; j < c; ++j) {
            double den = 0.0;
            for (std::size_t i = 0; i < c; ++i) den += std::pow(dsq[j] / dsq[i], expo);
            out.u(k, j) = f[k] / den;  // den >= 1, and f/inf -> 0 for far centers
        }
    }
    return out;
}

PartitionMatrix simpf_adjust(const PartitionMatrix& partition, const WeightMatrix& weights,
                             const std::vector<double>& f, double alpha, double beta,
                             std::vector<std::size_t>* isolated) {
    const std::size_t n = partition.u.rows();
    const std::size_t c = partition.u.cols();
    if (std::abs(alpha + beta - 1.0) > 1e-12 || alpha < 0.0 || beta < 0.0)
        throw std::invalid_argument("simpf_adjust: need alpha, beta >= 0 with alpha + beta = 1");
    validate_context(f, n);
    if (isolated) isolated->clear();
    if (beta == 0.0) return partition;  // no spatial term; keep the input bit for bit
    if (weights.w.rows() != n || weights.w.cols() != n)
        throw std::invalid_argument("simpf_adjust: weight matrix must be N x N");

    PartitionMatrix out{Matrix(n, c), f};
    std::vector<double> neighbor(c);
    for (std::size_t k = 0; k < n; ++k) {
        double total = 0.0;
        std::fill(neighbor.begin(), neighbor.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;  // an area does not spatially influence itself
            const double w = weights.w(k, i);
            total += w;
            for (std::size_t j = 0; j < c; ++j) neighbor[j] += w * partition.u(i, j);
        }
        if (total == 0.0) {
            // Isolated area: the alpha part rescaled to f_k is the row itself.
            if (isolated) isolated->push_back(k);
            for (std::size_t j = 0; j < c; ++j) out.u(k, j) = partition.u(k, j);
            continue;
        }
        double row_sum = 0.0;
        for (std::size_t j = 0; j < c; ++j) {
            neighbor[j] = alpha * partition.u(k, j) + beta * neighbor[j] / total;
            row_sum += neighbor[j];
        }
        const double scale = f[k] / row_sum;  // the constraint-restoring factor
        for (std::size_t j = 0; j < c; ++j) out.u(k, j) = neighbor[j] * scale;
    }
    return out;
}

double objective(const Matrix& points, const PartitionMatrix& partition, const Centers& centers,
                 double m) {
    const std::size_t n = points.rows();
    const std::size_t c = centers.count();
    const std::size_t r = points.cols();
    if (partition.u.rows() != n || partition.u.cols() != c || centers.v.cols() != r)
        throw std::invalid_argument("objective: shape mismatch");
    double j_total = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < c; ++j)
            j_total += std::pow(partition.u(k, j), m) *
                       squared_distance(points.row(k), centers.v.row(j), r);
    return j_total;
}

double objective(const Dataset& ds, const PartitionMatrix& partition, const Centers& centers,
                 double m) {
    return objective(ds.features, partition, centers, m);
}

double convergence_delta(const PartitionMatrix& u_new, const PartitionMatrix& u_old) {
    if (!u_new.u.same_shape(u_old.u))
        throw std::invalid_argument("convergence_delta: shape mismatch");
    double delta = 0.0;
    const auto& a = u_new.u.data();
    const auto& b = u_old.u.data();
    for (std::size_t i = 0; i < a.size(); ++i) delta = std::max(delta, std::abs(a[i] - b[i]));
    return delta;
}

ClusteringResult cfgwc_run(const Matrix& points, const std::vector<double>& f,
                           const WeightMatrix& weights, const CfgwcConfig& config) {
    config.validate();
    const std::size_t n = points.rows();
    validate_context(f, n);
    if (n < config.c) throw std::invalid_argument("cfgwc_run: fewer points than clusters");
    if (config.beta > 0.0 && (weights.w.rows() != n || weights.w.cols() != n))
        throw std::invalid_argument("cfgwc_run: beta > 0 requires an N x N weight matrix");

    ClusteringResult res;
    PartitionMatrix u = init_partition(n, config.c, f, config.seed);
    for (std::size_t t = 1; t <= config.max_iter; ++t) {
        res.centers = update_centers(points, u, config.m);
        PartitionMatrix next = cfgwc_memberships(points, res.centers, f, config.m);
        if (config.beta > 0.0)
            next = simpf_adjust(next, weights, f, config.alpha, config.beta);
        const double delta = convergence_delta(next, u);
        res.objective_trace.push_back(objective(points, next, res.centers, config.m));
        u = std::move(next);
        res.iterations = t;
        if (delta < config.eps) {
            res.converged = true;
            break;
        }
    }
    res.partition = std::move(u);
    return res;
}

ClusteringResult cfgwc_run(const Dataset& ds, const ContextVector& context,
                           const WeightMatrix& weights, const CfgwcConfig& config) {
    return cfgwc_run(ds.features, context.f, weights, config);
}

}  // namespace cfgwc
