#include "cfgwc/validity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cfgwc {

namespace {
constexpr double kLogClamp = 1e-12;
}

double sd_max(const Centers& centers) {
    const std::size_t c = centers.count();
    if (c < 2) throw std::invalid_argument("sd_max: need at least 2 centers");
    double best = 0.0;
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = i + 1; j < c; ++j)
            best = std::max(best,
                            squared_distance(centers.v.row(i), centers.v.row(j), centers.v.cols()));
    return best;
}

double sigma_bar(const Matrix& points, const Centers& centers) {
    const std::size_t n = points.rows();
    const std::size_t c = centers.count();
    if (points.cols() != centers.v.cols()) throw std::invalid_argument("sigma_bar: shape mismatch");
    if (n == 0) throw std::invalid_argument("sigma_bar: empty dataset");
    double total = 0.0;
    for (std::size_t j = 0; j < c; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            acc += squared_distance(points.row(k), centers.v.row(j), points.cols());
        total += acc / static_cast<double>(n);
    }
    return total / static_cast<double>(c);
}

double sigma_bar(const Dataset& ds, const Centers& centers) {
    return sigma_bar(ds.features, centers);
}

IfvReport ifv(const Matrix& points, const PartitionMatrix& partition, const Centers& centers) {
    const std::size_t n = points.rows();
    const std::size_t c = centers.count();
    if (c < 2) throw std::invalid_argument("ifv: need at least 2 clusters");
    if (partition.u.rows() != n || partition.u.cols() != c)
        throw std::invalid_argument("ifv: partition shape mismatch");

    IfvReport report;
    report.sd_max = sd_max(centers);
    report.sigma_bar = sigma_bar(points, centers);
    if (!(report.sigma_bar > 0.0))
        throw std::invalid_argument("ifv: degenerate data (zero point-to-center deviation)");
    report.degenerate_centers = report.sd_max == 0.0;

    const double log2c = std::log2(static_cast<double>(c));
    report.per_cluster_terms.resize(c);
    double total = 0.0;
    for (std::size_t j = 0; j < c; ++j) {
        double sq = 0.0;
        double ent = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            double u = partition.u(k, j);
            if (u < kLogClamp) {
                u = kLogClamp;
                ++report.clamped;
            }
            sq += u * u;
            ent += std::log2(u);
        }
        sq /= static_cast<double>(n);
        const double bracket = log2c - ent / static_cast<double>(n);
        report.per_cluster_terms[j] = sq * bracket * bracket;
        total += report.per_cluster_terms[j];
    }
    report.ifv = total / static_cast<double>(c) * report.sd_max / report.sigma_bar;
    return report;
}

IfvReport ifv(const Dataset& ds, const PartitionMatrix& partition, const Centers& centers) {
    return ifv(ds.features, partition, centers);
}

}  // namespace cfgwc
