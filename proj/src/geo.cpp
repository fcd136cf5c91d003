#include "cfgwc/geo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cfgwc {

namespace {

constexpr double kEarthRadiusKm = 6371.0;

double haversine_km(double lon1, double lat1, double lon2, double lat2) {
    const double deg = M_PI / 180.0;
    const double phi1 = lat1 * deg, phi2 = lat2 * deg;
    const double dphi = (lat2 - lat1) * deg;
    const double dlam = (lon2 - lon1) * deg;
    const double sp = std::sin(dphi / 2.0), sl = std::sin(dlam / 2.0);
    const double h = sp * sp + std::cos(phi1) * std::cos(phi2) * sl * sl;
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

}  // namespace

DistanceMetric parse_metric(const std::string& name) {
    if (name == "euclidean") return DistanceMetric::Euclidean;
    if (name == "haversine") return DistanceMetric::Haversine;
    throw std::invalid_argument("unknown distance metric '" + name + "'");
}

Matrix pairwise_distances(const Matrix& coords, DistanceMetric metric) {
    const std::size_t n = coords.rows();
    if (n < 2 || coords.cols() != 2)
        throw std::invalid_argument("pairwise_distances: need an N x 2 matrix with N >= 2");
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(coords(i, 0)) || !std::isfinite(coords(i, 1)))
            throw std::invalid_argument("pairwise_distances: non-finite coordinate at row " +
                                        std::to_string(i + 1));
        if (metric == DistanceMetric::Haversine && std::abs(coords(i, 1)) > 90.0)
            throw std::invalid_argument("pairwise_distances: haversine latitude out of [-90, 90] at row " +
                                        std::to_string(i + 1) + " (columns are lon, lat)");
    }
    Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double dij;
            if (metric == DistanceMetric::Euclidean) {
                dij = std::sqrt(squared_distance(coords.row(i), coords.row(j), 2));
            } else {
                dij = haversine_km(coords(i, 0), coords(i, 1), coords(j, 0), coords(j, 1));
            }
            d(i, j) = dij;
            d(j, i) = dij;
        }
    }
    return d;
}

WeightMatrix gravity_weights(const std::vector<double>& populations, const Matrix& distances,
                             double a, double b) {
    const std::size_t n = populations.size();
    if (distances.rows() != n || distances.cols() != n)
        throw std::invalid_argument("gravity_weights: distance matrix must be N x N");
    for (std::size_t i = 0; i < n; ++i)
        if (!(populations[i] > 0.0) || !std::isfinite(populations[i]))
            throw std::invalid_argument("gravity_weights: populations must be positive (row " +
                                        std::to_string(i + 1) + ")");
    WeightMatrix wm{Matrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = distances(i, j);
            if (d == 0.0)
                throw std::runtime_error(
                    "gravity_weights: areas " + std::to_string(i + 1) + " and " +
                    std::to_string(j + 1) +
                    " coincide (distance 0); jitter their coordinates or merge them");
            const double w = std::pow(populations[i] * populations[j], b) / std::pow(d, a);
            if (!std::isfinite(w))
                throw std::runtime_error("gravity_weights: non-finite weight between areas " +
                                         std::to_string(i + 1) + " and " + std::to_string(j + 1));
            wm.w(i, j) = w;
            wm.w(j, i) = w;
        }
    }
    return wm;
}

void write_weights_csv(const WeightMatrix& wm, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    char buf[64];
    for (std::size_t i = 0; i < wm.size(); ++i) {
        for (std::size_t j = 0; j < wm.size(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.12g", wm.w(i, j));
            out << (j ? "," : "") << buf;
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

WeightMatrix read_weights_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t pos = 0;
                const double v = std::stod(cell, &pos);
                while (pos < cell.size() && (cell[pos] == ' ' || cell[pos] == '\r')) ++pos;
                if (pos != cell.size()) throw std::invalid_argument(cell);
                row.push_back(v);
            } catch (const std::exception&) {
                throw std::runtime_error("'" + path + "': unparseable weight at row " +
                                         std::to_string(rows.size() + 1));
            }
        }
        rows.push_back(std::move(row));
    }
    const std::size_t n = rows.size();
    if (n < 2) throw std::runtime_error("'" + path + "': need at least a 2 x 2 matrix");
    WeightMatrix wm{Matrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw std::runtime_error("'" + path + "': row " + std::to_string(i + 1) +
                                     " has " + std::to_string(rows[i].size()) + " entries, expected " +
                                     std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) wm.w(i, j) = rows[i][j];
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (wm.w(i, i) != 0.0)
            throw std::runtime_error("'" + path + "': nonzero diagonal at row " + std::to_string(i + 1));
        for (std::size_t j = 0; j < n; ++j) {
            if (!std::isfinite(wm.w(i, j)) || wm.w(i, j) < 0.0)
                throw std::runtime_error("'" + path + "': weights must be finite and non-negative");
            if (std::abs(wm.w(i, j) - wm.w(j, i)) >
                1e-9 * std::max(1.0, std::abs(wm.w(i, j))))
                throw std::runtime_error("'" + path + "': matrix is not symmetric at (" +
                                         std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }
    return wm;
}

}  // namespace cfgwc
