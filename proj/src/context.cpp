#include "cfgwc/context.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <random>
#include <stdexcept>

namespace cfgwc {

namespace {

constexpr double kF1Floor = 1e-6;  // keeps downstream row targets off zero

void check_series(const ContextSeries& series) {
    if (series.values.size() < 2)
        throw std::invalid_argument("context: series needs at least 2 values");
    for (double v : series.values)
        if (!std::isfinite(v)) throw std::invalid_argument("context: non-finite series value");
}

}  // namespace

const char* to_string(ContextMethod m) {
    switch (m) {
        case ContextMethod::F1: return "f1";
        case ContextMethod::F2: return "f2";
        case ContextMethod::Random: return "random";
        case ContextMethod::File: return "file";
    }
    return "?";
}

F1Target F1Target::parse(const std::string& text) {
    F1Target t;
    if (text.empty() || text == "highest") {
        t.kind = Kind::Highest;
    } else if (text == "lowest") {
        t.kind = Kind::Lowest;
    } else if (text == "rowmax") {
        t.kind = Kind::RowMax;
    } else {
        std::size_t idx = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), idx);
        if (ec != std::errc() || ptr != text.data() + text.size() || idx == 0)
            throw std::invalid_argument("f1 target must be highest, lowest, rowmax or a 1-based index");
        t.kind = Kind::Index;
        t.index = idx - 1;
    }
    return t;
}

ContextVector context_f1(const ContextSeries& series, std::size_t c, F1Target target,
                         const FcmParams& params) {
    check_series(series);
    FcmParams p = params;
    p.c = c;  // must match the C of the downstream clustering
    const ClusteringResult res = fcm_run(series, p);

    const std::size_t n = series.values.size();
    ContextVector ctx;
    ctx.method = ContextMethod::F1;
    ctx.f.resize(n);

    std::size_t column = 0;
    switch (target.kind) {
        case F1Target::Kind::Highest:
        case F1Target::Kind::Lowest: {
            double best = res.centers.v(0, 0);
            for (std::size_t j = 1; j < c; ++j) {
                const double v = res.centers.v(j, 0);
                const bool better = target.kind == F1Target::Kind::Highest ? v > best : v < best;
                if (better) {
                    best = v;
                    column = j;
                }
            }
            break;
        }
        case F1Target::Kind::Index:
            if (target.index >= c) throw std::invalid_argument("f1 target index out of range");
            column = target.index;
            break;
        case F1Target::Kind::RowMax:
            break;
    }

    for (std::size_t k = 0; k < n; ++k) {
        double v;
        if (target.kind == F1Target::Kind::RowMax) {
            v = res.partition.u(k, 0);
            for (std::size_t j = 1; j < c; ++j) v = std::max(v, res.partition.u(k, j));
        } else {
            v = res.partition.u(k, column);
        }
        if (v < kF1Floor) {
            v = kF1Floor;
            ++ctx.clamped;
        }
        ctx.f[k] = v;
    }
    if (target.kind != F1Target::Kind::RowMax) {
        ctx.cluster = column;
        ctx.cluster_center = res.centers.v(column, 0);
    }
    return ctx;
}

ContextVector context_f2(const ContextSeries& series) {
    check_series(series);
    const std::size_t n = series.values.size();
    double mean = 0.0;
    for (double v : series.values) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : series.values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(n);  // population deviation
    if (!(var > 0.0)) throw std::invalid_argument("context_f2: constant series (zero deviation)");
    const double sd = std::sqrt(var);

    ContextVector ctx;
    ctx.method = ContextMethod::F2;
    ctx.mu = mean;
    ctx.sigma = sd;
    ctx.f.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double z = (series.values[k] - mean) / sd;
        const double g = std::exp(-z * z);
        ctx.f[k] = 1.0 / (1.0 + std::exp(-g));
    }
    return ctx;
}

ContextVector context_random(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("context_random: need n >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ContextVector ctx;
    ctx.method = ContextMethod::Random;
    ctx.f.resize(n);
    for (std::size_t k = 0; k < n; ++k) ctx.f[k] = 0.01 + 0.99 * (1.0 - unit(rng));  // (0.01, 1]
    return ctx;
}

ContextVector context_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    ContextVector ctx;
    ctx.method = ContextMethod::File;
    ctx.source = path;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // Allow a trailing comma-free single CSV column; strip CR endings.
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.erase(0, 1);
        if (line.empty()) continue;
        if (line.find(',') != std::string::npos)
            throw std::runtime_error("'" + path + "' line " + std::to_string(lineno) +
                                     ": expected a single value per line");
        double v;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
        if (ec != std::errc() || ptr != line.data() + line.size())
            throw std::runtime_error("'" + path + "' line " + std::to_string(lineno) +
                                     ": not a number: '" + line + "'");
        if (!(v > 0.0) || v > 1.0)
            throw std::runtime_error("'" + path + "' line " + std::to_string(lineno) +
                                     ": context value must lie in (0, 1], got " + line);
        ctx.f.push_back(v);
    }
    if (ctx.f.size() < 2)
        throw std::runtime_error("'" + path + "': need at least 2 context values");
    return ctx;
}

}  // namespace cfgwc
