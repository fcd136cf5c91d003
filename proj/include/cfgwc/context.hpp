#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cfgwc/dataset.hpp"
#include "cfgwc/fcm.hpp"

namespace cfgwc {

enum class ContextMethod { F1, F2, Random, File };

const char* to_string(ContextMethod m);

/// Per-point context values f_k in (0, 1], plus how they were produced.
struct ContextVector {
    std::vector<double> f;
    ContextMethod method = ContextMethod::File;

    // Method-specific metadata, surfaced in run summaries.
    std::optional<double> mu;              // f2: series mean
    std::optional<double> sigma;           // f2: population std deviation
    std::optional<std::size_t> cluster;    // f1: selected column
    std::optional<double> cluster_center;  // f1: that column's center value
    std::size_t clamped = 0;               // f1: entries raised to the floor
    std::string source;                    // file method: path

    std::size_t size() const { return f.size(); }
};

/// Which column of the context FCM partition becomes f. The worked default
/// is the cluster with the largest center ("highest"). RowMax takes each
/// row's maximum membership instead; it ignores which cluster is the
/// context-relevant one, so it is exposed for comparison only.
struct F1Target {
    enum class Kind { Highest, Lowest, RowMax, Index };
    Kind kind = Kind::Highest;
    std::size_t index = 0;

    static F1Target parse(const std::string& text);
};

/// FCM-derived context: clusters the 1-D series into c groups (c must equal
/// the C of the downstream clustering) and takes the selected column's
/// memberships, clamped below at 1e-6 so no row target is zero.
ContextVector context_f1(const ContextSeries& series, std::size_t c, F1Target target,
                         const FcmParams& params);

/// Gaussian-sigmoid context: f_k = sigmoid(exp(-((y_k - mean)/sd)^2)) with
/// the population (divisor N) standard deviation. Throws on a constant
/// series. Values always lie in (0.5, 0.731059] and are invariant to affine
/// rescaling of the series.
ContextVector context_f2(const ContextSeries& series);

/// Baseline: f_k uniform on (0.01, 1], deterministic per seed.
ContextVector context_random(std::size_t n, std::uint64_t seed);

/// One value per line (or a single CSV column); each must lie in (0, 1].
ContextVector context_from_file(const std::string& path);

}  // namespace cfgwc
