#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "cfgwc/core.hpp"
#include "cfgwc/dataset.hpp"
#include "cfgwc/fcm.hpp"

namespace fixtures {

// Eight-area demographic sample used across the suite.
inline const char* kDemoCsv =
    "Name,Occupation,Income,Age,Gender,Raise\n"
    "Marry,Student,28000,15,Female,4\n"
    "Tom,Doctor,40000,32,Male,2\n"
    "David,Doctor,35100,27,Male,6\n"
    "Kim,Singer,65000,19,Female,1\n"
    "Jenny,Student,20000,18,Female,3\n"
    "Julia,Singer,52520,23,Male,6\n"
    "Xiao,Student,21000,31,Male,3\n"
    "Luka,Doctor,75000,42,Female,2\n";

inline std::vector<double> income() {
    return {28000, 40000, 35100, 65000, 20000, 52520, 21000, 75000};
}

// Reference 3-way fuzzy partition of the income series (columns: low income,
// high income, medium income).
inline cfgwc::Matrix income_reference_partition() {
    const double rows[8][3] = {
        {0.830213, 0.013943, 0.155844}, {0.000256, 0.000091, 0.999653},
        {0.145173, 0.019431, 0.835396}, {0.008823, 0.965323, 0.025853},
        {0.979944, 0.002928, 0.017128}, {0.098034, 0.319610, 0.582355},
        {0.991251, 0.001213, 0.007536}, {0.012425, 0.959367, 0.028209},
    };
    cfgwc::Matrix u(8, 3);
    for (std::size_t k = 0; k < 8; ++k)
        for (std::size_t j = 0; j < 3; ++j) u(k, j) = rows[k][j];
    return u;
}

inline std::filesystem::path temp_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("cfgwc_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::filesystem::path write_file(const std::filesystem::path& dir, const std::string& name,
                                        const std::string& content) {
    const auto path = dir / name;
    std::ofstream out(path);
    out << content;
    return path;
}

inline cfgwc::Matrix random_points(std::size_t n, std::size_t r, std::mt19937_64& rng,
                                   double span = 10.0) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    cfgwc::Matrix points(n, r);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t d = 0; d < r; ++d) points(k, d) = span * unit(rng);
    return points;
}

inline std::vector<double> random_context(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    std::vector<double> f(n);
    for (auto& v : f) v = unit(rng);
    return f;
}

}  // namespace fixtures
