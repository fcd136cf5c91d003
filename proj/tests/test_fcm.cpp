#include <cmath>
#include <numeric>
#include <random>

#include "cfgwc/context.hpp"
#include "cfgwc/fcm.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cfgwc;

namespace {

Matrix column(const std::vector<double>& values) {
    Matrix m(values.size(), 1);
    for (std::size_t k = 0; k < values.size(); ++k) m(k, 0) = values[k];
    return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

}  // namespace

TEST_CASE("init_partition rows hit their targets") {
    const PartitionMatrix p = init_partition(4, 2, std::vector<double>(4, 1.0), 0);
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(p.u(k, 0) + p.u(k, 1) == doctest::Approx(1.0).epsilon(1e-12));

    const PartitionMatrix again = init_partition(4, 2, std::vector<double>(4, 1.0), 0);
    CHECK(p.u == again.u);
    const PartitionMatrix other = init_partition(4, 2, std::vector<double>(4, 1.0), 1);
    CHECK_FALSE(p.u == other.u);

    // Gaussian-sigmoid context values as row targets.
    const ContextVector ctx = context_f2(ContextSeries{fixtures::income(), "income"});
    const PartitionMatrix q = init_partition(8, 3, ctx.f, 5);
    for (std::size_t k = 0; k < 8; ++k) {
        const double sum = q.u(k, 0) + q.u(k, 1) + q.u(k, 2);
        CHECK(sum == doctest::Approx(ctx.f[k]).epsilon(1e-12));
    }

    CHECK_THROWS_AS(init_partition(4, 2, std::vector<double>(4, 0.0), 0), std::invalid_argument);
    CHECK_THROWS_AS(init_partition(4, 2, std::vector<double>(4, 1.5), 0), std::invalid_argument);
    CHECK_THROWS_AS(init_partition(2, 3, std::vector<double>(2, 1.0), 0), std::invalid_argument);
}

TEST_CASE("update_centers weighting") {
    Matrix pts = column({0.0, 2.0});

    PartitionMatrix crisp{Matrix(2, 2), {1.0, 1.0}};
    crisp.u(0, 0) = 1.0;
    crisp.u(1, 1) = 1.0;
    const Centers recovered = update_centers(pts, crisp, 2.0);
    CHECK(recovered.v(0, 0) == doctest::Approx(0.0));
    CHECK(recovered.v(1, 0) == doctest::Approx(2.0));

    PartitionMatrix even{Matrix(2, 2, 0.5), {1.0, 1.0}};
    const Centers mean = update_centers(pts, even, 2.0);
    CHECK(mean.v(0, 0) == doctest::Approx(1.0));
    CHECK(mean.v(1, 0) == doctest::Approx(1.0));

    Matrix pts01 = column({0.0, 1.0});
    PartitionMatrix soft{Matrix(2, 2), {1.0, 1.0}};
    soft.u(0, 0) = 0.8; soft.u(0, 1) = 0.2;
    soft.u(1, 0) = 0.2; soft.u(1, 1) = 0.8;
    const Centers v = update_centers(pts01, soft, 2.0);
    CHECK(v.v(0, 0) == doctest::Approx(0.04 / 0.68).epsilon(1e-12));

    PartitionMatrix degenerate{Matrix(2, 2), {1.0, 1.0}};
    degenerate.u(0, 0) = 1.0;
    degenerate.u(1, 0) = 1.0;  // cluster 2 has zero weight
    CHECK_THROWS_WITH_AS(update_centers(pts, degenerate, 2.0), doctest::Contains("degenerate"),
                         std::runtime_error);
}

TEST_CASE("update_memberships distances and singularities") {
    Centers centers{Matrix(2, 1)};
    centers.v(0, 0) = 0.0;
    centers.v(1, 0) = 2.0;
    const PartitionMatrix mid = update_memberships(column({1.0}), centers, 2.0);
    CHECK(mid.u(0, 0) == doctest::Approx(0.5));
    CHECK(mid.u(0, 1) == doctest::Approx(0.5));

    const PartitionMatrix at_center = update_memberships(column({0.0}), centers, 2.0);
    CHECK(at_center.u(0, 0) == 1.0);
    CHECK(at_center.u(0, 1) == 0.0);

    centers.v(1, 0) = 3.0;
    const PartitionMatrix skew = update_memberships(column({1.0}), centers, 2.0);
    CHECK(skew.u(0, 0) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(skew.u(0, 1) == doctest::Approx(0.2).epsilon(1e-12));

    std::mt19937_64 rng(3);
    const Matrix pts = fixtures::random_points(20, 2, rng);
    Centers three{Matrix(3, 2)};
    for (std::size_t j = 0; j < 3; ++j) {
        three.v(j, 0) = 2.0 + 3.0 * static_cast<double>(j);
        three.v(j, 1) = 1.0;
    }
    const PartitionMatrix p = update_memberships(pts, three, 1.8);
    for (std::size_t k = 0; k < pts.rows(); ++k) {
        double sum = 0.0;
        for (std::size_t j = 0; j < 3; ++j) sum += p.u(k, j);
        CHECK(std::abs(sum - 1.0) < 1e-9);
    }
}

TEST_CASE("fcm_run reproduces the income reference partition") {
    FcmParams params;
    params.c = 3;
    params.m = 2.0;
    params.eps = 1e-6;
    params.seed = 12;
    const ClusteringResult res = fcm_run(ContextSeries{fixtures::income(), "income"}, params);
    REQUIRE(res.converged);

    const Matrix ref = fixtures::income_reference_partition();
    const PartitionMatrix ref_partition{ref, std::vector<double>(8, 1.0)};
    const Centers ref_centers = update_centers(column(fixtures::income()), ref_partition, 2.0);
    const auto perm = align_clusters(res.centers, ref_centers);
    const PartitionMatrix aligned = permute_columns(res.partition, perm);
    CHECK(max_abs_diff(aligned.u, ref) < 0.02);
}

TEST_CASE("fcm_run on well separated points becomes crisp") {
    FcmParams params;
    params.c = 3;
    params.eps = 1e-10;
    params.seed = 4;
    const ClusteringResult res = fcm_run(column({0.0, 100.0, 200.0}), params);
    REQUIRE(res.converged);
    for (std::size_t k = 0; k < 3; ++k) {
        double best = 0.0;
        for (std::size_t j = 0; j < 3; ++j) best = std::max(best, res.partition.u(k, j));
        CHECK(best == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("fcm_run objective trace is non-increasing") {
    std::mt19937_64 rng(17);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Matrix pts = fixtures::random_points(24, 2, rng);
        FcmParams params;
        params.c = 3;
        params.seed = seed;
        const ClusteringResult res = fcm_run(pts, params);
        REQUIRE(res.objective_trace.size() == res.iterations);
        for (std::size_t t = 1; t < res.objective_trace.size(); ++t)
            CHECK(res.objective_trace[t] <= res.objective_trace[t - 1] + 1e-10);
    }
}

TEST_CASE("fcm_run is equivariant under row permutation") {
    // Three separated blobs; the converged fixed point does not depend on row
    // order, so permuting the input permutes the partition rows (up to label
    // alignment at the convergence tolerance).
    Matrix pts(12, 2);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> jitter(-0.5, 0.5);
    for (std::size_t k = 0; k < 12; ++k) {
        pts(k, 0) = 10.0 * static_cast<double>(k % 3) + jitter(rng);
        pts(k, 1) = 5.0 * static_cast<double>(k % 3) + jitter(rng);
    }
    const std::vector<std::size_t> perm{7, 3, 11, 0, 9, 5, 2, 8, 1, 10, 4, 6};
    Matrix shuffled(12, 2);
    for (std::size_t k = 0; k < 12; ++k) {
        shuffled(k, 0) = pts(perm[k], 0);
        shuffled(k, 1) = pts(perm[k], 1);
    }

    FcmParams params;
    params.c = 3;
    params.eps = 1e-12;
    params.max_iter = 500;
    params.seed = 21;
    const ClusteringResult base = fcm_run(pts, params);
    const ClusteringResult mixed = fcm_run(shuffled, params);
    REQUIRE(base.converged);
    REQUIRE(mixed.converged);

    const auto label_map = align_clusters(mixed.centers, base.centers);
    const PartitionMatrix aligned = permute_columns(mixed.partition, label_map);
    for (std::size_t k = 0; k < 12; ++k)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(aligned.u(k, j) == doctest::Approx(base.partition.u(perm[k], j)).epsilon(1e-6));
}

TEST_CASE("align_clusters recovers a known permutation") {
    Centers ref{Matrix(3, 2)};
    for (std::size_t j = 0; j < 3; ++j) {
        ref.v(j, 0) = static_cast<double>(j) * 4.0;
        ref.v(j, 1) = 1.0;
    }
    Centers shuffled{Matrix(3, 2)};
    const std::size_t order[3] = {2, 0, 1};  // shuffled column i = ref column order[i]
    for (std::size_t i = 0; i < 3; ++i) {
        shuffled.v(i, 0) = ref.v(order[i], 0) + 0.01;
        shuffled.v(i, 1) = ref.v(order[i], 1);
    }
    const auto perm = align_clusters(shuffled, ref);
    for (std::size_t j = 0; j < 3; ++j) CHECK(order[perm[j]] == j);
}
