#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

#include "spassoc/kernel.hpp"
#include "spassoc/panel.hpp"
#include "spassoc/parallel.hpp"
#include "spassoc/simulate.hpp"
#include "spassoc/weight_graph.hpp"

using spassoc::GridSpec;
using spassoc::PanelMatrix;
using spassoc::PowerCurve;
using spassoc::PowerMode;
using spassoc::power_curve;
using spassoc::sample_grid_gaussian;
using spassoc::set_max_threads;
using spassoc::SimConfig;
using spassoc::SimilarityKernel;

TEST_CASE("independent draws have unit variance and no neighbor covariance") {
    const int draws = 10000;
    const PanelMatrix panel = sample_grid_gaussian({2, 2}, draws, 0.0, 31);
    const Eigen::MatrixXd& y = panel.values();
    for (int i = 0; i < 4; ++i) {
        const double var = y.col(i).squaredNorm() / draws;
        CHECK(var == doctest::Approx(1.0).epsilon(0.05));
    }
    // vertices 0 and 1 are adjacent on the 2x2 grid
    const double cov = y.col(0).dot(y.col(1)) / draws;
    CHECK(std::abs(cov) < 5.0 / std::sqrt(static_cast<double>(draws)));
}

TEST_CASE("neighbor covariance tracks c") {
    const int draws = 100000;
    const double c = 0.2;
    const PanelMatrix panel = sample_grid_gaussian({2, 2}, draws, c, 32);
    const Eigen::MatrixXd& y = panel.values();
    // sd of a product-moment estimate of cov(x_i, x_j) with unit variances
    const double se = std::sqrt((1.0 + c * c) / static_cast<double>(draws));
    const double cov01 = y.col(0).dot(y.col(1)) / draws;
    CHECK(std::abs(cov01 - c) <= 3.0 * se);
    // vertices 0 and 3 are diagonal, hence uncorrelated under I + cA
    const double cov03 = y.col(0).dot(y.col(3)) / draws;
    CHECK(std::abs(cov03) <= 3.0 * se);
}

TEST_CASE("sampling is deterministic in the seed") {
    const PanelMatrix a = sample_grid_gaussian({3, 4}, 6, 0.1, 77);
    const PanelMatrix b = sample_grid_gaussian({3, 4}, 6, 0.1, 77);
    const PanelMatrix c = sample_grid_gaussian({3, 4}, 6, 0.1, 78);
    CHECK((a.values().array() == b.values().array()).all());
    CHECK_FALSE((a.values().array() == c.values().array()).all());
}

TEST_CASE("covariance outside the positive definite range is rejected") {
    // the 2x2 grid is the 4-cycle with extreme adjacency eigenvalues +-2
    CHECK_THROWS_AS((void)sample_grid_gaussian({2, 2}, 3, -0.6, 1),
                    std::domain_error);
    CHECK_THROWS_AS((void)sample_grid_gaussian({2, 2}, 3, 0.75, 1),
                    std::domain_error);
    CHECK_NOTHROW((void)sample_grid_gaussian({2, 2}, 3, 0.45, 1));
}

TEST_CASE("power curve smoke run") {
    SimConfig cfg;
    cfg.grid = GridSpec{2, 2};
    cfg.time_count = 3;
    cfg.c_values = {0.0, 0.2};
    cfg.replicates = 5;
    cfg.seed = 5;
    const PowerCurve curve = power_curve(cfg, PowerMode::lisa);
    REQUIRE(curve.points.size() == 8);  // 4 kernels x 2 c-values
    for (const auto& point : curve.points) {
        CHECK(point.replicates == 5);
        CHECK(point.power >= 0.0);
        CHECK(point.power <= 1.0);
        CHECK(point.se >= 0.0);
    }
    CHECK(curve.points[0].c == 0.0);
    CHECK(curve.points[4].c == 0.2);
}

TEST_CASE("gisa power is a replicate fraction") {
    SimConfig cfg;
    cfg.grid = GridSpec{3, 3};
    cfg.time_count = 2;
    cfg.c_values = {0.1};
    cfg.replicates = 8;
    cfg.seed = 6;
    cfg.kernels = {SimilarityKernel::moran()};
    const PowerCurve curve = power_curve(cfg, PowerMode::gisa);
    REQUIRE(curve.points.size() == 1);
    const double scaled = curve.points[0].power * 8.0;
    CHECK(scaled == doctest::Approx(std::round(scaled)));
}

TEST_CASE("power curves are bit-identical across reruns and thread counts") {
    SimConfig cfg;
    cfg.grid = GridSpec{3, 4};
    cfg.time_count = 3;
    cfg.c_values = {0.0, 0.15};
    cfg.replicates = 6;
    cfg.seed = 7;
    set_max_threads(1);
    const PowerCurve a = power_curve(cfg, PowerMode::lisa);
    set_max_threads(8);
    const PowerCurve b = power_curve(cfg, PowerMode::lisa);
    set_max_threads(0);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t k = 0; k < a.points.size(); ++k) {
        CHECK(a.points[k].power == b.points[k].power);
        CHECK(a.points[k].se == b.points[k].se);
        CHECK(a.points[k].kernel == b.points[k].kernel);
    }
}

TEST_CASE("single replicate reports zero standard error") {
    SimConfig cfg;
    cfg.grid = GridSpec{2, 2};
    cfg.time_count = 2;
    cfg.c_values = {0.0};
    cfg.replicates = 1;
    cfg.seed = 8;
    cfg.kernels = {SimilarityKernel::geary(2)};
    const PowerCurve curve = power_curve(cfg, PowerMode::lisa);
    REQUIRE(curve.points.size() == 1);
    CHECK(curve.points[0].se == 0.0);
}

TEST_CASE("null simulations rarely reject") {
    // The tail bounds hold in the sparse-degree, large-n regime (the error
    // term vanishes as n grows), so the size check uses a grid large
    // enough for that regime rather than a toy lattice.
    SimConfig cfg;
    cfg.grid = GridSpec{20, 25};
    cfg.time_count = 3;
    cfg.c_values = {0.0};
    cfg.replicates = 30;
    cfg.seed = 9;
    const PowerCurve curve = power_curve(cfg, PowerMode::lisa);
    for (const auto& point : curve.points) {
        CHECK(point.power <= 0.05);
    }
}

TEST_CASE("configuration validation") {
    SimConfig cfg;
    cfg.grid = GridSpec{2, 2};
    cfg.c_values = {0.0};
    SUBCASE("replicates") {
        cfg.replicates = 0;
        CHECK_THROWS_AS((void)power_curve(cfg, PowerMode::lisa),
                        std::invalid_argument);
    }
    SUBCASE("alpha") {
        cfg.alpha = 1.0;
        CHECK_THROWS_AS((void)power_curve(cfg, PowerMode::lisa),
                        std::invalid_argument);
    }
    SUBCASE("c values") {
        cfg.c_values = {};
        CHECK_THROWS_AS((void)power_curve(cfg, PowerMode::lisa),
                        std::invalid_argument);
    }
    SUBCASE("time count") {
        cfg.time_count = 0;
        CHECK_THROWS_AS((void)power_curve(cfg, PowerMode::lisa),
                        std::invalid_argument);
    }
    SUBCASE("grid") {
        cfg.grid = GridSpec{0, 2};
        CHECK_THROWS_AS((void)power_curve(cfg, PowerMode::lisa),
                        std::invalid_argument);
    }
    SUBCASE("positive definiteness") {
        cfg.c_values = {0.9};
        CHECK_THROWS_AS((void)power_curve(cfg, PowerMode::lisa),
                        std::domain_error);
    }
}

TEST_CASE("mode names") {
    CHECK(std::string(spassoc::to_string(PowerMode::lisa)) == "lisa");
    CHECK(std::string(spassoc::to_string(PowerMode::gisa)) == "gisa");
}
