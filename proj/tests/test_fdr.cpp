#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "spassoc/fdr.hpp"
#include "spassoc/rng.hpp"
#include "spassoc/weight_graph.hpp"

using spassoc::bh_adjust;
using spassoc::FdrMode;
using spassoc::make_significance_table;
using spassoc::Rng;
using spassoc::SignificanceTable;
using spassoc::spatial_bh_adjust;
using spassoc::WeightGraph;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> values) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (const double x : values) v[i++] = x;
    return v;
}

WeightGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return WeightGraph::from_edge_list(edges, n);
}

}  // namespace

TEST_CASE("step-up adjustment on hand-computed fixtures") {
    SUBCASE("uniform spacing collapses to the largest") {
        const Eigen::VectorXd q = bh_adjust(vec({0.01, 0.02, 0.03}));
        CHECK(q[0] == doctest::Approx(0.03));
        CHECK(q[1] == doctest::Approx(0.03));
        CHECK(q[2] == doctest::Approx(0.03));
    }
    SUBCASE("mixed spacing") {
        const Eigen::VectorXd q = bh_adjust(vec({0.005, 0.011, 0.02, 0.04}));
        CHECK(q[0] == doctest::Approx(0.02));
        CHECK(q[1] == doctest::Approx(0.022));
        CHECK(q[2] == doctest::Approx(4.0 * 0.02 / 3.0));
        CHECK(q[3] == doctest::Approx(0.04));
    }
    SUBCASE("ties share one adjusted value") {
        const Eigen::VectorXd q = bh_adjust(vec({0.02, 0.02, 0.5}));
        CHECK(q[0] == doctest::Approx(0.03));
        CHECK(q[1] == doctest::Approx(0.03));
        CHECK(q[2] == doctest::Approx(0.5));
    }
    SUBCASE("large entries clamp at one") {
        const Eigen::VectorXd q = bh_adjust(vec({0.9, 0.95, 1.0}));
        for (int i = 0; i < 3; ++i) CHECK(q[i] <= 1.0);
        CHECK(q[2] == doctest::Approx(1.0));
    }
    SUBCASE("single value is unchanged") {
        CHECK(bh_adjust(vec({0.2}))[0] == doctest::Approx(0.2));
    }
    SUBCASE("empty input gives empty output") {
        CHECK(bh_adjust(Eigen::VectorXd()).size() == 0);
    }
}

TEST_CASE("adjusted values dominate raw ones and preserve their order") {
    Rng rng(401, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(40));
        Eigen::VectorXd p(n);
        for (int i = 0; i < n; ++i) p[i] = rng.next_double();
        const Eigen::VectorXd q = bh_adjust(p);
        for (int i = 0; i < n; ++i) {
            REQUIRE(q[i] >= p[i]);
            REQUIRE(q[i] <= 1.0);
            for (int j = 0; j < n; ++j) {
                if (p[i] <= p[j]) REQUIRE(q[i] <= q[j] + 1e-15);
            }
        }
    }
}

TEST_CASE("adjustment commutes with permuting the input") {
    Rng rng(402, 0);
    const int n = 25;
    Eigen::VectorXd p(n);
    for (int i = 0; i < n; ++i) p[i] = rng.next_double();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    spassoc::partial_shuffle(perm, n, rng);
    Eigen::VectorXd shuffled(n);
    for (int i = 0; i < n; ++i) shuffled[i] = p[perm[i]];
    const Eigen::VectorXd q = bh_adjust(p);
    const Eigen::VectorXd q_shuffled = bh_adjust(shuffled);
    for (int i = 0; i < n; ++i) CHECK(q_shuffled[i] == q[perm[i]]);
}

TEST_CASE("input validation names the offending entry") {
    CHECK_THROWS_AS((void)bh_adjust(vec({0.5, 1.2})), std::invalid_argument);
    CHECK_THROWS_AS((void)bh_adjust(vec({-0.1})), std::invalid_argument);
    try {
        (void)bh_adjust(vec({0.5, std::nan("")}));
        FAIL("non-finite p-value accepted");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find('1') != std::string::npos);
    }
}

TEST_CASE("neighborhood-local adjustment on the 3-path") {
    const std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}};
    const WeightGraph g = WeightGraph::from_edge_list(edges, 3);
    const Eigen::VectorXd q = spatial_bh_adjust(vec({0.01, 0.04, 0.5}), g);
    // vertex 0 adjusts over {0.01, 0.04}, vertex 1 over all three,
    // vertex 2 over {0.04, 0.5}
    CHECK(q[0] == doctest::Approx(0.02));
    CHECK(q[1] == doctest::Approx(0.06));
    CHECK(q[2] == doctest::Approx(0.5));
}

TEST_CASE("neighborhood-local adjustment can undercut the raw value") {
    // vertex 1's closed neighborhood is {0, 1}: rank 2 of 2 keeps 0.04,
    // but vertex 0's 0.01 at rank 1 of 2 becomes 0.02 — below vertex 0's
    // global-BH value of 0.02 as well; the star center sees everything.
    const std::vector<std::pair<int, int>> edges{{0, 1}};
    const WeightGraph g = WeightGraph::from_edge_list(edges, 2);
    const Eigen::VectorXd q = spatial_bh_adjust(vec({0.01, 0.04}), g);
    CHECK(q[0] == doctest::Approx(0.02));
    CHECK(q[1] == doctest::Approx(0.04));
}

TEST_CASE("isolated vertices keep their raw p-value") {
    const std::vector<std::pair<int, int>> edges{{0, 1}};
    const WeightGraph g = WeightGraph::from_edge_list(edges, 3);
    const Eigen::VectorXd q = spatial_bh_adjust(vec({0.2, 0.3, 0.07}), g);
    CHECK(q[2] == doctest::Approx(0.07));
}

TEST_CASE("on a complete graph the local variant is global BH") {
    Rng rng(403, 0);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(20));
        Eigen::VectorXd p(n);
        for (int i = 0; i < n; ++i) p[i] = rng.next_double();
        const WeightGraph g = complete_graph(n);
        const Eigen::VectorXd local = spatial_bh_adjust(p, g);
        const Eigen::VectorXd global = bh_adjust(p);
        for (int i = 0; i < n; ++i) {
            REQUIRE(local[i] == doctest::Approx(global[i]).epsilon(1e-14));
        }
    }
}

TEST_CASE("significance tables") {
    const Eigen::VectorXd p = vec({0.001, 0.02, 0.8});
    Eigen::VectorXi sign(3);
    sign << 1, -1, 0;
    const WeightGraph g = complete_graph(3);

    SUBCASE("no adjustment passes raw values through") {
        const SignificanceTable table =
            make_significance_table(p, sign, FdrMode::none, g);
        CHECK((table.p_adj.array() == table.p_raw.array()).all());
        CHECK(table.thresholds == std::vector<double>{0.05, 0.01});
        CHECK(table.significant[0] == std::vector<bool>{true, true, false});
        CHECK(table.significant[1] == std::vector<bool>{true, false, false});
    }
    SUBCASE("global mode adjusts before thresholding") {
        const SignificanceTable table =
            make_significance_table(p, sign, FdrMode::global, g);
        CHECK(table.p_adj[0] == doctest::Approx(0.003));
        CHECK(table.p_adj[1] == doctest::Approx(0.03));
        CHECK(table.significant[0] == std::vector<bool>{true, true, false});
        CHECK(table.significant[1] == std::vector<bool>{true, false, false});
    }
    SUBCASE("spatial mode matches global on the complete graph") {
        const SignificanceTable spatial =
            make_significance_table(p, sign, FdrMode::spatial, g);
        const SignificanceTable global =
            make_significance_table(p, sign, FdrMode::global, g);
        CHECK((spatial.p_adj.array() == global.p_adj.array()).all());
    }
    SUBCASE("custom thresholds") {
        const SignificanceTable table =
            make_significance_table(p, sign, FdrMode::none, g, {0.5});
        CHECK(table.significant.size() == 1);
        CHECK(table.significant[0] == std::vector<bool>{true, true, false});
    }
}
