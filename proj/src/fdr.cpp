#include "spassoc/fdr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "spassoc/parallel.hpp"

namespace spassoc {

namespace {

void check_pvalues(const Eigen::VectorXd& p) {
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (!std::isfinite(p[i]) || p[i] < 0.0 || p[i] > 1.0) {
            throw std::invalid_argument("p-value at index " + std::to_string(i) +
                                        " is not in [0, 1]");
        }
    }
}

// Step-up adjustment over an index subset, writing only subset entries.
void bh_into(const Eigen::VectorXd& p, std::vector<int>& order, Eigen::VectorXd& out) {
    const int k = static_cast<int>(order.size());
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return p[a] < p[b]; });
    double running = 1.0;
    for (int rank = k; rank >= 1; --rank) {
        const int idx = order[static_cast<std::size_t>(rank - 1)];
        // The ratio k / rank >= 1.0 exactly, so the adjusted value can
        // never round below the raw one.
        const double factor = static_cast<double>(k) / static_cast<double>(rank);
        running = std::min(running, factor * p[idx]);
        out[idx] = running;
    }
}

}  // namespace

Eigen::VectorXd bh_adjust(const Eigen::VectorXd& p) {
    check_pvalues(p);
    const int n = static_cast<int>(p.size());
    Eigen::VectorXd adjusted(n);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    bh_into(p, order, adjusted);
    return adjusted;
}

Eigen::VectorXd spatial_bh_adjust(const Eigen::VectorXd& p, const WeightGraph& g) {
    check_pvalues(p);
    const int n = g.vertex_count();
    if (p.size() != n) {
        throw std::invalid_argument("p-value vector does not match graph size");
    }
    Eigen::VectorXd adjusted(n);
    detail::parallel_blocks(n, [&](std::int64_t begin, std::int64_t end) {
        std::vector<int> neighborhood;
        Eigen::VectorXd local(n);
        for (std::int64_t iv = begin; iv < end; ++iv) {
            const int i = static_cast<int>(iv);
            const auto neighbors = g.neighbors(i);
            neighborhood.assign(neighbors.begin(), neighbors.end());
            neighborhood.push_back(i);
            bh_into(p, neighborhood, local);
            adjusted[i] = local[i];
        }
    });
    return adjusted;
}

SignificanceTable make_significance_table(const Eigen::VectorXd& p_raw,
                                          const Eigen::VectorXi& sign, FdrMode mode,
                                          const WeightGraph& g,
                                          std::vector<double> thresholds) {
    if (p_raw.size() != sign.size()) {
        throw std::invalid_argument("p-value and sign vectors differ in length");
    }
    SignificanceTable table;
    table.p_raw = p_raw;
    table.sign = sign;
    table.thresholds = std::move(thresholds);
    switch (mode) {
        case FdrMode::none: table.p_adj = p_raw; break;
        case FdrMode::global: table.p_adj = bh_adjust(p_raw); break;
        case FdrMode::spatial: table.p_adj = spatial_bh_adjust(p_raw, g); break;
    }
    const int n = static_cast<int>(p_raw.size());
    table.significant.reserve(table.thresholds.size());
    for (double threshold : table.thresholds) {
        std::vector<bool> attained(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            attained[static_cast<std::size_t>(i)] = table.p_adj[i] <= threshold;
        }
        table.significant.push_back(std::move(attained));
    }
    return table;
}

}  // namespace spassoc
