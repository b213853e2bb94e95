#pragma once

#include <Eigen/Core>

#include <vector>

#include "spassoc/weight_graph.hpp"

namespace spassoc {

/// Benjamini-Hochberg step-up adjusted p-values: with p sorted ascending,
/// q_(k) = min_{j >= k} { n p_(j) / j } clamped to 1, reported in the
/// original order. Rejects non-finite or out-of-range inputs.
Eigen::VectorXd bh_adjust(const Eigen::VectorXd& p);

/// Graph-localized BH: vertex i's adjusted value is its entry from running
/// bh_adjust over the p-values of its closed neighborhood N(i) u {i}. An
/// isolated vertex keeps its raw p. Unlike global BH the result can fall
/// below the raw p-value of a vertex with few neighbors.
Eigen::VectorXd spatial_bh_adjust(const Eigen::VectorXd& p, const WeightGraph& g);

/// How (and whether) raw p-values are adjusted for multiplicity.
enum class FdrMode { none, global, spatial };

/// Per-vertex significance classification at a configured threshold set
/// (defaults {0.05, 0.01}); thresholds are evaluated on the adjusted
/// p-values as p_adj <= threshold.
struct SignificanceTable {
    Eigen::VectorXd p_raw;
    Eigen::VectorXd p_adj;
    Eigen::VectorXi sign;
    std::vector<double> thresholds;
    // significant[t][i]: vertex i attains thresholds[t]
    std::vector<std::vector<bool>> significant;
};

SignificanceTable make_significance_table(const Eigen::VectorXd& p_raw,
                                          const Eigen::VectorXi& sign, FdrMode mode,
                                          const WeightGraph& g,
                                          std::vector<double> thresholds = {0.05, 0.01});

}  // namespace spassoc
