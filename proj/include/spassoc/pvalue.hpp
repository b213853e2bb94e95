#pragma once

#include <Eigen/Core>

#include <vector>

#include "spassoc/lisa.hpp"
#include "spassoc/weight_graph.hpp"

namespace spassoc {

/// Which tail formula produced a local p-value.
enum class BoundKind { standard, balanced, degenerate };

/// Branch selection for the local bound: the standard formula applies when
/// min(m_i, n - m_i - 1) <= standard_fraction * n, the balanced variant
/// otherwise. Degenerate vertices (m_i = 0, m_i = n - 1, or zero row
/// variance) always report p = 1.
struct LocalBoundOptions {
    double standard_fraction = 0.25;
};

/// Per-vertex analytic permutation-test results. deviation holds
/// t_i = |gamma_i - m_i rowmean_i| and sign its direction; p_raw is the
/// concentration-bound tail probability clamped to [0, 1].
struct LocalPValueReport {
    Eigen::VectorXd p_raw;
    Eigen::VectorXd deviation;
    Eigen::VectorXi sign;
    std::vector<BoundKind> bound_used;
};

/// Global analytic permutation-test result. upsilon_sq is the permutation
/// scale sum_i eta_i s_i^2 with eta_i = m_i (n - m_i - 1) / (n - 1).
struct GlobalPValueReport {
    double gamma = 0.0;
    double center = 0.0;
    double deviation = 0.0;
    double upsilon_sq = 0.0;
    double p = 1.0;
};

/// Tail bound for |gamma_i(pi) - m_i rowmean_i| >= t under the conditional
/// permutation null, in the sparse/dense-degree regime:
///   Q( (n-1) t^2 / (2 m (n-m-1) s^2) ; 1/2 ).
/// Requires 1 <= m <= n-2 and rowvar > 0.
double local_tail_standard(int n, int m, double deviation, double rowvar);

/// Balanced-degree variant of the same tail bound:
///   C0 * I[ exp(-t^2 w- / (2 s^2)); (n-1) w+, 1/2 ]
/// with w- = min(m, n-m-1)/max(m, n-m-1)^2, w+ = max(m, n-m-1)/min(m, n-m-1)^2
/// and C0 = sqrt((n-1) w+) Gamma((n-1) w+) / Gamma(1/2 + (n-1) w+) evaluated
/// through log-gamma differences. Requires 1 <= m <= n-2 and rowvar > 0.
double local_tail_balanced(int n, int m, double deviation, double rowvar);

LocalPValueReport local_pvalues(const LisaVector& lv, const WeightGraph& g,
                                LocalBoundOptions options = {});

GlobalPValueReport global_pvalue(const LisaVector& lv, const WeightGraph& g);

}  // namespace spassoc
