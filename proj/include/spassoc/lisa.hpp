#pragma once

#include <Eigen/Core>

#include "spassoc/kernel.hpp"
#include "spassoc/panel.hpp"
#include "spassoc/weight_graph.hpp"

namespace spassoc {

/// Per-vertex local association statistics and the row summaries the
/// permutation bounds need:
///
///   gamma[i]   = sum_j w_ij lambda(y_i, y_j)
///   rowmean[i] = (n-1)^-1 sum_{j != i} lambda(y_i, y_j)
///   rowvar[i]  = (n-1)^-1 sum_{j != i} (lambda_ij - rowmean[i])^2
///   center[i]  = m_i * rowmean[i]
struct LisaVector {
    Eigen::VectorXd gamma;
    Eigen::VectorXd center;
    Eigen::VectorXd rowmean;
    Eigen::VectorXd rowvar;
};

/// Global aggregate: gamma = sum_i gamma_i, center = sum_i m_i rowmean_i.
struct GisaValue {
    double gamma = 0.0;
    double center = 0.0;
};

/// Evaluates lambda(y_i, y_j) for one off-diagonal pair. The diagonal is
/// outside lambda's domain and is rejected.
double similarity(const SimilarityKernel& kernel, const PanelMatrix& data, int i, int j);

/// Computes all local statistics over the graph. Per-vertex rows are
/// evaluated through the kernels' vectorized forms (centered Gram products
/// for Moran, squared-norm expansion for Geary l2, sign-pattern products
/// for binary association, elementwise sweeps for Geary l1) rather than
/// scalar double sums. Vertices are processed independently, so parallel
/// execution is bit-identical to sequential.
LisaVector lisa(const SimilarityKernel& kernel, const PanelMatrix& data,
                const WeightGraph& g);

GisaValue gisa(const LisaVector& lv);

/// The across-region median at each time index (length T); even region
/// counts take the midpoint of the two central order statistics.
Eigen::VectorXd across_region_medians(const PanelMatrix& data);

}  // namespace spassoc
