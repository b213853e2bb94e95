#pragma once

#include <Eigen/Core>

#include "spassoc/kernel.hpp"
#include "spassoc/lisa.hpp"
#include "spassoc/panel.hpp"

namespace spassoc::detail {

/// Emits full off-diagonal similarity rows lambda(y_i, .) one vertex at a
/// time. Precomputes whatever the kernel's vectorized form needs so each
/// row costs O(nT); row(i) always stores 0 at position i. Shared by the
/// statistic, the analytic bounds, and the Monte Carlo resampler so all of
/// them see identical row values. Const and safe to share across threads.
class SimilarityRows {
public:
    SimilarityRows(const SimilarityKernel& kernel, const PanelMatrix& data)
        : kind_(kernel.kind()), norm_order_(kernel.norm_order()) {
        switch (kind_) {
            case SimilarityKernel::Kind::moran: {
                centered_ = data.values().colwise() - data.region_mean();
                if (const Eigen::MatrixXd* metric = kernel.metric()) {
                    if (metric->rows() != data.time_count()) {
                        throw std::invalid_argument(
                            "Moran metric dimension does not match panel time count");
                    }
                    projected_ = *metric * centered_;
                } else {
                    projected_ = centered_;
                }
                break;
            }
            case SimilarityKernel::Kind::geary:
                values_ = data.values();
                if (norm_order_ == 2) {
                    sq_norms_ = values_.colwise().squaredNorm().transpose();
                }
                break;
            case SimilarityKernel::Kind::binary: {
                const Eigen::VectorXd medians = across_region_medians(data);
                signs_.resize(data.time_count(), data.region_count());
                for (int i = 0; i < data.region_count(); ++i) {
                    for (int k = 0; k < data.time_count(); ++k) {
                        signs_(k, i) = data.values()(k, i) >= medians[k] ? 1.0 : -1.0;
                    }
                }
                break;
            }
        }
    }

    int size() const {
        switch (kind_) {
            case SimilarityKernel::Kind::moran: return static_cast<int>(centered_.cols());
            case SimilarityKernel::Kind::geary: return static_cast<int>(values_.cols());
            case SimilarityKernel::Kind::binary: return static_cast<int>(signs_.cols());
        }
        return 0;
    }

    void row(int i, Eigen::VectorXd& out) const {
        switch (kind_) {
            case SimilarityKernel::Kind::moran:
                out.noalias() = projected_.transpose() * centered_.col(i);
                break;
            case SimilarityKernel::Kind::geary:
                if (norm_order_ == 2) {
                    out.noalias() = values_.transpose() * values_.col(i);
                    out = sq_norms_.array() + sq_norms_[i] - 2.0 * out.array();
                } else {
                    out = (values_.colwise() - values_.col(i))
                              .cwiseAbs()
                              .colwise()
                              .sum()
                              .transpose();
                }
                break;
            case SimilarityKernel::Kind::binary:
                out.noalias() = signs_.transpose() * signs_.col(i);
                break;
        }
        out[i] = 0.0;
    }

private:
    SimilarityKernel::Kind kind_;
    int norm_order_;
    Eigen::MatrixXd centered_;   // moran: Y - ybar 1^T
    Eigen::MatrixXd projected_;  // moran: M (Y - ybar 1^T)
    Eigen::MatrixXd values_;     // geary
    Eigen::VectorXd sq_norms_;   // geary l2: diag(Y^T Y)
    Eigen::MatrixXd signs_;      // binary: +-1 median sign patterns
};

}  // namespace spassoc::detail
