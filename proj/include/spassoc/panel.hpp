#pragma once

#include <Eigen/Core>

namespace spassoc {

/// T x n observation (or residual) matrix: column i is region i's
/// length-T series. Entries must be finite.
class PanelMatrix {
public:
    explicit PanelMatrix(Eigen::MatrixXd values);

    int time_count() const { return static_cast<int>(values_.rows()); }
    int region_count() const { return static_cast<int>(values_.cols()); }

    const Eigen::MatrixXd& values() const { return values_; }

    /// Mean series over regions (length T).
    Eigen::VectorXd region_mean() const { return values_.rowwise().mean(); }

private:
    Eigen::MatrixXd values_;
};

}  // namespace spassoc
