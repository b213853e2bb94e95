#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <string_view>

namespace spassoc {

/// Pairwise similarity lambda(y_i, y_j) selecting the association statistic:
///
///   moran    <y_i - ybar, y_j - ybar>_M with M symmetric positive definite
///   geary    ||y_i - y_j||_p^p for p in {1, 2}
///   binary   <beta_i, beta_j> over across-region median sign patterns
///
/// A Moran metric supplied by the user is validated by attempting a
/// Cholesky factorization; the default metric is the identity.
class SimilarityKernel {
public:
    enum class Kind { moran, geary, binary };

    static SimilarityKernel moran();
    static SimilarityKernel moran(Eigen::MatrixXd metric);
    static SimilarityKernel geary(int norm_order);
    static SimilarityKernel binary();

    /// Parses "moran", "geary-l1", "geary-l2", or "binary".
    static SimilarityKernel parse(std::string_view name);

    Kind kind() const { return kind_; }

    /// Norm order p for Geary kernels.
    int norm_order() const { return norm_order_; }

    /// User-supplied Moran metric, or nullptr for the identity.
    const Eigen::MatrixXd* metric() const { return metric_ ? &*metric_ : nullptr; }

    std::string name() const;

private:
    SimilarityKernel(Kind kind, int norm_order, std::optional<Eigen::MatrixXd> metric)
        : kind_(kind), norm_order_(norm_order), metric_(std::move(metric)) {}

    Kind kind_;
    int norm_order_ = 2;
    std::optional<Eigen::MatrixXd> metric_;
};

}  // namespace spassoc
