#include "spassoc/kernel.hpp"

#include <Eigen/Cholesky>

#include <stdexcept>

namespace spassoc {

SimilarityKernel SimilarityKernel::moran() {
    return SimilarityKernel(Kind::moran, 2, std::nullopt);
}

SimilarityKernel SimilarityKernel::moran(Eigen::MatrixXd metric) {
    if (metric.rows() != metric.cols()) {
        throw std::invalid_argument("Moran metric must be square");
    }
    if (!metric.allFinite()) {
        throw std::invalid_argument("Moran metric has non-finite entries");
    }
    if (!metric.isApprox(metric.transpose())) {
        throw std::invalid_argument("Moran metric must be symmetric");
    }
    Eigen::LLT<Eigen::MatrixXd> llt(metric);
    if (llt.info() != Eigen::Success) {
        throw std::invalid_argument("Moran metric is not positive definite");
    }
    return SimilarityKernel(Kind::moran, 2, std::move(metric));
}

SimilarityKernel SimilarityKernel::geary(int norm_order) {
    if (norm_order != 1 && norm_order != 2) {
        throw std::invalid_argument("Geary norm order must be 1 or 2");
    }
    return SimilarityKernel(Kind::geary, norm_order, std::nullopt);
}

SimilarityKernel SimilarityKernel::binary() {
    return SimilarityKernel(Kind::binary, 2, std::nullopt);
}

SimilarityKernel SimilarityKernel::parse(std::string_view name) {
    if (name == "moran") return moran();
    if (name == "geary-l1") return geary(1);
    if (name == "geary-l2") return geary(2);
    if (name == "binary") return binary();
    throw std::invalid_argument("unknown statistic '" + std::string(name) +
                                "' (expected moran, geary-l1, geary-l2, or binary)");
}

std::string SimilarityKernel::name() const {
    switch (kind_) {
        case Kind::moran: return "moran";
        case Kind::geary: return norm_order_ == 1 ? "geary-l1" : "geary-l2";
        case Kind::binary: return "binary";
    }
    return "unknown";
}

}  // namespace spassoc
