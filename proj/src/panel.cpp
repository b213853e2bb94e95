#include "spassoc/panel.hpp"

#include <stdexcept>

namespace spassoc {

PanelMatrix::PanelMatrix(Eigen::MatrixXd values) : values_(std::move(values)) {
    if (values_.rows() == 0 || values_.cols() == 0) {
        throw std::invalid_argument("panel matrix must be non-empty");
    }
    if (!values_.allFinite()) {
        throw std::invalid_argument("panel matrix has non-finite entries");
    }
}

}  // namespace spassoc
