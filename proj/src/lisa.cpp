#include "spassoc/lisa.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "spassoc/parallel.hpp"
#include "similarity_rows.hpp"

namespace spassoc {

Eigen::VectorXd across_region_medians(const PanelMatrix& data) {
    const int t_count = data.time_count();
    const int n = data.region_count();
    if (n == 0) throw std::invalid_argument("median of an empty panel");
    Eigen::VectorXd medians(t_count);
    std::vector<double> scratch(static_cast<std::size_t>(n));
    for (int k = 0; k < t_count; ++k) {
        for (int i = 0; i < n; ++i) scratch[static_cast<std::size_t>(i)] = data.values()(k, i);
        auto mid = scratch.begin() + n / 2;
        std::nth_element(scratch.begin(), mid, scratch.end());
        if (n % 2 == 1) {
            medians[k] = *mid;
        } else {
            const double upper = *mid;
            const double lower = *std::max_element(scratch.begin(), mid);
            medians[k] = lower + (upper - lower) / 2.0;
        }
    }
    return medians;
}

double similarity(const SimilarityKernel& kernel, const PanelMatrix& data, int i, int j) {
    const int n = data.region_count();
    if (i < 0 || i >= n || j < 0 || j >= n) {
        throw std::invalid_argument("similarity: vertex index out of range");
    }
    if (i == j) {
        throw std::invalid_argument("similarity is defined off-diagonal only (i == j)");
    }
    detail::SimilarityRows rows(kernel, data);
    Eigen::VectorXd buffer(n);
    rows.row(i, buffer);
    return buffer[j];
}

LisaVector lisa(const SimilarityKernel& kernel, const PanelMatrix& data,
                const WeightGraph& g) {
    const int n = data.region_count();
    if (n != g.vertex_count()) {
        throw std::invalid_argument("panel has " + std::to_string(n) +
                                    " regions but graph has " +
                                    std::to_string(g.vertex_count()) + " vertices");
    }
    if (g.has_self_loops()) {
        throw std::invalid_argument("statistics require a zero-diagonal weight matrix");
    }

    const detail::SimilarityRows rows(kernel, data);
    LisaVector lv;
    lv.gamma = Eigen::VectorXd::Zero(n);
    lv.center = Eigen::VectorXd::Zero(n);
    lv.rowmean = Eigen::VectorXd::Zero(n);
    lv.rowvar = Eigen::VectorXd::Zero(n);

    detail::parallel_blocks(n, [&](std::int64_t begin, std::int64_t end) {
        Eigen::VectorXd row(n);
        for (std::int64_t i = begin; i < end; ++i) {
            const int v = static_cast<int>(i);
            rows.row(v, row);
            double gamma = 0.0;
            for (int j : g.neighbors(v)) gamma += row[j];
            lv.gamma[v] = gamma;
            if (n > 1) {
                const double mean = row.sum() / (n - 1);
                // row[v] is 0; park the mean there so the squared-norm
                // sweep skips the diagonal term.
                row[v] = mean;
                lv.rowvar[v] = (row.array() - mean).matrix().squaredNorm() / (n - 1);
                lv.rowmean[v] = mean;
            }
            lv.center[v] = static_cast<double>(g.degree(v)) * lv.rowmean[v];
        }
    });
    return lv;
}

GisaValue gisa(const LisaVector& lv) {
    return GisaValue{lv.gamma.sum(), lv.center.sum()};
}

}  // namespace spassoc
