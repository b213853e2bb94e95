#include "spassoc/simulate.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "spassoc/lisa.hpp"
#include "spassoc/parallel.hpp"
#include "spassoc/pvalue.hpp"
#include "spassoc/rng.hpp"

namespace spassoc {

namespace {

/// Holds the Cholesky factor of I + cA for one c, so one factorization
/// serves every replicate drawn at that c.
class GridGaussianSampler {
  public:
    GridGaussianSampler(const WeightGraph& graph, double c) {
        const int n = graph.vertex_count();
        Eigen::MatrixXd sigma = Eigen::MatrixXd(graph.adjacency()) * c;
        sigma.diagonal().array() += 1.0;
        Eigen::LLT<Eigen::MatrixXd> llt(sigma);
        if (llt.info() != Eigen::Success) {
            throw std::domain_error(
                "covariance I + c*A is not positive definite for c = " +
                std::to_string(c));
        }
        upper_factor_ = llt.matrixU();
    }

    /// Draws a T x n panel whose rows are independent N(0, I + cA)
    /// vectors. Normals are consumed in row-major order so the draw is a
    /// pure function of the stream.
    Eigen::MatrixXd sample(int time_count, Rng& rng) const {
        const auto n = upper_factor_.rows();
        Eigen::MatrixXd normals(time_count, n);
        for (int t = 0; t < time_count; ++t) {
            for (Eigen::Index i = 0; i < n; ++i) {
                normals(t, i) = rng.next_normal();
            }
        }
        Eigen::MatrixXd panel(time_count, n);
        panel.noalias() =
            normals * upper_factor_.triangularView<Eigen::Upper>();
        return panel;
    }

  private:
    Eigen::MatrixXd upper_factor_;  // Lᵀ with Σ = LLᵀ
};

std::vector<SimilarityKernel> default_kernels() {
    return {SimilarityKernel::moran(), SimilarityKernel::geary(2),
            SimilarityKernel::geary(1), SimilarityKernel::binary()};
}

void validate(const SimConfig& cfg) {
    if (cfg.time_count < 1) {
        throw std::invalid_argument("time_count must be at least 1");
    }
    if (cfg.replicates < 1) {
        throw std::invalid_argument("replicates must be at least 1");
    }
    if (!(cfg.alpha > 0.0) || !(cfg.alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie strictly between 0 and 1");
    }
    if (cfg.c_values.empty()) {
        throw std::invalid_argument("c_values must not be empty");
    }
}

}  // namespace

PanelMatrix sample_grid_gaussian(GridSpec grid, int time_count, double c,
                                 std::uint64_t seed) {
    if (time_count < 1) {
        throw std::invalid_argument("time_count must be at least 1");
    }
    const WeightGraph graph = WeightGraph::grid(grid);
    const GridGaussianSampler sampler(graph, c);
    Rng rng(seed, 0);
    return PanelMatrix(sampler.sample(time_count, rng));
}

PowerCurve power_curve(const SimConfig& cfg, PowerMode mode) {
    validate(cfg);
    const std::vector<SimilarityKernel> kernels =
        cfg.kernels.empty() ? default_kernels() : cfg.kernels;
    const WeightGraph graph = WeightGraph::grid(cfg.grid);
    const int n = graph.vertex_count();
    const int reps = cfg.replicates;
    const auto kernel_count = static_cast<int>(kernels.size());

    PowerCurve curve;
    curve.mode = mode;
    // One rejection-rate sample per (kernel, replicate); refilled per c.
    Eigen::MatrixXd rates(kernel_count, reps);

    for (std::size_t ci = 0; ci < cfg.c_values.size(); ++ci) {
        const double c = cfg.c_values[ci];
        const GridGaussianSampler sampler(graph, c);
        detail::parallel_for(reps, [&](std::ptrdiff_t rep) {
            const std::uint64_t stream =
                static_cast<std::uint64_t>(ci) *
                    static_cast<std::uint64_t>(reps) +
                static_cast<std::uint64_t>(rep);
            Rng rng(cfg.seed, stream);
            const PanelMatrix panel(sampler.sample(cfg.time_count, rng));
            for (int k = 0; k < kernel_count; ++k) {
                const LisaVector lv = lisa(kernels[k], panel, graph);
                double rate = 0.0;
                if (mode == PowerMode::lisa) {
                    const LocalPValueReport report =
                        local_pvalues(lv, graph);
                    rate = static_cast<double>(
                               (report.p_raw.array() < cfg.alpha).count()) /
                           static_cast<double>(n);
                } else {
                    const GlobalPValueReport report =
                        global_pvalue(lv, graph);
                    rate = report.p < cfg.alpha ? 1.0 : 0.0;
                }
                rates(k, rep) = rate;
            }
        });
        for (int k = 0; k < kernel_count; ++k) {
            PowerPoint point;
            point.kernel = kernels[k].name();
            point.c = c;
            point.replicates = reps;
            point.power = rates.row(k).mean();
            if (reps > 1) {
                const double ss =
                    (rates.row(k).array() - point.power).square().sum();
                point.se = std::sqrt(ss / (reps - 1)) /
                           std::sqrt(static_cast<double>(reps));
            }
            curve.points.push_back(std::move(point));
        }
    }
    return curve;
}

const char* to_string(PowerMode mode) {
    return mode == PowerMode::lisa ? "lisa" : "gisa";
}

}  // namespace spassoc
