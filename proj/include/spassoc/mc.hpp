#pragma once

#include <Eigen/Core>

#include <cstdint>

#include "spassoc/kernel.hpp"
#include "spassoc/panel.hpp"
#include "spassoc/weight_graph.hpp"

namespace spassoc {

/// Monte Carlo conditional-permutation p-values for every vertex: draws
/// `permutations` uniform relabelings of the other n - 1 regions per vertex
/// and reports the add-one estimator
///   (1 + #{ |gamma_i(pi) - m_i rowmean_i| >= t_i }) / (permutations + 1).
/// One RNG stream per vertex is derived from (seed, vertex id), so results
/// are bit-identical under any thread schedule.
Eigen::VectorXd mc_local_pvalues(const SimilarityKernel& kernel, const PanelMatrix& data,
                                 const WeightGraph& g, std::int64_t permutations,
                                 std::uint64_t seed);

/// Exact conditional permutation p-values by exhaustive enumeration of all
/// (n-1)! relabelings per vertex; feasible only for small n (n <= 9).
Eigen::VectorXd mc_local_pvalues_exhaustive(const SimilarityKernel& kernel,
                                            const PanelMatrix& data,
                                            const WeightGraph& g);

/// Monte Carlo p-value for the global statistic: each replicate draws one
/// independent conditional permutation per vertex and sums the permuted
/// local statistics; add-one estimator as above.
double mc_global_pvalue(const SimilarityKernel& kernel, const PanelMatrix& data,
                        const WeightGraph& g, std::int64_t permutations,
                        std::uint64_t seed);

}  // namespace spassoc
