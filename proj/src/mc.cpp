#include "spassoc/mc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "spassoc/parallel.hpp"
#include "spassoc/rng.hpp"
#include "similarity_rows.hpp"

namespace spassoc {

namespace {

void check_inputs(const PanelMatrix& data, const WeightGraph& g) {
    if (data.region_count() != g.vertex_count()) {
        throw std::invalid_argument("panel and graph dimensions disagree");
    }
    if (g.has_self_loops()) {
        throw std::invalid_argument("statistics require a zero-diagonal weight matrix");
    }
}

struct VertexRow {
    double gamma = 0.0;
    double center = 0.0;
    double deviation = 0.0;
};

// Observed statistic, center, and deviation from an already-filled row;
// the same arithmetic lisa() uses, so thresholds match bit for bit.
VertexRow summarize(const Eigen::VectorXd& row, const WeightGraph& g, int i) {
    VertexRow s;
    for (int j : g.neighbors(i)) s.gamma += row[j];
    const int n = static_cast<int>(row.size());
    const double mean = n > 1 ? row.sum() / (n - 1) : 0.0;
    s.center = static_cast<double>(g.degree(i)) * mean;
    s.deviation = std::abs(s.gamma - s.center);
    return s;
}

}  // namespace

Eigen::VectorXd mc_local_pvalues(const SimilarityKernel& kernel, const PanelMatrix& data,
                                 const WeightGraph& g, std::int64_t permutations,
                                 std::uint64_t seed) {
    check_inputs(data, g);
    if (permutations < 1) throw std::invalid_argument("permutation count must be >= 1");
    const int n = g.vertex_count();
    const detail::SimilarityRows rows(kernel, data);
    Eigen::VectorXd p_hat(n);

    detail::parallel_blocks(n, [&](std::int64_t begin, std::int64_t end) {
        Eigen::VectorXd row(n);
        std::vector<int> pool(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
        for (std::int64_t iv = begin; iv < end; ++iv) {
            const int i = static_cast<int>(iv);
            rows.row(i, row);
            const VertexRow obs = summarize(row, g, i);
            const int m = g.degree(i);

            int idx = 0;
            for (int j = 0; j < n; ++j) {
                if (j != i) pool[static_cast<std::size_t>(idx++)] = j;
            }

            // The permuted statistic reads only the images of i's
            // neighbors, so sampling m distinct indices from the other
            // n - 1 is an exact draw of gamma_i(pi) under a uniform
            // conditional permutation.
            Rng rng(seed, static_cast<std::uint64_t>(i));
            std::int64_t hits = 0;
            for (std::int64_t b = 0; b < permutations; ++b) {
                partial_shuffle(pool, static_cast<std::size_t>(m), rng);
                double gamma_pi = 0.0;
                for (int k = 0; k < m; ++k) gamma_pi += row[pool[static_cast<std::size_t>(k)]];
                if (std::abs(gamma_pi - obs.center) >= obs.deviation) ++hits;
            }
            p_hat[i] = static_cast<double>(1 + hits) / static_cast<double>(permutations + 1);
        }
    });
    return p_hat;
}

Eigen::VectorXd mc_local_pvalues_exhaustive(const SimilarityKernel& kernel,
                                            const PanelMatrix& data,
                                            const WeightGraph& g) {
    check_inputs(data, g);
    const int n = g.vertex_count();
    if (n > 9) {
        throw std::invalid_argument("exhaustive enumeration is limited to n <= 9");
    }
    const detail::SimilarityRows rows(kernel, data);
    Eigen::VectorXd p_exact(n);

    Eigen::VectorXd row(n);
    std::vector<int> arrangement(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    for (int i = 0; i < n; ++i) {
        rows.row(i, row);
        const VertexRow obs = summarize(row, g, i);

        // Positions of i's neighbors within the list of the other vertices.
        std::vector<int> neighbor_pos;
        neighbor_pos.reserve(static_cast<std::size_t>(g.degree(i)));
        for (int j : g.neighbors(i)) neighbor_pos.push_back(j < i ? j : j - 1);

        int idx = 0;
        for (int j = 0; j < n; ++j) {
            if (j != i) arrangement[static_cast<std::size_t>(idx++)] = j;
        }
        std::sort(arrangement.begin(), arrangement.end());

        std::int64_t hits = 0;
        std::int64_t total = 0;
        do {
            double gamma_pi = 0.0;
            for (int pos : neighbor_pos) gamma_pi += row[arrangement[static_cast<std::size_t>(pos)]];
            if (std::abs(gamma_pi - obs.center) >= obs.deviation) ++hits;
            ++total;
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        p_exact[i] = total > 0 ? static_cast<double>(hits) / static_cast<double>(total) : 1.0;
    }
    return p_exact;
}

double mc_global_pvalue(const SimilarityKernel& kernel, const PanelMatrix& data,
                        const WeightGraph& g, std::int64_t permutations,
                        std::uint64_t seed) {
    check_inputs(data, g);
    if (permutations < 1) throw std::invalid_argument("permutation count must be >= 1");
    const int n = g.vertex_count();
    const detail::SimilarityRows rows(kernel, data);

    // gamma(pi) decomposes over vertices with independent per-vertex
    // permutations, so replicate sums accumulate vertex by vertex in a
    // fixed order. Memory stays O(n + permutations).
    Eigen::VectorXd gamma_pi = Eigen::VectorXd::Zero(permutations);
    double gamma_obs = 0.0;
    double center_obs = 0.0;

    Eigen::VectorXd row(n);
    std::vector<int> pool(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    for (int i = 0; i < n; ++i) {
        rows.row(i, row);
        const VertexRow obs = summarize(row, g, i);
        gamma_obs += obs.gamma;
        center_obs += obs.center;
        const int m = g.degree(i);

        int idx = 0;
        for (int j = 0; j < n; ++j) {
            if (j != i) pool[static_cast<std::size_t>(idx++)] = j;
        }
        Rng rng(seed, static_cast<std::uint64_t>(i));
        for (std::int64_t b = 0; b < permutations; ++b) {
            partial_shuffle(pool, static_cast<std::size_t>(m), rng);
            double contribution = 0.0;
            for (int k = 0; k < m; ++k) contribution += row[pool[static_cast<std::size_t>(k)]];
            gamma_pi[b] += contribution;
        }
    }

    const double deviation = std::abs(gamma_obs - center_obs);
    std::int64_t hits = 0;
    for (std::int64_t b = 0; b < permutations; ++b) {
        if (std::abs(gamma_pi[b] - center_obs) >= deviation) ++hits;
    }
    return static_cast<double>(1 + hits) / static_cast<double>(permutations + 1);
}

}  // namespace spassoc
