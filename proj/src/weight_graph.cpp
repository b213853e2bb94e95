#include "spassoc/weight_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace spassoc {

namespace {

using Triplet = Eigen::Triplet<double>;

WeightGraph::Sparse build_symmetric(const std::vector<Triplet>& triplets, int n) {
    WeightGraph::Sparse adjacency(n, n);
    adjacency.setFromTriplets(triplets.begin(), triplets.end(),
                              [](double, double) { return 1.0; });
    adjacency.makeCompressed();
    return adjacency;
}

}  // namespace

WeightGraph::WeightGraph(Sparse adjacency, bool self_loops)
    : adjacency_(std::move(adjacency)), has_self_loops_(self_loops) {
    const int n = vertex_count();
    degrees_ = Eigen::VectorXi::Zero(n);
    for (int i = 0; i < n; ++i) {
        degrees_[i] = static_cast<int>(adjacency_.outerIndexPtr()[i + 1] -
                                       adjacency_.outerIndexPtr()[i]);
    }
}

WeightGraph WeightGraph::from_edge_list(std::span<const std::pair<int, int>> edges, int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    std::vector<Triplet> triplets;
    triplets.reserve(edges.size() * 2);
    for (const auto& [src, dst] : edges) {
        if (src < 0 || src >= n || dst < 0 || dst >= n) {
            throw std::invalid_argument("edge (" + std::to_string(src) + ", " +
                                        std::to_string(dst) + ") out of range for n = " +
                                        std::to_string(n));
        }
        if (src == dst) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(src));
        }
        triplets.emplace_back(src, dst, 1.0);
        triplets.emplace_back(dst, src, 1.0);
    }
    return WeightGraph(build_symmetric(triplets, n), false);
}

WeightGraph WeightGraph::grid(GridSpec spec) {
    if (spec.rows < 1 || spec.cols < 1) {
        throw std::invalid_argument("grid dimensions must be positive");
    }
    const int rows = spec.rows;
    const int cols = spec.cols;
    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(4) * rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) {
                triplets.emplace_back(id(r, c), id(r, c + 1), 1.0);
                triplets.emplace_back(id(r, c + 1), id(r, c), 1.0);
            }
            if (r + 1 < rows) {
                triplets.emplace_back(id(r, c), id(r + 1, c), 1.0);
                triplets.emplace_back(id(r + 1, c), id(r, c), 1.0);
            }
        }
    }
    return WeightGraph(build_symmetric(triplets, rows * cols), false);
}

WeightGraph WeightGraph::identity_relation(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) triplets.emplace_back(i, i, 1.0);
    return WeightGraph(build_symmetric(triplets, n), true);
}

std::int64_t WeightGraph::edge_count() const {
    std::int64_t stored = adjacency_.nonZeros();
    if (has_self_loops_) return stored;  // diagonal entries, one per vertex
    return stored / 2;
}

std::span<const int> WeightGraph::neighbors(int i) const {
    const auto* outer = adjacency_.outerIndexPtr();
    const auto* inner = adjacency_.innerIndexPtr();
    return {inner + outer[i], static_cast<std::size_t>(outer[i + 1] - outer[i])};
}

WeightGraph lag_matrix(const WeightGraph& g, int k) {
    if (k < 0) throw std::invalid_argument("lag order must be non-negative");
    const int n = g.vertex_count();
    if (k == 0) return WeightGraph::identity_relation(n);

    // BFS from every vertex, keeping only pairs at distance exactly k.
    // Distance is symmetric, so collecting source < v pairs covers the
    // relation and lag supports for different k are disjoint by construction.
    std::vector<std::pair<int, int>> edges;
    std::vector<int> dist(n);
    std::vector<int> frontier, next;
    for (int source = 0; source < n; ++source) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[source] = 0;
        frontier.assign(1, source);
        for (int depth = 1; depth <= k && !frontier.empty(); ++depth) {
            next.clear();
            for (int u : frontier) {
                for (int v : g.neighbors(u)) {
                    if (dist[v] < 0) {
                        dist[v] = depth;
                        next.push_back(v);
                    }
                }
            }
            frontier.swap(next);
        }
        for (int v : frontier) {
            if (v > source) edges.emplace_back(source, v);
        }
    }
    return WeightGraph::from_edge_list(edges, n);
}

}  // namespace spassoc
