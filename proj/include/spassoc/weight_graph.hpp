#pragma once

#include <Eigen/SparseCore>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace spassoc {

/// Rectangular lattice dimensions for grid graphs.
struct GridSpec {
    int rows = 1;
    int cols = 1;
};

/// Sparse binary spatial weight matrix over an undirected region graph.
///
/// Invariants: all stored entries equal one, the matrix is symmetric and
/// (except for the k = 0 lag relation, see identity_relation) has a zero
/// diagonal. The degree vector m with m_i = sum_j w_ij is kept consistent
/// with the adjacency structure. Immutable after construction and safe to
/// share across threads.
class WeightGraph {
public:
    using Sparse = Eigen::SparseMatrix<double>;

    /// Builds a graph from undirected edges over vertices 0..n-1.
    /// Duplicate edges (either orientation) collapse to one; self-loops
    /// and out-of-range ids are rejected.
    static WeightGraph from_edge_list(std::span<const std::pair<int, int>> edges, int n);

    /// Rook-adjacency lattice; vertex (r, c) has index r * cols + c.
    static WeightGraph grid(GridSpec spec);

    /// The identity relation w_ii = 1: the k = 0 lag matrix. The only
    /// WeightGraph with nonzero diagonal; statistics reject it.
    static WeightGraph identity_relation(int n);

    int vertex_count() const { return static_cast<int>(adjacency_.cols()); }

    /// Number of undirected edges (self-loops counted once).
    std::int64_t edge_count() const;

    int degree(int i) const { return degrees_[i]; }
    const Eigen::VectorXi& degrees() const { return degrees_; }

    /// Neighbor ids of vertex i in ascending order.
    std::span<const int> neighbors(int i) const;

    const Sparse& adjacency() const { return adjacency_; }

    bool has_self_loops() const { return has_self_loops_; }

private:
    WeightGraph(Sparse adjacency, bool self_loops);

    Sparse adjacency_;       // compressed, symmetric, entries all 1.0
    Eigen::VectorXi degrees_;
    bool has_self_loops_ = false;
};

/// The exact-distance-k lag relation of g: w_ij = 1 iff the graph distance
/// between i and j equals k. k = 1 returns g itself and k = 0 the identity
/// relation. Computed by per-vertex BFS frontier expansion.
WeightGraph lag_matrix(const WeightGraph& g, int k);

}  // namespace spassoc
