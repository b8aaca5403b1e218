#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "submaj/matrix.hpp"
#include "submaj/subspace.hpp"

namespace submaj::graphs {

// Undirected edge (i, j) with 1-based vertices and i > j.
using Edge = std::pair<std::size_t, std::size_t>;

// Simple graph with 0/1 edge weights. Edges are kept in the canonical
// complete-graph order: lexicographic by (i, j), i > j.
class Graph {
  public:
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

  private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

// Ordered Laplacian spectrum with provenance.
struct SpectrumReport {
    std::vector<double> values;  // nonincreasing
    std::string source;          // "vertex-laplacian" | "edge-laplacian" | "complete-graph"
    std::size_t n = 0;           // vertex count
    std::size_t m = 0;           // edge count
};

SpectrumReport vertex_spectrum(const Graph& g);
SpectrumReport edge_spectrum(const Graph& g);

struct ComparisonReport {
    std::vector<double> spectrum1;  // vertex-Laplacian eigenvalues, nonincreasing, length n
    std::vector<double> spectrum2;
    double lhs = 0.0;          // sum |lambda1_k - lambda2_k|
    std::size_t differing = 0; // l = |E1 \ E2|
    double rhs = 0.0;          // n * l
    double sharpened_rhs = 0.0;  // lambda_max(union graph) * l
    bool holds = false;
    double tolerance_used = 0.0;
};

// Canonical index (0-based) of edge (i, j), i > j, in the complete-graph
// edge order.
std::size_t canonical_edge_index(const Edge& e);

Graph complete_graph(std::size_t n);
Matrix incidence_matrix(const Graph& g);
Matrix vertex_laplacian(const Graph& g);
Matrix edge_laplacian(const Graph& g);

// Coordinate subspace of the complete graph's edge space spanned by the
// edges present in g.
subspaces::Subspace edge_selector(const Graph& g);

// Q_c * diag(w) * Q_c^T where w is g's 0/1 edge indicator over the
// complete edge set. Equals vertex_laplacian(g); exposed for the
// identity check only.
Matrix laplacian_via_complete_incidence(const Graph& g);

ComparisonReport spectra_compare(const Graph& g1, const Graph& g2, double tol = -1.0);

}  // namespace submaj::graphs
