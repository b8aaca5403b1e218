#include "submaj/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "submaj/linalg.hpp"
#include "submaj/majorization.hpp"

namespace submaj::graphs {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) {
        throw Error(ErrorCode::TooSmall, "graph needs at least one vertex");
    }
    for (auto& [i, j] : edges_) {
        if (i == j) {
            throw Error(ErrorCode::ParseError, "self-loops are not allowed");
        }
        if (i < j) std::swap(i, j);
        if (i > n_ || j < 1) {
            throw Error(ErrorCode::ParseError, "edge endpoint out of range");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw Error(ErrorCode::ParseError, "duplicate edge");
    }
}

std::size_t canonical_edge_index(const Edge& e) {
    const std::size_t i = e.first, j = e.second;
    return (i - 1) * (i - 2) / 2 + (j - 1);
}

Graph complete_graph(std::size_t n) {
    if (n < 2) {
        throw Error(ErrorCode::TooSmall, "complete graph needs n >= 2");
    }
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (std::size_t i = 2; i <= n; ++i)
        for (std::size_t j = 1; j < i; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Matrix incidence_matrix(const Graph& g) {
    if (g.edge_count() == 0) {
        throw Error(ErrorCode::NoEdges, "graph has no edges");
    }
    Matrix q(g.vertex_count(), g.edge_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        const auto& [i, j] = g.edges()[k];
        q(i - 1, k) = 1.0;
        q(j - 1, k) = -1.0;
    }
    return q;
}

Matrix vertex_laplacian(const Graph& g) {
    const Matrix q = incidence_matrix(g);
    return q * q.transpose();
}

Matrix edge_laplacian(const Graph& g) {
    const Matrix q = incidence_matrix(g);
    return q.transpose() * q;
}

subspaces::Subspace edge_selector(const Graph& g) {
    if (g.edge_count() == 0) {
        throw Error(ErrorCode::NoEdges, "graph has no edges");
    }
    const std::size_t full = g.vertex_count() * (g.vertex_count() - 1) / 2;
    subspaces::Subspace out;
    out.ambient_dim = full;
    out.basis = Matrix(full, g.edge_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        out.basis(canonical_edge_index(g.edges()[k]), k) = 1.0;
    }
    return out;
}

Matrix laplacian_via_complete_incidence(const Graph& g) {
    const Graph kc = complete_graph(g.vertex_count());
    const Matrix qc = incidence_matrix(kc);
    std::vector<double> w(kc.edge_count(), 0.0);
    for (const Edge& e : g.edges()) w[canonical_edge_index(e)] = 1.0;
    // Q_c * diag(w) * Q_c^T
    Matrix scaled = qc;
    for (std::size_t k = 0; k < kc.edge_count(); ++k)
        for (std::size_t i = 0; i < scaled.rows(); ++i) scaled(i, k) *= w[k];
    return scaled * qc.transpose();
}

SpectrumReport vertex_spectrum(const Graph& g) {
    SpectrumReport out;
    out.values = linalg::sym_eig(vertex_laplacian(g)).values;
    out.source = "vertex-laplacian";
    out.n = g.vertex_count();
    out.m = g.edge_count();
    return out;
}

SpectrumReport edge_spectrum(const Graph& g) {
    SpectrumReport out;
    out.values = linalg::sym_eig(edge_laplacian(g)).values;
    out.source = "edge-laplacian";
    out.n = g.vertex_count();
    out.m = g.edge_count();
    return out;
}

ComparisonReport spectra_compare(const Graph& g1, const Graph& g2, double tol) {
    if (g1.vertex_count() != g2.vertex_count()) {
        throw Error(ErrorCode::VertexCountMismatch, "graphs have different vertex counts");
    }
    if (g1.edge_count() != g2.edge_count()) {
        throw Error(ErrorCode::EdgeCountMismatch, "graphs have different edge counts");
    }
    const std::size_t n = g1.vertex_count();

    const auto spectrum_or_zero = [n](const Graph& g) {
        if (g.edge_count() == 0) return std::vector<double>(n, 0.0);
        return linalg::sym_eig(vertex_laplacian(g)).values;
    };
    ComparisonReport out;
    out.spectrum1 = spectrum_or_zero(g1);
    out.spectrum2 = spectrum_or_zero(g2);
    for (std::size_t k = 0; k < n; ++k) {
        out.lhs += std::abs(out.spectrum1[k] - out.spectrum2[k]);
    }

    const std::set<Edge> e2(g2.edges().begin(), g2.edges().end());
    for (const Edge& e : g1.edges()) {
        if (!e2.count(e)) ++out.differing;
    }
    out.rhs = static_cast<double>(n) * static_cast<double>(out.differing);

    // Sharper constant: largest Laplacian eigenvalue of the union graph.
    std::set<Edge> union_edges(g1.edges().begin(), g1.edges().end());
    union_edges.insert(g2.edges().begin(), g2.edges().end());
    if (!union_edges.empty()) {
        const Graph u(n, std::vector<Edge>(union_edges.begin(), union_edges.end()));
        out.sharpened_rhs =
            linalg::sym_eig(vertex_laplacian(u)).values.front() * static_cast<double>(out.differing);
    }

    if (tol < 0.0) tol = 1e-8 * static_cast<double>(n) * std::max(1.0, out.rhs);
    out.tolerance_used = tol;
    out.holds = out.lhs <= out.rhs + tol;
    return out;
}

}  // namespace submaj::graphs
