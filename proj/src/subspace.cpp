#include "submaj/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace submaj::subspaces {

namespace {

void require_same_ambient(const Subspace& x, const Subspace& y) {
    if (x.ambient_dim != y.ambient_dim) {
        throw Error(ErrorCode::AmbientMismatch, "subspaces live in different ambient spaces");
    }
}

}  // namespace

Subspace subspace_from_columns(const Matrix& b) {
    Subspace s;
    s.ambient_dim = b.rows();
    s.basis = linalg::orthonormalize(b);
    return s;
}

Matrix projector(const Subspace& s) { return s.basis * s.basis.transpose(); }

Subspace complement(const Subspace& s) {
    const std::size_t n = s.ambient_dim;
    const std::size_t k = s.dim();
    if (k >= n) {
        throw Error(ErrorCode::FullSpace, "full space has an empty complement");
    }
    // Orthonormalize [basis | I]; everything past the first k columns
    // spans the complement.
    Matrix extended(n, k + n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) extended(i, j) = s.basis(i, j);
        extended(i, k + i) = 1.0;
    }
    Matrix q = linalg::orthonormalize(extended);
    Subspace out;
    out.ambient_dim = n;
    out.basis = Matrix(n, q.cols() - k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = k; j < q.cols(); ++j) out.basis(i, j - k) = q(i, j);
    return out;
}

AngleSet principal_angles(const Subspace& x, const Subspace& y) {
    require_same_ambient(x, y);
    // Canonicalize the argument order so the computation (and hence the
    // rounding) is identical for (X, Y) and (Y, X).
    const bool swap_args =
        y.dim() < x.dim() ||
        (y.dim() == x.dim() && y.basis.entries() < x.basis.entries());
    if (swap_args) return principal_angles(y, x);
    const std::size_t m = std::min(x.dim(), y.dim());

    // Cosines: singular values of X^T Y, already nonincreasing.
    const Matrix c = x.basis.transpose() * y.basis;
    const linalg::SvdDecomposition cs = linalg::svd(c);

    // Matched principal directions inside X.
    Matrix u(x.dim(), m);
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < m; ++j) u(i, j) = cs.left(i, j);
    const Matrix dirs = x.basis * u;                       // n x m
    const Matrix residual = dirs - y.basis * (y.basis.transpose() * dirs);

    AngleSet out;
    out.angles.resize(m);
    out.cosines.resize(m);
    out.sines.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        double cosv = std::clamp(cs.singular_values[k], 0.0, 1.0);
        double s = 0.0;
        for (std::size_t i = 0; i < residual.rows(); ++i) s += residual(i, k) * residual(i, k);
        double sinv = std::clamp(std::sqrt(s), 0.0, 1.0);
        // Keep the better-conditioned one of the pair and derive the other,
        // so cos^2 + sin^2 = 1 exactly. For small angles the sine path
        // carries the accuracy; for large angles the cosine path does.
        if (cosv * cosv >= 0.5) {
            cosv = std::sqrt(std::max(0.0, 1.0 - sinv * sinv));
        } else {
            sinv = std::sqrt(std::max(0.0, 1.0 - cosv * cosv));
        }
        out.angles[k] = std::atan2(sinv, cosv);
        out.cosines[k] = cosv;
        out.sines[k] = sinv;
    }

    // Reconciliation can perturb the ordering at rounding level.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return out.angles[a] < out.angles[b];
    });
    AngleSet sorted;
    sorted.angles.resize(m);
    sorted.cosines.resize(m);
    sorted.sines.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        sorted.angles[k] = out.angles[order[k]];
        sorted.cosines[k] = out.cosines[order[k]];
        sorted.sines[k] = out.sines[order[k]];
    }
    return sorted;
}

ProjectorDifferenceReport projector_difference_singvals(const Subspace& x, const Subspace& y) {
    require_same_ambient(x, y);
    const std::size_t n = x.ambient_dim;

    ProjectorDifferenceReport out;
    out.computed = linalg::svd(projector(x) - projector(y)).singular_values;

    const AngleSet angles = principal_angles(x, y);
    const std::size_t extra_ones =
        x.dim() > y.dim() ? x.dim() - y.dim() : y.dim() - x.dim();
    std::vector<double> structural;
    structural.insert(structural.end(), extra_ones, 1.0);
    for (double s : angles.sines) {
        structural.push_back(s);
        structural.push_back(s);
    }
    std::stable_sort(structural.begin(), structural.end(),
                     [](double a, double b) { return a > b; });

    const std::size_t len = std::max(n, structural.size());
    out.computed.resize(len, 0.0);
    structural.resize(len, 0.0);
    out.structural = std::move(structural);
    for (std::size_t k = 0; k < len; ++k) {
        out.max_abs_diff = std::max(out.max_abs_diff,
                                    std::abs(out.computed[k] - out.structural[k]));
    }
    return out;
}

Matrix restrict_to(const Matrix& a, const Subspace& s) {
    if (a.rows() != s.ambient_dim || a.cols() != s.ambient_dim) {
        throw Error(ErrorCode::AmbientMismatch, "operator and subspace dimensions differ");
    }
    return s.basis.transpose() * (a * s.basis);
}

double gap(const Subspace& x, const Subspace& y) {
    const AngleSet angles = principal_angles(x, y);
    return angles.sines.empty() ? 0.0 : angles.sines.back();
}

}  // namespace submaj::subspaces
