#include "submaj/ritz.hpp"

#include <algorithm>
#include <cmath>

#include "submaj/linalg.hpp"

namespace submaj::ritz {

namespace {

void require_operator_fits(const Matrix& a, const subspaces::Subspace& x) {
    if (a.rows() != a.cols()) {
        throw Error(ErrorCode::NonSquare, "operator must be square");
    }
    if (a.rows() != x.ambient_dim) {
        throw Error(ErrorCode::AmbientMismatch, "operator and trial subspace dimensions differ");
    }
}

}  // namespace

RitzSet ritz_values(const Matrix& a, const subspaces::Subspace& x) {
    require_operator_fits(a, x);
    const Matrix restricted = subspaces::restrict_to(a, x);
    RitzSet out;
    out.values = linalg::sym_eig(restricted).values;
    out.trial_dim = x.dim();
    return out;
}

double spread(const Matrix& a) {
    const auto eig = linalg::sym_eig(a);
    return eig.values.front() - eig.values.back();
}

double local_spread(const Matrix& a, const subspaces::Subspace& x, const subspaces::Subspace& y) {
    require_operator_fits(a, x);
    require_operator_fits(a, y);
    const std::size_t n = x.ambient_dim;
    Matrix concat(n, x.dim() + y.dim());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < x.dim(); ++j) concat(i, j) = x.basis(i, j);
        for (std::size_t j = 0; j < y.dim(); ++j) concat(i, x.dim() + j) = y.basis(i, j);
    }
    const subspaces::Subspace sum = subspaces::subspace_from_columns(concat);
    const auto eig = linalg::sym_eig(subspaces::restrict_to(a, sum));
    return eig.values.front() - eig.values.back();
}

NormalizedOperator normalize_spectrum(const Matrix& a) {
    const auto eig = linalg::sym_eig(a);
    const double span = eig.values.front() - eig.values.back();
    if (span <= 0.0) {
        throw Error(ErrorCode::ZeroSpread, "operator is a multiple of the identity");
    }
    NormalizedOperator out;
    out.shift = eig.values.back();
    out.scale = 1.0 / span;
    out.matrix = (a - Matrix::identity(a.rows()) * out.shift) * out.scale;
    return out;
}

Dilation dilate_to_projector(const Matrix& a) {
    const auto eig = linalg::sym_eig(a);
    const double psd_tol = linalg::default_tolerances().psd_rel * std::max(1.0, a.norm_frobenius());
    if (eig.values.front() > 1.0 + psd_tol || eig.values.back() < -psd_tol) {
        throw Error(ErrorCode::SpectrumOutOfUnitInterval,
                    "dilation needs a spectrum inside [0,1]");
    }

    const std::size_t n = a.rows();
    const Matrix eye = Matrix::identity(n);
    // R = sqrt(A) * sqrt(I - A), symmetrized; equals sqrt(A(I-A)) since the
    // factors commute.
    const Matrix ra = linalg::sqrt_psd(a);
    const Matrix rc = linalg::sqrt_psd(eye - a);
    Matrix r = ra * rc;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = 0.5 * (r(i, j) + r(j, i));
            r(i, j) = v;
            r(j, i) = v;
        }

    Dilation out;
    out.original_dim = n;
    out.projector_matrix = Matrix(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.projector_matrix(i, j) = a(i, j);
            out.projector_matrix(i, n + j) = r(i, j);
            out.projector_matrix(n + i, j) = r(i, j);
            out.projector_matrix(n + i, n + j) = (i == j ? 1.0 : 0.0) - a(i, j);
        }
    }
    return out;
}

subspaces::Subspace embed_trial(const subspaces::Subspace& x) {
    subspaces::Subspace out;
    out.ambient_dim = 2 * x.ambient_dim;
    out.basis = Matrix(out.ambient_dim, x.dim());
    for (std::size_t i = 0; i < x.ambient_dim; ++i)
        for (std::size_t j = 0; j < x.dim(); ++j) out.basis(i, j) = x.basis(i, j);
    return out;
}

subspaces::Subspace dilation_range(const Dilation& d) {
    const auto eig = linalg::sym_eig(d.projector_matrix);
    // Eigenvalues of a numerical projector cluster at 0 and 1; split at 0.5.
    std::size_t rank = 0;
    while (rank < eig.values.size() && eig.values[rank] >= 0.5) ++rank;
    if (rank == 0) {
        throw Error(ErrorCode::ZeroRank, "dilation projector has empty range");
    }
    const std::size_t m = d.projector_matrix.rows();
    subspaces::Subspace out;
    out.ambient_dim = m;
    out.basis = Matrix(m, rank);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < rank; ++j) out.basis(i, j) = eig.vectors(i, j);
    return out;
}

RitzPerturbationReport ritz_perturbation_check(const Matrix& a, const subspaces::Subspace& x,
                                               const subspaces::Subspace& y,
                                               bool use_local_spread, double tol) {
    if (x.dim() != y.dim()) {
        throw Error(ErrorCode::DimMismatch, "trial subspaces must have equal dimension");
    }
    require_operator_fits(a, x);
    require_operator_fits(a, y);

    const RitzSet rx = ritz_values(a, x);
    const RitzSet ry = ritz_values(a, y);
    RitzPerturbationReport out;
    out.lhs = majorization::abs_diff(rx.values, ry.values);

    const auto eig = linalg::sym_eig(a);
    const double global = eig.values.front() - eig.values.back();
    out.spread_used = use_local_spread ? local_spread(a, x, y) : global;

    const subspaces::AngleSet angles = subspaces::principal_angles(x, y);
    out.rhs.resize(angles.sines.size());
    for (std::size_t k = 0; k < angles.sines.size(); ++k) {
        out.rhs[k] = out.spread_used * angles.sines[angles.sines.size() - 1 - k];
    }

    if (tol < 0.0) tol = majorization::default_check_tol(out.rhs, out.rhs.size());
    out.report = majorization::weak_majorizes(out.rhs, out.lhs, tol);

    for (double v : out.lhs) {
        out.full_sum_lhs += v;
        out.max_change = std::max(out.max_change, v);
    }
    for (double v : out.rhs) out.full_sum_rhs += v;
    out.full_sum_holds = out.full_sum_lhs <= out.full_sum_rhs + tol;
    out.gap_bound = out.spread_used * (angles.sines.empty() ? 0.0 : angles.sines.back());
    out.max_change_holds = out.max_change <= out.gap_bound + tol;
    return out;
}

}  // namespace submaj::ritz
