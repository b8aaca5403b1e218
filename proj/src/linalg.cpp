#include "submaj/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace submaj::linalg {

const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

namespace {

double off_diagonal_mass(const Matrix& s) {
    double sum = 0.0;
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = i + 1; j < s.cols(); ++j) sum += s(i, j) * s(i, j);
    return std::sqrt(2.0 * sum);
}

// Sort indices so values come out nonincreasing; stable on ties.
std::vector<std::size_t> descending_order(const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    return order;
}

}  // namespace

EigDecomposition sym_eig(const Matrix& a, const Tolerances& tol) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw Error(ErrorCode::NonSquare, "sym_eig needs a nonempty square matrix");
    }
    const double sym_tol = tol.sym_rel * std::max(1.0, a.norm_max());
    if (a.symmetry_defect() > sym_tol) {
        throw Error(ErrorCode::AsymmetryExceedsTolerance, "input is not symmetric");
    }

    const std::size_t n = a.rows();
    Matrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s(i, j) = 0.5 * (a(i, j) + a(j, i));

    Matrix v = Matrix::identity(n);
    const double target = tol.jacobi_off_rel * std::max(1.0, s.norm_frobenius());

    int sweep = 0;
    while (off_diagonal_mass(s) > target) {
        if (sweep++ >= tol.max_sweeps) {
            throw Error(ErrorCode::NoConvergence, "Jacobi eigensolver hit the sweep cap");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = s(p, q);
                if (apq == 0.0) continue;
                const double theta = (s(q, q) - s(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double skp = s(k, p);
                    const double skq = s(k, q);
                    s(k, p) = c * skp - sn * skq;
                    s(k, q) = sn * skp + c * skq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double spk = s(p, k);
                    const double sqk = s(q, k);
                    s(p, k) = c * spk - sn * sqk;
                    s(q, k) = sn * spk + c * sqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - sn * vkq;
                    v(k, q) = sn * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<double> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = s(i, i);
    const auto order = descending_order(raw);

    EigDecomposition out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = raw[order[k]];
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

SvdDecomposition svd(const Matrix& a, const Tolerances& tol) {
    if (a.empty()) {
        throw Error(ErrorCode::BadDims, "svd of an empty matrix");
    }
    if (a.rows() < a.cols()) {
        SvdDecomposition t = svd(a.transpose(), tol);
        std::swap(t.left, t.right);
        return t;
    }

    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    Matrix u = a;
    Matrix v = Matrix::identity(n);

    // One-sided Jacobi: rotate column pairs until all are numerically
    // orthogonal. Column dot products are computed fresh each pass, which
    // keeps accuracy for tiny singular values.
    const double eps = 1e-15;
    int sweep = 0;
    bool converged = n == 1;
    while (!converged) {
        if (sweep++ >= tol.max_sweeps) {
            throw Error(ErrorCode::NoConvergence, "Jacobi SVD hit the sweep cap");
        }
        converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t k = 0; k < m; ++k) {
                    alpha += u(k, p) * u(k, p);
                    beta += u(k, q) * u(k, q);
                    gamma += u(k, p) * u(k, q);
                }
                if (alpha == 0.0 || beta == 0.0) continue;
                if (std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
                converged = false;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = c * t;
                for (std::size_t k = 0; k < m; ++k) {
                    const double up = u(k, p);
                    const double uq = u(k, q);
                    u(k, p) = c * up - sn * uq;
                    u(k, q) = sn * up + c * uq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vp = v(k, p);
                    const double vq = v(k, q);
                    v(k, p) = c * vp - sn * vq;
                    v(k, q) = sn * vp + c * vq;
                }
            }
        }
    }

    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < m; ++k) s += u(k, j) * u(k, j);
        norms[j] = std::sqrt(s);
    }
    const auto order = descending_order(norms);

    SvdDecomposition out;
    out.singular_values.resize(n);
    out.left = Matrix(m, n);
    out.right = Matrix(n, n);
    const double null_tol = 1e-300;
    std::vector<std::size_t> null_cols;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        out.singular_values[k] = norms[j];
        for (std::size_t i = 0; i < n; ++i) out.right(i, k) = v(i, j);
        if (norms[j] > null_tol) {
            for (std::size_t i = 0; i < m; ++i) out.left(i, k) = u(i, j) / norms[j];
        } else {
            null_cols.push_back(k);
        }
    }
    // Exactly-null columns: complete the left factor with unit coordinate
    // vectors orthogonalized against the existing columns.
    for (std::size_t k : null_cols) {
        for (std::size_t cand = 0; cand < m; ++cand) {
            std::vector<double> w(m, 0.0);
            w[cand] = 1.0;
            // Columns not yet filled are all-zero, so they contribute nothing.
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == k) continue;
                    double dot = 0.0;
                    for (std::size_t i = 0; i < m; ++i) dot += w[i] * out.left(i, j);
                    for (std::size_t i = 0; i < m; ++i) w[i] -= dot * out.left(i, j);
                }
            }
            double nrm = 0.0;
            for (double x : w) nrm += x * x;
            nrm = std::sqrt(nrm);
            if (nrm > 0.5) {
                for (std::size_t i = 0; i < m; ++i) out.left(i, k) = w[i] / nrm;
                break;
            }
        }
    }
    return out;
}

Matrix orthonormalize(const Matrix& b, const Tolerances& tol) {
    if (b.empty()) {
        throw Error(ErrorCode::BadDims, "orthonormalize of an empty matrix");
    }
    const std::size_t n = b.rows();
    const std::size_t k = b.cols();

    double max_col_norm = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += b(i, j) * b(i, j);
        max_col_norm = std::max(max_col_norm, std::sqrt(s));
    }
    const double rank_tol = tol.rank_rel * max_col_norm;

    std::vector<std::vector<double>> basis;
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<double> w = b.column_vector(j);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : basis) {
                double dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += w[i] * q[i];
                for (std::size_t i = 0; i < n; ++i) w[i] -= dot * q[i];
            }
        }
        double nrm = 0.0;
        for (double x : w) nrm += x * x;
        nrm = std::sqrt(nrm);
        if (nrm <= rank_tol) continue;
        for (double& x : w) x /= nrm;
        basis.push_back(std::move(w));
    }

    if (basis.empty()) {
        throw Error(ErrorCode::ZeroRank, "all columns are numerically null");
    }
    Matrix q(n, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) q(i, j) = basis[j][i];
    return q;
}

Matrix sqrt_psd(const Matrix& a, const Tolerances& tol) {
    const EigDecomposition eig = sym_eig(a, tol);
    const double psd_tol = tol.psd_rel * a.norm_frobenius();
    const std::size_t n = a.rows();

    std::vector<double> roots(n);
    for (std::size_t i = 0; i < n; ++i) {
        double lam = eig.values[i];
        if (lam < -psd_tol) {
            throw Error(ErrorCode::NotPSD, "eigenvalue below the PSD tolerance");
        }
        roots[i] = std::sqrt(std::max(lam, 0.0));
    }

    Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += eig.vectors(i, k) * roots[k] * eig.vectors(j, k);
            r(i, j) = s;
            r(j, i) = s;
        }
    }
    return r;
}

}  // namespace submaj::linalg
