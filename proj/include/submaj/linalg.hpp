#pragma once

#include <vector>

#include "submaj/matrix.hpp"

namespace submaj::linalg {

// Tolerances used across the numeric kernels. All derived from the input
// scale; the defaults below are the fixed policy of this library.
struct Tolerances {
    double sym_rel = 1e-10;    // asymmetry, relative to max(1, ||A||_max)
    double rank_rel = 1e-10;   // column-rank cutoff, relative to largest column norm
    double psd_rel = 1e-10;    // negative-eigenvalue slack, relative to ||A||_F
    double eig_rel = 1e-10;    // residual checks, relative to max(1, ||A||_F)
    double jacobi_off_rel = 1e-14;  // Jacobi sweep convergence on off-diagonal mass
    int max_sweeps = 100;
};

const Tolerances& default_tolerances();

struct EigDecomposition {
    std::vector<double> values;  // nonincreasing
    Matrix vectors;              // orthonormal columns, column k pairs with values[k]
};

struct SvdDecomposition {
    std::vector<double> singular_values;  // nonnegative, nonincreasing
    Matrix left;                          // m x k, orthonormal columns
    Matrix right;                         // n x k, orthonormal columns
};

// Symmetric eigendecomposition by cyclic Jacobi rotations. The input is
// symmetrized as (A + A^T)/2 before iterating; asymmetry beyond sym_tol
// is an error.
EigDecomposition sym_eig(const Matrix& a, const Tolerances& tol = default_tolerances());

// One-sided Jacobi SVD. Accurate for small singular values.
SvdDecomposition svd(const Matrix& a, const Tolerances& tol = default_tolerances());

// Two-pass re-orthogonalized Gram-Schmidt. Returns an orthonormal basis
// of the column span of b; numerically null columns are dropped.
Matrix orthonormalize(const Matrix& b, const Tolerances& tol = default_tolerances());

// Symmetric PSD square root via eigendecomposition. Eigenvalues in
// [-psd_tol, 0) are clamped to zero; anything below -psd_tol is an error.
Matrix sqrt_psd(const Matrix& a, const Tolerances& tol = default_tolerances());

}  // namespace submaj::linalg
