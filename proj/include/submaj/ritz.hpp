#pragma once

#include <cstddef>
#include <vector>

#include "submaj/majorization.hpp"
#include "submaj/matrix.hpp"
#include "submaj/subspace.hpp"

namespace submaj::ritz {

struct RitzSet {
    std::vector<double> values;  // nonincreasing
    std::size_t trial_dim = 0;
};

// A symmetric operator with spectrum in [0,1], embedded as the upper-left
// block of an orthogonal projector on the doubled space.
struct Dilation {
    std::size_t original_dim = 0;
    Matrix projector_matrix;  // 2n x 2n, symmetric, idempotent
    double shift = 0.0;
    double scale = 1.0;
};

struct NormalizedOperator {
    Matrix matrix;  // spectrum in [0,1]
    double shift = 0.0;
    double scale = 1.0;
};

// Both sides of the Ritz perturbation bound plus its two scalar
// consequences (full-sum and largest-change-vs-gap).
struct RitzPerturbationReport {
    std::vector<double> lhs;  // |sorted Ritz(X) - sorted Ritz(Y)|
    std::vector<double> rhs;  // spread * sin(angles), sorted nonincreasing
    majorization::MajorizationReport report;
    double spread_used = 0.0;
    double full_sum_lhs = 0.0;
    double full_sum_rhs = 0.0;
    bool full_sum_holds = false;
    double max_change = 0.0;
    double gap_bound = 0.0;  // spread * gap(X, Y)
    bool max_change_holds = false;
};

RitzSet ritz_values(const Matrix& a, const subspaces::Subspace& x);
double spread(const Matrix& a);

// Spread of the restriction of A to X + Y.
double local_spread(const Matrix& a, const subspaces::Subspace& x, const subspaces::Subspace& y);

// B = scale * (A - shift*I) with spectrum in [0,1]; shift = lambda_min,
// scale = 1 / spread.
NormalizedOperator normalize_spectrum(const Matrix& a);

// Requires spectrum in [0,1] up to psd slack (clamped).
Dilation dilate_to_projector(const Matrix& a);

// [X; 0] in the doubled space R^{2n}.
subspaces::Subspace embed_trial(const subspaces::Subspace& x);

// Range of the dilation projector: span of eigenvectors with eigenvalue >= 0.5.
subspaces::Subspace dilation_range(const Dilation& d);

RitzPerturbationReport ritz_perturbation_check(const Matrix& a, const subspaces::Subspace& x,
                                               const subspaces::Subspace& y,
                                               bool use_local_spread = false,
                                               double tol = -1.0);

}  // namespace submaj::ritz
