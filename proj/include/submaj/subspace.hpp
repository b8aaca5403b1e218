#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "submaj/linalg.hpp"
#include "submaj/matrix.hpp"

namespace submaj::subspaces {

// A subspace of R^n held as an orthonormal-columns basis.
struct Subspace {
    std::size_t ambient_dim = 0;
    Matrix basis;  // n x k, orthonormal columns

    std::size_t dim() const noexcept { return basis.cols(); }
};

// Principal angles with paired cosines and sines. Angles nondecreasing,
// cosines nonincreasing, sines nondecreasing.
struct AngleSet {
    std::vector<double> angles;   // in [0, pi/2]
    std::vector<double> cosines;
    std::vector<double> sines;

    std::size_t count() const noexcept { return angles.size(); }
};

struct SpectrumReport {
    std::vector<double> values;  // nonincreasing
    std::string source;
};

// Computed singular values of P_X - P_Y alongside the structural
// prediction assembled from the principal angles.
struct ProjectorDifferenceReport {
    std::vector<double> computed;    // S(P_X - P_Y), nonincreasing, length n
    std::vector<double> structural;  // |dim X - dim Y| ones, each sine twice, zero-padded
    double max_abs_diff = 0.0;
};

Subspace subspace_from_columns(const Matrix& b);
Matrix projector(const Subspace& s);
Subspace complement(const Subspace& s);
AngleSet principal_angles(const Subspace& x, const Subspace& y);
ProjectorDifferenceReport projector_difference_singvals(const Subspace& x, const Subspace& y);

// Matrix of the restriction of A to the subspace: basis^T * A * basis.
Matrix restrict_to(const Matrix& a, const Subspace& s);

// Gap between subspaces: sine of the largest principal angle.
double gap(const Subspace& x, const Subspace& y);

}  // namespace submaj::subspaces
