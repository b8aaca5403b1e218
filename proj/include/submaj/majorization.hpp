#pragma once

#include <cstddef>
#include <vector>

namespace submaj::majorization {

struct OrderedVector {
    std::vector<double> values;    // sorted nonincreasing
    std::size_t original_length = 0;
};

struct MajorizationReport {
    bool holds = false;
    std::vector<double> margins;   // margins[k] = prefix_sum(y, k+1) - prefix_sum(x, k+1)
    std::size_t worst_k = 0;       // index of minimal margin
    double tolerance_used = 0.0;
};

// Stable nonincreasing sort; equal entries keep their input order.
OrderedVector sort_desc(const std::vector<double>& x);

// Does y weakly majorize x? Both vectors are zero-padded to a common
// length before prefix sums are compared.
MajorizationReport weak_majorizes(const std::vector<double>& y, const std::vector<double>& x,
                                  double tol);

// Default check tolerance: 1e-8 * max(1, ||y||_inf) * n.
double default_check_tol(const std::vector<double>& y, std::size_t n);

// Elementwise |x_i - y_i|; lengths must already agree.
std::vector<double> abs_diff(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace submaj::majorization
