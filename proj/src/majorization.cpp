#include "submaj/majorization.hpp"

#include <algorithm>
#include <cmath>

#include "submaj/error.hpp"

namespace submaj::majorization {

namespace {

void require_finite(const std::vector<double>& x) {
    for (double v : x) {
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::NonFiniteEntry, "vector entry is not finite");
        }
    }
}

}  // namespace

OrderedVector sort_desc(const std::vector<double>& x) {
    require_finite(x);
    OrderedVector out;
    out.values = x;
    out.original_length = x.size();
    std::stable_sort(out.values.begin(), out.values.end(),
                     [](double a, double b) { return a > b; });
    return out;
}

double default_check_tol(const std::vector<double>& y, std::size_t n) {
    double ymax = 0.0;
    for (double v : y) ymax = std::max(ymax, std::abs(v));
    return 1e-8 * std::max(1.0, ymax) * static_cast<double>(std::max<std::size_t>(n, 1));
}

MajorizationReport weak_majorizes(const std::vector<double>& y, const std::vector<double>& x,
                                  double tol) {
    if (tol < 0.0) {
        throw Error(ErrorCode::BadRange, "tolerance must be nonnegative");
    }
    OrderedVector ys = sort_desc(y);
    OrderedVector xs = sort_desc(x);
    const std::size_t n = std::max(ys.values.size(), xs.values.size());
    ys.values.resize(n, 0.0);
    xs.values.resize(n, 0.0);

    MajorizationReport report;
    report.tolerance_used = tol;
    report.margins.resize(n);
    double sum_x = 0.0, sum_y = 0.0;
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        sum_x += xs.values[k];
        sum_y += ys.values[k];
        report.margins[k] = sum_y - sum_x;
        if (k == 0 || report.margins[k] < worst) {
            worst = report.margins[k];
            report.worst_k = k;
        }
    }
    report.holds = n == 0 || worst >= -tol;
    return report;
}

std::vector<double> abs_diff(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) {
        throw Error(ErrorCode::LengthMismatch, "abs_diff needs equal lengths");
    }
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::abs(x[i] - y[i]);
    return out;
}

}  // namespace submaj::majorization
