#include "submaj/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "submaj/graph.hpp"
#include "submaj/io.hpp"
#include "submaj/linalg.hpp"
#include "submaj/majorization.hpp"
#include "submaj/ritz.hpp"

namespace submaj::verify {

namespace {

namespace maj = submaj::majorization;

// splitmix64; decorrelates per-trial seeds derived from (master, id, trial).
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1) + 0xbf58476d1ce4e5b9ULL * (c + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct IdInfo {
    TheoremId id;
    const char* token;
};

const std::vector<IdInfo>& id_table() {
    static const std::vector<IdInfo> table = {
        {TheoremId::Ineq1dAngle, "INEQ-1D-ANGLE"},
        {TheoremId::Ineq1dSin, "INEQ-1D-SIN"},
        {TheoremId::Ineq1dCos, "INEQ-1D-COS"},
        {TheoremId::Ineq1dSq, "INEQ-1D-SQ"},
        {TheoremId::Thm21, "THM-2-1"},
        {TheoremId::Cor22, "COR-2-2"},
        {TheoremId::Thm23Lidskii, "THM-2-3-LIDSKII"},
        {TheoremId::Cor24, "COR-2-4"},
        {TheoremId::Cor25, "COR-2-5"},
        {TheoremId::Thm26Pinch, "THM-2-6-PINCH"},
        {TheoremId::Thm27, "THM-2-7"},
        {TheoremId::Lem28, "LEM-2-8"},
        {TheoremId::Thm29, "THM-2-9"},
        {TheoremId::Thm31Angles, "THM-3-1-ANGLES"},
        {TheoremId::Thm32Sin, "THM-3-2-SIN"},
        {TheoremId::Thm32Cos, "THM-3-2-COS"},
        {TheoremId::Thm33Sq, "THM-3-3-SQ"},
        {TheoremId::Thm41Ritz, "THM-4-1-RITZ"},
        {TheoremId::Cor4Dilation, "COR-4-DILATION"},
        {TheoremId::Thm52Graph, "THM-5-2-GRAPH"},
    };
    return table;
}

// One artifact per generated input, serialized in the CLI text formats
// so a failing instance can be replayed exactly.
struct TrialResult {
    double margin = 0.0;
    double tol = 0.0;
    std::vector<std::pair<std::string, std::string>> artifacts;

    bool failed() const { return margin < -tol; }
};

struct TrialContext {
    std::uint64_t seed = 0;
    std::size_t n = 0;
    double tol_scale = 1e-8;
};

std::string matrix_text(const Matrix& m) {
    std::ostringstream out;
    io::write_matrix(out, m);
    return out.str();
}

std::string graph_text(const graphs::Graph& g) {
    std::ostringstream out;
    io::write_graph(out, g);
    return out.str();
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double maj_tol(double tol_scale, const std::vector<double>& y) {
    double ymax = 0.0;
    for (double v : y) ymax = std::max(ymax, std::abs(v));
    return tol_scale * std::max(1.0, ymax) * static_cast<double>(std::max<std::size_t>(y.size(), 1));
}

double min_prefix_margin(const maj::MajorizationReport& r) {
    if (r.margins.empty()) return 0.0;
    return *std::min_element(r.margins.begin(), r.margins.end());
}

// ---- individual checkers ------------------------------------------------

TrialResult check_1d(TrialContext& ctx, int which) {
    const auto unit_vector = [&](std::uint64_t salt) {
        return random_subspace(ctx.n, 1, mix_seed(ctx.seed, 101, salt));
    };
    const auto x = unit_vector(1);
    const auto y = unit_vector(2);
    const auto z = unit_vector(3);
    const double txz = subspaces::principal_angles(x, z).angles[0];
    const double tyz = subspaces::principal_angles(y, z).angles[0];
    const double txy = subspaces::principal_angles(x, y).angles[0];

    TrialResult res;
    res.tol = ctx.tol_scale;
    double lhs = 0.0, rhs = 0.0;
    switch (which) {
        case 0:  // angle difference vs angle
            lhs = std::abs(txz - tyz);
            rhs = txy;
            break;
        case 1:  // sine difference vs sine
            lhs = std::abs(std::sin(txz) - std::sin(tyz));
            rhs = std::sin(txy);
            break;
        case 2:  // cosine difference vs sine
            lhs = std::abs(std::cos(txz) - std::cos(tyz));
            rhs = std::sin(txy);
            break;
        default:  // cosine-squared difference vs sine
            lhs = std::abs(std::cos(txz) * std::cos(txz) - std::cos(tyz) * std::cos(tyz));
            rhs = std::sin(txy);
            break;
    }
    res.margin = rhs - lhs;
    if (res.failed()) {
        res.artifacts = {{"x", matrix_text(x.basis)},
                         {"y", matrix_text(y.basis)},
                         {"z", matrix_text(z.basis)}};
    }
    return res;
}

TrialResult check_eig_sum(TrialContext& ctx) {
    const Matrix a = random_symmetric(ctx.n, -2.0, 2.0, mix_seed(ctx.seed, 1, 1));
    const Matrix b = random_symmetric(ctx.n, -1.0, 3.0, mix_seed(ctx.seed, 1, 2));
    const auto la = linalg::sym_eig(a).values;
    const auto lb = linalg::sym_eig(b).values;
    const auto lab = linalg::sym_eig(a + b).values;
    std::vector<double> rhs(la.size());
    for (std::size_t i = 0; i < la.size(); ++i) rhs[i] = la[i] + lb[i];

    TrialResult res;
    res.tol = maj_tol(ctx.tol_scale, rhs);
    res.margin = min_prefix_margin(maj::weak_majorizes(rhs, lab, res.tol));
    if (res.failed()) res.artifacts = {{"A", matrix_text(a)}, {"B", matrix_text(b)}};
    return res;
}

TrialResult check_singular_sum(TrialContext& ctx) {
    const Matrix a = random_matrix(ctx.n, ctx.n, mix_seed(ctx.seed, 2, 1));
    const Matrix b = random_matrix(ctx.n, ctx.n, mix_seed(ctx.seed, 2, 2));
    const auto sa = linalg::svd(a).singular_values;
    const auto sb = linalg::svd(b).singular_values;
    std::vector<double> rhs(sa.size());
    for (std::size_t i = 0; i < sa.size(); ++i) rhs[i] = sa[i] + sb[i];

    TrialResult res;
    res.tol = maj_tol(ctx.tol_scale, rhs);
    const double plus =
        min_prefix_margin(maj::weak_majorizes(rhs, linalg::svd(a + b).singular_values, res.tol));
    const double minus =
        min_prefix_margin(maj::weak_majorizes(rhs, linalg::svd(a - b).singular_values, res.tol));
    res.margin = std::min(plus, minus);
    if (res.failed()) res.artifacts = {{"A", matrix_text(a)}, {"B", matrix_text(b)}};
    return res;
}

TrialResult check_lidskii(TrialContext& ctx) {
    std::mt19937_64 rng(mix_seed(ctx.seed, 3, 0));
    const Matrix a = random_symmetric(ctx.n, -2.0, 2.0, mix_seed(ctx.seed, 3, 1));
    const Matrix b = random_symmetric(ctx.n, -1.0, 1.0, mix_seed(ctx.seed, 3, 2));
    const auto la = linalg::sym_eig(a).values;
    const auto lb = linalg::sym_eig(b).values;
    const auto lab = linalg::sym_eig(a + b).values;
    const std::size_t n = ctx.n;

    const auto subset_margin = [&](std::uint64_t mask) {
        double lhs = 0.0, rhs = 0.0;
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1ULL << i)) {
                lhs += lab[i];
                rhs += la[i];
                rhs += lb[count++];
            }
        }
        return rhs - lhs;
    };

    TrialResult res;
    res.tol = ctx.tol_scale * static_cast<double>(n);
    res.margin = 0.0;
    if (n <= 8) {
        for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
            res.margin = std::min(res.margin, subset_margin(mask));
        }
    } else {
        std::uniform_int_distribution<std::uint64_t> dist(1, (1ULL << n) - 1);
        for (int s = 0; s < 200; ++s) {
            res.margin = std::min(res.margin, subset_margin(dist(rng)));
        }
    }
    if (res.failed()) res.artifacts = {{"A", matrix_text(a)}, {"B", matrix_text(b)}};
    return res;
}

TrialResult check_singular_diff(TrialContext& ctx, bool symmetric) {
    const std::uint64_t tag = symmetric ? 5 : 4;
    Matrix a, b;
    std::vector<double> va, vb;
    if (symmetric) {
        a = random_symmetric(ctx.n, -2.0, 2.0, mix_seed(ctx.seed, tag, 1));
        b = random_symmetric(ctx.n, -2.0, 2.0, mix_seed(ctx.seed, tag, 2));
        va = linalg::sym_eig(a).values;
        vb = linalg::sym_eig(b).values;
    } else {
        a = random_matrix(ctx.n, ctx.n, mix_seed(ctx.seed, tag, 1));
        b = random_matrix(ctx.n, ctx.n, mix_seed(ctx.seed, tag, 2));
        va = linalg::svd(a).singular_values;
        vb = linalg::svd(b).singular_values;
    }
    const auto rhs = linalg::svd(a - b).singular_values;

    TrialResult res;
    res.tol = maj_tol(ctx.tol_scale, rhs);
    res.margin =
        min_prefix_margin(maj::weak_majorizes(rhs, maj::abs_diff(va, vb), res.tol));
    if (res.failed()) res.artifacts = {{"A", matrix_text(a)}, {"B", matrix_text(b)}};
    return res;
}

TrialResult check_pinching(TrialContext& ctx) {
    std::mt19937_64 rng(mix_seed(ctx.seed, 6, 0));
    const Matrix a = random_matrix(ctx.n, ctx.n, mix_seed(ctx.seed, 6, 1));
    const std::size_t k = uniform_index(rng, 1, ctx.n - 1);
    const auto s = random_subspace(ctx.n, k, mix_seed(ctx.seed, 6, 2));
    const Matrix p = subspaces::projector(s);
    const Matrix q = Matrix::identity(ctx.n) - p;
    const Matrix inner = p * a * p;
    const Matrix outer = q * a * q;
    const auto sa = linalg::svd(a).singular_values;

    TrialResult res;
    res.tol = maj_tol(ctx.tol_scale, sa);
    const double plus =
        min_prefix_margin(maj::weak_majorizes(sa, linalg::svd(inner + outer).singular_values, res.tol));
    const double minus =
        min_prefix_margin(maj::weak_majorizes(sa, linalg::svd(inner - outer).singular_values, res.tol));
    res.margin = std::min(plus, minus);
    if (res.failed()) res.artifacts = {{"A", matrix_text(a)}, {"P-basis", matrix_text(s.basis)}};
    return res;
}

double max_entrywise_err(std::vector<double> a, std::vector<double> b) {
    const std::size_t len = std::max(a.size(), b.size());
    a.resize(len, 0.0);
    b.resize(len, 0.0);
    double err = 0.0;
    for (std::size_t i = 0; i < len; ++i) err = std::max(err, std::abs(a[i] - b[i]));
    return err;
}

std::vector<double> sorted_desc(std::vector<double> v) {
    std::stable_sort(v.begin(), v.end(), [](double x, double y) { return x > y; });
    return v;
}

// Complement-swap identities for angle sets.
TrialResult check_angle_complements(TrialContext& ctx) {
    std::mt19937_64 rng(mix_seed(ctx.seed, 7, 0));
    const std::size_t kx = uniform_index(rng, 1, ctx.n - 1);
    const std::size_t ky = uniform_index(rng, 1, ctx.n - 1);
    const auto x = random_subspace(ctx.n, kx, mix_seed(ctx.seed, 7, 1));
    const auto y = random_subspace(ctx.n, ky, mix_seed(ctx.seed, 7, 2));
    const auto yc = subspaces::complement(y);
    const auto xc = subspaces::complement(x);
    constexpr double half_pi = 1.5707963267948966;

    // Swap one subspace for its complement: angle pairs sum to pi/2,
    // after padding with pi/2 on one side and zeros on the other.
    std::vector<double> left;
    left.insert(left.end(), kx > ky ? kx - ky : 0, half_pi);
    for (double t : sorted_desc(subspaces::principal_angles(x, y).angles)) left.push_back(t);
    std::vector<double> right;
    for (double t : subspaces::principal_angles(x, yc).angles) right.push_back(half_pi - t);
    right = sorted_desc(right);
    const double err_a = max_entrywise_err(left, right);

    // Both complements: same angles up to zero padding.
    const double err_b =
        max_entrywise_err(sorted_desc(subspaces::principal_angles(x, y).angles),
                          sorted_desc(subspaces::principal_angles(xc, yc).angles));

    TrialResult res;
    res.tol = ctx.tol_scale;
    res.margin = -std::max(err_a, err_b);
    if (res.failed())
        res.artifacts = {{"X-basis", matrix_text(x.basis)}, {"Y-basis", matrix_text(y.basis)}};
    return res;
}

// Restriction of P_X P_Y to X has spectrum cos^2(angles) plus zeros.
TrialResult check_restricted_product(TrialContext& ctx) {
    std::mt19937_64 rng(mix_seed(ctx.seed, 8, 0));
    const std::size_t kx = uniform_index(rng, 1, ctx.n - 1);
    const std::size_t ky = uniform_index(rng, 1, ctx.n - 1);
    const auto x = random_subspace(ctx.n, kx, mix_seed(ctx.seed, 8, 1));
    const auto y = random_subspace(ctx.n, ky, mix_seed(ctx.seed, 8, 2));

    const auto eig = linalg::sym_eig(subspaces::restrict_to(subspaces::projector(y), x));
    std::vector<double> expected;
    for (double c : subspaces::principal_angles(x, y).cosines) expected.push_back(c * c);
    expected.resize(kx, 0.0);

    TrialResult res;
    res.tol = ctx.tol_scale;
    res.margin = -max_entrywise_err(eig.values, expected);
    if (res.failed())
        res.artifacts = {{"X-basis", matrix_text(x.basis)}, {"Y-basis", matrix_text(y.basis)}};
    return res;
}

TrialResult check_projector_difference(TrialContext& ctx) {
    std::mt19937_64 rng(mix_seed(ctx.seed, 9, 0));
    const std::size_t kx = uniform_index(rng, 1, ctx.n - 1);
    const std::size_t ky = uniform_index(rng, 1, ctx.n - 1);
    const auto x = random_subspace(ctx.n, kx, mix_seed(ctx.seed, 9, 1));
    const auto y = random_subspace(ctx.n, ky, mix_seed(ctx.seed, 9, 2));
    const auto report = subspaces::projector_difference_singvals(x, y);

    TrialResult res;
    res.tol = ctx.tol_scale;
    res.margin = -report.max_abs_diff;
    if (res.failed())
        res.artifacts = {{"X-basis", matrix_text(x.basis)}, {"Y-basis", matrix_text(y.basis)}};
    return res;
}

// Majorization bounds on angle perturbation; mode selects the function of
// the angles being compared.
TrialResult check_angle_perturbation(TrialContext& ctx, int mode) {
    std::mt19937_64 rng(mix_seed(ctx.seed, 10 + static_cast<std::uint64_t>(mode), 0));
    const std::size_t k = uniform_index(rng, 1, ctx.n - 1);
    const std::size_t kz = uniform_index(rng, 1, ctx.n - 1);
    const std::uint64_t tag = 10 + static_cast<std::uint64_t>(mode);
    const auto x = random_subspace(ctx.n, k, mix_seed(ctx.seed, tag, 1));
    const auto y = random_subspace(ctx.n, k, mix_seed(ctx.seed, tag, 2));
    const auto z = random_subspace(ctx.n, kz, mix_seed(ctx.seed, tag, 3));

    const auto axz = subspaces::principal_angles(x, z);
    const auto ayz = subspaces::principal_angles(y, z);
    const auto axy = subspaces::principal_angles(x, y);

    std::vector<double> fx, fy, bound;
    switch (mode) {
        case 0:  // the angles themselves
            fx = axz.angles;
            fy = ayz.angles;
            bound = axy.angles;
            break;
        case 1:  // sines
            fx = axz.sines;
            fy = ayz.sines;
            bound = axy.sines;
            break;
        case 2:  // cosines
            fx = axz.cosines;
            fy = ayz.cosines;
            bound = axy.sines;
            break;
        default:  // cosines squared
            for (double c : axz.cosines) fx.push_back(c * c);
            for (double c : ayz.cosines) fy.push_back(c * c);
            bound = axy.sines;
            break;
    }

    TrialResult res;
    res.tol = maj_tol(ctx.tol_scale, bound);
    res.margin = min_prefix_margin(maj::weak_majorizes(bound, maj::abs_diff(fx, fy), res.tol));
    if (res.failed())
        res.artifacts = {{"X-basis", matrix_text(x.basis)},
                         {"Y-basis", matrix_text(y.basis)},
                         {"Z-basis", matrix_text(z.basis)}};
    return res;
}

TrialResult check_ritz_perturbation(TrialContext& ctx) {
    std::mt19937_64 rng(mix_seed(ctx.seed, 20, 0));
    const std::size_t k = uniform_index(rng, 1, ctx.n - 1);
    const Matrix a = random_symmetric(ctx.n, -2.0, 2.0, mix_seed(ctx.seed, 20, 1));
    const auto x = random_subspace(ctx.n, k, mix_seed(ctx.seed, 20, 2));
    const auto y = random_subspace(ctx.n, k, mix_seed(ctx.seed, 20, 3));

    TrialResult res;
    res.tol = 0.0;
    const auto report = ritz::ritz_perturbation_check(a, x, y, false);
    res.tol = report.report.tolerance_used;
    res.margin = std::min({min_prefix_margin(report.report),
                           report.full_sum_rhs - report.full_sum_lhs,
                           report.gap_bound - report.max_change});
    if (res.failed())
        res.artifacts = {{"A", matrix_text(a)},
                         {"X-basis", matrix_text(x.basis)},
                         {"Y-basis", matrix_text(y.basis)}};
    return res;
}

TrialResult check_dilation_preserves_ritz(TrialContext& ctx) {
    std::mt19937_64 rng(mix_seed(ctx.seed, 21, 0));
    const std::size_t k = uniform_index(rng, 1, ctx.n);
    const Matrix a = random_symmetric(ctx.n, 0.0, 1.0, mix_seed(ctx.seed, 21, 1));
    const auto x = random_subspace(ctx.n, k, mix_seed(ctx.seed, 21, 2));

    const auto original = ritz::ritz_values(a, x);
    const auto dilation = ritz::dilate_to_projector(a);
    const auto doubled = ritz::ritz_values(dilation.projector_matrix, ritz::embed_trial(x));

    TrialResult res;
    res.tol = ctx.tol_scale * 10.0;  // two extra eigensolves of the doubled operator
    res.margin = -max_entrywise_err(original.values, doubled.values);
    if (res.failed()) res.artifacts = {{"A", matrix_text(a)}, {"X-basis", matrix_text(x.basis)}};
    return res;
}

TrialResult check_graph_spectra(TrialContext& ctx) {
    std::mt19937_64 rng(mix_seed(ctx.seed, 22, 0));
    const std::size_t n = std::max<std::size_t>(ctx.n, 2);
    const std::size_t total = n * (n - 1) / 2;
    const std::size_t m = uniform_index(rng, 1, total);

    const auto sample_edges = [&](std::uint64_t salt) {
        std::mt19937_64 local(mix_seed(ctx.seed, 22, salt));
        std::vector<std::size_t> idx(total);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::shuffle(idx.begin(), idx.end(), local);
        const auto all = graphs::complete_graph(n).edges();
        std::vector<graphs::Edge> edges;
        for (std::size_t t = 0; t < m; ++t) edges.push_back(all[idx[t]]);
        return edges;
    };
    const graphs::Graph g1(n, sample_edges(1));
    const graphs::Graph g2(n, sample_edges(2));
    const auto report = graphs::spectra_compare(g1, g2);

    TrialResult res;
    res.tol = report.tolerance_used;
    res.margin = report.rhs - report.lhs;
    if (res.failed()) res.artifacts = {{"G1", graph_text(g1)}, {"G2", graph_text(g2)}};
    return res;
}

TrialResult run_checker(TheoremId id, TrialContext& ctx) {
    switch (id) {
        case TheoremId::Ineq1dAngle: return check_1d(ctx, 0);
        case TheoremId::Ineq1dSin: return check_1d(ctx, 1);
        case TheoremId::Ineq1dCos: return check_1d(ctx, 2);
        case TheoremId::Ineq1dSq: return check_1d(ctx, 3);
        case TheoremId::Thm21: return check_eig_sum(ctx);
        case TheoremId::Cor22: return check_singular_sum(ctx);
        case TheoremId::Thm23Lidskii: return check_lidskii(ctx);
        case TheoremId::Cor24: return check_singular_diff(ctx, false);
        case TheoremId::Cor25: return check_singular_diff(ctx, true);
        case TheoremId::Thm26Pinch: return check_pinching(ctx);
        case TheoremId::Thm27: return check_angle_complements(ctx);
        case TheoremId::Lem28: return check_restricted_product(ctx);
        case TheoremId::Thm29: return check_projector_difference(ctx);
        case TheoremId::Thm31Angles: return check_angle_perturbation(ctx, 0);
        case TheoremId::Thm32Sin: return check_angle_perturbation(ctx, 1);
        case TheoremId::Thm32Cos: return check_angle_perturbation(ctx, 2);
        case TheoremId::Thm33Sq: return check_angle_perturbation(ctx, 3);
        case TheoremId::Thm41Ritz: return check_ritz_perturbation(ctx);
        case TheoremId::Cor4Dilation: return check_dilation_preserves_ritz(ctx);
        case TheoremId::Thm52Graph: return check_graph_spectra(ctx);
    }
    throw Error(ErrorCode::UnknownTheorem, "no checker registered");
}

void dump_failure(const std::string& dir, const std::string& token, std::size_t trial,
                  std::uint64_t trial_seed, const TrialResult& result) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    const std::string stem = dir + "/" + token + "-trial" + std::to_string(trial);
    for (const auto& [name, text] : result.artifacts) {
        std::ofstream out(stem + "-" + name + ".txt");
        out << text;
    }
    std::ofstream meta(stem + "-meta.txt");
    meta << "theorem " << token << "\ntrial " << trial << "\nseed " << trial_seed
         << "\nmargin " << io::format_full(result.margin) << "\ntol "
         << io::format_full(result.tol) << '\n';
}

}  // namespace

const std::vector<TheoremId>& all_theorem_ids() {
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> v;
        for (const auto& info : id_table()) v.push_back(info.id);
        return v;
    }();
    return ids;
}

std::string theorem_id_token(TheoremId id) {
    for (const auto& info : id_table()) {
        if (info.id == id) return info.token;
    }
    throw Error(ErrorCode::UnknownTheorem, "unknown theorem id");
}

TheoremId parse_theorem_id(const std::string& token) {
    for (const auto& info : id_table()) {
        if (token == info.token) return info.id;
    }
    throw Error(ErrorCode::UnknownTheorem, "unknown theorem id: " + token);
}

subspaces::Subspace random_subspace(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k < 1 || k > n) {
        throw Error(ErrorCode::BadDims, "need 1 <= k <= n");
    }
    return subspaces::subspace_from_columns(random_matrix(n, k, seed));
}

Matrix random_matrix(std::size_t n, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(mix_seed(seed, 0xabcd, 0));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix out(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) out(i, j) = gauss(rng);
    return out;
}

Matrix random_symmetric(std::size_t n, double lo, double hi, std::uint64_t seed) {
    if (!(lo < hi)) {
        throw Error(ErrorCode::BadRange, "need lo < hi");
    }
    std::mt19937_64 rng(mix_seed(seed, 0xbeef, 0));
    std::uniform_real_distribution<double> uniform(lo, hi);
    std::vector<double> spectrum(n);
    for (double& v : spectrum) v = uniform(rng);
    // Pin the endpoints so the spread is exactly hi - lo for n >= 2.
    if (n >= 2) {
        spectrum[0] = hi;
        spectrum[1] = lo;
    }
    const Matrix q = linalg::orthonormalize(random_matrix(n, n, mix_seed(seed, 0xbeef, 1)));
    const Matrix d = Matrix::diag(spectrum);
    Matrix a = q * d * q.transpose();
    // Enforce exact symmetry.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = v;
            a(j, i) = v;
        }
    return a;
}

CheckReport check(TheoremId id, const CheckConfig& config) {
    if (config.min_ambient < 2 || config.max_ambient < config.min_ambient) {
        throw Error(ErrorCode::BadDims, "ambient range must satisfy 2 <= min <= max");
    }
    const auto start = std::chrono::steady_clock::now();
    const std::string token = theorem_id_token(id);
    const std::uint64_t id_index =
        static_cast<std::uint64_t>(std::find(all_theorem_ids().begin(), all_theorem_ids().end(), id) -
                                   all_theorem_ids().begin());

    CheckReport report;
    report.theorem = id;
    report.trials = config.trials;
    report.seed = config.seed;
    report.worst_margin = std::numeric_limits<double>::infinity();

    for (std::size_t trial = 0; trial < config.trials; ++trial) {
        const std::uint64_t trial_seed = mix_seed(config.seed, id_index, trial);
        std::mt19937_64 rng(trial_seed);
        TrialContext ctx;
        ctx.seed = trial_seed;
        ctx.n = uniform_index(rng, config.min_ambient, config.max_ambient);
        ctx.tol_scale = config.tol_scale;

        const TrialResult result = run_checker(id, ctx);
        report.worst_margin = std::min(report.worst_margin, result.margin);
        if (result.failed()) {
            ++report.failures;
            dump_failure(config.failure_dump_dir, token, trial, trial_seed, result);
        }
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<CheckReport> run_suite(const SuiteConfig& config) {
    std::vector<CheckReport> reports;
    reports.reserve(config.ids.size());
    for (TheoremId id : config.ids) {
        reports.push_back(check(id, config.check));
    }
    return reports;
}

}  // namespace submaj::verify
