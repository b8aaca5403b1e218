#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "submaj/graph.hpp"
#include "submaj/io.hpp"
#include "submaj/linalg.hpp"
#include "submaj/majorization.hpp"
#include "submaj/ritz.hpp"
#include "submaj/subspace.hpp"
#include "submaj/verify.hpp"

namespace {

using namespace submaj;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

// json mode prints 17 significant digits (lossless), human mode 6.
std::string fmt(double x, bool json) {
    if (json) return io::format_full(x);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string json_array(const std::vector<double>& v) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        out << io::format_full(v[i]);
    }
    out << ']';
    return out.str();
}

std::string human_list(const std::vector<double>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << fmt(v[i], false);
    }
    return out.str();
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SUBMAJ_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 12345;
}

int cmd_angles(const std::string& x_path, const std::string& y_path, bool json) {
    const auto x = subspaces::subspace_from_columns(io::read_matrix_file(x_path));
    const auto y = subspaces::subspace_from_columns(io::read_matrix_file(y_path));
    const auto angles = subspaces::principal_angles(x, y);
    const auto diff = subspaces::projector_difference_singvals(x, y);
    const bool structural_ok = diff.max_abs_diff <= 1e-8;

    if (json) {
        std::cout << "{\"schema\":1,\"command\":\"angles\","
                  << "\"angles\":" << json_array(angles.angles) << ','
                  << "\"cosines\":" << json_array(angles.cosines) << ','
                  << "\"sines\":" << json_array(angles.sines) << ','
                  << "\"projector_difference_max_err\":" << io::format_full(diff.max_abs_diff)
                  << ",\"structural_check\":" << (structural_ok ? "true" : "false") << "}\n";
    } else {
        std::cout << "angles:  " << human_list(angles.angles) << '\n'
                  << "cosines: " << human_list(angles.cosines) << '\n'
                  << "sines:   " << human_list(angles.sines) << '\n'
                  << "projector-difference cross-check: "
                  << (structural_ok ? "ok" : "FAILED") << " (max err "
                  << fmt(diff.max_abs_diff, false) << ")\n";
    }
    return structural_ok ? kExitOk : kExitViolated;
}

int cmd_ritz(const std::string& a_path, const std::string& x_path, const std::string& y_path,
             bool local_spread, double tol, bool json) {
    const Matrix a = io::read_matrix_file(a_path);
    const auto x = subspaces::subspace_from_columns(io::read_matrix_file(x_path));
    const auto y = subspaces::subspace_from_columns(io::read_matrix_file(y_path));
    const auto rx = ritz::ritz_values(a, x);
    const auto ry = ritz::ritz_values(a, y);
    const auto report = ritz::ritz_perturbation_check(a, x, y, local_spread, tol);

    if (json) {
        std::cout << "{\"schema\":1,\"command\":\"ritz\","
                  << "\"ritz_x\":" << json_array(rx.values) << ','
                  << "\"ritz_y\":" << json_array(ry.values) << ','
                  << "\"lhs\":" << json_array(report.lhs) << ','
                  << "\"rhs\":" << json_array(report.rhs) << ','
                  << "\"margins\":" << json_array(report.report.margins) << ','
                  << "\"spread\":" << io::format_full(report.spread_used) << ','
                  << "\"holds\":" << (report.report.holds ? "true" : "false") << ','
                  << "\"full_sum_holds\":" << (report.full_sum_holds ? "true" : "false") << ','
                  << "\"max_change_holds\":" << (report.max_change_holds ? "true" : "false")
                  << "}\n";
    } else {
        std::cout << "ritz(X):  " << human_list(rx.values) << '\n'
                  << "ritz(Y):  " << human_list(ry.values) << '\n'
                  << "|diff|:   " << human_list(report.lhs) << '\n'
                  << "bound:    " << human_list(report.rhs) << " (spread "
                  << fmt(report.spread_used, false) << ")\n"
                  << "margins:  " << human_list(report.report.margins) << '\n'
                  << "verdict:  " << (report.report.holds ? "holds" : "VIOLATED") << '\n';
    }
    const bool all_hold = report.report.holds && report.full_sum_holds && report.max_change_holds;
    return all_hold ? kExitOk : kExitViolated;
}

int cmd_graph_compare(const std::string& g1_path, const std::string& g2_path, double tol,
                      bool json) {
    const auto g1 = io::read_graph_file(g1_path);
    const auto g2 = io::read_graph_file(g2_path);
    const auto report = graphs::spectra_compare(g1, g2, tol);

    if (json) {
        std::cout << "{\"schema\":1,\"command\":\"graph-compare\","
                  << "\"spectrum1\":" << json_array(report.spectrum1) << ','
                  << "\"spectrum2\":" << json_array(report.spectrum2) << ','
                  << "\"lhs\":" << io::format_full(report.lhs) << ','
                  << "\"differing_edges\":" << report.differing << ','
                  << "\"bound\":" << io::format_full(report.rhs) << ','
                  << "\"sharpened_bound\":" << io::format_full(report.sharpened_rhs) << ','
                  << "\"holds\":" << (report.holds ? "true" : "false") << "}\n";
    } else {
        std::cout << "spectrum1: " << human_list(report.spectrum1) << '\n'
                  << "spectrum2: " << human_list(report.spectrum2) << '\n'
                  << "lhs=" << fmt(report.lhs, false) << " l=" << report.differing
                  << " bound=" << fmt(report.rhs, false) << " sharpened="
                  << fmt(report.sharpened_rhs, false) << ' '
                  << (report.holds ? "holds" : "VIOLATED") << '\n';
    }
    return report.holds ? kExitOk : kExitViolated;
}

int cmd_dilate(const std::string& a_path, bool normalize, const std::string& out_path,
               const std::string& trial_path, bool json) {
    Matrix a = io::read_matrix_file(a_path);
    double shift = 0.0, scale = 1.0;
    if (normalize) {
        const auto normalized = ritz::normalize_spectrum(a);
        a = normalized.matrix;
        shift = normalized.shift;
        scale = normalized.scale;
    }
    auto dilation = ritz::dilate_to_projector(a);
    dilation.shift = shift;
    dilation.scale = scale;

    const Matrix& p = dilation.projector_matrix;
    const double idem = (p * p - p).norm_max();
    if (!out_path.empty()) {
        io::write_matrix_file(out_path, p);
    }

    double ritz_err = -1.0;
    if (!trial_path.empty()) {
        const auto x = subspaces::subspace_from_columns(io::read_matrix_file(trial_path));
        const auto original = ritz::ritz_values(a, x);
        const auto doubled = ritz::ritz_values(p, ritz::embed_trial(x));
        for (std::size_t i = 0; i < original.values.size(); ++i) {
            ritz_err = std::max(ritz_err, std::abs(original.values[i] - doubled.values[i]));
        }
    }

    if (json) {
        std::cout << "{\"schema\":1,\"command\":\"dilate\","
                  << "\"dim\":" << dilation.original_dim << ','
                  << "\"shift\":" << io::format_full(shift) << ','
                  << "\"scale\":" << io::format_full(scale) << ','
                  << "\"idempotency_residual\":" << io::format_full(idem);
        if (ritz_err >= 0.0) std::cout << ",\"ritz_preservation_err\":" << io::format_full(ritz_err);
        std::cout << "}\n";
    } else {
        std::cout << "projector: " << 2 * dilation.original_dim << "x" << 2 * dilation.original_dim
                  << (out_path.empty() ? "" : " written to " + out_path) << '\n'
                  << "idempotency residual: " << fmt(idem, false) << '\n';
        if (normalize) {
            std::cout << "shift: " << fmt(shift, false) << " scale: " << fmt(scale, false) << '\n';
        }
        if (ritz_err >= 0.0) {
            std::cout << "ritz preservation err: " << fmt(ritz_err, false) << '\n';
        }
    }
    return kExitOk;
}

int cmd_verify(const std::vector<std::string>& theorem_tokens, std::size_t trials,
               std::uint64_t seed, std::size_t n_min, std::size_t n_max, double tol_scale,
               const std::string& dump_dir, bool json) {
    verify::SuiteConfig config;
    if (theorem_tokens.empty() ||
        (theorem_tokens.size() == 1 && theorem_tokens[0] == "all")) {
        config.ids = verify::all_theorem_ids();
    } else {
        for (const auto& token : theorem_tokens) {
            config.ids.push_back(verify::parse_theorem_id(token));
        }
    }
    config.check.trials = trials;
    config.check.seed = seed;
    config.check.min_ambient = n_min;
    config.check.max_ambient = n_max;
    config.check.tol_scale = tol_scale;
    config.check.failure_dump_dir = dump_dir;

    const auto reports = verify::run_suite(config);
    bool any_failure = false;
    if (json) std::cout << "{\"schema\":1,\"command\":\"verify\",\"reports\":[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        any_failure = any_failure || r.failures > 0;
        if (json) {
            if (i) std::cout << ',';
            std::cout << "{\"theorem\":\"" << verify::theorem_id_token(r.theorem) << "\","
                      << "\"trials\":" << r.trials << ",\"failures\":" << r.failures << ','
                      << "\"worst_margin\":" << io::format_full(r.worst_margin) << ','
                      << "\"seed\":" << r.seed << '}';
        } else {
            std::printf("%-16s trials=%zu failures=%zu worst_margin=%s\n",
                        verify::theorem_id_token(r.theorem).c_str(), r.trials, r.failures,
                        fmt(r.worst_margin, false).c_str());
        }
    }
    if (json) std::cout << "]}\n";
    return any_failure ? kExitViolated : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"principal angles, Ritz values, and graph Laplacian spectra with "
                 "weak-majorization bound checks"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    auto* angles = app.add_subcommand("angles", "principal angles between two subspaces");
    std::string x_path, y_path;
    angles->add_option("X", x_path, "basis matrix file")->required();
    angles->add_option("Y", y_path, "basis matrix file")->required();

    auto* ritz_cmd = app.add_subcommand("ritz", "Ritz value perturbation bound");
    std::string a_path;
    bool local_spread = false;
    double tol = -1.0;
    ritz_cmd->add_option("A", a_path, "symmetric operator file")->required();
    ritz_cmd->add_option("X", x_path, "trial subspace basis file")->required();
    ritz_cmd->add_option("Y", y_path, "perturbed trial subspace basis file")->required();
    ritz_cmd->add_flag("--local-spread", local_spread, "use the spread of A restricted to X+Y");
    ritz_cmd->add_option("--tol", tol, "majorization check tolerance")->check(CLI::PositiveNumber);

    auto* graph_cmd = app.add_subcommand("graph-compare", "Laplacian spectra comparison bound");
    std::string g1_path, g2_path;
    graph_cmd->add_option("G1", g1_path, "edge-list file")->required();
    graph_cmd->add_option("G2", g2_path, "edge-list file")->required();
    graph_cmd->add_option("--tol", tol, "bound check tolerance")->check(CLI::PositiveNumber);

    auto* dilate_cmd = app.add_subcommand("dilate", "extend to a projector on the doubled space");
    bool normalize = false;
    std::string out_path, trial_path;
    dilate_cmd->add_option("A", a_path, "symmetric operator file, spectrum in [0,1]")->required();
    dilate_cmd->add_flag("--normalize", normalize, "shift/scale the spectrum into [0,1] first");
    dilate_cmd->add_option("--out", out_path, "write the projector matrix here");
    dilate_cmd->add_option("--trial", trial_path, "trial subspace for a Ritz preservation check");

    auto* verify_cmd = app.add_subcommand("verify", "run randomized theorem checks");
    std::vector<std::string> theorems;
    std::size_t trials = 1000, n_min = 2, n_max = 12;
    std::uint64_t seed = default_seed();
    double tol_scale = 1e-8;
    std::string dump_dir;
    verify_cmd->add_option("--theorems", theorems, "theorem ids, or \"all\"");
    verify_cmd->add_option("--trials", trials, "trials per theorem");
    verify_cmd->add_option("--seed", seed, "master seed");
    verify_cmd->add_option("--n-min", n_min, "smallest ambient dimension");
    verify_cmd->add_option("--n-max", n_max, "largest ambient dimension");
    verify_cmd->add_option("--tol", tol_scale, "tolerance scale")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--dump-dir", dump_dir, "directory for failure reproduction files");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*angles) return cmd_angles(x_path, y_path, json);
        if (*ritz_cmd) return cmd_ritz(a_path, x_path, y_path, local_spread, tol, json);
        if (*graph_cmd) return cmd_graph_compare(g1_path, g2_path, tol, json);
        if (*dilate_cmd) return cmd_dilate(a_path, normalize, out_path, trial_path, json);
        if (*verify_cmd)
            return cmd_verify(theorems, trials, seed, n_min, n_max, tol_scale, dump_dir, json);
    } catch (const Error& e) {
        std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
        return e.code() == ErrorCode::NoConvergence ? kExitNumerical : kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
