#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "submaj/matrix.hpp"
#include "submaj/subspace.hpp"

namespace submaj::verify {

enum class TheoremId {
    Ineq1dAngle,
    Ineq1dSin,
    Ineq1dCos,
    Ineq1dSq,
    Thm21,
    Cor22,
    Thm23Lidskii,
    Cor24,
    Cor25,
    Thm26Pinch,
    Thm27,
    Lem28,
    Thm29,
    Thm31Angles,
    Thm32Sin,
    Thm32Cos,
    Thm33Sq,
    Thm41Ritz,
    Cor4Dilation,
    Thm52Graph,
};

// All ids in registry order.
const std::vector<TheoremId>& all_theorem_ids();

// Stable string tokens used on the CLI, e.g. "THM-3-3-SQ".
std::string theorem_id_token(TheoremId id);
TheoremId parse_theorem_id(const std::string& token);

struct CheckConfig {
    std::size_t trials = 1000;
    std::size_t min_ambient = 2;
    std::size_t max_ambient = 12;
    std::uint64_t seed = 0;
    double tol_scale = 1e-8;
    // Where to write instance dumps on failure; empty disables dumping.
    std::string failure_dump_dir;
};

struct CheckReport {
    TheoremId theorem = TheoremId::Thm21;
    std::size_t trials = 0;
    std::size_t failures = 0;
    double worst_margin = 0.0;
    std::uint64_t seed = 0;
    double elapsed_seconds = 0.0;
};

struct SuiteConfig {
    std::vector<TheoremId> ids;
    CheckConfig check;
};

// Deterministic per seed.
subspaces::Subspace random_subspace(std::size_t n, std::size_t k, std::uint64_t seed);
Matrix random_symmetric(std::size_t n, double lo, double hi, std::uint64_t seed);
Matrix random_matrix(std::size_t n, std::size_t m, std::uint64_t seed);

CheckReport check(TheoremId id, const CheckConfig& config);
std::vector<CheckReport> run_suite(const SuiteConfig& config);

}  // namespace submaj::verify
