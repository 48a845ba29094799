#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gpower/analytic.hpp"
#include "gpower/errors.hpp"

namespace gpower {

/// Solution of the continuous constrained minimization of
/// sum l_i log(l_i / l_{i-1}) subject to sum l_i = d, l_0 = 1, obtained from
/// the stationarity system p_i = p_r * exp(p_{i+1}), p_r = exp(-(1+lambda)).
struct LagrangeSolution {
    int r = 0;
    double d = 0.0;
    double lambda = 0.0;
    std::vector<double> p;   // ratios l_i / l_{i-1}
    std::vector<double> ell; // continuous layer sizes
    double objective = 0.0;
    double constraint_residual = 0.0;   // |sum ell - d|
    double stationarity_residual = 0.0; // max defect of the stationarity equations
};

/// Exact integer minimum over positive compositions of d into r parts.
struct IntegerMinResult {
    std::vector<std::uint64_t> composition;
    double value = 0.0;
    std::uint64_t scanned = 0;
};

/// sum l_i log(l_i / l_{i-1}) with l_0 = 1. A zero layer contributes 0; a
/// zero layer with a nonempty successor makes the value +infinity.
double composition_objective(std::span<const std::uint64_t> ell);
double composition_objective(std::span<const double> ell);
double composition_objective(const LayerComposition& comp);

/// Solves the stationarity system by bisection on p_r over
/// [1, log_{(r-1)} d + 1]; sum l_i is strictly increasing in p_r.
/// RegimeError when d is too small for a solution with p_r >= 1.
LagrangeSolution solve_lagrange(int r, double d, double tol = 1e-10);

inline constexpr std::uint64_t kDefaultBruteForceCap = 100'000'000;

/// Exhaustive scan of positive integer compositions (zero-containing ones are
/// dominated or infinite). Parallelizes over the leading coordinate.
IntegerMinResult brute_force_min(int r, std::uint64_t d,
                                 std::uint64_t cap = kDefaultBruteForceCap,
                                 int workers = 1);

/// Best floor/ceil rounding of the continuous layers, repaired so the parts
/// are positive integers summing to d.
std::vector<std::uint64_t> repair_rounding(const LagrangeSolution& solution);

enum class MinimumMode { kAuto, kContinuous, kInteger };

/// Realized slack of the lower bound: minimum - d * log_{(r)} d. The sign is
/// reported, not asserted.
double lower_bound_gap(int r, std::uint64_t d, MinimumMode mode = MinimumMode::kAuto);

} // namespace gpower
