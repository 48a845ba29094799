#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "gpower/errors.hpp"
#include "gpower/power.hpp"
#include "gpower/random.hpp"

namespace gpower {

/// Layer sizes (l_1, ..., l_r); l_0 = 1 is implicit.
struct LayerComposition {
    std::vector<std::uint64_t> values;

    std::size_t depth() const { return values.size(); }
    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (auto v : values) s += v;
        return s;
    }
};

/// Natural-log probability with a distinguished exact zero (-inf). The zero
/// absorbs under multiplication, matching "no parents means no children".
class LogProb {
public:
    static LogProb zero() { return LogProb(-std::numeric_limits<double>::infinity()); }
    static LogProb from_log(double value) { return LogProb(value); }

    bool is_zero() const { return log_ == -std::numeric_limits<double>::infinity(); }
    double log() const { return log_; }
    double linear() const { return is_zero() ? 0.0 : std::exp(log_); }

    LogProb operator*(LogProb other) const { return LogProb(log_ + other.log_); }

private:
    explicit LogProb(double value) : log_(value) {}
    double log_;
};

/// Per-vertex and union-bound upper-tail estimates in log scale. Built from
/// the limiting pmf, so it is an order-of-magnitude guide rather than a
/// certified bound.
struct TailEstimate {
    std::uint64_t n = 0;
    double c = 0.0;
    int r = 0;
    std::uint64_t d = 0;
    double log_per_vertex = 0.0; // log sum_{d' >= d} P[power degree = d']
    double log_union = 0.0;      // log_per_vertex + log n
};

/// log applied k times; log_{(0)} x = x. Any intermediate that would be fed
/// to log must be positive, otherwise DomainError.
double iter_log(int k, double x);

/// log n / log_{(r+1)} n, the benchmark degree scale. DomainError reports the
/// minimal admissible n when log_{(r+1)} n <= 0.
double d_star(double n, int r);

/// Smallest n (exclusive bound) for which d_star(n, r) is defined; +inf when
/// no double satisfies the guard.
double d_star_min_n(int r);

/// Log of one layer-profile term: d log c - c(1 + d - l_r) - sum log(l_i!)
/// + sum_{i>=2} l_i log l_{i-1}, with 0 * log 0 = 0.
LogProb log_u(double c, const LayerComposition& comp);

/// Same quantity with the exponent written as -c(1 + l_1 + ... + l_{r-1});
/// algebraically identical to log_u and kept as a second route for checking.
LogProb joint_profile_pmf(double c, const LayerComposition& comp);

inline constexpr std::uint64_t kDefaultCompositionCap = 10'000'000;

/// Number of weak compositions of d into r parts, clamped to cap + 1.
std::uint64_t count_weak_compositions(std::uint64_t d, int r, std::uint64_t cap);

/// P[degree of a root in the limiting branching process equals d]: log-sum-exp
/// of log_u over all weak compositions of d into r parts. Finite-n correction
/// factors are deliberately not applied.
LogProb power_degree_pmf(double c, int r, std::uint64_t d,
                         std::uint64_t composition_cap = kDefaultCompositionCap);

/// One draw of the generation sizes (Z_1, ..., Z_r) of a branching process
/// with Poisson(c) offspring; the independent sampling oracle for the
/// analytic pmf.
NeighborhoodProfile gw_sample_profile(double c, int r, RandomStream& stream);

struct TailOptions {
    std::uint64_t composition_cap = kDefaultCompositionCap;
    double term_floor = 60.0; // stop once terms fall this far below the max
    int quiet_terms = 50;     // ... for this many consecutive d'
};

TailEstimate union_bound_tail(std::uint64_t n, double c, int r, std::uint64_t d,
                              const TailOptions& options = {});

/// LHS - RHS of the iterated-log difference inequality
///   log_{(s)}(a - b) >= log_{(s)} a - 2 s b / (a log a ... log_{(s-1)} a).
/// Nonnegative when a >> b; the sign is reported, never assumed.
double check_iter_log_diff(int s, double a, double b);

/// LHS - RHS of the ratio variant
///   log_{(s)}(a/b) >= log_{(s)} a - 2 (s-1) log b / (log a ... log_{(s-1)} a).
double check_iter_log_ratio(int s, double a, double b);

} // namespace gpower
