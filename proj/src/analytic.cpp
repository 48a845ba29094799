#include "gpower/analytic.hpp"

#include <cmath>
#include <string>

namespace gpower {

double iter_log(int k, double x) {
    if (k < 0) throw InvalidParameterError("iterated log: k must be nonnegative");
    double value = x;
    for (int i = 0; i < k; ++i) {
        if (!(value > 0.0))
            throw DomainError("iterated log: intermediate " + std::to_string(value) +
                              " at level " + std::to_string(i) + " is not positive");
        value = std::log(value);
    }
    if (std::isnan(value)) throw DomainError("iterated log: NaN input");
    return value;
}

double d_star_min_n(int r) {
    // need log_{(r+1)} n > 0, i.e. n > exp applied r times to 1
    double bound = 1.0;
    for (int i = 0; i < r; ++i) {
        bound = std::exp(bound);
        if (std::isinf(bound)) return bound;
    }
    return bound;
}

double d_star(double n, int r) {
    if (r < 1) throw InvalidParameterError("d_star: power r must be at least 1");
    const double min_n = d_star_min_n(r);
    double denom;
    try {
        denom = iter_log(r + 1, n);
    } catch (const DomainError&) {
        denom = 0.0;
    }
    if (!(denom > 0.0)) {
        if (std::isinf(min_n))
            throw DomainError("d_star undefined for r = " + std::to_string(r) +
                              ": no representable n satisfies log_(r+1) n > 0");
        throw DomainError("d_star undefined: need n > " + std::to_string(min_n) +
                          ", got n = " + std::to_string(n));
    }
    return std::log(n) / denom;
}

namespace {

double log_factorial(std::uint64_t k) { return std::lgamma(static_cast<double>(k) + 1.0); }

// shared tail of both pmf routes: -sum log(l_i!) + sum_{i>=2} l_i log l_{i-1},
// or exact zero when some empty layer has a nonempty successor
bool accumulate_structure(const LayerComposition& comp, double& acc) {
    const auto& ell = comp.values;
    for (std::size_t i = 0; i < ell.size(); ++i) {
        acc -= log_factorial(ell[i]);
        if (i == 0) continue;
        if (ell[i] == 0) continue; // 0 * log 0 = 0
        const std::uint64_t parent = ell[i - 1];
        if (parent == 0) return false;
        acc += static_cast<double>(ell[i]) * std::log(static_cast<double>(parent));
    }
    return true;
}

void check_density(double c) {
    if (!(c > 0.0)) throw InvalidParameterError("density c must be positive");
}

} // namespace

LogProb log_u(double c, const LayerComposition& comp) {
    check_density(c);
    if (comp.depth() == 0) throw InvalidParameterError("empty layer composition");
    const std::uint64_t d = comp.total();
    const std::uint64_t last = comp.values.back();
    double acc = static_cast<double>(d) * std::log(c) -
                 c * (1.0 + static_cast<double>(d - last));
    if (!accumulate_structure(comp, acc)) return LogProb::zero();
    return LogProb::from_log(acc);
}

LogProb joint_profile_pmf(double c, const LayerComposition& comp) {
    check_density(c);
    if (comp.depth() == 0) throw InvalidParameterError("empty layer composition");
    std::uint64_t prefix = 0; // l_1 + ... + l_{r-1}
    for (std::size_t i = 0; i + 1 < comp.values.size(); ++i) prefix += comp.values[i];
    const std::uint64_t d = comp.total();
    double acc = static_cast<double>(d) * std::log(c) -
                 c * (1.0 + static_cast<double>(prefix));
    if (!accumulate_structure(comp, acc)) return LogProb::zero();
    return LogProb::from_log(acc);
}

std::uint64_t count_weak_compositions(std::uint64_t d, int r, std::uint64_t cap) {
    // C(d + r - 1, r - 1), clamped
    std::uint64_t count = 1;
    for (int i = 1; i < r; ++i) {
        const double estimate = static_cast<double>(count) *
                                static_cast<double>(d + static_cast<std::uint64_t>(i)) /
                                static_cast<double>(i);
        if (estimate > static_cast<double>(cap) * 2.0 + 16.0) return cap + 1;
        count = count * (d + static_cast<std::uint64_t>(i)) /
                static_cast<std::uint64_t>(i);
        if (count > cap) return cap + 1;
    }
    return count;
}

namespace {

// streaming log-sum-exp, schedule-independent for a fixed visit order
class LogSumExp {
public:
    void add(double term) {
        if (term == -std::numeric_limits<double>::infinity()) return;
        if (empty_) {
            max_ = term;
            sum_ = 1.0;
            empty_ = false;
        } else if (term > max_) {
            sum_ = sum_ * std::exp(max_ - term) + 1.0;
            max_ = term;
        } else {
            sum_ += std::exp(term - max_);
        }
    }
    double value() const {
        if (empty_) return -std::numeric_limits<double>::infinity();
        return max_ + std::log(sum_);
    }

private:
    bool empty_ = true;
    double max_ = 0.0;
    double sum_ = 0.0;
};

template <typename Visitor>
void visit_weak_compositions(std::uint64_t d, int r, std::vector<std::uint64_t>& parts,
                             int index, Visitor&& visit) {
    if (index == r - 1) {
        parts[static_cast<std::size_t>(index)] = d;
        visit(parts);
        return;
    }
    for (std::uint64_t v = 0; v <= d; ++v) {
        parts[static_cast<std::size_t>(index)] = v;
        visit_weak_compositions(d - v, r, parts, index + 1, visit);
    }
}

} // namespace

LogProb power_degree_pmf(double c, int r, std::uint64_t d, std::uint64_t cap) {
    check_density(c);
    if (r < 1) throw InvalidParameterError("power r must be at least 1");
    if (count_weak_compositions(d, r, cap) > cap)
        throw CapacityError(
            "composition enumeration for d = " + std::to_string(d) + ", r = " +
            std::to_string(r) +
            " exceeds the cap; estimate the probability by Monte Carlo instead");

    LogSumExp sum;
    std::vector<std::uint64_t> parts(static_cast<std::size_t>(r), 0);
    LayerComposition comp;
    visit_weak_compositions(d, r, parts, 0, [&](const std::vector<std::uint64_t>& p) {
        comp.values = p;
        sum.add(log_u(c, comp).log());
    });
    return LogProb::from_log(sum.value());
}

NeighborhoodProfile gw_sample_profile(double c, int r, RandomStream& stream) {
    check_density(c);
    if (r < 1) throw InvalidParameterError("power r must be at least 1");
    NeighborhoodProfile profile;
    profile.layers.assign(static_cast<std::size_t>(r), 0);
    std::uint64_t parent = 1;
    for (int i = 0; i < r; ++i) {
        const std::uint64_t z =
            stream.poisson(c * static_cast<double>(parent));
        profile.layers[static_cast<std::size_t>(i)] = z;
        parent = z;
    }
    return profile;
}

TailEstimate union_bound_tail(std::uint64_t n, double c, int r, std::uint64_t d,
                              const TailOptions& options) {
    d_star(static_cast<double>(n), r); // same domain guard as the target scale

    LogSumExp sum;
    double running_max = -std::numeric_limits<double>::infinity();
    int quiet = 0;
    for (std::uint64_t dp = d;; ++dp) {
        const double term = power_degree_pmf(c, r, dp, options.composition_cap).log();
        sum.add(term);
        running_max = std::max(running_max, term);
        if (term < running_max - options.term_floor) {
            if (++quiet >= options.quiet_terms) break;
        } else {
            quiet = 0;
        }
    }

    TailEstimate estimate;
    estimate.n = n;
    estimate.c = c;
    estimate.r = r;
    estimate.d = d;
    estimate.log_per_vertex = sum.value();
    estimate.log_union = estimate.log_per_vertex + std::log(static_cast<double>(n));
    return estimate;
}

namespace {

// a * log a * loglog a * ... * log_{(s-1)} a
double denominator_product(int s, double a) {
    double product = a;
    for (int j = 1; j <= s - 1; ++j) product *= iter_log(j, a);
    return product;
}

void check_pair(double a, double b) {
    if (!(a > b) || !(b > 0.0))
        throw InvalidParameterError("require a > b > 0");
}

} // namespace

double check_iter_log_diff(int s, double a, double b) {
    if (s < 1) throw InvalidParameterError("level s must be at least 1");
    check_pair(a, b);
    const double lhs = iter_log(s, a - b);
    const double rhs = iter_log(s, a) - 2.0 * s * b / denominator_product(s, a);
    return lhs - rhs;
}

double check_iter_log_ratio(int s, double a, double b) {
    if (s < 1) throw InvalidParameterError("level s must be at least 1");
    check_pair(a, b);
    const double lhs = iter_log(s, a / b);
    double correction = 0.0;
    if (s > 1) {
        double product = 1.0; // log a * ... * log_{(s-1)} a
        for (int j = 1; j <= s - 1; ++j) product *= iter_log(j, a);
        correction = 2.0 * (s - 1) * std::log(b) / product;
    }
    const double rhs = iter_log(s, a) - correction;
    return lhs - rhs;
}

} // namespace gpower
