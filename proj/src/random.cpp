#include "gpower/random.hpp"

#include <cmath>

namespace gpower {

std::uint64_t RandomStream::uniform_below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t bound = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= bound);
    return x % n;
}

std::uint64_t RandomStream::poisson(double lambda) {
    if (!(lambda > 0.0)) return 0;
    std::uint64_t total = 0;
    // exp(-lambda) must stay well above double underflow for the inversion
    while (lambda > 30.0) {
        const double half = lambda / 2.0;
        total += poisson(half);
        lambda -= half;
    }
    const double u = uniform01();
    double pmf = std::exp(-lambda);
    double cdf = pmf;
    std::uint64_t k = 0;
    const std::uint64_t k_max =
        static_cast<std::uint64_t>(lambda + 60.0 * std::sqrt(lambda) + 120.0);
    while (u >= cdf && k < k_max) {
        ++k;
        pmf *= lambda / static_cast<double>(k);
        cdf += pmf;
    }
    return total + k;
}

} // namespace gpower
