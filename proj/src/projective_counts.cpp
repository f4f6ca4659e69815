#include "kummer/projective_counts.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace kummer {

std::optional<ProjPoint> ProjPoint::canonical(std::int64_t a, std::int64_t b) {
    if (a == 0 && b == 0) return std::nullopt;
    const std::int64_t g = std::gcd(a, b);
    a /= g;
    b /= g;
    if (b < 0 || (b == 0 && a < 0)) {
        a = -a;
        b = -b;
    }
    return ProjPoint{a, b};
}

std::uint64_t ProjPoint::height() const {
    return std::max(static_cast<std::uint64_t>(std::llabs(a)), static_cast<std::uint64_t>(std::llabs(b)));
}

std::uint64_t count_p1(std::uint64_t B) {
    if (B < 1) throw std::invalid_argument("count_p1: B must be at least 1");
    if (B > 500'000'000) throw std::invalid_argument("count_p1: B above 5e8 is out of range");

    // (1:0) and (0:1), plus (+-a : b) for coprime 1 <= a, b <= B. The coprime
    // pairs in the box number 2 * Phi(B) - 1.
    std::vector<std::uint32_t> phi(B + 1);
    std::iota(phi.begin(), phi.end(), 0U);
    std::uint64_t totient_sum = 0;
    for (std::uint64_t n = 1; n <= B; ++n) {
        if (phi[n] == n && n > 1)
            for (std::uint64_t m = n; m <= B; m += n) phi[m] -= phi[m] / n;
        totient_sum += phi[n];
    }
    return 2 + 2 * (2 * totient_sum - 1);
}

std::uint64_t integer_root(std::uint64_t B, unsigned d) {
    if (d == 0) throw std::invalid_argument("integer_root: degree must be positive");
    mpz_class v(static_cast<unsigned long>(B));
    mpz_root(v.get_mpz_t(), v.get_mpz_t(), d);
    return v.get_ui();
}

std::uint64_t count_degree_d(std::uint64_t B, unsigned d) {
    if (B < 1 || d < 1) throw std::invalid_argument("count_degree_d: B and d must be positive");
    return count_p1(integer_root(B, d));
}

}  // namespace kummer
