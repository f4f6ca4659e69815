#pragma once

// Integer points of the plane region
//     R(B) = { x >= 1, y >= 1 : x^(g1+c1) y^c2 <= B^2  and  x^c1 y^(g2+c2) <= B^2 }
// which bounds the number of points of height <= B off the distinguished
// curves. Exponents are arbitrary rationals; every membership test is done in
// exact integer arithmetic.

#include <cstdint>
#include <vector>

#include "kummer/rational.hpp"

namespace kummer {

struct RegionParams {
    Rational g1, g2, c1, c2;
    std::uint64_t B = 1;

    Rational denominator() const { return g1 * g2 + g2 * c1 + g1 * c2; }
};

/// Exact membership test with exponents cleared to a common denominator.
/// Construction throws NonPositiveFiberDegree unless g_k + c_k > 0.
class RegionPredicate {
public:
    explicit RegionPredicate(const RegionParams& p);

    /// x^(g1+c1) y^c2 <= B^2
    bool first(std::uint64_t x, std::uint64_t y) const;
    /// x^c1 y^(g2+c2) <= B^2
    bool second(std::uint64_t x, std::uint64_t y) const;
    bool contains(std::uint64_t x, std::uint64_t y) const { return first(x, y) && second(x, y); }

    /// Sign of c2: for fixed x, `first` is non-increasing in y when c2 > 0,
    /// constant when c2 = 0 and non-decreasing when c2 < 0.
    int c2_sign() const { return c2_sign_; }

private:
    struct Cleared {
        long x_exp;
        long y_exp;
    };
    bool holds(const Cleared& ex, std::uint64_t x, std::uint64_t y) const;

    Cleared first_;
    Cleared second_;
    BigInt bound_;  // B^(2q)
    int c2_sign_;
};

bool in_region(std::uint64_t x, std::uint64_t y, const RegionParams& p);

/// Largest integer x that can occur in R(B). Throws UnboundedRegion when
/// c2 < 0 and the denominator is not positive.
std::uint64_t region_x_limit(const RegionParams& p);

/// Number of integer points of R(B). Rows are found by binary search; the
/// x-range is split across worker threads.
std::uint64_t count_region(const RegionParams& p);

struct CountSample {
    std::uint64_t B = 0;
    std::uint64_t count = 0;
    friend bool operator==(const CountSample&, const CountSample&) = default;
};

/// One sample per B; `bounds` must be strictly increasing.
std::vector<CountSample> count_sweep(RegionParams p, const std::vector<std::uint64_t>& bounds);

enum class RegionBranch { CaseI, CaseII, CaseIII };

struct AreaEstimate {
    double value = 0;
    RegionBranch branch = RegionBranch::CaseI;
    /// Some integrand was x^-1 and was integrated as a logarithm.
    bool logarithmic = false;
};

/// Area of R(B) by the piecewise power integrals, plus the boundary terms
/// B^(2/(g1+c1)) + B^(2/(g2+c2)). For c2 < 0 the lower boundary is dropped
/// (upper bound). Floating point; for cross-checks only.
AreaEstimate area_closed_form(const RegionParams& p);

/// Worker count for parallel enumeration: KUMMER_THREADS if set to an
/// integer >= 1, else hardware concurrency.
unsigned worker_threads();

}  // namespace kummer
