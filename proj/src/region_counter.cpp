#include "kummer/region_counter.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "kummer/errors.hpp"

namespace kummer {

namespace {

long to_long(const Rational& r) {
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw std::overflow_error("cleared exponent too large");
    return r.get_num().get_si();
}

BigInt power(std::uint64_t base, unsigned long exp) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
    return out;
}

BigInt big(std::uint64_t v) {
    BigInt out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return out;
}

/// floor(B^r) for rational r >= 0.
std::uint64_t floor_power(std::uint64_t B, const Rational& r) {
    if (r < 0) return 1;
    const BigInt& num = r.get_num();
    const BigInt& den = r.get_den();
    if (!num.fits_ulong_p() || !den.fits_ulong_p()) throw std::overflow_error("exponent too large");
    BigInt value;
    mpz_pow_ui(value.get_mpz_t(), big(B).get_mpz_t(), num.get_ui());
    mpz_root(value.get_mpz_t(), value.get_mpz_t(), den.get_ui());
    if (mpz_sizeinbase(value.get_mpz_t(), 2) > 63) throw UnboundedRegion("enumeration bound exceeds 2^63");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, value.get_mpz_t());
    return out;
}

// Largest y in [lo, inf) with pred(y) true, given pred(lo) true and pred
// non-increasing.
template <typename Pred>
std::uint64_t last_true(std::uint64_t lo, Pred pred) {
    std::uint64_t step = 1;
    std::uint64_t hi = lo + step;
    while (pred(hi)) {
        lo = hi;
        step *= 2;
        hi = lo + step;
    }
    // pred(lo) true, pred(hi) false
    while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        (pred(mid) ? lo : hi) = mid;
    }
    return lo;
}

// Smallest y in [lo, hi] with pred(y) true, given pred(hi) true and pred
// non-decreasing.
template <typename Pred>
std::uint64_t first_true(std::uint64_t lo, std::uint64_t hi, Pred pred) {
    if (pred(lo)) return lo;
    while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        (pred(mid) ? hi : lo) = mid;
    }
    return hi;
}

std::uint64_t count_column(const RegionPredicate& pred, std::uint64_t x) {
    if (!pred.second(x, 1)) return 0;
    if (pred.c2_sign() >= 0) {
        if (!pred.first(x, 1)) return 0;
        return last_true(1, [&](std::uint64_t y) { return pred.contains(x, y); });
    }
    const std::uint64_t top = last_true(1, [&](std::uint64_t y) { return pred.second(x, y); });
    if (!pred.first(x, top)) return 0;
    const std::uint64_t bottom = first_true(1, top, [&](std::uint64_t y) { return pred.first(x, y); });
    return top - bottom + 1;
}

}  // namespace

RegionPredicate::RegionPredicate(const RegionParams& p) {
    const Rational p1 = p.g1 + p.c1;
    const Rational p2 = p.g2 + p.c2;
    if (p1 <= 0 || p2 <= 0)
        throw NonPositiveFiberDegree("gamma1 + c1 = " + to_string(p1) + ", gamma2 + c2 = " + to_string(p2) +
                                     "; both must be positive");
    if (p.B < 1) throw std::invalid_argument("B must be at least 1");

    BigInt q = 1;
    for (const Rational* r : {&p1, &p.c2, &p.c1, &p2}) q = lcm(q, BigInt(r->get_den()));
    const Rational qr(q);
    first_ = {to_long(p1 * qr), to_long(p.c2 * qr)};
    second_ = {to_long(p.c1 * qr), to_long(p2 * qr)};
    if (!q.fits_ulong_p()) throw std::overflow_error("common denominator too large");
    mpz_pow_ui(bound_.get_mpz_t(), big(p.B).get_mpz_t(), 2 * q.get_ui());
    c2_sign_ = sgn(p.c2);
}

bool RegionPredicate::holds(const Cleared& ex, std::uint64_t x, std::uint64_t y) const {
    // Negative exponents move to the right-hand side.
    BigInt lhs = 1;
    BigInt rhs = bound_;
    auto place = [&](std::uint64_t base, long e) {
        if (e > 0)
            lhs *= power(base, static_cast<unsigned long>(e));
        else if (e < 0)
            rhs *= power(base, static_cast<unsigned long>(-e));
    };
    place(x, ex.x_exp);
    place(y, ex.y_exp);
    return lhs <= rhs;
}

bool RegionPredicate::first(std::uint64_t x, std::uint64_t y) const { return holds(first_, x, y); }
bool RegionPredicate::second(std::uint64_t x, std::uint64_t y) const { return holds(second_, x, y); }

bool in_region(std::uint64_t x, std::uint64_t y, const RegionParams& p) { return RegionPredicate(p).contains(x, y); }

std::uint64_t region_x_limit(const RegionParams& p) {
    // c2 >= 0: y >= 1 in the first inequality gives x <= B^(2/(g1+c1)).
    // c2 < 0: combining both inequalities eliminates y and gives
    // x^den <= B^(2 g2), i.e. x <= B^(delta g2) with delta = 2/den.
    const Rational den = p.denominator();
    Rational exponent = 2 / Rational(p.g1 + p.c1);
    if (den > 0) exponent = std::max(exponent, Rational(2 * p.g2 / den));
    else if (p.c2 < 0)
        throw UnboundedRegion("c2 < 0 with non-positive denominator " + to_string(den) + ": x is unbounded");
    return floor_power(p.B, exponent);
}

std::uint64_t count_region(const RegionParams& p) {
    const RegionPredicate pred(p);
    const std::uint64_t width = region_x_limit(p);

    const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(worker_threads(), width / 256 + 1));
    if (threads <= 1) {
        std::uint64_t total = 0;
        for (std::uint64_t x = 1; x <= width; ++x) total += count_column(pred, x);
        return total;
    }

    // Interleaved strips keep the cheap and expensive columns balanced.
    std::vector<std::uint64_t> partial(threads, 0);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                std::uint64_t sum = 0;
                for (std::uint64_t x = 1 + t; x <= width; x += threads) sum += count_column(pred, x);
                partial[t] = sum;
            });
    }
    std::uint64_t total = 0;
    for (auto v : partial) total += v;
    return total;
}

std::vector<CountSample> count_sweep(RegionParams p, const std::vector<std::uint64_t>& bounds) {
    for (std::size_t k = 1; k < bounds.size(); ++k)
        if (bounds[k] <= bounds[k - 1]) throw std::invalid_argument("B list must be strictly increasing");
    std::vector<CountSample> out;
    out.reserve(bounds.size());
    for (auto B : bounds) {
        p.B = B;
        out.push_back({B, count_region(p)});
    }
    return out;
}

AreaEstimate area_closed_form(const RegionParams& p) {
    const Rational p1 = p.g1 + p.c1;
    const Rational p2 = p.g2 + p.c2;
    if (p1 <= 0 || p2 <= 0)
        throw NonPositiveFiberDegree("gamma1 + c1 and gamma2 + c2 must be positive");
    const Rational den = p.denominator();
    if (den <= 0) throw NonPositiveDenominator("denominator " + to_string(den) + " is not positive");

    const double lnB = std::log(static_cast<double>(p.B));
    AreaEstimate out;

    // integral over [e^lo, e^hi] of B^k x^s dx; s = -1 integrates to a log.
    auto integral = [&](const Rational& k, const Rational& s, double lo, double hi) -> double {
        const double K = k.get_d() * lnB;
        if (s == -1) {
            out.logarithmic = true;
            return std::exp(K) * (hi - lo);
        }
        const Rational s1 = s + 1;
        const double e = s1.get_d();
        return (std::exp(K + e * hi) - std::exp(K + e * lo)) / e;
    };

    const Rational x_cross = 2 * p.g2 / den;
    const Rational x_end = 2 / p1;
    const Rational y_end = 2 / p2;
    const double ln_cross = x_cross.get_d() * lnB;
    const double ln_x_end = x_end.get_d() * lnB;
    const double boundary = std::exp(ln_x_end) + std::exp(y_end.get_d() * lnB);

    if (p.c2 > 0) {
        // Second inequality binds up to the crossing point, the first after it.
        out.branch = RegionBranch::CaseI;
        out.value = integral(2 / p2, -p.c1 / p2, 0, ln_cross) +
                    integral(2 / p.c2, -p1 / p.c2, ln_cross, ln_x_end) + boundary;
    } else if (p.c2 == 0) {
        out.branch = RegionBranch::CaseII;
        out.value = integral(2 / p.g2, -p.c1 / p.g2, 0, ln_x_end) + boundary;
    } else {
        out.branch = RegionBranch::CaseIII;
        out.value = integral(2 / p2, -p.c1 / p2, 0, ln_cross) + boundary;
    }
    return out;
}

unsigned worker_threads() {
    if (const char* env = std::getenv("KUMMER_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace kummer
