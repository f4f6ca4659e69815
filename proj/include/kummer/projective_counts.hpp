#pragma once

// Points of bounded height on P^1(Q), H(a:b) = max(|a|, |b|) for coprime a, b.

#include <cstdint>
#include <optional>

namespace kummer {

struct ProjPoint {
    std::int64_t a = 1;
    std::int64_t b = 0;

    /// Reduces (a:b) to the representative with gcd 1 and b > 0, or (1:0).
    /// Returns nullopt for (0:0).
    static std::optional<ProjPoint> canonical(std::int64_t a, std::int64_t b);
    std::uint64_t height() const;

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// Number of points of P^1(Q) with height <= B, computed as 4 * sum_{n<=B} phi(n)
/// from a totient sieve. B is capped at 5e8.
std::uint64_t count_p1(std::uint64_t B);

/// Points of height <= B on a rational curve whose degree-d height is the
/// d-th power of the P^1 height: count_p1(floor(B^(1/d))).
std::uint64_t count_degree_d(std::uint64_t B, unsigned d);

/// floor(B^(1/d)), exact.
std::uint64_t integer_root(std::uint64_t B, unsigned d);

}  // namespace kummer
