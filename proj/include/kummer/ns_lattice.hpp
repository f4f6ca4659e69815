#pragma once

// Rank-18 sublattice of the Picard group of a product Kummer surface,
// spanned by the two fibre classes F1, F2 and the sixteen exceptional
// curves E_ij. Coordinates are exact rationals in the fixed basis
// F1, F2, E11, E12, ..., E44 (row-major in the E block).

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kummer/rational.hpp"

namespace kummer {

inline constexpr int kGridSize = 4;
inline constexpr int kBasisSize = 2 + kGridSize * kGridSize;

using CellGrid = std::array<std::array<Rational, kGridSize>, kGridSize>;

class DivisorClass {
public:
    DivisorClass() = default;
    DivisorClass(Rational f1, Rational f2, CellGrid e)
        : f1_(std::move(f1)), f2_(std::move(f2)), e_(std::move(e)) {}

    static DivisorClass fiber1() { return {1, 0, {}}; }
    static DivisorClass fiber2() { return {0, 1, {}}; }
    /// Exceptional curve E_ij, 1-based indices.
    static DivisorClass exceptional(int i, int j);

    /// Inverse of `coordinates()`; expects exactly 18 entries.
    static DivisorClass from_coordinates(std::span<const Rational> coords);

    const Rational& f1() const { return f1_; }
    const Rational& f2() const { return f2_; }
    /// Coefficient of E_ij, 1-based indices.
    const Rational& e(int i, int j) const { return e_[i - 1][j - 1]; }
    const CellGrid& cells() const { return e_; }

    std::array<Rational, kBasisSize> coordinates() const;

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Rational& k);

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& k, DivisorClass a) { return a *= k; }
    friend DivisorClass operator*(DivisorClass a, const Rational& k) { return a *= k; }
    friend bool operator==(const DivisorClass& a, const DivisorClass& b);

private:
    Rational f1_;
    Rational f2_;
    CellGrid e_{};
};

/// One of the 24 smooth rational curves E_ij, L_i, M_j, or a fibre class.
struct CurveLabel {
    enum class Kind : std::uint8_t { E, L, M, Fiber1, Fiber2 };

    Kind kind = Kind::E;
    int i = 1;
    int j = 1;

    static CurveLabel E(int i, int j) { return {Kind::E, i, j}; }
    static CurveLabel L(int i) { return {Kind::L, i, 0}; }
    static CurveLabel M(int j) { return {Kind::M, 0, j}; }
    static CurveLabel F1() { return {Kind::Fiber1, 0, 0}; }
    static CurveLabel F2() { return {Kind::Fiber2, 0, 0}; }

    bool valid() const;
    /// "E23", "L1", "M4", "F1", "F2".
    std::string name() const;
    static std::optional<CurveLabel> parse(std::string_view text);

    friend bool operator==(const CurveLabel&, const CurveLabel&) = default;
};

/// The 24 curves of kinds E, L, M, in the order E11..E44, L1..L4, M1..M4.
const std::vector<CurveLabel>& distinguished_curves();

/// Pair of non-empty subsets (S, T) of {1,2,3,4}, each a 4-bit mask; bit
/// k-1 set means k is a member.
struct SubsetPair {
    std::uint8_t s = 0;
    std::uint8_t t = 0;

    static constexpr std::uint8_t kFull = 0b1111;

    bool valid() const { return s >= 1 && s <= 15 && t >= 1 && t <= 15; }
    int card_s() const;
    int card_t() const;
    bool in_s(int i) const { return (s >> (i - 1)) & 1U; }
    bool in_t(int j) const { return (t >> (j - 1)) & 1U; }
    /// Dense index in [0, 225), ordered by S mask then T mask.
    int index() const { return (s - 1) * 15 + (t - 1); }
    static SubsetPair from_index(int idx) {
        return {static_cast<std::uint8_t>(idx / 15 + 1), static_cast<std::uint8_t>(idx % 15 + 1)};
    }

    friend auto operator<=>(const SubsetPair&, const SubsetPair&) = default;
};

inline constexpr int kSubsetPairCount = 225;

DivisorClass curve_class(const CurveLabel& label);

/// A_{S,T} = |S| F1 + |T| F2 - sum_{i in S, j in T} E_ij.
DivisorClass a_class(const SubsetPair& p);

/// Intersection pairing. Gram form: F1.F2 = 2, F1^2 = F2^2 = 0,
/// F.E = 0, E_ij.E_kl = -2 delta.
Rational pair(const DivisorClass& a, const DivisorClass& b);

/// Degree of the curve with respect to d, i.e. d . C.
Rational degree(const DivisorClass& d, const CurveLabel& label);

/// Rank over Q of the coordinate matrix, by fraction-free elimination.
int rank_of_span(std::span<const DivisorClass> classes);

}  // namespace kummer
