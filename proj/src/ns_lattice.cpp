#include "kummer/ns_lattice.hpp"

#include <bit>
#include <stdexcept>

namespace kummer {

DivisorClass DivisorClass::exceptional(int i, int j) {
    DivisorClass d;
    d.e_[i - 1][j - 1] = 1;
    return d;
}

DivisorClass DivisorClass::from_coordinates(std::span<const Rational> coords) {
    if (coords.size() != kBasisSize)
        throw std::invalid_argument("divisor class needs 18 coordinates, got " +
                                    std::to_string(coords.size()));
    DivisorClass d;
    d.f1_ = coords[0];
    d.f2_ = coords[1];
    for (int i = 0; i < kGridSize; ++i)
        for (int j = 0; j < kGridSize; ++j) d.e_[i][j] = coords[2 + i * kGridSize + j];
    return d;
}

std::array<Rational, kBasisSize> DivisorClass::coordinates() const {
    std::array<Rational, kBasisSize> out;
    out[0] = f1_;
    out[1] = f2_;
    for (int i = 0; i < kGridSize; ++i)
        for (int j = 0; j < kGridSize; ++j) out[2 + i * kGridSize + j] = e_[i][j];
    return out;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    f1_ += o.f1_;
    f2_ += o.f2_;
    for (int i = 0; i < kGridSize; ++i)
        for (int j = 0; j < kGridSize; ++j) e_[i][j] += o.e_[i][j];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    f1_ -= o.f1_;
    f2_ -= o.f2_;
    for (int i = 0; i < kGridSize; ++i)
        for (int j = 0; j < kGridSize; ++j) e_[i][j] -= o.e_[i][j];
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& k) {
    f1_ *= k;
    f2_ *= k;
    for (auto& row : e_)
        for (auto& v : row) v *= k;
    return *this;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
    if (a.f1_ != b.f1_ || a.f2_ != b.f2_) return false;
    for (int i = 0; i < kGridSize; ++i)
        for (int j = 0; j < kGridSize; ++j)
            if (a.e_[i][j] != b.e_[i][j]) return false;
    return true;
}

bool CurveLabel::valid() const {
    auto in_range = [](int k) { return k >= 1 && k <= kGridSize; };
    switch (kind) {
        case Kind::E: return in_range(i) && in_range(j);
        case Kind::L: return in_range(i);
        case Kind::M: return in_range(j);
        case Kind::Fiber1:
        case Kind::Fiber2: return true;
    }
    return false;
}

std::string CurveLabel::name() const {
    switch (kind) {
        case Kind::E: return "E" + std::to_string(i) + std::to_string(j);
        case Kind::L: return "L" + std::to_string(i);
        case Kind::M: return "M" + std::to_string(j);
        case Kind::Fiber1: return "F1";
        case Kind::Fiber2: return "F2";
    }
    return "?";
}

std::optional<CurveLabel> CurveLabel::parse(std::string_view text) {
    auto digit = [](char c) -> int { return (c >= '1' && c <= '4') ? c - '0' : -1; };
    if (text == "F1") return F1();
    if (text == "F2") return F2();
    if (text.size() == 3 && text[0] == 'E' && digit(text[1]) > 0 && digit(text[2]) > 0)
        return E(digit(text[1]), digit(text[2]));
    if (text.size() == 2 && digit(text[1]) > 0) {
        if (text[0] == 'L') return L(digit(text[1]));
        if (text[0] == 'M') return M(digit(text[1]));
    }
    return std::nullopt;
}

const std::vector<CurveLabel>& distinguished_curves() {
    static const std::vector<CurveLabel> curves = [] {
        std::vector<CurveLabel> out;
        for (int i = 1; i <= kGridSize; ++i)
            for (int j = 1; j <= kGridSize; ++j) out.push_back(CurveLabel::E(i, j));
        for (int i = 1; i <= kGridSize; ++i) out.push_back(CurveLabel::L(i));
        for (int j = 1; j <= kGridSize; ++j) out.push_back(CurveLabel::M(j));
        return out;
    }();
    return curves;
}

int SubsetPair::card_s() const { return std::popcount(static_cast<unsigned>(s)); }
int SubsetPair::card_t() const { return std::popcount(static_cast<unsigned>(t)); }

DivisorClass curve_class(const CurveLabel& label) {
    if (!label.valid()) throw std::invalid_argument("invalid curve label");
    const Rational half(1, 2);
    switch (label.kind) {
        case CurveLabel::Kind::E: return DivisorClass::exceptional(label.i, label.j);
        case CurveLabel::Kind::Fiber1: return DivisorClass::fiber1();
        case CurveLabel::Kind::Fiber2: return DivisorClass::fiber2();
        case CurveLabel::Kind::L: {
            // F1 = sum_j E_ij + 2 L_i
            DivisorClass d = DivisorClass::fiber1();
            for (int j = 1; j <= kGridSize; ++j) d -= DivisorClass::exceptional(label.i, j);
            return half * d;
        }
        case CurveLabel::Kind::M: {
            // F2 = sum_i E_ij + 2 M_j
            DivisorClass d = DivisorClass::fiber2();
            for (int i = 1; i <= kGridSize; ++i) d -= DivisorClass::exceptional(i, label.j);
            return half * d;
        }
    }
    return {};
}

DivisorClass a_class(const SubsetPair& p) {
    if (!p.valid()) throw std::invalid_argument("subset pair needs non-empty S and T");
    CellGrid e{};
    for (int i = 1; i <= kGridSize; ++i)
        for (int j = 1; j <= kGridSize; ++j)
            if (p.in_s(i) && p.in_t(j)) e[i - 1][j - 1] = -1;
    return {p.card_s(), p.card_t(), e};
}

Rational pair(const DivisorClass& a, const DivisorClass& b) {
    Rational acc = 2 * (a.f1() * b.f2() + a.f2() * b.f1());
    for (int i = 1; i <= kGridSize; ++i)
        for (int j = 1; j <= kGridSize; ++j) acc -= 2 * a.e(i, j) * b.e(i, j);
    return acc;
}

Rational degree(const DivisorClass& d, const CurveLabel& label) { return pair(d, curve_class(label)); }

int rank_of_span(std::span<const DivisorClass> classes) {
    // Clear denominators row by row, then Bareiss elimination over Z.
    std::vector<std::array<BigInt, kBasisSize>> rows;
    rows.reserve(classes.size());
    for (const auto& c : classes) {
        auto coords = c.coordinates();
        BigInt den = 1;
        for (const auto& q : coords) den = lcm(den, BigInt(q.get_den()));
        std::array<BigInt, kBasisSize> row;
        for (int k = 0; k < kBasisSize; ++k) row[k] = coords[k].get_num() * (den / coords[k].get_den());
        rows.push_back(std::move(row));
    }

    const int m = static_cast<int>(rows.size());
    int rank = 0;
    BigInt prev_pivot = 1;
    for (int col = 0; col < kBasisSize && rank < m; ++col) {
        int pivot = -1;
        for (int r = rank; r < m; ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const BigInt& p = rows[rank][col];
        for (int r = rank + 1; r < m; ++r) {
            for (int k = col + 1; k < kBasisSize; ++k) {
                BigInt v = p * rows[r][k] - rows[r][col] * rows[rank][k];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
                rows[r][k] = std::move(v);
            }
            rows[r][col] = 0;
        }
        prev_pivot = p;
        ++rank;
    }
    return rank;
}

}  // namespace kummer
