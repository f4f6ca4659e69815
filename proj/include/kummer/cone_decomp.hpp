#pragma once

// Decompositions D = sum a_{S,T} A_{S,T} + c1 F1 + c2 F2 with a_{S,T} >= 0.
//
// Writing D = d1 F1 + d2 F2 + sum e_ij E_ij, the E-coordinates force
//     sum_{S contains m, T contains n} a_{S,T} = -e_mn    for every cell (m, n),
// and the F-coordinates give gamma_k + c_k = d_k with
//     gamma1 = sum |S| a_{S,T},   gamma2 = sum |T| a_{S,T}.
// So the a-vector ranges over a polytope (225 unknowns, 16 equations) and the
// c's are determined by the gammas.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kummer/ns_lattice.hpp"

namespace kummer {

struct AmpleDivisorInput {
    Rational d1;
    Rational d2;
    CellGrid e{};

    DivisorClass as_class() const { return {d1, d2, e}; }
    /// Cells (1-based) with e_ij = 0; these keep cone membership but D.E_ij = 0.
    std::vector<std::pair<int, int>> zero_cells() const;
    /// Throws NotInCone when some e_ij > 0.
    void require_in_cone() const;
};

struct ConeDecomposition {
    /// Only strictly positive coefficients are stored.
    std::map<SubsetPair, Rational> a;
    Rational c1;
    Rational c2;

    friend bool operator==(const ConeDecomposition&, const ConeDecomposition&) = default;
};

enum class DecompositionStrategy { Canonical, Singleton, OptimizeDenominator };

std::string to_string(DecompositionStrategy s);
/// Accepts "canonical", "singleton", "optimize" / "optimize-denominator".
std::optional<DecompositionStrategy> parse_strategy(std::string_view text);

struct GammaPoint {
    Rational g1;
    Rational g2;
    friend bool operator==(const GammaPoint&, const GammaPoint&) = default;
};

/// Exact convex polygon of achievable (gamma1, gamma2), counter-clockwise.
/// Each vertex carries a dense 225-entry coefficient vector realising it.
struct GammaPolygon {
    std::vector<GammaPoint> vertices;
    std::vector<std::vector<Rational>> certificates;

    bool contains(const GammaPoint& p) const;
};

ConeDecomposition decompose(const AmpleDivisorInput& input, DecompositionStrategy strategy);

std::pair<Rational, Rational> gammas(const ConeDecomposition& d);

DivisorClass reconstruct(const ConeDecomposition& d);

/// The denominator d1 g2 + d2 g1 - g1 g2, i.e. g1 g2 + g2 c1 + g1 c2 once
/// c_k = d_k - g_k.
Rational delta(const Rational& d1, const Rational& d2, const Rational& g1, const Rational& g2);
Rational delta(const ConeDecomposition& d);

GammaPolygon gamma_polygon(const AmpleDivisorInput& input);

ConeDecomposition optimize_denominator(const AmpleDivisorInput& input);

/// sum over a_{S,T} with S containing m and T containing n (1-based cell).
Rational cell_sum(const ConeDecomposition& d, int m, int n);

}  // namespace kummer
