#pragma once

// Counting exponent, case split and first-layer criterion for heights
// attached to a decomposed divisor class.

#include <optional>
#include <string>
#include <vector>

#include "kummer/cone_decomp.hpp"

namespace kummer {

struct TheoremCase {
    enum class Label { I, II, III, IV };
    Label label = Label::IV;
    /// Bound carries an extra log B factor; true exactly for I-III.
    bool log_factor = false;

    std::string name() const;
    friend bool operator==(const TheoremCase&, const TheoremCase&) = default;
};

/// max{ 2(g1+g2)/(g1 g2 + g2 c1 + g1 c2), 2/(g1+c1), 2/(g2+c2) }.
/// Throws NonPositiveDenominator / NonPositiveFiberDegree.
Rational alpha(const Rational& g1, const Rational& g2, const Rational& c1, const Rational& c2);

TheoremCase classify_case(const Rational& g1, const Rational& g2, const Rational& c1, const Rational& c2);

struct MinDegree {
    Rational value;
    std::vector<CurveLabel> curves;
};

/// Minimum degree over the 24 distinguished curves and the curves attaining
/// it. Throws NotAmpleLike naming the first curve of degree <= 0.
MinDegree min_degree(const DivisorClass& d);

/// Degrees written directly in the decomposition coefficients:
///   deg E_mn = 2 sum_{S∋m,T∋n} a,  deg L_n = c2 + sum_{S∌n} |T| a,
///   deg M_n = c1 + sum_{T∌n} |S| a.
/// Fibre labels fall back to the pairing.
Rational closed_form_degree(const ConeDecomposition& d, const CurveLabel& label);

struct Condition2 {
    bool ok = false;
    /// (g1 g2 + g2 c1 + g1 c2) - A (g1 + g2); ok iff positive.
    Rational margin;
};

Condition2 check_condition2(const Rational& min_deg, const Rational& g1, const Rational& g2, const Rational& c1,
                            const Rational& c2);

struct ErrorExponent {
    Rational q;
    /// The ruling term carries a log factor (the Q-rational curve term, or
    /// alpha from a logarithmic case).
    bool log_factor = false;
};

struct StrataReport {
    DecompositionStrategy strategy = DecompositionStrategy::Canonical;
    ConeDecomposition decomposition;
    Rational gamma1, gamma2, c1, c2;
    Rational denominator;
    Rational alpha;
    TheoremCase theorem_case;
    Rational min_degree_A;
    std::vector<CurveLabel> minimal_curves;
    bool condition2_ok = false;
    Rational condition2_margin;
    Rational curve_exponent;
    /// Present only when condition2_ok.
    std::optional<Rational> error_exponent_q;
    bool error_log_factor = false;
    /// Minimal curves are certified to form the first layer.
    bool first_layer_identified = false;
    int field_degree_N = 1;
    std::vector<std::string> warnings;

    friend bool operator==(const StrataReport&, const StrataReport&) = default;
};

/// q = max{ alpha, 2/deg C for non-minimal C, rational-curve error term },
/// the last being 1/A over Q (N = 1, with a log) and 2/A - 1/(N A) otherwise.
/// Requires condition2_ok; throws std::invalid_argument if it fails or N < 1.
ErrorExponent error_exponent(const StrataReport& partial, const DivisorClass& d, int field_degree);

/// Full pipeline. Cone membership and curve degrees are checked before the
/// decomposition, so NotAmpleLike does not depend on the strategy.
StrataReport first_layer_report(const AmpleDivisorInput& input, DecompositionStrategy strategy,
                                int field_degree = 1);

}  // namespace kummer
