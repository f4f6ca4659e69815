#include "kummer/strata.hpp"

#include <algorithm>
#include <stdexcept>

#include "kummer/errors.hpp"

namespace kummer {

namespace {

Rational exponent_denominator(const Rational& g1, const Rational& g2, const Rational& c1, const Rational& c2) {
    return g1 * g2 + g2 * c1 + g1 * c2;
}

void require_positive(const Rational& g1, const Rational& g2, const Rational& c1, const Rational& c2) {
    if (g1 + c1 <= 0 || g2 + c2 <= 0)
        throw NonPositiveFiberDegree("gamma1 + c1 = " + to_string(g1 + c1) + ", gamma2 + c2 = " +
                                     to_string(g2 + c2) + "; both must be positive");
    const Rational den = exponent_denominator(g1, g2, c1, c2);
    if (den <= 0)
        throw NonPositiveDenominator("gamma1*gamma2 + gamma2*c1 + gamma1*c2 = " + to_string(den) +
                                     " is not positive");
}

struct AlphaTerms {
    Rational mixed, fiber1, fiber2;
};

AlphaTerms alpha_terms(const Rational& g1, const Rational& g2, const Rational& c1, const Rational& c2) {
    require_positive(g1, g2, c1, c2);
    return {2 * (g1 + g2) / exponent_denominator(g1, g2, c1, c2), 2 / Rational(g1 + c1), 2 / Rational(g2 + c2)};
}

}  // namespace

std::string TheoremCase::name() const {
    switch (label) {
        case Label::I: return "I";
        case Label::II: return "II";
        case Label::III: return "III";
        case Label::IV: return "IV";
    }
    return "?";
}

Rational alpha(const Rational& g1, const Rational& g2, const Rational& c1, const Rational& c2) {
    auto t = alpha_terms(g1, g2, c1, c2);
    return std::max({t.mixed, t.fiber1, t.fiber2});
}

TheoremCase classify_case(const Rational& g1, const Rational& g2, const Rational& c1, const Rational& c2) {
    auto t = alpha_terms(g1, g2, c1, c2);
    const Rational a = std::max({t.mixed, t.fiber1, t.fiber2});
    using L = TheoremCase::Label;
    // Overlapping cases resolve to the lowest label; all of I-III share the
    // B^alpha log B shape.
    if (a == t.mixed && (c1 == g2 + c2 || c2 == g1 + c1)) return {L::I, true};
    if (a == t.fiber1 && c2 == g1 + c1) return {L::II, true};
    if (a == t.fiber2 && c1 == g2 + c2) return {L::III, true};
    return {L::IV, false};
}

MinDegree min_degree(const DivisorClass& d) {
    MinDegree out;
    bool first = true;
    for (const auto& c : distinguished_curves()) {
        Rational deg = degree(d, c);
        if (deg <= 0)
            throw NotAmpleLike("degree of " + c.name() + " is " + to_string(deg) + ", must be positive");
        if (first || deg < out.value) {
            out.value = deg;
            out.curves.clear();
            first = false;
        }
        if (deg == out.value) out.curves.push_back(c);
    }
    return out;
}

Rational closed_form_degree(const ConeDecomposition& d, const CurveLabel& label) {
    Rational s = 0;
    switch (label.kind) {
        case CurveLabel::Kind::E:
            for (const auto& [p, v] : d.a)
                if (p.in_s(label.i) && p.in_t(label.j)) s += v;
            return 2 * s;
        case CurveLabel::Kind::L:
            for (const auto& [p, v] : d.a)
                if (!p.in_s(label.i)) s += p.card_t() * v;
            return d.c2 + s;
        case CurveLabel::Kind::M:
            for (const auto& [p, v] : d.a)
                if (!p.in_t(label.j)) s += p.card_s() * v;
            return d.c1 + s;
        case CurveLabel::Kind::Fiber1:
        case CurveLabel::Kind::Fiber2: return degree(reconstruct(d), label);
    }
    return s;
}

Condition2 check_condition2(const Rational& min_deg, const Rational& g1, const Rational& g2, const Rational& c1,
                            const Rational& c2) {
    Rational margin = exponent_denominator(g1, g2, c1, c2) - min_deg * (g1 + g2);
    return {margin > 0, margin};
}

ErrorExponent error_exponent(const StrataReport& partial, const DivisorClass& d, int field_degree) {
    if (field_degree < 1) throw std::invalid_argument("field degree must be at least 1");
    if (!partial.condition2_ok) throw std::invalid_argument("error exponent needs the accumulation condition");
    const Rational& A = partial.min_degree_A;

    ErrorExponent out{partial.alpha, partial.theorem_case.log_factor};
    auto raise = [&out](const Rational& v, bool log) {
        if (v > out.q) {
            out.q = v;
            out.log_factor = log;
        } else if (v == out.q) {
            out.log_factor = out.log_factor || log;
        }
    };

    for (const auto& c : distinguished_curves()) {
        Rational deg = degree(d, c);
        if (deg <= 0) throw NotAmpleLike("degree of " + c.name() + " is " + to_string(deg));
        if (deg != A) raise(2 / deg, false);
    }
    if (field_degree == 1)
        raise(1 / A, true);
    else
        raise(2 / A - 1 / (field_degree * A), false);
    return out;
}

StrataReport first_layer_report(const AmpleDivisorInput& input, DecompositionStrategy strategy, int field_degree) {
    if (field_degree < 1) throw std::invalid_argument("field degree must be at least 1");
    input.require_in_cone();
    const DivisorClass D = input.as_class();

    StrataReport r;
    r.strategy = strategy;
    r.field_degree_N = field_degree;
    for (auto [i, j] : input.zero_cells())
        r.warnings.push_back("e[" + std::to_string(i) + "][" + std::to_string(j) + "] = 0, so D.E" +
                             std::to_string(i) + std::to_string(j) + " = 0");

    MinDegree md = min_degree(D);
    r.min_degree_A = md.value;
    r.minimal_curves = std::move(md.curves);

    r.decomposition = decompose(input, strategy);
    std::tie(r.gamma1, r.gamma2) = gammas(r.decomposition);
    r.c1 = r.decomposition.c1;
    r.c2 = r.decomposition.c2;
    r.denominator = exponent_denominator(r.gamma1, r.gamma2, r.c1, r.c2);
    try {
        r.alpha = alpha(r.gamma1, r.gamma2, r.c1, r.c2);
    } catch (const NonPositiveDenominator& e) {
        throw NonPositiveDenominator(std::string(e.what()) + " under strategy '" + to_string(strategy) +
                                     "'; another decomposition may succeed, retry with strategy 'optimize'");
    }
    r.theorem_case = classify_case(r.gamma1, r.gamma2, r.c1, r.c2);

    auto cond = check_condition2(r.min_degree_A, r.gamma1, r.gamma2, r.c1, r.c2);
    r.condition2_ok = cond.ok;
    r.condition2_margin = cond.margin;
    r.curve_exponent = 2 / r.min_degree_A;
    r.warnings.push_back("curve_exponent is 2/A, the growth exponent of points on one minimal curve; "
                         "a main term of the form B^(8/A) is not used");

    if (r.condition2_ok) {
        auto q = error_exponent(r, D, field_degree);
        r.error_exponent_q = q.q;
        r.error_log_factor = q.log_factor;
        if (!(r.curve_exponent > r.alpha) || !(q.q < r.curve_exponent))
            throw std::logic_error("the accumulation condition holds but 2/A > alpha > q ordering failed");
        r.first_layer_identified = true;
    } else {
        r.warnings.push_back("the accumulation condition A(g1+g2) < g1 g2 + g2 c1 + g1 c2 fails for this decomposition (margin " + to_string(r.condition2_margin) +
                             "); the first-layer criterion is inconclusive, retry with strategy 'optimize'");
    }
    return r;
}

}  // namespace kummer
