#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "kummer/projective_counts.hpp"
#include "kummer/strata.hpp"
#include "kummer/growth_fit.hpp"

namespace kummer::cli {

namespace {

struct Reporter {
    std::ostream& out;
    int failures = 0;

    void check(const std::string& name, bool ok, const std::string& detail = {}) {
        out << name;
        if (!detail.empty()) out << " " << detail;
        out << " ... " << (ok ? "ok" : "FAILED") << "\n";
        if (!ok) ++failures;
    }
};

Rational random_rational(std::mt19937_64& rng, long lo_num, long hi_num, long max_den) {
    std::uniform_int_distribution<long> den_dist(1, max_den);
    const long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(lo_num * den, hi_num * den);
    return rational(num_dist(rng), den);
}

void lattice_suite(Reporter& r) {
    std::vector<DivisorClass> gens;
    for (int k = 0; k < kSubsetPairCount; ++k) gens.push_back(a_class(SubsetPair::from_index(k)));
    gens.push_back(DivisorClass::fiber1());
    gens.push_back(DivisorClass::fiber2());
    const int rank = rank_of_span(gens);
    r.check("rank(A_{S,T} ∪ {F1,F2}) = " + std::to_string(rank), rank == 18);

    bool self = true;
    for (const auto& c : distinguished_curves()) self = self && pair(curve_class(c), curve_class(c)) == -2;
    r.check("C.C = -2 for the 24 curves E_ij, L_i, M_j", self);

    const auto F1 = DivisorClass::fiber1();
    const auto F2 = DivisorClass::fiber2();
    bool table = true;
    for (int i = 1; i <= 4; ++i) {
        const auto Li = curve_class(CurveLabel::L(i));
        const auto Mi = curve_class(CurveLabel::M(i));
        table = table && pair(F1, Li) == 0 && pair(F2, Mi) == 0 && pair(F1, Mi) == 1 && pair(F2, Li) == 1;
        for (int j = 1; j <= 4; ++j) {
            const auto Lj = curve_class(CurveLabel::L(j));
            const auto Mj = curve_class(CurveLabel::M(j));
            table = table && pair(Li, Mj) == 0;
            if (i != j) table = table && pair(Li, Lj) == 0 && pair(Mi, Mj) == 0;
        }
    }
    r.check("F1.L = F2.M = 0, F1.M = F2.L = 1, L.M = 0, L_i.L_j = M_i.M_j = 0", table);

    bool fibres = true;
    for (int i = 1; i <= 4; ++i) {
        DivisorClass row = 2 * curve_class(CurveLabel::L(i));
        DivisorClass col = 2 * curve_class(CurveLabel::M(i));
        for (int j = 1; j <= 4; ++j) {
            row += curve_class(CurveLabel::E(i, j));
            col += curve_class(CurveLabel::E(j, i));
        }
        fibres = fibres && row == F1 && col == F2;
    }
    r.check("sum_j E_ij + 2 L_i = F1 and sum_i E_ij + 2 M_j = F2", fibres);
}

void decomposition_suite(Reporter& r, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    const int trials = 20;
    int round_trip = 0, signs = 0, cells = 0, dominance = 0, degrees = 0;
    for (int t = 0; t < trials; ++t) {
        AmpleDivisorInput in;
        in.d1 = random_rational(rng, 0, 20, 3);
        in.d2 = random_rational(rng, 0, 20, 3);
        for (auto& row : in.e)
            for (auto& v : row) {
                do v = random_rational(rng, -5, 0, 4);
                while (v >= 0);
            }
        bool rt = true, sg = true, cl = true, dg = true;
        Rational best_other;
        Rational opt;
        for (auto s : {DecompositionStrategy::Canonical, DecompositionStrategy::Singleton,
                       DecompositionStrategy::OptimizeDenominator}) {
            auto d = decompose(in, s);
            rt = rt && reconstruct(d) == in.as_class();
            for (const auto& [p, v] : d.a) sg = sg && v >= 0;
            for (int m = 1; m <= 4; ++m)
                for (int n = 1; n <= 4; ++n) cl = cl && cell_sum(d, m, n) == -in.e[m - 1][n - 1];
            for (const auto& c : distinguished_curves())
                dg = dg && closed_form_degree(d, c) == degree(in.as_class(), c);
            if (s == DecompositionStrategy::OptimizeDenominator)
                opt = delta(d);
            else if (s == DecompositionStrategy::Canonical)
                best_other = delta(d);
            else
                best_other = std::max(best_other, delta(d));
        }
        round_trip += rt;
        signs += sg;
        cells += cl;
        degrees += dg;
        dominance += opt >= best_other;
    }
    auto frac = [&](int k) { return "(" + std::to_string(k) + "/" + std::to_string(trials) + ")"; };
    r.check("reconstruct(decompose(D)) = D for all strategies", round_trip == trials, frac(round_trip));
    r.check("a_{S,T} >= 0", signs == trials, frac(signs));
    r.check("cell identity sum_{S∋m,T∋n} a = -e_mn", cells == trials, frac(cells));
    r.check("closed-form curve degrees = pairing degrees", degrees == trials, frac(degrees));
    r.check("optimizer denominator dominates canonical and singleton", dominance == trials, frac(dominance));
}

void region_suite(Reporter& r) {
    const std::vector<RegionParams> grid = {
        {4, 4, 1, 1, 1},  {4, 4, 4, 0, 1}, {4, 4, 1, 0, 1}, {4, 4, 5, -1, 1},
        {2, 4, 1, 3, 1},  {4, 4, 3, -1, 1}, {rational(3, 2), rational(5, 2), rational(1, 2), rational(1, 3), 1},
    };
    bool oracle = true, symmetric = true, monotone = true;
    for (auto p : grid) {
        std::uint64_t prev = 0;
        for (std::uint64_t B = 1; B <= 30; ++B) {
            p.B = B;
            const RegionPredicate pred(p);
            std::uint64_t naive = 0;
            const std::uint64_t box = B * B;
            for (std::uint64_t x = 1; x <= box; ++x)
                for (std::uint64_t y = 1; y <= box; ++y) {
                    if (!pred.second(x, y)) break;
                    naive += pred.first(x, y);
                }
            const std::uint64_t fast = count_region(p);
            oracle = oracle && fast == naive;
            monotone = monotone && fast >= prev;
            prev = fast;
            RegionParams swapped{p.g2, p.g1, p.c2, p.c1, B};
            symmetric = symmetric && count_region(swapped) == fast;
        }
    }
    r.check("count_region = naive double loop (7 parameter sets, B <= 30)", oracle);
    r.check("count_region non-decreasing in B", monotone);
    r.check("count_region invariant under (g1,c1,x) <-> (g2,c2,y)", symmetric);

    RegionParams p{4, 4, 1, 1, 10};
    r.check("count_region(g=(4,4), c=(1,1), B=10) = 4", count_region(p) == 4);
}

void schanuel_suite(Reporter& r) {
    r.check("count_p1(1) = 4, count_p1(2) = 8", count_p1(1) == 4 && count_p1(2) == 8);
    std::vector<CountSample> samples;
    for (std::uint64_t B : {10, 31, 100, 316, 1000, 3162, 10000}) samples.push_back({B, count_p1(B)});
    auto fit = fit_exponent(samples, 1.0);
    std::ostringstream s;
    s << "(slope " << fit.slope << ")";
    r.check("P^1 growth exponent 2 +- 0.05", std::abs(fit.slope - 2.0) <= 0.05, s.str());
    const double density = static_cast<double>(count_p1(10000)) / 1e8;
    const double limit = 12 / (std::numbers::pi * std::numbers::pi);
    std::ostringstream d;
    d << "(" << density << " vs " << limit << ")";
    r.check("count_p1(10^4)/10^8 within 2% of 12/pi^2", std::abs(density / limit - 1) <= 0.02, d.str());
}

}  // namespace

int run_verify(const std::string& suite, unsigned long long seed, std::ostream& out, std::ostream& err) {
    const bool all = suite == "all";
    if (!all && suite != "lattice" && suite != "decomposition" && suite != "region" && suite != "schanuel") {
        err << "error: unknown suite '" << suite << "'\n"
            << "usage: kummer verify lattice|decomposition|region|schanuel|all [--seed N]\n";
        return kUsage;
    }
    Reporter r{out};
    if (all || suite == "lattice") lattice_suite(r);
    if (all || suite == "decomposition") decomposition_suite(r, seed);
    if (all || suite == "region") region_suite(r);
    if (all || suite == "schanuel") schanuel_suite(r);
    out << (r.failures == 0 ? "all checks passed" : std::to_string(r.failures) + " check(s) failed") << "\n";
    return r.failures == 0 ? kOk : kVerifyFailed;
}

}  // namespace kummer::cli
