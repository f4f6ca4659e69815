#include "kummer/cone_decomp.hpp"

#include <algorithm>
#include <optional>

#include "kummer/errors.hpp"
#include "kummer/simplex.hpp"

namespace kummer {

namespace {

using Dense = std::vector<Rational>;

Rational cross(const GammaPoint& o, const GammaPoint& a, const GammaPoint& b) {
    return (a.g1 - o.g1) * (b.g2 - o.g2) - (a.g2 - o.g2) * (b.g1 - o.g1);
}

ConeDecomposition from_dense(const AmpleDivisorInput& input, const Dense& x) {
    ConeDecomposition d;
    for (int k = 0; k < kSubsetPairCount; ++k)
        if (x[k] > 0) d.a.emplace(SubsetPair::from_index(k), x[k]);
    auto [g1, g2] = gammas(d);
    d.c1 = input.d1 - g1;
    d.c2 = input.d2 - g2;
    return d;
}

// LP over the 225 coefficients with one equality row per cell. The sixteen
// singleton columns form an identity block, so the Singleton decomposition is
// a ready-made feasible basis.
class GammaLp {
public:
    explicit GammaLp(const AmpleDivisorInput& input) : lp_(build(input)) {
        for (int k = 0; k < kSubsetPairCount; ++k) {
            auto p = SubsetPair::from_index(k);
            card_s_.push_back(p.card_s());
            card_t_.push_back(p.card_t());
        }
    }

    struct Extreme {
        GammaPoint point;
        Dense x;
    };

    /// Vertex maximising w.(g1, g2), ties broken by maximising tie.(g1, g2).
    Extreme extreme(const GammaPoint& w, const GammaPoint& tie) {
        auto first = lp_.maximize(objective(w));
        auto second = lp_.maximize(objective(tie), first.optimal_face);
        return {point_of(second.x), std::move(second.x)};
    }

    GammaPoint point_of(const Dense& x) const {
        GammaPoint p{0, 0};
        for (int k = 0; k < kSubsetPairCount; ++k) {
            if (x[k] == 0) continue;
            p.g1 += card_s_[k] * x[k];
            p.g2 += card_t_[k] * x[k];
        }
        return p;
    }

private:
    static ExactSimplex build(const AmpleDivisorInput& input) {
        ExactSimplex::Matrix a(16, Dense(kSubsetPairCount));
        Dense b(16);
        std::vector<std::size_t> basis(16);
        for (int m = 1; m <= kGridSize; ++m)
            for (int n = 1; n <= kGridSize; ++n) {
                const int row = (m - 1) * kGridSize + (n - 1);
                b[row] = -input.e[m - 1][n - 1];
                for (int k = 0; k < kSubsetPairCount; ++k) {
                    auto p = SubsetPair::from_index(k);
                    if (p.in_s(m) && p.in_t(n)) a[row][k] = 1;
                }
                SubsetPair single{static_cast<std::uint8_t>(1U << (m - 1)),
                                  static_cast<std::uint8_t>(1U << (n - 1))};
                basis[row] = static_cast<std::size_t>(single.index());
            }
        return ExactSimplex(std::move(a), std::move(b), std::move(basis));
    }

    Dense objective(const GammaPoint& w) const {
        Dense c(kSubsetPairCount);
        for (int k = 0; k < kSubsetPairCount; ++k) c[k] = w.g1 * card_s_[k] + w.g2 * card_t_[k];
        return c;
    }

    ExactSimplex lp_;
    std::vector<int> card_s_;
    std::vector<int> card_t_;
};

}  // namespace

std::vector<std::pair<int, int>> AmpleDivisorInput::zero_cells() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= kGridSize; ++i)
        for (int j = 1; j <= kGridSize; ++j)
            if (e[i - 1][j - 1] == 0) out.emplace_back(i, j);
    return out;
}

void AmpleDivisorInput::require_in_cone() const {
    for (int i = 1; i <= kGridSize; ++i)
        for (int j = 1; j <= kGridSize; ++j)
            if (e[i - 1][j - 1] > 0)
                throw NotInCone("e[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                                to_string(e[i - 1][j - 1]) +
                                " > 0, but every cell equals minus a sum of non-negative coefficients");
}

std::string to_string(DecompositionStrategy s) {
    switch (s) {
        case DecompositionStrategy::Canonical: return "canonical";
        case DecompositionStrategy::Singleton: return "singleton";
        case DecompositionStrategy::OptimizeDenominator: return "optimize";
    }
    return "?";
}

std::optional<DecompositionStrategy> parse_strategy(std::string_view text) {
    if (text == "canonical") return DecompositionStrategy::Canonical;
    if (text == "singleton") return DecompositionStrategy::Singleton;
    if (text == "optimize" || text == "optimize-denominator") return DecompositionStrategy::OptimizeDenominator;
    return std::nullopt;
}

bool GammaPolygon::contains(const GammaPoint& p) const {
    const std::size_t n = vertices.size();
    if (n == 0) return false;
    if (n == 1) return vertices[0] == p;
    if (n == 2) {
        const auto& a = vertices[0];
        const auto& b = vertices[1];
        return cross(a, b, p) == 0 && std::min(a.g1, b.g1) <= p.g1 && p.g1 <= std::max(a.g1, b.g1) &&
               std::min(a.g2, b.g2) <= p.g2 && p.g2 <= std::max(a.g2, b.g2);
    }
    for (std::size_t k = 0; k < n; ++k)
        if (cross(vertices[k], vertices[(k + 1) % n], p) < 0) return false;
    return true;
}

std::pair<Rational, Rational> gammas(const ConeDecomposition& d) {
    Rational g1 = 0, g2 = 0;
    for (const auto& [p, v] : d.a) {
        g1 += p.card_s() * v;
        g2 += p.card_t() * v;
    }
    return {g1, g2};
}

DivisorClass reconstruct(const ConeDecomposition& d) {
    DivisorClass out(d.c1, d.c2, {});
    for (const auto& [p, v] : d.a) out += v * a_class(p);
    return out;
}

Rational delta(const Rational& d1, const Rational& d2, const Rational& g1, const Rational& g2) {
    return d1 * g2 + d2 * g1 - g1 * g2;
}

Rational delta(const ConeDecomposition& d) {
    auto [g1, g2] = gammas(d);
    return g1 * g2 + g2 * d.c1 + g1 * d.c2;
}

Rational cell_sum(const ConeDecomposition& d, int m, int n) {
    Rational s = 0;
    for (const auto& [p, v] : d.a)
        if (p.in_s(m) && p.in_t(n)) s += v;
    return s;
}

ConeDecomposition decompose(const AmpleDivisorInput& input, DecompositionStrategy strategy) {
    input.require_in_cone();

    if (strategy == DecompositionStrategy::OptimizeDenominator) return optimize_denominator(input);

    ConeDecomposition d;
    Rational full = 0;
    if (strategy == DecompositionStrategy::Canonical) {
        full = -input.e[0][0];
        for (const auto& row : input.e)
            for (const auto& v : row) full = std::min(full, Rational(-v));
        if (full > 0) d.a.emplace(SubsetPair{SubsetPair::kFull, SubsetPair::kFull}, full);
    }
    for (int i = 1; i <= kGridSize; ++i)
        for (int j = 1; j <= kGridSize; ++j) {
            Rational r = -input.e[i - 1][j - 1] - full;
            if (r > 0)
                d.a.emplace(SubsetPair{static_cast<std::uint8_t>(1U << (i - 1)),
                                       static_cast<std::uint8_t>(1U << (j - 1))},
                            std::move(r));
        }
    auto [g1, g2] = gammas(d);
    d.c1 = input.d1 - g1;
    d.c2 = input.d2 - g2;
    return d;
}

GammaPolygon gamma_polygon(const AmpleDivisorInput& input) {
    input.require_in_cone();
    GammaLp lp(input);

    struct Vertex {
        GammaPoint p;
        Dense x;
    };
    // Lexicographic extremes in the four axis directions, already in
    // counter-clockwise order.
    const GammaPoint dirs[4][2] = {
        {{1, 0}, {0, 1}}, {{0, 1}, {-1, 0}}, {{-1, 0}, {0, -1}}, {{0, -1}, {1, 0}}};
    std::vector<Vertex> ring;
    for (const auto& [w, tie] : dirs) {
        auto ex = lp.extreme(w, tie);
        if (!ring.empty() && (ring.back().p == ex.point || ring.front().p == ex.point)) continue;
        ring.push_back({ex.point, std::move(ex.x)});
    }

    // Refine each edge by probing its outward normal until no probe moves past it.
    if (ring.size() >= 2) {
        std::size_t k = 0;
        while (k < ring.size()) {
            const std::size_t next = (k + 1) % ring.size();
            const GammaPoint p = ring[k].p;
            const GammaPoint q = ring[next].p;
            const GammaPoint along{q.g1 - p.g1, q.g2 - p.g2};
            const GammaPoint normal{along.g2, -along.g1};
            auto ex = lp.extreme(normal, along);
            const Rational reach = normal.g1 * ex.point.g1 + normal.g2 * ex.point.g2;
            const Rational base = normal.g1 * p.g1 + normal.g2 * p.g2;
            if (reach > base) {
                ring.insert(ring.begin() + static_cast<std::ptrdiff_t>(k + 1), Vertex{ex.point, std::move(ex.x)});
            } else {
                ++k;
            }
        }
    }

    GammaPolygon poly;
    for (auto& v : ring) {
        poly.vertices.push_back(v.p);
        poly.certificates.push_back(std::move(v.x));
    }
    return poly;
}

ConeDecomposition optimize_denominator(const AmpleDivisorInput& input) {
    const GammaPolygon poly = gamma_polygon(input);
    const Rational& d1 = input.d1;
    const Rational& d2 = input.d2;

    std::optional<Rational> best;
    Dense best_x;
    auto consider = [&](const GammaPoint& p, const Dense& x) {
        Rational v = delta(d1, d2, p.g1, p.g2);
        if (!best || v > *best) {
            best = std::move(v);
            best_x = x;
        }
    };

    const std::size_t n = poly.vertices.size();
    for (std::size_t k = 0; k < n; ++k) consider(poly.vertices[k], poly.certificates[k]);

    // Along an edge p + t u the objective is quadratic in t with leading
    // coefficient -u1 u2; an interior maximum exists only when that is negative.
    for (std::size_t k = 0; n >= 2 && k < n; ++k) {
        const std::size_t next = (k + 1) % n;
        if (n == 2 && k == 1) break;
        const GammaPoint& p = poly.vertices[k];
        const GammaPoint& q = poly.vertices[next];
        const Rational u1 = q.g1 - p.g1;
        const Rational u2 = q.g2 - p.g2;
        const Rational curvature = u1 * u2;
        if (curvature <= 0) continue;
        const Rational slope = d1 * u2 + d2 * u1 - p.g1 * u2 - p.g2 * u1;
        const Rational t = slope / (2 * curvature);
        if (t <= 0 || t >= 1) continue;
        Dense x(kSubsetPairCount);
        for (int c = 0; c < kSubsetPairCount; ++c)
            x[c] = (1 - t) * poly.certificates[k][c] + t * poly.certificates[next][c];
        consider({p.g1 + t * u1, p.g2 + t * u2}, x);
    }
    return from_dense(input, best_x);
}

}  // namespace kummer
