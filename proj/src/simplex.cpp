#include "kummer/simplex.hpp"

#include <optional>

namespace kummer {

ExactSimplex::ExactSimplex(Matrix a, std::vector<Rational> b, std::vector<std::size_t> basis)
    : cols_(a.empty() ? 0 : a.front().size()), tab_(std::move(a)), rhs_(std::move(b)), basis_(std::move(basis)) {
    if (tab_.size() != rhs_.size() || basis_.size() != rhs_.size())
        throw std::invalid_argument("simplex: row count mismatch");
    for (const auto& row : tab_)
        if (row.size() != cols_) throw std::invalid_argument("simplex: ragged matrix");

    // Bring the supplied basis into canonical (identity) form.
    for (std::size_t r = 0; r < rows(); ++r) {
        const std::size_t col = basis_[r];
        if (col >= cols_) throw std::invalid_argument("simplex: basis column out of range");
        std::optional<std::size_t> src;
        for (std::size_t k = r; k < rows(); ++k)
            if (tab_[k][col] != 0) {
                src = k;
                break;
            }
        if (!src) throw std::invalid_argument("simplex: basis is singular");
        if (*src != r) {
            std::swap(tab_[*src], tab_[r]);
            std::swap(rhs_[*src], rhs_[r]);
        }
        pivot(r, col);
    }
    pivots_ = 0;
    for (const auto& v : rhs_)
        if (v < 0) throw std::invalid_argument("simplex: basis is not primal feasible");
}

void ExactSimplex::pivot(std::size_t row, std::size_t col) {
    const Rational p = tab_[row][col];
    if (p != 1) {
        for (auto& v : tab_[row]) v /= p;
        rhs_[row] /= p;
    }
    for (std::size_t r = 0; r < rows(); ++r) {
        if (r == row || tab_[r][col] == 0) continue;
        const Rational f = tab_[r][col];
        for (std::size_t k = 0; k < cols_; ++k)
            if (tab_[row][k] != 0) tab_[r][k] -= f * tab_[row][k];
        rhs_[r] -= f * rhs_[row];
    }
    basis_[row] = col;
    ++pivots_;
}

std::vector<Rational> ExactSimplex::solution() const {
    std::vector<Rational> x(cols_);
    for (std::size_t r = 0; r < rows(); ++r) x[basis_[r]] = rhs_[r];
    return x;
}

ExactSimplex::Result ExactSimplex::maximize(const std::vector<Rational>& c, const std::vector<bool>& admissible) {
    if (c.size() != cols_) throw std::invalid_argument("simplex: objective length mismatch");
    auto allowed = [&](std::size_t k) { return admissible.empty() || admissible[k]; };

    // reduced_j = c_j - c_B . column_j, kept current across pivots
    std::vector<Rational> reduced(cols_);
    for (std::size_t k = 0; k < cols_; ++k) {
        Rational v = c[k];
        for (std::size_t r = 0; r < rows(); ++r)
            if (tab_[r][k] != 0) v -= c[basis_[r]] * tab_[r][k];
        reduced[k] = std::move(v);
    }

    for (;;) {
        // Bland: lowest-index improving column
        std::optional<std::size_t> enter;
        for (std::size_t k = 0; k < cols_; ++k)
            if (allowed(k) && reduced[k] > 0) {
                enter = k;
                break;
            }
        if (!enter) break;

        // Ratio test; ties go to the lowest basic column index.
        std::optional<std::size_t> leave;
        Rational best;
        for (std::size_t r = 0; r < rows(); ++r) {
            const Rational& a = tab_[r][*enter];
            if (a <= 0) continue;
            Rational ratio = rhs_[r] / a;
            if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
                leave = r;
                best = std::move(ratio);
            }
        }
        if (!leave) throw UnboundedProblem();
        pivot(*leave, *enter);

        const Rational f = reduced[*enter];
        const auto& prow = tab_[*leave];
        for (std::size_t k = 0; k < cols_; ++k)
            if (prow[k] != 0) reduced[k] -= f * prow[k];
    }

    Result res;
    res.x = solution();
    res.value = 0;
    for (std::size_t k = 0; k < cols_; ++k)
        if (res.x[k] != 0) res.value += c[k] * res.x[k];
    res.optimal_face.resize(cols_);
    for (std::size_t k = 0; k < cols_; ++k) res.optimal_face[k] = allowed(k) && reduced[k] == 0;
    return res;
}

}  // namespace kummer
