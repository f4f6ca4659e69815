#pragma once

// Exact primal simplex over the rationals for problems of the form
//     maximize c.x  subject to  A x = b, x >= 0,
// started from a caller-supplied feasible basis. Pivoting uses Bland's rule,
// so cycling cannot occur on degenerate problems.
//
// The tableau is retained between solves: each call warm-starts from the
// basis the previous call ended on. Restricting the admissible columns lets a
// second objective be optimised over the optimal face of a first one
// (lexicographic optimisation without adding rows).

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "kummer/rational.hpp"

namespace kummer {

class UnboundedProblem : public std::runtime_error {
public:
    UnboundedProblem() : std::runtime_error("linear program is unbounded") {}
};

class ExactSimplex {
public:
    using Matrix = std::vector<std::vector<Rational>>;

    struct Result {
        Rational value;
        std::vector<Rational> x;
        /// Columns whose reduced cost is zero at the optimum; every optimal
        /// solution is supported on these.
        std::vector<bool> optimal_face;
    };

    /// `basis` lists one column per row; the corresponding columns of A must
    /// be non-singular and B^{-1} b must be non-negative.
    ExactSimplex(Matrix a, std::vector<Rational> b, std::vector<std::size_t> basis);

    std::size_t rows() const { return rhs_.size(); }
    std::size_t cols() const { return cols_; }

    /// Maximises c.x over columns marked admissible (others are held at 0).
    /// An empty mask admits every column.
    Result maximize(const std::vector<Rational>& c, const std::vector<bool>& admissible = {});

    std::size_t pivot_count() const { return pivots_; }

private:
    void pivot(std::size_t row, std::size_t col);
    std::vector<Rational> solution() const;

    std::size_t cols_;
    Matrix tab_;
    std::vector<Rational> rhs_;
    std::vector<std::size_t> basis_;
    std::size_t pivots_ = 0;
};

}  // namespace kummer
