#pragma once

#include "vassiliev/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace vassiliev {

/// Dense rational matrix, optionally augmented with a right-hand-side column.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols, bool augmented = true);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool augmented() const { return augmented_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Rational& rhs(std::size_t r);
    const Rational& rhs(std::size_t r) const;

    /// Appends a row; `coefficients.size()` must equal cols().
    void append_row(const std::vector<Rational>& coefficients, const Rational& rhs = Rational(0));

    std::string str() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    bool augmented_;
    std::vector<Rational> entries_;
    std::vector<Rational> rhs_;
};

struct SolveResult {
    /// Present only for a consistent system of full column rank.
    std::optional<std::vector<Rational>> solution;
    std::size_t rank = 0;
    bool consistent = false;
};

/// Gauss-Jordan elimination over the rationals. The pivot in each column is
/// the first non-zero entry scanning top to bottom, so the result is
/// deterministic. A non-augmented system is solved against a zero rhs.
SolveResult solve_exact(const ExactMatrix& system);

}  // namespace vassiliev
