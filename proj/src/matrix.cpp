#include "vassiliev/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace vassiliev {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, bool augmented)
    : rows_(rows), cols_(cols), augmented_(augmented), entries_(rows * cols), rhs_(rows)
{
}

Rational& ExactMatrix::rhs(std::size_t r)
{
    if (!augmented_)
        throw std::logic_error("matrix has no right-hand side");
    return rhs_.at(r);
}

const Rational& ExactMatrix::rhs(std::size_t r) const
{
    if (!augmented_)
        throw std::logic_error("matrix has no right-hand side");
    return rhs_.at(r);
}

void ExactMatrix::append_row(const std::vector<Rational>& coefficients, const Rational& rhs)
{
    if (coefficients.size() != cols_)
        throw std::invalid_argument("row width does not match matrix");
    entries_.insert(entries_.end(), coefficients.begin(), coefficients.end());
    rhs_.push_back(rhs);
    ++rows_;
}

std::string ExactMatrix::str() const
{
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? " " : "") << (*this)(r, c);
        if (augmented_)
            os << " | " << rhs_[r];
        os << "]\n";
    }
    return os.str();
}

SolveResult solve_exact(const ExactMatrix& system)
{
    if (system.rows() == 0)
        throw std::invalid_argument("solve_exact needs at least one row");

    const std::size_t rows = system.rows();
    const std::size_t cols = system.cols();
    const std::size_t width = cols + 1;
    std::vector<Rational> m(rows * width);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c)
            m[r * width + c] = system(r, c);
        if (system.augmented())
            m[r * width + cols] = system.rhs(r);
    }
    auto at = [&](std::size_t r, std::size_t c) -> Rational& { return m[r * width + c]; };

    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && at(p, c).is_zero())
            ++p;
        if (p == rows)
            continue;
        if (p != rank) {
            for (std::size_t k = 0; k < width; ++k)
                std::swap(at(p, k), at(rank, k));
        }
        const Rational inv = Rational(1) / at(rank, c);
        for (std::size_t k = c; k < width; ++k)
            at(rank, k) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || at(r, c).is_zero())
                continue;
            const Rational f = at(r, c);
            for (std::size_t k = c; k < width; ++k)
                at(r, k) -= f * at(rank, k);
        }
        pivot_cols.push_back(c);
        ++rank;
    }

    SolveResult result;
    result.rank = rank;
    result.consistent = true;
    for (std::size_t r = rank; r < rows; ++r) {
        if (!at(r, cols).is_zero()) {
            result.consistent = false;
            break;
        }
    }
    if (result.consistent && rank == cols) {
        std::vector<Rational> x(cols);
        for (std::size_t k = 0; k < rank; ++k)
            x[pivot_cols[k]] = at(k, cols);
        result.solution = std::move(x);
    }
    return result;
}

}  // namespace vassiliev
