#pragma once

#include "vassiliev/rational.hpp"

#include <string>
#include <vector>

namespace vassiliev {

/// Truncated Laurent series in x with rational coefficients.
///
/// Coefficients are stored densely for degrees min_degree()..trunc_order().
/// Degrees above trunc_order() are unknown, not zero. A non-zero series is
/// kept normalized so that its lowest stored coefficient is non-zero; the
/// zero series has min_degree() == 0.
///
/// Every series carries its own precision. Products and quotients derive
/// the precision of the result from the valuations of the operands, so a
/// result is never reported to a degree it is not actually known to.
class TruncSeries {
public:
    /// The zero series known through degree 0.
    TruncSeries();
    /// coefficients[k] is the coefficient of x^(min_degree + k). Missing
    /// coefficients up to trunc_order are zero; extra ones are dropped.
    TruncSeries(int min_degree, std::vector<Rational> coefficients, int trunc_order);

    static TruncSeries zero(int trunc_order);
    static TruncSeries constant(const Rational& value, int trunc_order);
    static TruncSeries monomial(const Rational& value, int degree, int trunc_order);

    int min_degree() const { return min_degree_; }
    int trunc_order() const { return trunc_order_; }
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    bool is_zero() const;
    /// Lowest degree with a non-zero coefficient; trunc_order() + 1 for zero.
    int valuation() const;
    /// Coefficient of x^degree. Throws std::out_of_range above trunc_order().
    Rational coeff(int degree) const;

    /// Same series known through min(order, trunc_order()).
    TruncSeries truncated(int order) const;
    /// The series with x replaced by -x.
    TruncSeries reflected() const;

    TruncSeries operator-() const;
    TruncSeries& operator+=(const TruncSeries& rhs);
    TruncSeries& operator-=(const TruncSeries& rhs);
    TruncSeries& operator*=(const TruncSeries& rhs);
    TruncSeries& operator/=(const TruncSeries& rhs);
    TruncSeries& operator*=(const Rational& scalar);

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const TruncSeries& b) { return a *= b; }
    friend TruncSeries operator/(TruncSeries a, const TruncSeries& b) { return a /= b; }
    friend TruncSeries operator*(TruncSeries a, const Rational& s) { return a *= s; }
    friend TruncSeries operator*(const Rational& s, TruncSeries a) { return a *= s; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

    /// Human-readable form, e.g. "1 + 3/2*x + O(x^3)".
    std::string str() const;

private:
    void normalize();

    int min_degree_ = 0;
    int trunc_order_ = 0;
    std::vector<Rational> coefficients_;
};

/// exp(rate * x) through x^trunc_order.
TruncSeries series_exp_linear(const Rational& rate, int trunc_order);

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

/// Exact Laurent quotient. Throws DivisionByZeroSeries when every stored
/// coefficient of den is zero, TruncationUnderflow when the quotient is not
/// known through degree 0.
TruncSeries series_div(const TruncSeries& num, const TruncSeries& den);

/// True when a and b are both known through `order` and agree coefficientwise
/// on every degree up to it.
bool agree_through(const TruncSeries& a, const TruncSeries& b, int order);

}  // namespace vassiliev
