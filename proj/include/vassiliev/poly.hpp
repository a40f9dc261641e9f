#pragma once

#include "vassiliev/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vassiliev {

/// Univariate polynomial with rational coefficients in ascending degree.
/// Trailing zero coefficients are trimmed; the zero polynomial has no degree.
class ExactPoly {
public:
    explicit ExactPoly(std::string variable = "x", std::vector<Rational> coefficients = {});

    /// The polynomial `value * variable^degree`.
    static ExactPoly monomial(std::string variable, const Rational& value, int degree);

    const std::string& variable() const { return variable_; }
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    std::optional<int> degree() const;
    bool is_zero() const { return coefficients_.empty(); }
    /// Coefficient of variable^k (zero beyond the degree).
    Rational coeff(int k) const;

    Rational evaluate(const Rational& at) const;

    ExactPoly& operator+=(const ExactPoly& rhs);
    ExactPoly& operator-=(const ExactPoly& rhs);
    ExactPoly& operator*=(const ExactPoly& rhs);
    ExactPoly& operator*=(const Rational& scalar);
    friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
    friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
    friend ExactPoly operator*(ExactPoly a, const ExactPoly& b) { return a *= b; }
    friend ExactPoly operator*(ExactPoly a, const Rational& s) { return a *= s; }
    friend ExactPoly operator*(const Rational& s, ExactPoly a) { return a *= s; }

    /// Equality compares coefficients only; the variable name is a label.
    friend bool operator==(const ExactPoly& a, const ExactPoly& b)
    {
        return a.coefficients_ == b.coefficients_;
    }

    /// Descending-degree form, e.g. "-1/24*N^2 + 1/24".
    std::string str() const;

private:
    void trim();

    std::string variable_;
    std::vector<Rational> coefficients_;
};

/// Fits the polynomial of degree <= max_degree through the first
/// max_degree + 1 points and checks the remaining points against it.
/// Throws DegreeExceeded when a remaining point is off the fitted curve,
/// std::invalid_argument for too few points or repeated abscissae.
ExactPoly interpolate_poly(const std::vector<std::pair<Rational, Rational>>& points, int max_degree,
                           const std::string& variable = "x");

}  // namespace vassiliev
