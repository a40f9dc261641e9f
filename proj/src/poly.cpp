#include "vassiliev/poly.hpp"

#include "vassiliev/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vassiliev {

ExactPoly::ExactPoly(std::string variable, std::vector<Rational> coefficients)
    : variable_(std::move(variable)), coefficients_(std::move(coefficients))
{
    trim();
}

ExactPoly ExactPoly::monomial(std::string variable, const Rational& value, int degree)
{
    if (degree < 0)
        throw std::invalid_argument("negative monomial degree");
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    c.back() = value;
    return ExactPoly(std::move(variable), std::move(c));
}

void ExactPoly::trim()
{
    while (!coefficients_.empty() && coefficients_.back().is_zero())
        coefficients_.pop_back();
}

std::optional<int> ExactPoly::degree() const
{
    if (coefficients_.empty())
        return std::nullopt;
    return static_cast<int>(coefficients_.size()) - 1;
}

Rational ExactPoly::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(coefficients_.size()))
        return Rational(0);
    return coefficients_[static_cast<std::size_t>(k)];
}

Rational ExactPoly::evaluate(const Rational& at) const
{
    Rational acc(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& rhs)
{
    if (coefficients_.size() < rhs.coefficients_.size())
        coefficients_.resize(rhs.coefficients_.size());
    for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k)
        coefficients_[k] += rhs.coefficients_[k];
    trim();
    return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& rhs)
{
    return *this += rhs * Rational(-1);
}

ExactPoly& ExactPoly::operator*=(const ExactPoly& rhs)
{
    if (is_zero() || rhs.is_zero()) {
        coefficients_.clear();
        return *this;
    }
    std::vector<Rational> out(coefficients_.size() + rhs.coefficients_.size() - 1);
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j)
            out[i + j] += coefficients_[i] * rhs.coefficients_[j];
    coefficients_ = std::move(out);
    trim();
    return *this;
}

ExactPoly& ExactPoly::operator*=(const Rational& scalar)
{
    for (auto& c : coefficients_)
        c *= scalar;
    trim();
    return *this;
}

std::string ExactPoly::str() const
{
    if (coefficients_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = static_cast<int>(coefficients_.size()) - 1; k >= 0; --k) {
        const Rational& c = coefficients_[static_cast<std::size_t>(k)];
        if (c.is_zero())
            continue;
        if (!first)
            os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0)
            os << "-";
        first = false;
        const Rational a = c.abs();
        if (k == 0) {
            os << a;
            continue;
        }
        if (a != Rational(1))
            os << a << "*";
        os << variable_;
        if (k > 1)
            os << "^" << k;
    }
    return os.str();
}

ExactPoly interpolate_poly(const std::vector<std::pair<Rational, Rational>>& points, int max_degree,
                           const std::string& variable)
{
    if (max_degree < 0)
        throw std::invalid_argument("max_degree must be non-negative");
    const std::size_t used = static_cast<std::size_t>(max_degree) + 1;
    if (points.size() < used)
        throw std::invalid_argument("interpolate_poly needs at least max_degree + 1 points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolation abscissae must be distinct");

    // Newton divided differences on the leading points.
    std::vector<Rational> dd(used);
    for (std::size_t i = 0; i < used; ++i)
        dd[i] = points[i].second;
    for (std::size_t level = 1; level < used; ++level)
        for (std::size_t i = used - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

    // Horner expansion of the Newton form into monomial coefficients.
    ExactPoly result(variable, {dd[used - 1]});
    for (std::size_t k = used - 1; k-- > 0;) {
        result *= ExactPoly(variable, {-points[k].first, Rational(1)});
        result += ExactPoly(variable, {dd[k]});
    }

    for (std::size_t i = used; i < points.size(); ++i) {
        if (result.evaluate(points[i].first) != points[i].second) {
            throw DegreeExceeded("sample at " + points[i].first.str() +
                                 " is not on the degree-" + std::to_string(max_degree) +
                                 " interpolant");
        }
    }
    return result;
}

}  // namespace vassiliev
