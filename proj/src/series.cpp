#include "vassiliev/series.hpp"

#include "vassiliev/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vassiliev {

TruncSeries::TruncSeries() : TruncSeries(0, {}, 0) {}

TruncSeries::TruncSeries(int min_degree, std::vector<Rational> coefficients, int trunc_order)
    : min_degree_(min_degree), trunc_order_(trunc_order), coefficients_(std::move(coefficients))
{
    normalize();
}

void TruncSeries::normalize()
{
    const long wanted = static_cast<long>(trunc_order_) - min_degree_ + 1;
    if (wanted <= 0) {
        coefficients_.clear();
    } else {
        coefficients_.resize(static_cast<std::size_t>(wanted));
    }
    auto first = std::find_if(coefficients_.begin(), coefficients_.end(),
                              [](const Rational& c) { return !c.is_zero(); });
    if (first == coefficients_.end()) {
        // canonical zero
        min_degree_ = 0;
        coefficients_.assign(static_cast<std::size_t>(std::max(0, trunc_order_ + 1)), Rational(0));
        return;
    }
    min_degree_ += static_cast<int>(first - coefficients_.begin());
    coefficients_.erase(coefficients_.begin(), first);
}

TruncSeries TruncSeries::zero(int trunc_order)
{
    return TruncSeries(0, {}, trunc_order);
}

TruncSeries TruncSeries::constant(const Rational& value, int trunc_order)
{
    return TruncSeries(0, {value}, trunc_order);
}

TruncSeries TruncSeries::monomial(const Rational& value, int degree, int trunc_order)
{
    return TruncSeries(degree, {value}, trunc_order);
}

bool TruncSeries::is_zero() const
{
    return coefficients_.empty() || std::all_of(coefficients_.begin(), coefficients_.end(),
                                                [](const Rational& c) { return c.is_zero(); });
}

int TruncSeries::valuation() const
{
    return is_zero() ? trunc_order_ + 1 : min_degree_;
}

Rational TruncSeries::coeff(int degree) const
{
    if (degree > trunc_order_) {
        throw std::out_of_range("coefficient of x^" + std::to_string(degree) +
                                " requested from a series known through x^" +
                                std::to_string(trunc_order_));
    }
    if (degree < min_degree_)
        return Rational(0);
    return coefficients_[static_cast<std::size_t>(degree - min_degree_)];
}

TruncSeries TruncSeries::truncated(int order) const
{
    return TruncSeries(min_degree_, coefficients_, std::min(order, trunc_order_));
}

TruncSeries TruncSeries::reflected() const
{
    std::vector<Rational> out = coefficients_;
    for (std::size_t k = 0; k < out.size(); ++k) {
        if ((min_degree_ + static_cast<int>(k)) % 2 != 0)
            out[k] = -out[k];
    }
    return TruncSeries(min_degree_, std::move(out), trunc_order_);
}

TruncSeries TruncSeries::operator-() const
{
    TruncSeries out = *this;
    for (auto& c : out.coefficients_)
        c = -c;
    return out;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs)
{
    return *this = series_add(*this, rhs);
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs)
{
    return *this = series_add(*this, -rhs);
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& rhs)
{
    return *this = series_mul(*this, rhs);
}

TruncSeries& TruncSeries::operator/=(const TruncSeries& rhs)
{
    return *this = series_div(*this, rhs);
}

TruncSeries& TruncSeries::operator*=(const Rational& scalar)
{
    for (auto& c : coefficients_)
        c *= scalar;
    normalize();
    return *this;
}

std::string TruncSeries::str() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
        const Rational& c = coefficients_[k];
        if (c.is_zero())
            continue;
        const int d = min_degree_ + static_cast<int>(k);
        if (!first)
            os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0)
            os << "-";
        first = false;
        const Rational a = c.abs();
        if (d == 0) {
            os << a;
            continue;
        }
        if (a != Rational(1))
            os << a << "*";
        os << "x";
        if (d != 1)
            os << "^" << d;
    }
    if (first)
        os << "0";
    os << " + O(x^" << trunc_order_ + 1 << ")";
    return os.str();
}

TruncSeries series_exp_linear(const Rational& rate, int trunc_order)
{
    if (trunc_order < 0)
        throw std::invalid_argument("series_exp_linear needs trunc_order >= 0");
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(trunc_order) + 1);
    Rational term(1);
    for (int d = 0; d <= trunc_order; ++d) {
        c.push_back(term);
        term = term * rate / Rational(d + 1);
    }
    return TruncSeries(0, std::move(c), trunc_order);
}

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b)
{
    const int order = std::min(a.trunc_order(), b.trunc_order());
    const int low = std::min(a.min_degree(), b.min_degree());
    std::vector<Rational> c;
    for (int d = low; d <= order; ++d)
        c.push_back(a.coeff(d) + b.coeff(d));
    return TruncSeries(low, std::move(c), order);
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b)
{
    const int va = a.valuation();
    const int vb = b.valuation();
    const int order = std::min(a.trunc_order() + vb, b.trunc_order() + va);
    if (a.is_zero() || b.is_zero())
        return TruncSeries::zero(order);

    const int low = va + vb;
    std::vector<Rational> c;
    if (order >= low)
        c.resize(static_cast<std::size_t>(order - low + 1));
    const auto& ca = a.coefficients();
    const auto& cb = b.coefficients();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i].is_zero())
            continue;
        for (std::size_t j = 0; j < cb.size() && i + j < c.size(); ++j)
            c[i + j] += ca[i] * cb[j];
    }
    return TruncSeries(low, std::move(c), order);
}

TruncSeries series_div(const TruncSeries& num, const TruncSeries& den)
{
    if (den.is_zero())
        throw DivisionByZeroSeries("division by a series whose stored coefficients are all zero");

    const int vd = den.valuation();
    const int den_precision = den.trunc_order() - vd;
    if (num.is_zero()) {
        const int order = num.trunc_order() - vd;
        if (order < 0)
            throw TruncationUnderflow("quotient not known through degree 0");
        return TruncSeries::zero(order);
    }

    const int vn = num.valuation();
    const int precision = std::min(num.trunc_order() - vn, den_precision);
    const int low = vn - vd;
    const int order = low + precision;
    if (order < 0) {
        throw TruncationUnderflow("quotient known only through x^" + std::to_string(order) +
                                  "; more guard terms are needed");
    }

    const auto& n = num.coefficients();
    const auto& d = den.coefficients();
    std::vector<Rational> q(static_cast<std::size_t>(precision) + 1);
    for (std::size_t k = 0; k < q.size(); ++k) {
        Rational acc = k < n.size() ? n[k] : Rational(0);
        for (std::size_t i = 1; i <= k && i < d.size(); ++i)
            acc -= d[i] * q[k - i];
        q[k] = acc / d[0];
    }
    return TruncSeries(low, std::move(q), order);
}

bool agree_through(const TruncSeries& a, const TruncSeries& b, int order)
{
    if (a.trunc_order() < order || b.trunc_order() < order)
        return false;
    const int low = std::min(a.min_degree(), b.min_degree());
    for (int d = low; d <= order; ++d) {
        if (a.coeff(d) != b.coeff(d))
            return false;
    }
    return true;
}

}  // namespace vassiliev
