#include "vassiliev/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace vassiliev {

Rational::Rational(long numerator, long denominator)
{
    if (denominator == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value)
{
    if (value_.get_den() == 0)
        throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    mpz_class num;
    mpz_class den = 1;
    auto parse_int = [](std::string_view s, mpz_class& out) {
        std::string buf(s);
        if (buf.empty() || buf == "-" || buf == "+" || out.set_str(buf[0] == '+' ? buf.substr(1) : buf, 10) != 0)
            throw std::invalid_argument("malformed integer '" + buf + "'");
    };
    parse_int(text.substr(0, slash), num);
    if (slash != std::string_view::npos)
        parse_int(text.substr(slash + 1), den);
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const
{
    if (is_integer())
        return numerator_str();
    return numerator_str() + "/" + denominator_str();
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(value_)));
}

Rational Rational::pow(int exponent) const
{
    if (exponent < 0) {
        if (is_zero())
            throw std::domain_error("zero raised to a negative power");
        return Rational(1) / pow(-exponent);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(mpq_class(num, den));
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

}  // namespace vassiliev
