#include "vassiliev/knot_polynomials.hpp"

#include "vassiliev/errors.hpp"

#include <stdexcept>

namespace vassiliev {

namespace {

/// Checks the guard was enough and that no Laurent pole survived, then cuts
/// the series back to the requested order.
TruncSeries finish(const TruncSeries& s, int trunc_order, const char* what)
{
    if (s.trunc_order() < trunc_order) {
        throw TruncationUnderflow(std::string(what) + " known only through x^" +
                                  std::to_string(s.trunc_order()) + ", x^" +
                                  std::to_string(trunc_order) + " requested; raise the guard");
    }
    if (s.valuation() < 0)
        throw CancellationFailure(std::string(what) + " kept a pole at x^" + std::to_string(s.valuation()));
    return s.truncated(trunc_order);
}

void check_order(int trunc_order, int guard)
{
    if (trunc_order < 0 || guard < 0)
        throw std::invalid_argument("truncation order and guard must be non-negative");
}

/// t^(e/2) - t^(-e/2)
TruncSeries half_bracket(const Rational& e, const Rational& scale, int w)
{
    return qpower(e / 2, scale, w) - qpower(-e / 2, scale, w);
}

}  // namespace

TruncSeries qpower(const Rational& exponent, const Rational& scale, int trunc_order)
{
    return series_exp_linear(exponent * scale, trunc_order);
}

TruncSeries homfly_normalized(TorusKnot knot, int N, int trunc_order, int guard)
{
    knot.require_valid();
    check_order(trunc_order, guard);
    if (N < 2)
        throw InvalidGroup("HOMFLY evaluation needs N >= 2");
    if (knot.n < 1)
        throw CancellationFailure("lambda t - 1 cannot be paired: the summation over p + i = n - 1 is empty");

    const int w = trunc_order + guard;
    const int n = knot.n;
    const int m = knot.m;
    const Rational one(1);
    auto t = [&](const Rational& a) { return qpower(a, one, w); };
    const TruncSeries unit = TruncSeries::constant(1, w);

    // lambda t = t^N
    const TruncSeries prefactor =
        (unit - t(1)) / (unit - t(n)) * t(Rational(N - 1) * Rational((m - 1) * (n - 1), 2));

    TruncSeries sum = TruncSeries::zero(w);
    for (int p = 0; p <= n - 1; ++p) {
        const int i = n - 1 - p;
        // The factor j = N is lambda t - t^N = 0.
        if (N <= i)
            continue;
        TruncSeries numerator = t(Rational(m * i) + Rational(p * (p + 1), 2));
        if (i % 2 != 0)
            numerator = -numerator;
        for (int j = -p; j <= i; ++j) {
            if (j == 0)
                continue;  // cancelled against 1/(lambda t - 1)
            numerator *= t(N) - t(j);
        }
        TruncSeries denominator = unit;
        for (int a = 1; a <= i; ++a)
            denominator *= t(a) - unit;
        for (int a = 1; a <= p; ++a)
            denominator *= t(a) - unit;
        sum += numerator / denominator;
    }
    return finish(prefactor * sum, trunc_order, "HOMFLY series");
}

TruncSeries kauffman_normalized(TorusKnot knot, int N, int trunc_order, int guard)
{
    knot.require_valid();
    check_order(trunc_order, guard);
    if (knot.n < 1)
        throw NotAKnot("Kauffman evaluation needs n >= 1; apply {n,m} ~ {-n,-m} first");
    const int n = knot.n;
    const int m = knot.m;
    if (N < n + 2) {
        throw SingularBracket("Kauffman evaluation of " + knot.str() + " needs N >= n + 2 = " +
                              std::to_string(n + 2) + " so that no bracket [p;1] vanishes");
    }

    const int w = trunc_order + guard;
    const Rational scale(1, 2);
    const Rational lambda_exp = Rational(N - 1, 2);  // lambda = t^((N-1)/2)
    auto t = [&](const Rational& a) { return qpower(a, scale, w); };
    auto bracket = [&](int p) { return half_bracket(p, scale, w); };
    // [p;1] = t^(p/2) lambda - t^(-p/2) lambda^-1
    auto bracket_q = [&](int p) {
        const int e = p + N - 1;
        if (e == 0)
            throw SingularBracket("[" + std::to_string(p) + ";1] vanishes identically");
        return half_bracket(e, scale, w);
    };
    const TruncSeries unit = TruncSeries::constant(1, w);

    const TruncSeries prefactor =
        bracket(1) * t(lambda_exp * Rational(n) * Rational(m)) / (bracket(1) + bracket_q(0));

    TruncSeries sum = (n % 2 == 0) ? unit : TruncSeries::zero(w);
    for (int gamma = 0; gamma <= n - 1; ++gamma) {
        const int beta = n - 1 - gamma;
        TruncSeries product = unit;
        for (int j = -gamma; j <= beta; ++j)
            product *= bracket_q(j);
        TruncSeries factorials = unit;
        for (int a = 1; a <= beta; ++a)
            factorials *= bracket(a);
        for (int a = 1; a <= gamma; ++a)
            factorials *= bracket(a);

        const TruncSeries inverse_sum = unit / bracket(n) + unit / bracket_q(beta - gamma);
        TruncSeries term = t(Rational(-m * (beta - gamma), 2) - lambda_exp * Rational(m)) *
                           (product / factorials) * inverse_sum;
        if (gamma % 2 != 0)
            term = -term;
        sum += term;
    }
    return finish(prefactor * sum, trunc_order, "Kauffman series");
}

TruncSeries akutsu_wadati_normalized(TorusKnot knot, int j, int trunc_order, int guard)
{
    knot.require_valid();
    check_order(trunc_order, guard);
    if (knot.n < 1)
        throw NotAKnot("Akutsu-Wadati evaluation needs n >= 1; apply {n,m} ~ {-n,-m} first");
    if (j < 1)
        throw InvalidGroup("Akutsu-Wadati evaluation needs j >= 1");

    const int w = trunc_order + guard;
    const long n = knot.n;
    const long m = knot.m;
    const Rational one(1);
    auto t = [&](const Rational& a) { return qpower(a, one, w); };
    const TruncSeries unit = TruncSeries::constant(1, w);

    const TruncSeries prefactor =
        t(Rational(static_cast<long>(j) * (n - 1) * (m - 1), 2)) / (t(j + 1) - unit);

    TruncSeries sum = TruncSeries::zero(w);
    for (long l = 0; l <= j; ++l) {
        const long a = 1 + m * l;
        const long b = m * (j - l);
        if (a == b)
            continue;
        sum += t(n * (1 + m * l) * (j - l)) * (t(a) - t(b));
    }
    return finish(prefactor * sum, trunc_order, "Akutsu-Wadati series");
}

TruncSeries unknot_factor(const GroupInstance& group, int trunc_order, int guard)
{
    check_order(trunc_order, guard);
    const int w = trunc_order + guard;
    const Rational one(1);
    auto sinh_ratio = [&](int top, const Rational& scale) {
        return half_bracket(top, scale, w) / half_bracket(1, scale, w);
    };

    TruncSeries result;
    switch (group.family()) {
    case GroupFamily::SU_N:
        result = sinh_ratio(group.N(), one);
        break;
    case GroupFamily::SO_N: {
        // 1 + (lambda - lambda^-1)/(t^(1/2) - t^(-1/2)), lambda = t^((N-1)/2)
        result = TruncSeries::constant(1, w) + sinh_ratio(group.N() - 1, Rational(1, 2));
        break;
    }
    case GroupFamily::SU2:
        result = sinh_ratio(group.j() + 1, one);
        break;
    case GroupFamily::SU_N_x_SU2:
        result = sinh_ratio(group.N(), one) * sinh_ratio(group.j() + 1, one);
        break;
    }
    return finish(result, trunc_order, "unknot factor");
}

TruncSeries normalized_series(TorusKnot knot, const GroupInstance& group, int trunc_order, int guard)
{
    knot.require_valid();
    if (knot.n < 0)
        knot = knot.negated();
    switch (group.family()) {
    case GroupFamily::SU_N:
        return homfly_normalized(knot, group.N(), trunc_order, guard);
    case GroupFamily::SO_N:
        return kauffman_normalized(knot, group.N(), trunc_order, guard);
    case GroupFamily::SU2:
        return akutsu_wadati_normalized(knot, group.j(), trunc_order, guard);
    case GroupFamily::SU_N_x_SU2:
        return homfly_normalized(knot, group.N(), trunc_order, guard) *
               akutsu_wadati_normalized(knot, group.j(), trunc_order, guard);
    }
    throw InvalidGroup("unknown group family");
}

TruncSeries unnormalized_series(TorusKnot knot, const GroupInstance& group, int trunc_order, int guard)
{
    return normalized_series(knot, group, trunc_order, guard) * unknot_factor(group, trunc_order, guard);
}

}  // namespace vassiliev
