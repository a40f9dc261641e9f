#include "vassiliev/group_factors.hpp"

#include "vassiliev/errors.hpp"

#include <stdexcept>
#include <utility>

namespace vassiliev {

namespace {

CasimirSet su_n_casimirs(int n)
{
    const Rational N(n);
    const Rational N2 = N * N;
    const Rational d = N2 - 1;
    return {
        .C2 = -d / (2 * N),
        .C3 = -d / 4,
        .C4 = d * (N2 + 2) / 16,
        .C5 = N * d * (N2 + 1) / 32,
        .C6_1 = d * (N2 * N2 + N2 + 2) / 64,
        .C6_2 = d * (3 * N2 - 2) / 64,
        .dim = N,
    };
}

CasimirSet so_n_casimirs(int n)
{
    const Rational N(n);
    const Rational N2 = N * N;
    const Rational q = (N - 1) * (N - 2);
    return {
        .C2 = -(N - 1) / 4,
        .C3 = -q / 16,
        .C4 = q * (N2 - 5 * N + 10) / 256,
        .C5 = q * (N2 * N - 7 * N2 + 17 * N - 10) / 1024,
        .C6_1 = q * (N2 - 7 * N + 14) * (N2 - 2 * N + 3) / 4096,
        .C6_2 = q * (N - 3) * (7 * N - 18) / 4096,
        .dim = N,
    };
}

CasimirSet su2_casimirs(int j)
{
    const Rational s(j, 2);
    const Rational c = s * (s + 1);
    const Rational c2 = c * c;
    return {
        .C2 = -c,
        .C3 = -c,
        .C4 = 2 * c2,
        .C5 = 3 * c2 - c,
        .C6_1 = 2 * c2 * c + 3 * c2 - 2 * c,
        .C6_2 = -2 * c2 * c + 5 * c2 - 2 * c,
        .dim = j + 1,
    };
}

}  // namespace

CasimirSet casimirs(GroupFamily family, int parameter)
{
    switch (family) {
    case GroupFamily::SU_N:
        if (parameter < 2)
            throw InvalidGroup("SU(N) needs N >= 2");
        return su_n_casimirs(parameter);
    case GroupFamily::SO_N:
        if (parameter < 3)
            throw InvalidGroup("SO(N) needs N >= 3");
        return so_n_casimirs(parameter);
    case GroupFamily::SU2:
        if (parameter < 1)
            throw InvalidGroup("SU(2) spin label j must be >= 1");
        return su2_casimirs(parameter);
    case GroupFamily::SU_N_x_SU2:
        break;
    }
    throw InvalidGroup("casimirs() takes a simple family; use casimir_sets() for products");
}

std::vector<CasimirSet> casimir_sets(const GroupInstance& group)
{
    switch (group.family()) {
    case GroupFamily::SU_N:
    case GroupFamily::SO_N:
        return {casimirs(group.family(), group.N())};
    case GroupFamily::SU2:
        return {casimirs(GroupFamily::SU2, group.j())};
    case GroupFamily::SU_N_x_SU2:
        return {casimirs(GroupFamily::SU_N, group.N()), casimirs(GroupFamily::SU2, group.j())};
    }
    throw InvalidGroup("unknown group family");
}

const Rational& GroupFactorVector::r(int order, int index) const
{
    if (order < 0 || order > kMaxOrder || index < 1 || index > kSlotCount[order])
        throw std::out_of_range("no group factor r_" + std::to_string(order) + "," +
                                std::to_string(index));
    return r_[order][index - 1];
}

Rational& GroupFactorVector::r(int order, int index)
{
    return const_cast<Rational&>(std::as_const(*this).r(order, index));
}

GroupFactorVector group_factor_vector(const std::vector<CasimirSet>& factors)
{
    if (factors.empty())
        throw std::invalid_argument("group_factor_vector needs at least one simple factor");

    GroupFactorVector v;
    Rational dim = 1;
    v.r(0, 1) = 1;
    for (const CasimirSet& c : factors) {
        if (c.C2.is_zero())
            throw ZeroCasimirDivision("C2 vanishes for a simple factor");
        const Rational c3_2 = c.C3 * c.C3;
        const Rational c2_2 = c.C2 * c.C2;
        v.r(2, 1) += c.C3;
        v.r(3, 1) += c3_2 / c.C2;
        v.r(4, 2) += c3_2 * c.C3 / c2_2;
        v.r(4, 3) += c.C4;
        v.r(5, 2) += c3_2 * c3_2 / (c2_2 * c.C2);
        v.r(5, 3) += c.C4 * c.C3 / c.C2;
        v.r(5, 4) += c.C5;
        v.r(6, 5) += c3_2 * c3_2 * c.C3 / (c2_2 * c2_2);
        v.r(6, 6) += c.C4 * c3_2 / c2_2;
        v.r(6, 7) += c.C5 * c.C3 / c.C2;
        v.r(6, 8) += c.C6_1;
        v.r(6, 9) += c.C6_2;
        dim *= c.dim;
    }
    for (Slot s : all_slots()) {
        const auto parts = compound_factors(s);
        if (parts.empty())
            continue;
        Rational prod = 1;
        for (Slot p : parts)
            prod *= v.r(p);
        v.r(s.order, s.index) = prod;
    }
    v.set_dim(dim);
    return v;
}

GroupFactorVector group_factor_vector(const GroupInstance& group)
{
    return group_factor_vector(casimir_sets(group));
}

}  // namespace vassiliev
