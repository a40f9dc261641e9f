#include "vassiliev/errors.hpp"
#include "vassiliev/extractor.hpp"

#include <algorithm>
#include <stdexcept>

namespace vassiliev {

std::vector<Rational> ansatz_basis(int order, TorusKnot knot)
{
    const Rational a = Rational(knot.n) * Rational(knot.n);
    const Rational b = Rational(knot.m) * Rational(knot.m);
    switch (order) {
    case 2:
    case 3:
        return {1};
    case 4:
    case 5:
        return {1, a + b, a * b};
    case 6:
        return {1, a + b, a * b, a * b * (a + b), a * a + b * b, a * a * b * b};
    default:
        throw std::invalid_argument("the ansatz covers orders 2..6");
    }
}

Rational ansatz_prefactor(int order, TorusKnot knot)
{
    const Rational n(knot.n), m(knot.m);
    const Rational p = (n * n - 1) * (m * m - 1);
    return order % 2 == 0 ? p : n * m * p;
}

Rational AnsatzFit::coefficient(TorusKnot knot, int order, const Rational& variable_value) const
{
    if (order == 0)
        return 1;
    if (order == 1)
        return 0;
    const auto basis = ansatz_basis(order, knot);
    Rational sum = 0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto it = g.find({order, static_cast<int>(k) + 1});
        if (it == g.end())
            throw std::out_of_range("fit has no g_" + slot_key({order, static_cast<int>(k) + 1}));
        sum += basis[k] * it->second.evaluate(variable_value);
    }
    return ansatz_prefactor(order, knot) * sum;
}

Rational ansatz_variable(GroupFamily family, int parameter)
{
    switch (family) {
    case GroupFamily::SU_N:
    case GroupFamily::SO_N:
        return parameter;
    case GroupFamily::SU2:
        return Rational(-parameter * (parameter + 2), 4);
    case GroupFamily::SU_N_x_SU2:
        break;
    }
    throw InvalidGroup("the ansatz is fitted per simple family");
}

std::vector<TorusKnot> default_ansatz_grid()
{
    return {{2, 3}, {2, 5}, {2, 7}, {2, 9}, {3, 4}, {3, 5}, {4, 5}, {5, 6}, {3, 8}, {4, 7}};
}

namespace {

struct FitPlan {
    std::string variable;
    std::vector<int> parameters;
    int max_degree;
};

FitPlan fit_plan(GroupFamily family)
{
    switch (family) {
    case GroupFamily::SU_N:
        return {"N", {2, 3, 4, 5, 6, 7, 8, 9, 10}, 6};
    case GroupFamily::SO_N:
        return {"N", {7, 8, 9, 10, 11, 12, 13, 14, 15}, 6};
    case GroupFamily::SU2:
        return {"A", {1, 2, 3, 4, 5, 6, 7, 8}, 3};
    case GroupFamily::SU_N_x_SU2:
        break;
    }
    throw InvalidGroup("the ansatz is fitted per simple family");
}

GroupInstance instance(GroupFamily family, int parameter)
{
    switch (family) {
    case GroupFamily::SU_N:
        return GroupInstance::su_n(parameter);
    case GroupFamily::SO_N:
        return GroupInstance::so_n(parameter);
    default:
        return GroupInstance::su2(parameter);
    }
}

}  // namespace

AnsatzFit fit_ansatz(GroupFamily family, int trunc_order)
{
    if (trunc_order < 2 || trunc_order > kMaxOrder)
        throw std::invalid_argument("the ansatz covers orders 2..6");
    const FitPlan plan = fit_plan(family);
    const auto grid = default_ansatz_grid();

    // g values at every sampled parameter, per (order, slot)
    std::map<Slot, std::vector<std::pair<Rational, Rational>>> samples;

    for (int parameter : plan.parameters) {
        const GroupInstance group = instance(family, parameter);
        std::vector<TruncSeries> series;
        for (TorusKnot k : grid)
            series.push_back(normalized_series(k, group, trunc_order));

        for (std::size_t q = 0; q < grid.size(); ++q)
            if (series[q].coeff(0) != 1 || !series[q].coeff(1).is_zero())
                throw AnsatzMismatch(group.str() + " " + grid[q].str() +
                                     ": series does not start 1 + 0 x");

        for (int i = 2; i <= trunc_order; ++i) {
            const auto width = static_cast<std::size_t>(kAnsatzSlotCount[i]);
            ExactMatrix system(0, width);
            for (std::size_t q = 0; q < grid.size(); ++q)
                system.append_row(ansatz_basis(i, grid[q]),
                                  series[q].coeff(i) / ansatz_prefactor(i, grid[q]));
            const SolveResult solved = solve_exact(system);
            if (solved.rank < width)
                throw AnsatzMismatch("order " + std::to_string(i) +
                                     ": knot grid does not span the ansatz basis");
            if (!solved.consistent || !solved.solution)
                throw AnsatzMismatch(group.str() + " order " + std::to_string(i) +
                                     ": coefficients do not fit the ansatz shape");
            for (std::size_t k = 0; k < width; ++k)
                samples[{i, static_cast<int>(k) + 1}].emplace_back(
                    ansatz_variable(family, parameter), (*solved.solution)[k]);
        }
    }

    AnsatzFit fit;
    fit.family = family;
    fit.variable = plan.variable;
    for (const auto& [slot, points] : samples) {
        try {
            fit.g.emplace(slot, interpolate_poly(points, plan.max_degree, plan.variable));
        } catch (const DegreeExceeded&) {
            throw AnsatzMismatch("g_" + slot_key(slot) + " is not a polynomial of degree <= " +
                                 std::to_string(plan.max_degree) + " in " + plan.variable);
        }
    }
    return fit;
}

SeriesSource ansatz_source(const std::vector<AnsatzFit>& fits, int trunc_order)
{
    auto series_for = [fits, trunc_order](TorusKnot knot, GroupFamily family, int parameter) {
        const auto it = std::find_if(fits.begin(), fits.end(),
                                     [&](const AnsatzFit& f) { return f.family == family; });
        if (it == fits.end())
            throw InvalidGroup("no ansatz fit for " + family_name(family));
        const Rational v = ansatz_variable(family, parameter);
        std::vector<Rational> coeffs;
        for (int i = 0; i <= trunc_order; ++i)
            coeffs.push_back(it->coefficient(knot, i, v));
        return TruncSeries(0, coeffs, trunc_order);
    };
    return [series_for](TorusKnot knot, const GroupInstance& g) {
        switch (g.family()) {
        case GroupFamily::SU_N:
        case GroupFamily::SO_N:
            return series_for(knot, g.family(), g.N());
        case GroupFamily::SU2:
            return series_for(knot, GroupFamily::SU2, g.j());
        case GroupFamily::SU_N_x_SU2:
            return series_for(knot, GroupFamily::SU_N, g.N()) *
                   series_for(knot, GroupFamily::SU2, g.j());
        }
        throw InvalidGroup("unknown group family");
    };
}

namespace {

/// Polynomial from descending integer coefficients, times a rational scale.
ExactPoly desc(const std::string& var, std::vector<long> coeffs, Rational scale)
{
    std::vector<Rational> asc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        asc.push_back(Rational(*it) * scale);
    return ExactPoly(var, asc);
}

std::map<Slot, ExactPoly> printed_su_n()
{
    auto g = [](std::vector<long> c, long den) { return desc("N", std::move(c), Rational(1, den)); };
    return {
        {{2, 1}, g({-1, 0, 1}, 24)},
        {{3, 1}, g({-1, 0, 1, 0}, 144)},
        {{4, 1}, g({7, 0, -10, 0, 3}, 5760)},
        {{4, 2}, g({-3, 0, 10, 0, -7}, 5760)},
        {{4, 3}, g({-1, 0, 0, 0, 1}, 1920)},
        {{5, 1}, g({29, 0, -60, 0, 31, 0}, 86400)},
        {{5, 2}, g({-11, 0, 40, 0, -29, 0}, 86400)},
        // printed -N(N^4 - 10N + 11)/86400
        {{5, 3}, g({-1, 0, 0, 10, -11, 0}, 86400)},
        {{6, 1}, g({-31, 0, 49, 0, -21, 0, 3}, 967680)},
        {{6, 2}, g({9, 0, -35, 0, 35, 0, -9}, 483840)},
        {{6, 3}, g({55, 0, -98, 0, -35, 0, 78}, 1451520)},
        {{6, 4}, g({-22, 0, 77, 0, -28, 0, -27}, 1451520)},
        {{6, 5}, g({-3, 0, 21, 0, -49, 0, 31}, 967680)},
        {{6, 6}, g({5, 0, -49, 0, 35, 0, 9}, 2903040)},
    };
}

std::map<Slot, ExactPoly> printed_so_n()
{
    auto g = [](std::vector<long> c, long den) { return desc("N", std::move(c), Rational(1, den)); };
    return {
        {{2, 1}, g({-1, 3, -2}, 96)},
        // -(N-2)^2 (N-1)/1152
        {{3, 1}, g({-1, 5, -8, 4}, 1152)},
        {{4, 1}, g({7, -45, 110, -120, 48}, 92160)},
        {{4, 2}, g({-3, 15, -20, 0, 8}, 92160)},
        {{4, 3}, g({-3, 25, -70, 80, -32}, 92160)},
        {{5, 1}, g({58, -469, 1455, -2120, 1412, -336}, 5529600)},
        {{5, 2}, g({-22, 141, -295, 180, 92, -96}, 5529600)},
        {{5, 3}, g({-2, 51, -245, 480, -428, 144}, 5529600)},
        {{6, 1}, g({-31, 315, -1358, 3150, -4116, 2856, -816}, 61931520)},
        {{6, 2}, g({18, -147, 455, -630, 280, 168, -144}, 61931520)},
        {{6, 3}, g({550, -5768, 23443, -46865, 47740, -22652, 3552}, 928972800)},
        {{6, 4}, g({-220, 1757, -5152, 6335, -1540, -3052, 1872}, 928972800)},
        {{6, 5}, g({-3, 21, -42, 0, 56, 0, -32}, 61931520)},
        {{6, 6}, g({25, 112, -1442, 4585, -6860, 5068, -1488}, 928972800)},
    };
}

std::map<Slot, ExactPoly> printed_su2()
{
    auto g = [](std::vector<long> c, long den) { return desc("A", std::move(c), Rational(1, den)); };
    return {
        {{2, 1}, g({1, 0}, 6)},
        {{3, 1}, g({1, 0}, 18)},
        {{4, 1}, g({7, -1, 0}, 360)},
        {{4, 2}, g({-3, -1, 0}, 360)},
        {{4, 3}, g({7, 9, 0}, 360)},
        {{5, 1}, g({10, -1, 0}, 1080)},
        {{5, 2}, g({-6, -3, 0}, 1080)},
        {{5, 3}, g({18, 15, 0}, 1080)},
        // printed A(155A^2 - 55A^2 + 5)/75600
        {{6, 1}, g({100, 0, 5, 0}, 75600)},
        {{6, 2}, g({-90, -20, 5, 0}, 75600)},
        // printed with an unbalanced parenthesis
        {{6, 3}, g({260, 358, -9, 0}, 75600)},
        {{6, 4}, g({-90, -342, -184, 0}, 75600)},
        {{6, 5}, g({15, 15, 5, 0}, 75600)},
        {{6, 6}, g({155, 1023, 691, 0}, 75600)},
    };
}

}  // namespace

std::map<Slot, ExactPoly> printed_g_table(GroupFamily family)
{
    switch (family) {
    case GroupFamily::SU_N:
        return printed_su_n();
    case GroupFamily::SO_N:
        return printed_so_n();
    case GroupFamily::SU2:
        return printed_su2();
    case GroupFamily::SU_N_x_SU2:
        break;
    }
    throw InvalidGroup("no printed g table for the product group");
}

std::vector<Slot> suspect_g_entries(GroupFamily family)
{
    switch (family) {
    case GroupFamily::SU_N:
        return {{5, 3}};
    case GroupFamily::SU2:
        return {{6, 1}, {6, 3}};
    default:
        return {};
    }
}

std::vector<GComparison> compare_g_tables(const AnsatzFit& fit)
{
    const auto printed = printed_g_table(fit.family);
    const auto suspect = suspect_g_entries(fit.family);
    std::vector<GComparison> out;
    for (const auto& [slot, fitted] : fit.g) {
        const auto it = printed.find(slot);
        if (it == printed.end())
            continue;
        GComparison c{slot, it->second, fitted, it->second == fitted,
                      std::find(suspect.begin(), suspect.end(), slot) != suspect.end()};
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace vassiliev
