#include "vassiliev/extractor.hpp"

#include "vassiliev/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace vassiliev {

std::string kind_name(InvariantKind kind)
{
    switch (kind) {
    case InvariantKind::AlphaTilde:
        return "alpha_tilde";
    case InvariantKind::Alpha:
        return "alpha";
    case InvariantKind::Beta:
        return "beta";
    }
    return "?";
}

const Rational& InvariantTable::at(int order, int index) const
{
    const auto it = entries.find({order, index});
    if (it == entries.end())
        throw std::out_of_range("no entry " + slot_key({order, index}) + " in " + kind_name(kind) +
                                " table");
    return it->second;
}

InstantiationPlan default_plan(TorusKnot knot)
{
    InstantiationPlan plan;
    for (int N = 2; N <= 7; ++N)
        plan.push_back(GroupInstance::su_n(N));
    const int base = std::max(5, std::abs(knot.n) + 2);
    for (int N = base; N < base + 6; ++N)
        plan.push_back(GroupInstance::so_n(N));
    for (int j = 1; j <= 6; ++j)
        plan.push_back(GroupInstance::su2(j));
    for (auto [N, j] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 3}})
        plan.push_back(GroupInstance::product(N, j));
    return plan;
}

SeriesSource polynomial_source(InvariantKind kind, int trunc_order, int guard)
{
    switch (kind) {
    case InvariantKind::AlphaTilde:
        return [=](TorusKnot knot, const GroupInstance& g) {
            return normalized_series(knot, g, trunc_order, guard);
        };
    case InvariantKind::Alpha:
        return [=](TorusKnot knot, const GroupInstance& g) {
            auto s = unnormalized_series(knot, g, trunc_order, guard);
            s *= Rational(1) / g.dimension();
            return s;
        };
    case InvariantKind::Beta:
        break;
    }
    throw std::invalid_argument("beta has no series source; derive it from alpha_tilde");
}

namespace {

void check_order(int trunc_order)
{
    if (trunc_order < 0 || trunc_order > kMaxOrder)
        throw std::invalid_argument("orders 0.." + std::to_string(kMaxOrder) +
                                    " are supported, got " + std::to_string(trunc_order));
}

struct Row {
    GroupFactorVector r;
    TruncSeries series;
    std::string label;
};

ExactMatrix system_for(int order, const std::vector<Row>& rows)
{
    const auto d = static_cast<std::size_t>(kSlotCount[order]);
    ExactMatrix m(0, d);
    for (const Row& row : rows) {
        std::vector<Rational> coeffs;
        for (int j = 1; j <= kSlotCount[order]; ++j)
            coeffs.push_back(row.r.r(order, j));
        m.append_row(coeffs, row.series.coeff(order));
    }
    return m;
}

std::vector<Row> evaluate_rows(TorusKnot knot, const InstantiationPlan& plan,
                               const SeriesSource& source)
{
    std::vector<Row> rows;
    rows.reserve(plan.size());
    for (const GroupInstance& g : plan)
        rows.push_back({group_factor_vector(g), source(knot, g), g.str()});
    return rows;
}

}  // namespace

ExactMatrix assemble_system(TorusKnot knot, int order, const InstantiationPlan& plan,
                            const SeriesSource& source)
{
    knot.require_valid();
    check_order(order);
    return system_for(order, evaluate_rows(knot, plan, source));
}

ExactMatrix assemble_system(TorusKnot knot, int order, const InstantiationPlan& plan)
{
    return assemble_system(knot, order, plan, polynomial_source(InvariantKind::AlphaTilde));
}

bool ExtractionReport::ok() const
{
    return std::all_of(orders.begin(), orders.end(), [](const OrderReport& o) {
        return o.consistent && o.rank == o.unknowns && o.residuals.empty();
    });
}

Extraction extract_with_source(TorusKnot knot, InvariantKind kind, int trunc_order,
                               const InstantiationPlan& plan, const SeriesSource& source)
{
    knot.require_valid();
    check_order(trunc_order);
    if (plan.empty())
        throw std::invalid_argument("empty instantiation plan");

    const auto rows = evaluate_rows(knot, plan, source);
    Extraction out;
    out.table.kind = kind;
    out.table.knot = knot;

    for (int i = 2; i <= trunc_order; ++i) {
        const ExactMatrix system = system_for(i, rows);
        const SolveResult solved = solve_exact(system);

        OrderReport report;
        report.order = i;
        report.equations = system.rows();
        report.unknowns = system.cols();
        report.rank = solved.rank;
        report.consistent = solved.consistent;

        if (solved.rank < system.cols())
            throw RankDeficient(i, "order " + std::to_string(i) + ": rank " +
                                       std::to_string(solved.rank) + " < " +
                                       std::to_string(system.cols()) + " unknowns");
        if (!solved.consistent || !solved.solution)
            throw Inconsistent(i, "order " + std::to_string(i) +
                                      ": overdetermined system has no solution");

        const auto& x = *solved.solution;
        for (std::size_t r = 0; r < system.rows(); ++r) {
            Rational lhs = 0;
            for (std::size_t c = 0; c < system.cols(); ++c)
                lhs += system(r, c) * x[c];
            if (lhs != system.rhs(r))
                report.residuals.push_back({rows[r].label, lhs - system.rhs(r)});
        }
        for (std::size_t c = 0; c < x.size(); ++c)
            out.table.entries[{i, static_cast<int>(c) + 1}] = x[c];
        out.report.orders.push_back(std::move(report));
    }
    return out;
}

Extraction extract_alpha_tilde(TorusKnot knot, int trunc_order, int guard)
{
    return extract_alpha_tilde(knot, trunc_order, default_plan(knot), guard);
}

Extraction extract_alpha_tilde(TorusKnot knot, int trunc_order, const InstantiationPlan& plan,
                               int guard)
{
    return extract_with_source(knot, InvariantKind::AlphaTilde, trunc_order, plan,
                               polynomial_source(InvariantKind::AlphaTilde, trunc_order, guard));
}

Extraction extract_alpha(TorusKnot knot, int trunc_order, int guard)
{
    return extract_alpha(knot, trunc_order, default_plan(knot), guard);
}

Extraction extract_alpha(TorusKnot knot, int trunc_order, const InstantiationPlan& plan, int guard)
{
    return extract_with_source(knot, InvariantKind::Alpha, trunc_order, plan,
                               polynomial_source(InvariantKind::Alpha, trunc_order, guard));
}

}  // namespace vassiliev
