#include "vassiliev/analysis.hpp"

#include "vassiliev/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace vassiliev {

std::string CanonicalTorusKnot::str() const
{
    return unknot ? "unknot" : knot().str();
}

CanonicalTorusKnot canonicalize(int n, int m)
{
    return canonicalize(TorusKnot{n, m});
}

CanonicalTorusKnot canonicalize(TorusKnot k)
{
    k.require_valid();
    if (k.is_unknot())
        return {};
    if (std::abs(k.n) < std::abs(k.m))
        k = k.swapped();
    if (k.n < 0)
        k = k.negated();
    return {k.n, k.m, false};
}

std::vector<CanonicalTorusKnot> canonical_knots(int max_n)
{
    std::vector<CanonicalTorusKnot> out;
    for (int n = 3; n <= max_n; ++n)
        for (int m = -(n - 1); m <= n - 1; ++m)
            if (std::abs(m) >= 2 && std::gcd(n, m) == 1)
                out.push_back({n, m, false});
    return out;
}

namespace {

std::string beta_id(Slot s)
{
    return "beta_" + std::to_string(s.order) + std::to_string(s.index);
}

}  // namespace

ScanReport distinguishing_check(int max_n)
{
    if (max_n < 2)
        throw std::invalid_argument("distinguishing_check needs max_n >= 2");

    ScanReport report;
    report.name = "distinguishing";
    report.bound = max_n;

    auto knots = canonical_knots(max_n);
    knots.push_back(CanonicalTorusKnot{});

    std::map<std::pair<Rational, Rational>, CanonicalTorusKnot> by_beta;
    std::map<std::pair<Rational, Rational>, std::pair<Rational, Rational>> beta_to_sym;
    for (const CanonicalTorusKnot& c : knots) {
        const TorusKnot k = c.knot();
        const InvariantTable beta = closed_form_beta(k);
        const std::pair key{beta.at(2, 1), beta.at(3, 1)};
        const std::pair sym{Rational(k.n) * Rational(k.m),
                            Rational(k.n) * Rational(k.n) + Rational(k.m) * Rational(k.m)};
        ++report.checked["beta_21,beta_31"];

        const auto [it, inserted] = by_beta.emplace(key, c);
        if (!inserted) {
            report.violations.push_back({k, "beta_21,beta_31", key.first,
                                         "collides with " + it->second.str()});
        }
        const auto [jt, fresh] = beta_to_sym.emplace(key, sym);
        if (!fresh && jt->second != sym)
            report.violations.push_back({k, "nm,n^2+m^2", sym.first,
                                         "equal betas without equal nm and n^2+m^2"});
    }
    return report;
}

std::string reading_name(RelationReading r)
{
    switch (r) {
    case RelationReading::Printed:
        return "printed";
    case RelationReading::LhsBeta54:
        return "lhs-beta54";
    case RelationReading::RhsBeta54:
        return "rhs-beta54";
    }
    return "?";
}

RelationReading parse_reading(const std::string& name)
{
    for (auto r : {RelationReading::Printed, RelationReading::LhsBeta54, RelationReading::RhsBeta54})
        if (reading_name(r) == name)
            return r;
    throw std::invalid_argument("unknown relation reading '" + name + "'");
}

std::vector<RelationValues> dependency_relations(const InvariantTable& beta,
                                                 RelationReading reading)
{
    const auto b = [&](int i, int j) { return beta.at(i, j); };
    const Rational b21 = b(2, 1), b31 = b(3, 1), b43 = b(4, 3), b69 = b(6, 9);
    const Rational b21b31 = b21 * b31;
    const Rational b21_3 = b21 * b21 * b21;
    const Rational b31_2 = b31 * b31;

    const bool rhs54 = reading == RelationReading::RhsBeta54;
    const Rational x5 = rhs54 ? b(5, 4) : b(5, 3);
    const Rational lhs52 = reading == RelationReading::LhsBeta54 ? b(5, 4) : b(5, 3);

    return {
        {"order4", b(4, 2), 4 * b43 + 12 * b21 * b21 - b21},
        {"order5.1", b(5, 2), 6 * x5 + Rational(27, 5) * b21b31 - Rational(2, 5) * b31},
        {"order5.2", lhs52, Rational(3, 4) * x5 + Rational(3, 10) * b21b31 - Rational(1, 20) * b31},
        {"order6.1", b(6, 5),
         Rational(58, 9) * b69 - Rational(80, 3) * b43 + Rational(41, 9) * b21 -
             Rational(680, 3) * b21 * b43 + 5280 * b31_2 - Rational(2080, 3) * b21_3},
        {"order6.2", b(6, 6),
         Rational(-5, 12) * b69 - Rational(5, 3) * b43 + Rational(1, 4) * b21 - 10 * b21 * b43 +
             240 * b31_2 - 40 * b21_3},
        {"order6.3", b(6, 7),
         Rational(9, 2) * b69 - 5 * b43 + Rational(1, 2) * b21 + 432 * b31_2 - 96 * b21_3},
    };
}

std::vector<TorusKnot> relation_grid(int max_n)
{
    std::vector<TorusKnot> out;
    for (const auto& c : canonical_knots(max_n))
        out.push_back(c.knot());
    return out;
}

ScanReport dependency_relations_check(const std::vector<TorusKnot>& grid, RelationReading reading)
{
    ScanReport report;
    report.name = "relations:" + reading_name(reading);
    for (TorusKnot k : grid) {
        k.require_valid();
        report.bound = std::max({report.bound, std::abs(k.n), std::abs(k.m)});
        for (const auto& rel : dependency_relations(closed_form_beta(k), reading)) {
            ++report.checked[rel.id];
            if (rel.lhs != rel.rhs)
                report.violations.push_back({k, rel.id, rel.lhs - rel.rhs,
                                             "lhs " + rel.lhs.str() + " != rhs " + rel.rhs.str()});
        }
    }
    return report;
}

ScanReport integrality_scan(int bound, bool include_noncoprime)
{
    if (bound < 2)
        throw std::invalid_argument("integrality_scan needs bound >= 2");
    ScanReport report;
    report.name = "integrality";
    report.bound = bound;
    const auto primitives = primitive_slots();
    std::map<Slot, bool> have_witness;

    for (int n = -bound; n <= bound; ++n) {
        for (int m = -bound; m <= bound; ++m) {
            if (n == 0 || m == 0)
                continue;
            const bool coprime = std::gcd(n, m) == 1;
            if (!coprime && !include_noncoprime)
                continue;
            const InvariantTable beta = closed_form_beta({n, m});
            for (Slot s : primitives) {
                const Rational& v = beta.at(s);
                if (coprime) {
                    ++report.checked[beta_id(s)];
                    if (!v.is_integer())
                        report.violations.push_back({{n, m}, beta_id(s), v, "coprime, non-integral"});
                } else if (!v.is_integer() && !have_witness[s]) {
                    have_witness[s] = true;
                    report.witnesses.push_back({{n, m}, beta_id(s), v, "non-coprime, non-integral"});
                }
            }
        }
    }
    return report;
}

namespace {

using i64 = std::int64_t;

i64 mod(i64 a, i64 p)
{
    const i64 r = a % p;
    return r < 0 ? r + p : r;
}

}  // namespace

ScanReport proposition_modular_checks(int bound)
{
    if (bound < 1)
        throw std::invalid_argument("proposition_modular_checks needs bound >= 1");
    ScanReport report;
    report.name = "modular-lemmas";
    report.bound = bound;

    auto claim = [&](const std::string& id, bool premise, bool conclusion, i64 n, i64 m) {
        if (!premise)
            return;
        ++report.checked[id];
        if (!conclusion)
            report.violations.push_back({{static_cast<int>(n), static_cast<int>(m)}, id, 0, "fails"});
    };

    for (i64 n = -bound; n <= bound; ++n) {
        if (n == 0)
            continue;
        const i64 sq = n * n;
        const bool odd = mod(n, 2) == 1;
        const i64 r3 = mod(n, 3), r5 = mod(n, 5);
        claim("n odd => n^2-1 = 0 mod 8", odd, mod(sq - 1, 8) == 0, n, 0);
        claim("n != 0 mod 3 => n^2-1 = 0 mod 3", r3 != 0, mod(sq - 1, 3) == 0, n, 0);
        claim("n odd, n != 0 mod 3 => n^2-1 = 0 mod 24", odd && r3 != 0, mod(sq - 1, 24) == 0, n, 0);
        claim("n odd, n = 0 mod 3 => n(n^2-1) = 0 mod 24", odd && r3 == 0,
              mod(n * (sq - 1), 24) == 0, n, 0);
        claim("n even => n(n^2-1) = 0 mod 6", !odd, mod(n * (sq - 1), 6) == 0, n, 0);
        claim("n odd => n^2+1 = 0 mod 2", odd, mod(sq + 1, 2) == 0, n, 0);
        claim("n = 2,3 mod 5 => n^2+1 = 0 mod 5", r5 == 2 || r5 == 3, mod(sq + 1, 5) == 0, n, 0);
        claim("n = 1,4 mod 5 => n^2-1 = 0 mod 5", r5 == 1 || r5 == 4, mod(sq - 1, 5) == 0, n, 0);
        claim("n odd, n != 0 mod 3, n != 0 mod 5 => n^4-1 = 0 mod 240", odd && r3 != 0 && r5 != 0,
              mod(sq * sq - 1, 240) == 0, n, 0);
    }

    // The conclusions depend only on (n, m) mod 720 = 16 * 9 * 5, and a
    // coprime pair never has both entries divisible by 2, 3 or 5, so this
    // loop covers every coprime pair of integers.
    constexpr i64 M = 720;
    for (i64 r = 0; r < M; ++r) {
        for (i64 s = 0; s < M; ++s) {
            const bool admissible = (r % 2 || s % 2) && (r % 3 || s % 3) && (r % 5 || s % 5);
            if (!admissible)
                continue;
            const i64 a = r * r % M, b = s * s % M;
            const i64 p = mod((a - 1) * (b - 1), M);
            claim("coprime => (n^2-1)(m^2-1) = 0 mod 24", true, p % 24 == 0, r, s);
            claim("coprime => nm(n^2-1)(m^2-1) = 0 mod 144", true, (r * s % M) * p % 144 == 0, r, s);
            claim("coprime => (n^4-1)(m^4-1) = 0 mod 240", true,
                  mod((a * a - 1) % M * ((b * b - 1) % M), 240) == 0, r, s);
            claim("coprime => (n^2-1)(m^2-1)(9n^2m^2-n^2-m^2-1) = 0 mod 240", true,
                  p * mod(9 * a * b - a - b - 1, M) % 240 == 0, r, s);
        }
    }
    return report;
}

LissajousVerdict lissajous_obstruction(TorusKnot knot)
{
    knot.require_valid();
    const Rational b21 = closed_form_beta(knot).at(2, 1);
    return (b21 / 2).is_integer() ? LissajousVerdict::Inconclusive : LissajousVerdict::Obstructed;
}

std::string verdict_name(LissajousVerdict v)
{
    return v == LissajousVerdict::Obstructed ? "obstructed" : "inconclusive";
}

AuxiliaryScalars auxiliary_scalars(TorusKnot knot)
{
    knot.require_valid();
    const InvariantTable beta = closed_form_beta(knot);
    const Rational b21 = beta.at(2, 1), b31 = beta.at(3, 1);
    AuxiliaryScalars out;
    out.v3 = 3 * (b31 - b21);
    out.v3_applicable = std::abs(knot.n) == 2 || std::abs(knot.m) == 2;
    out.gordian = Rational(std::abs(knot.n) - 1) * Rational(std::abs(knot.m) - 1) / 2;
    out.curve_residual = b31 * b31 - Rational(2, 3) * b21 * b21 * b21;
    return out;
}

}  // namespace vassiliev
