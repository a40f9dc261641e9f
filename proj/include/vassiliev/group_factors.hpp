#pragma once

#include "vassiliev/group.hpp"
#include "vassiliev/rational.hpp"
#include "vassiliev/slots.hpp"

#include <array>
#include <vector>

namespace vassiliev {

/// Casimir traces of one simple factor, plus the representation dimension.
struct CasimirSet {
    Rational C2, C3, C4, C5, C6_1, C6_2;
    Rational dim;

    friend bool operator==(const CasimirSet&, const CasimirSet&) = default;
};

/// Casimirs of a simple family: SU(N) with N >= 2, SO(N) with N >= 3, or
/// SU(2) at spin label j >= 1. The SU(2) table is a polynomial in
/// c = s(s+1) evaluated at the spin s = j/2. Throws InvalidGroup.
CasimirSet casimirs(GroupFamily family, int parameter);

/// One CasimirSet per simple factor of the instance.
std::vector<CasimirSet> casimir_sets(const GroupInstance& group);

/// Group factors r_{ij} for orders 0..6.
class GroupFactorVector {
public:
    /// Throws std::out_of_range for a slot that does not exist.
    const Rational& r(int order, int index) const;
    const Rational& r(Slot s) const { return r(s.order, s.index); }
    Rational& r(int order, int index);

    const Rational& dim() const { return dim_; }
    void set_dim(Rational d) { dim_ = std::move(d); }

    friend bool operator==(const GroupFactorVector&, const GroupFactorVector&) = default;

private:
    std::array<std::vector<Rational>, kMaxOrder + 1> r_ = {
        std::vector<Rational>(1), {}, std::vector<Rational>(1), std::vector<Rational>(1),
        std::vector<Rational>(3), std::vector<Rational>(4), std::vector<Rational>(9)};
    Rational dim_ = 1;
};

/// Primitive factors are sums over the simple factors; compound factors
/// are products of primitives. Throws ZeroCasimirDivision when a C2 that
/// appears in a denominator vanishes, and std::invalid_argument on an empty
/// list.
GroupFactorVector group_factor_vector(const std::vector<CasimirSet>& factors);
GroupFactorVector group_factor_vector(const GroupInstance& group);

}  // namespace vassiliev
