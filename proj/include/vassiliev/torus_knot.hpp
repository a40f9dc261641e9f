#pragma once

#include <compare>
#include <string>

namespace vassiliev {

/// Torus knot {n, m}. A genuine knot needs gcd(|n|, |m|) == 1 and
/// |n|, |m| >= 1. {n,m}, {m,n}, {-n,-m} and {-m,-n} are the same knot;
/// {n,-m} is the mirror image of {n,m}.
struct TorusKnot {
    int n = 0;
    int m = 0;

    bool is_valid() const;
    /// Throws NotAKnot unless is_valid().
    void require_valid() const;
    /// |n| == 1 or |m| == 1.
    bool is_unknot() const;

    TorusKnot swapped() const { return {m, n}; }
    TorusKnot mirrored() const { return {n, -m}; }
    TorusKnot negated() const { return {-n, -m}; }

    /// "{n,m}"
    std::string str() const;

    friend bool operator==(const TorusKnot&, const TorusKnot&) = default;
    friend auto operator<=>(const TorusKnot&, const TorusKnot&) = default;
};

}  // namespace vassiliev
