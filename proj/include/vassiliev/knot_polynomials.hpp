#pragma once

// Quantum invariants of torus knots expanded as truncated power series in
// x. All evaluators take a concrete group parameter, so every coefficient
// is a plain rational.

#include "vassiliev/group.hpp"
#include "vassiliev/series.hpp"
#include "vassiliev/torus_knot.hpp"

namespace vassiliev {

inline constexpr int kDefaultOrder = 6;
/// Extra series terms carried through intermediate Laurent divisions.
inline constexpr int kDefaultGuard = 2;

/// t^exponent with t = exp(scale * x).
TruncSeries qpower(const Rational& exponent, const Rational& scale, int trunc_order);

/// Normalized HOMFLY invariant of the torus knot for SU(N), t = e^x and
/// lambda = t^(N-1). Needs n >= 1; the 1/(lambda t - 1) prefactor is
/// cancelled against the j = 0 factor of each summand's product, and
/// CancellationFailure is raised when that pairing is impossible.
TruncSeries homfly_normalized(TorusKnot knot, int N, int trunc_order = kDefaultOrder,
                              int guard = kDefaultGuard);

/// Normalized Kauffman invariant for SO(N), t = e^(x/2) and
/// lambda = t^((N-1)/2). Needs n >= 1 and N >= n + 2 so that no bracket
/// [p;1] vanishes identically; SingularBracket otherwise.
TruncSeries kauffman_normalized(TorusKnot knot, int N, int trunc_order = kDefaultOrder,
                                int guard = kDefaultGuard);

/// Normalized Akutsu-Wadati invariant for SU(2) in spin j/2, t = e^x.
/// j = 1 is the Jones polynomial.
TruncSeries akutsu_wadati_normalized(TorusKnot knot, int j, int trunc_order = kDefaultOrder,
                                     int guard = kDefaultGuard);

/// Quantum dimension of the representation (the unknot's Wilson line).
/// Its constant term is the classical dimension.
TruncSeries unknot_factor(const GroupInstance& group, int trunc_order = kDefaultOrder,
                          int guard = kDefaultGuard);

/// Dispatches on the group family. A knot with n < 0 is first replaced by
/// the equivalent {-n,-m}; the product group multiplies its two factors.
TruncSeries normalized_series(TorusKnot knot, const GroupInstance& group,
                              int trunc_order = kDefaultOrder, int guard = kDefaultGuard);

/// normalized_series times unknot_factor.
TruncSeries unnormalized_series(TorusKnot knot, const GroupInstance& group,
                                int trunc_order = kDefaultOrder, int guard = kDefaultGuard);

}  // namespace vassiliev
