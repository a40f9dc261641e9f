#pragma once

// Vassiliev invariants of torus knots: exact extraction from the knot
// polynomial series, closed-form tables, and the ansatz fit of the
// per-group expansion coefficients.

#include "vassiliev/group.hpp"
#include "vassiliev/group_factors.hpp"
#include "vassiliev/knot_polynomials.hpp"
#include "vassiliev/matrix.hpp"
#include "vassiliev/poly.hpp"
#include "vassiliev/slots.hpp"
#include "vassiliev/torus_knot.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace vassiliev {

enum class InvariantKind { AlphaTilde, Alpha, Beta };

/// "alpha_tilde", "alpha", "beta"
std::string kind_name(InvariantKind kind);

struct InvariantTable {
    InvariantKind kind = InvariantKind::AlphaTilde;
    TorusKnot knot;
    std::map<Slot, Rational> entries;

    /// Throws std::out_of_range for a slot not in the table.
    const Rational& at(int order, int index) const;
    const Rational& at(Slot s) const { return at(s.order, s.index); }

    friend bool operator==(const InvariantTable&, const InvariantTable&) = default;
};

// ---------------------------------------------------------------------------
// Extraction

using InstantiationPlan = std::vector<GroupInstance>;

/// SU(N) at N = 2..7, SO(N) at N = b..b+5 with b = max(5, |n|+2), SU(2) at
/// j = 1..6, and SU(N) x SU(2) at seven (N, j) pairs.
InstantiationPlan default_plan(TorusKnot knot);

/// Series whose x^i coefficient equals sum_j r_ij * invariant_ij.
using SeriesSource = std::function<TruncSeries(TorusKnot, const GroupInstance&)>;

/// normalized_series for alpha-tilde, unnormalized_series / d(R) for alpha.
SeriesSource polynomial_source(InvariantKind kind, int trunc_order = kDefaultOrder,
                               int guard = kDefaultGuard);

/// One row per instantiation: the order-i group factors, augmented with the
/// x^i coefficient of the source series.
ExactMatrix assemble_system(TorusKnot knot, int order, const InstantiationPlan& plan,
                            const SeriesSource& source);
ExactMatrix assemble_system(TorusKnot knot, int order, const InstantiationPlan& plan);

struct Residual {
    std::string instantiation;
    Rational value;
};

struct OrderReport {
    int order = 0;
    std::size_t equations = 0;
    std::size_t unknowns = 0;
    std::size_t rank = 0;
    bool consistent = false;
    /// Rows the solution does not satisfy. Empty after a successful solve.
    std::vector<Residual> residuals;
};

struct ExtractionReport {
    std::vector<OrderReport> orders;

    bool ok() const;
};

struct Extraction {
    InvariantTable table;
    ExtractionReport report;
};

/// Solves orders 2..trunc_order (trunc_order <= 6). Throws RankDeficient or
/// Inconsistent carrying the failing order, NotAKnot for invalid input,
/// std::invalid_argument for an unsupported order.
Extraction extract_with_source(TorusKnot knot, InvariantKind kind, int trunc_order,
                               const InstantiationPlan& plan, const SeriesSource& source);

Extraction extract_alpha_tilde(TorusKnot knot, int trunc_order = kDefaultOrder,
                               int guard = kDefaultGuard);
Extraction extract_alpha_tilde(TorusKnot knot, int trunc_order, const InstantiationPlan& plan,
                               int guard = kDefaultGuard);

Extraction extract_alpha(TorusKnot knot, int trunc_order = kDefaultOrder, int guard = kDefaultGuard);
Extraction extract_alpha(TorusKnot knot, int trunc_order, const InstantiationPlan& plan,
                         int guard = kDefaultGuard);

// ---------------------------------------------------------------------------
// Closed forms. Polynomial in n and m, so any integers are accepted.

/// The order-4 slot 2 entry uses the n <-> m symmetric 9 n^2 m^2 term.
InvariantTable closed_form_alpha_tilde(TorusKnot knot);
InvariantTable closed_form_alpha(TorusKnot knot);
InvariantTable closed_form_beta(TorusKnot knot);

/// Integer multipliers that fix each primitive beta at the trefoil.
const std::map<Slot, Rational>& trefoil_normalizers();

/// Primitive beta_ij = normalizer_ij * at_ij / trefoil_ij; compound entries
/// are products of primitives. Slots missing from alpha_tilde are skipped.
InvariantTable beta_from_alpha_tilde(const InvariantTable& alpha_tilde,
                                     const InvariantTable& trefoil_alpha_tilde);
InvariantTable beta_from_alpha_tilde(const InvariantTable& alpha_tilde);

/// Identities that compound invariants satisfy in each normalization.
/// Returns the failing slot keys (empty when all hold).
std::vector<std::string> compound_identity_failures(const InvariantTable& table);

// ---------------------------------------------------------------------------
// Ansatz

/// Number of g functions per order 0..6.
inline constexpr std::array<int, kMaxOrder + 1> kAnsatzSlotCount = {0, 0, 1, 1, 3, 3, 6};

/// Symmetric monomials in a = n^2, b = m^2 multiplying each g at the order.
std::vector<Rational> ansatz_basis(int order, TorusKnot knot);
/// (n^2-1)(m^2-1), times nm at odd order.
Rational ansatz_prefactor(int order, TorusKnot knot);

struct AnsatzFit {
    GroupFamily family = GroupFamily::SU_N;
    /// "N" for SU(N) and SO(N), "A" = -j(j+2)/4 for SU(2).
    std::string variable;
    std::map<Slot, ExactPoly> g;

    /// x^order coefficient of the normalized series predicted by the fit.
    Rational coefficient(TorusKnot knot, int order, const Rational& variable_value) const;
};

/// Variable value of the fit for a group parameter: N, or A(j).
Rational ansatz_variable(GroupFamily family, int parameter);

std::vector<TorusKnot> default_ansatz_grid();

/// Fits every g over the default grid and interpolates it in the group
/// variable. SU(N) uses N = 2..10, SO(N) N = 7..15, SU(2) j = 1..8.
/// Throws AnsatzMismatch if the coefficients do not fit the ansatz shape.
AnsatzFit fit_ansatz(GroupFamily family, int trunc_order = kDefaultOrder);

/// Normalized series reconstructed from fits; the product group multiplies
/// its SU(N) and SU(2) parts. Missing fits raise InvalidGroup.
SeriesSource ansatz_source(const std::vector<AnsatzFit>& fits, int trunc_order = kDefaultOrder);

/// The g tables as printed in the literature, typos included.
std::map<Slot, ExactPoly> printed_g_table(GroupFamily family);
/// Printed entries known to be misprinted.
std::vector<Slot> suspect_g_entries(GroupFamily family);

struct GComparison {
    Slot slot;
    ExactPoly printed;
    ExactPoly fitted;
    bool matches = false;
    bool suspect = false;
};

std::vector<GComparison> compare_g_tables(const AnsatzFit& fit);

}  // namespace vassiliev
