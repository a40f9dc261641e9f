#pragma once

// Properties of the normalized torus-knot invariants: canonical forms,
// injectivity of the low-order pair, relations among the betas, integrality
// scans, and a few derived scalars.

#include "vassiliev/extractor.hpp"
#include "vassiliev/rational.hpp"
#include "vassiliev/torus_knot.hpp"

#include <map>
#include <string>
#include <vector>

namespace vassiliev {

/// Representative with n > |m| > 1 (chirality kept in the sign of m), or the
/// unknot, which is a single distinguished value.
struct CanonicalTorusKnot {
    int n = 1;
    int m = 1;
    bool unknot = true;

    TorusKnot knot() const { return {n, m}; }
    /// "{n,m}" or "unknot"
    std::string str() const;

    friend auto operator<=>(const CanonicalTorusKnot&, const CanonicalTorusKnot&) = default;
};

/// Throws NotAKnot when gcd(|n|, |m|) != 1 or either entry is 0.
CanonicalTorusKnot canonicalize(int n, int m);
CanonicalTorusKnot canonicalize(TorusKnot k);

/// Every nontrivial canonical knot with n <= max_n, both chiralities,
/// ordered by (n, m).
std::vector<CanonicalTorusKnot> canonical_knots(int max_n);

struct Finding {
    TorusKnot knot;
    std::string invariant;
    Rational value;
    std::string detail;
};

struct ScanReport {
    std::string name;
    int bound = 0;
    /// Number of evaluations per invariant or claim id.
    std::map<std::string, long> checked;
    /// Counterexamples to the claim. Empty means it holds on the range.
    std::vector<Finding> violations;
    /// Supporting examples, e.g. non-coprime pairs with non-integral beta.
    std::vector<Finding> witnesses;

    bool ok() const { return violations.empty(); }
};

/// Looks for two canonical knots (plus the unknot) with n <= max_n sharing
/// (beta_21, beta_31). Also checks that equal pairs would force equal nm
/// and n^2 + m^2. Throws std::invalid_argument for max_n < 2.
ScanReport distinguishing_check(int max_n);

/// How the order-5 relations are read. The printed second relation is
/// beta_53 = 3/4 beta_53 + ...; one reading swaps its left side to beta_54,
/// the other replaces beta_53 by beta_54 on the right of both relations.
enum class RelationReading { Printed, LhsBeta54, RhsBeta54 };

std::string reading_name(RelationReading r);
/// "printed", "lhs-beta54", "rhs-beta54"
RelationReading parse_reading(const std::string& name);

struct RelationValues {
    std::string id;
    Rational lhs;
    Rational rhs;
};

/// Both sides of the order 4, 5 and 6 relations for one beta table.
std::vector<RelationValues> dependency_relations(const InvariantTable& beta,
                                                 RelationReading reading);

/// Evaluates every relation on each knot of the grid using the closed-form
/// betas. Violations carry lhs - rhs.
ScanReport dependency_relations_check(const std::vector<TorusKnot>& grid,
                                      RelationReading reading = RelationReading::RhsBeta54);

/// All coprime nontrivial canonical knots with n <= max_n.
std::vector<TorusKnot> relation_grid(int max_n);

/// Checks that every primitive beta is an integer for coprime pairs with
/// 1 <= |n|, |m| <= bound. With include_noncoprime, the first non-integral
/// value for each primitive on non-coprime pairs is kept as a witness.
ScanReport integrality_scan(int bound, bool include_noncoprime = true);

/// The divisibility lemmas used in the integrality proofs of orders 2-4,
/// checked for every integer 1 <= |n| <= bound, plus the four divisibility
/// conclusions over every residue pair modulo 720 that coprime integers
/// can occupy. The latter covers all coprime pairs.
ScanReport proposition_modular_checks(int bound);

enum class LissajousVerdict { Obstructed, Inconclusive };

/// Obstructed when beta_21 (the Arf invariant mod 2) is odd.
LissajousVerdict lissajous_obstruction(TorusKnot knot);
std::string verdict_name(LissajousVerdict v);

struct AuxiliaryScalars {
    /// 3 (beta_31 - beta_21); equals the order-3 invariant only for the
    /// (2, 2p+1) family, flagged by v3_applicable.
    Rational v3;
    bool v3_applicable = false;
    /// (|n| - 1)(|m| - 1) / 2
    Rational gordian;
    /// beta_31^2 - 2/3 beta_21^3
    Rational curve_residual;
};

AuxiliaryScalars auxiliary_scalars(TorusKnot knot);

}  // namespace vassiliev
