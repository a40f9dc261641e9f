#pragma once

#include "vassiliev/analysis.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace vassiliev::cli {

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInvalidKnot = 2,
    kUnsupported = 3,
};

/// Entry point of the torus-vassiliev tool. Writes the document to `out`
/// (or to --out) and diagnostics to `err`; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct SuiteResult {
    explicit SuiteResult(std::string suite = {}) : name(std::move(suite)) {}

    std::string name;
    bool pass = true;
    long checked = 0;
    /// Total number of failed checks; `failures` keeps only the first few.
    long failure_count = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void fail(std::string what);
    void expect(bool ok, const std::string& what);
};

/// Deliberate corruption of an oracle, to prove the suites can fail.
enum class Fault { None, Sign };

struct VerifyOptions {
    /// Suite-specific size; 0 selects the suite default.
    int bound = 0;
    RelationReading reading = RelationReading::RhsBeta54;
    Fault fault = Fault::None;
    int guard = kDefaultGuard;
};

/// closed-forms, alpha, gtables, trefoil, relations, integrality,
/// injectivity, v3, cross-checks
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

/// The knots used by the extraction suites.
std::vector<TorusKnot> verification_grid();

}  // namespace vassiliev::cli
