#include "vassiliev/cli.hpp"

#include "vassiliev/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace vassiliev::cli {

namespace {

using json = nlohmann::ordered_json;

/// A flat view of a payload for csv and table output.
struct Tabular {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Output {
    json payload;
    Tabular table;
    int exit_code = kOk;
};

json rational_json(const Rational& r)
{
    json j;
    j["num"] = r.numerator_str();
    j["den"] = r.denominator_str();
    if (r.is_integer())
        j["exact_decimal"] = r.numerator_str();
    return j;
}

std::string csv_rational(const Rational& r)
{
    return r.numerator_str() + "/" + r.denominator_str();
}

json knot_json(TorusKnot k)
{
    const CanonicalTorusKnot c = canonicalize(k);
    return {{"n", k.n}, {"m", k.m}, {"canonical", c.str()}, {"unknot", c.unknot}};
}

json table_json(const InvariantTable& t)
{
    json j = json::object();
    for (const auto& [slot, v] : t.entries)
        j[slot_key(slot)] = rational_json(v);
    return j;
}

InvariantTable truncated(InvariantTable t, int order)
{
    std::erase_if(t.entries, [&](const auto& e) { return e.first.order > order; });
    return t;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

void write_csv(std::ostream& os, const Tabular& t)
{
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            os << (i ? "," : "") << csv_field(cells[i]);
        os << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows)
        line(r);
}

void write_table(std::ostream& os, const Tabular& t)
{
    std::vector<std::size_t> width(t.header.size());
    auto measure = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], cells[i].size());
    };
    measure(t.header);
    for (const auto& r : t.rows)
        measure(r);
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            s += cells[i];
            if (i + 1 < cells.size())
                s += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        os << s << '\n';
    };
    line(t.header);
    std::string rule;
    for (std::size_t i = 0; i < width.size(); ++i)
        rule += std::string(width[i], '-') + (i + 1 < width.size() ? "  " : "");
    os << rule << '\n';
    for (const auto& r : t.rows)
        line(r);
}

// ---------------------------------------------------------------------------

struct InvariantsArgs {
    int n = 0, m = 0, order = kMaxOrder;
    std::string method = "closed";
};

Output cmd_invariants(const InvariantsArgs& a, int guard)
{
    if (a.order < 2 || a.order > kMaxOrder)
        throw std::invalid_argument("--order must be between 2 and " + std::to_string(kMaxOrder));
    const TorusKnot k{a.n, a.m};
    k.require_valid();

    Output out;
    InvariantTable tilde, alpha, beta;
    json extraction;
    if (a.method == "extract") {
        const Extraction et = extract_alpha_tilde(k, a.order, guard);
        const Extraction ea = extract_alpha(k, a.order, guard);
        tilde = et.table;
        alpha = ea.table;
        beta = beta_from_alpha_tilde(tilde, extract_alpha_tilde({2, 3}, a.order, guard).table);
        extraction = json::array();
        for (std::size_t i = 0; i < et.report.orders.size(); ++i) {
            const OrderReport& o = et.report.orders[i];
            extraction.push_back({{"order", o.order},
                                  {"equations", o.equations},
                                  {"unknowns", o.unknowns},
                                  {"rank", o.rank},
                                  {"consistent", o.consistent},
                                  {"residuals", o.residuals.size()},
                                  {"alpha_rank", ea.report.orders[i].rank}});
        }
    } else {
        tilde = truncated(closed_form_alpha_tilde(k), a.order);
        alpha = truncated(closed_form_alpha(k), a.order);
        beta = truncated(closed_form_beta(k), a.order);
    }

    const AuxiliaryScalars aux = auxiliary_scalars(k);
    const LissajousVerdict lissajous = lissajous_obstruction(k);

    json& p = out.payload;
    p["knot"] = knot_json(k);
    p["order"] = a.order;
    p["method"] = a.method == "extract" ? "extract" : "closed-form";
    p["alpha_tilde"] = table_json(tilde);
    p["alpha"] = table_json(alpha);
    p["beta"] = table_json(beta);
    json derived;
    derived["v3"] = aux.v3_applicable ? rational_json(aux.v3) : json(nullptr);
    derived["gordian"] = rational_json(aux.gordian);
    derived["curve_residual"] = rational_json(aux.curve_residual);
    derived["lissajous"] = verdict_name(lissajous);
    p["derived"] = derived;
    if (!extraction.is_null())
        p["extraction"] = extraction;

    out.table.header = {"name", "i", "j", "value"};
    for (const InvariantTable* t : {&tilde, &alpha, &beta})
        for (const auto& [slot, v] : t->entries)
            out.table.rows.push_back({kind_name(t->kind), std::to_string(slot.order),
                                      std::to_string(slot.index), csv_rational(v)});
    if (aux.v3_applicable)
        out.table.rows.push_back({"v3", "", "", csv_rational(aux.v3)});
    out.table.rows.push_back({"gordian", "", "", csv_rational(aux.gordian)});
    out.table.rows.push_back({"curve_residual", "", "", csv_rational(aux.curve_residual)});
    out.table.rows.push_back({"lissajous", "", "", verdict_name(lissajous)});
    return out;
}

struct ExpandArgs {
    std::string family;
    int N = 0, j = 0, n = 0, m = 0, order = kMaxOrder;
    bool unnormalized = false;
};

GroupInstance group_from(const ExpandArgs& a)
{
    const GroupFamily f = parse_family(a.family);
    auto need = [](int v, const char* flag) {
        if (v == 0)
            throw InvalidGroup(std::string("family needs ") + flag);
        return v;
    };
    switch (f) {
    case GroupFamily::SU_N:
        return GroupInstance::su_n(need(a.N, "--N"));
    case GroupFamily::SO_N:
        return GroupInstance::so_n(need(a.N, "--N"));
    case GroupFamily::SU2:
        return GroupInstance::su2(need(a.j, "--j"));
    case GroupFamily::SU_N_x_SU2:
        return GroupInstance::product(need(a.N, "--N"), need(a.j, "--j"));
    }
    throw InvalidGroup("unknown family");
}

constexpr int kMaxExpandOrder = 24;

Output cmd_expand(const ExpandArgs& a, int guard)
{
    if (a.order < 0 || a.order > kMaxExpandOrder)
        throw std::invalid_argument("--order must be between 0 and " + std::to_string(kMaxExpandOrder));
    const TorusKnot k{a.n, a.m};
    k.require_valid();
    const GroupInstance g = group_from(a);
    const TruncSeries s = a.unnormalized ? unnormalized_series(k, g, a.order, guard)
                                         : normalized_series(k, g, a.order, guard);

    Output out;
    json& p = out.payload;
    p["family"] = family_name(g.family());
    p["group"] = g.str();
    p["knot"] = knot_json(k);
    p["normalized"] = !a.unnormalized;
    p["order"] = a.order;
    json coeffs = json::array();
    out.table.header = {"power", "coefficient"};
    for (int d = 0; d <= a.order; ++d) {
        coeffs.push_back(rational_json(s.coeff(d)));
        out.table.rows.push_back({std::to_string(d), csv_rational(s.coeff(d))});
    }
    p["coefficients"] = coeffs;
    p["series"] = s.str();
    return out;
}

struct VerifyArgs {
    std::string suite = "all";
    int bound = 0;
    std::string reading = "rhs-beta54";
    std::string fault = "none";
};

Output cmd_verify(const VerifyArgs& a, int guard)
{
    VerifyOptions options;
    options.bound = a.bound;
    options.reading = parse_reading(a.reading);
    options.fault = a.fault == "sign" ? Fault::Sign : Fault::None;
    options.guard = guard;

    std::vector<std::string> names;
    if (a.suite == "all") {
        names = suite_names();
        options.bound = 0;  // every suite keeps its own default size
    } else {
        names = {a.suite};
    }

    Output out;
    json suites = json::array();
    json first_failure = nullptr;
    bool pass = true;
    out.table.header = {"suite", "result", "checked", "failures", "first_failure"};
    for (const std::string& name : names) {
        const SuiteResult r = run_suite(name, options);
        pass = pass && r.pass;
        if (!r.pass && first_failure.is_null())
            first_failure = r.name + ": " + r.failures.front();
        suites.push_back({{"name", r.name},
                          {"pass", r.pass},
                          {"checked", r.checked},
                          {"failure_count", r.failure_count},
                          {"failures", r.failures},
                          {"notes", r.notes}});
        out.table.rows.push_back({r.name, r.pass ? "pass" : "FAIL", std::to_string(r.checked),
                                  std::to_string(r.failure_count),
                                  r.failures.empty() ? "" : r.failures.front()});
    }
    out.payload["suite"] = a.suite;
    out.payload["pass"] = pass;
    out.payload["first_failure"] = first_failure;
    out.payload["suites"] = suites;
    out.exit_code = pass ? kOk : kVerificationFailed;
    return out;
}

struct ScanArgs {
    std::string predicate;
    int max = 10;
};

Output cmd_scan(const ScanArgs& a)
{
    if (a.max < 2)
        throw std::invalid_argument("--max must be at least 2");
    Output out;
    json rows = json::array();
    if (a.predicate == "lissajous-obstructed") {
        out.table.header = {"n", "m", "beta_21"};
        for (const auto& c : canonical_knots(a.max)) {
            if (lissajous_obstruction(c.knot()) != LissajousVerdict::Obstructed)
                continue;
            const Rational b21 = closed_form_beta(c.knot()).at(2, 1);
            rows.push_back({{"n", c.n}, {"m", c.m}, {"beta_21", rational_json(b21)}});
            out.table.rows.push_back({std::to_string(c.n), std::to_string(c.m), csv_rational(b21)});
        }
    } else if (a.predicate == "non-integer") {
        out.table.header = {"n", "m", "invariant", "value"};
        for (int n = 2; n <= a.max; ++n)
            for (int m = 2; m <= n; ++m) {
                if (std::gcd(n, m) == 1)
                    continue;
                const InvariantTable beta = closed_form_beta({n, m});
                for (Slot s : primitive_slots()) {
                    const Rational& v = beta.at(s);
                    if (v.is_integer())
                        continue;
                    const std::string id = "beta_" + std::to_string(s.order) + std::to_string(s.index);
                    rows.push_back({{"n", n}, {"m", m}, {"invariant", id}, {"value", rational_json(v)}});
                    out.table.rows.push_back({std::to_string(n), std::to_string(m), id, csv_rational(v)});
                }
            }
    } else if (a.predicate == "beta-curve") {
        out.table.header = {"n", "m", "beta_21", "beta_31"};
        for (const auto& c : canonical_knots(a.max)) {
            const InvariantTable beta = closed_form_beta(c.knot());
            rows.push_back({{"n", c.n},
                            {"m", c.m},
                            {"beta_21", rational_json(beta.at(2, 1))},
                            {"beta_31", rational_json(beta.at(3, 1))}});
            out.table.rows.push_back({std::to_string(c.n), std::to_string(c.m),
                                      csv_rational(beta.at(2, 1)), csv_rational(beta.at(3, 1))});
        }
    } else {
        throw std::invalid_argument("unknown predicate '" + a.predicate + "'");
    }
    out.payload["predicate"] = a.predicate;
    out.payload["max"] = a.max;
    out.payload["count"] = rows.size();
    out.payload["rows"] = rows;
    return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Vassiliev invariants of torus knots from knot polynomial series", "torus-vassiliev"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::string out_path;
    int guard = kDefaultGuard;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--out", out_path, "Write the document to this file instead of stdout");
    app.add_option("--guard-terms", guard, "Extra series terms carried through divisions")
        ->check(CLI::NonNegativeNumber);

    InvariantsArgs inv;
    auto* c_inv = app.add_subcommand("invariants", "alpha-tilde, alpha and beta tables of a knot");
    c_inv->add_option("--n", inv.n, "First torus knot parameter")->required();
    c_inv->add_option("--m", inv.m, "Second torus knot parameter")->required();
    c_inv->add_option("--order", inv.order, "Highest order (2..6)");
    c_inv->add_option("--method", inv.method, "closed: closed forms; extract: solve from series")
        ->check(CLI::IsMember({"closed", "extract"}));

    ExpandArgs exp;
    auto* c_exp = app.add_subcommand("expand", "Series coefficients of a knot polynomial");
    c_exp->add_option("--family", exp.family, "su_n, so_n, su2 or su_n_x_su2")->required();
    c_exp->add_option("--N", exp.N, "Rank parameter of SU(N) / SO(N)");
    c_exp->add_option("--j", exp.j, "SU(2) spin label (spin j/2)");
    c_exp->add_option("--n", exp.n, "First torus knot parameter")->required();
    c_exp->add_option("--m", exp.m, "Second torus knot parameter")->required();
    c_exp->add_option("--order", exp.order, "Truncation order");
    c_exp->add_flag("--unnormalized", exp.unnormalized, "Multiply by the unknot factor");

    VerifyArgs ver;
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("all");
    auto* c_ver = app.add_subcommand("verify", "Run verification suites");
    c_ver->add_option("--suite", ver.suite, "Suite name or all")->check(CLI::IsMember(suite_choices));
    c_ver->add_option("--bound", ver.bound, "Suite size (single suite only)")->check(CLI::PositiveNumber);
    c_ver->add_option("--reading", ver.reading, "Order-5 relation reading")
        ->check(CLI::IsMember({"printed", "lhs-beta54", "rhs-beta54"}));
    c_ver->add_option("--inject-fault", ver.fault, "Corrupt an oracle to test the harness")
        ->check(CLI::IsMember({"none", "sign"}));

    ScanArgs scan;
    auto* c_scan = app.add_subcommand("scan", "Scan knots for a predicate");
    c_scan->add_option("--predicate", scan.predicate, "lissajous-obstructed, non-integer or beta-curve")
        ->required()
        ->check(CLI::IsMember({"lissajous-obstructed", "non-integer", "beta-curve"}));
    c_scan->add_option("--max", scan.max, "Largest n scanned");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUnsupported;
    }

    json command;
    command["name"] = app.get_subcommands().front()->get_name();
    command["argv"] = std::vector<std::string>(argv + 1, argv + argc);

    Output result;
    try {
        if (c_inv->parsed())
            result = cmd_invariants(inv, guard);
        else if (c_exp->parsed())
            result = cmd_expand(exp, guard);
        else if (c_ver->parsed())
            result = cmd_verify(ver, guard);
        else
            result = cmd_scan(scan);
    } catch (const NotAKnot& e) {
        err << "error: not a knot: " << e.what() << '\n';
        return kInvalidKnot;
    } catch (const InvalidGroup& e) {
        err << "error: " << e.what() << '\n';
        return kUnsupported;
    } catch (const SingularBracket& e) {
        err << "error: " << e.what() << '\n';
        return kUnsupported;
    } catch (const TruncationUnderflow& e) {
        err << "error: " << e.what() << '\n';
        return kUnsupported;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUnsupported;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }

    std::ostringstream doc;
    if (format == "json") {
        json d;
        d["schema_version"] = kSchemaVersion;
        d["command"] = command;
        d["payload"] = result.payload;
        doc << d.dump(2) << '\n';
    } else if (format == "csv") {
        write_csv(doc, result.table);
    } else {
        write_table(doc, result.table);
    }

    if (out_path.empty()) {
        out << doc.str();
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!(file << doc.str())) {
            err << "error: cannot write " << out_path << '\n';
            return kUnsupported;
        }
    }
    if (result.exit_code == kVerificationFailed && result.payload.contains("first_failure"))
        err << "FAIL " << result.payload["first_failure"].get<std::string>() << '\n';
    return result.exit_code;
}

}  // namespace vassiliev::cli
