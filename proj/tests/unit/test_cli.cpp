#include "doctest.h"

#include "vassiliev/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using json = nlohmann::json;
using namespace vassiliev;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;

    json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "torus-vassiliev");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string frac(const json& r)
{
    return r.at("num").get<std::string>() + "/" + r.at("den").get<std::string>();
}

}  // namespace

TEST_CASE("invariants of the trefoil")
{
    const Run r = run({"invariants", "--n", "2", "--m", "3"});
    REQUIRE(r.code == 0);
    const json d = r.doc();
    CHECK(d["schema_version"] == "1.0");
    CHECK(d["command"]["name"] == "invariants");
    CHECK(d["command"]["argv"].size() == 5);

    const json& p = d["payload"];
    CHECK(p["knot"]["canonical"] == "{3,2}");
    CHECK(p["knot"]["unknot"] == false);
    const std::vector<std::pair<std::string, std::string>> betas = {
        {"2,1", "1"},    {"3,1", "1"}, {"4,2", "31"},   {"4,3", "5"},
        {"5,2", "11"},   {"5,3", "1"}, {"5,4", "1"},    {"6,5", "5071"},
        {"6,6", "29"},   {"6,7", "1531"}, {"6,8", "17"}, {"6,9", "271"}};
    for (const auto& [slot, value] : betas) {
        CAPTURE(slot);
        CHECK(p["beta"][slot]["exact_decimal"] == value);
    }
    CHECK(frac(p["alpha_tilde"]["6,5"]) == "5071/30");
    CHECK(frac(p["alpha"]["2,1"]) == "23/6");
    CHECK(frac(p["derived"]["v3"]) == "0/1");
    CHECK(p["derived"]["gordian"]["exact_decimal"] == "1");
    CHECK(p["derived"]["lissajous"] == "obstructed");
    CHECK(p["beta"]["4,2"].contains("den"));
}

TEST_CASE("invariants: order truncation, unknot and bad input")
{
    const json p = run({"invariants", "--n", "5", "--m", "-3", "--order", "4"}).doc()["payload"];
    CHECK(p["beta"].size() == 5);  // 21, 31, 41, 42, 43
    CHECK(p["derived"]["v3"].is_null());

    const Run u = run({"invariants", "--n", "1", "--m", "9"});
    REQUIRE(u.code == 0);
    const json up = u.doc()["payload"];
    CHECK(up["knot"]["unknot"] == true);
    CHECK(up["knot"]["canonical"] == "unknot");
    for (const char* table : {"alpha_tilde", "beta"})
        for (const auto& [key, value] : up[table].items())
            CHECK(value["num"] == "0");
    // alpha keeps the unknot's own expansion
    CHECK(frac(up["alpha"]["2,1"]) == "-1/6");
    CHECK(frac(up["alpha"]["3,1"]) == "0/1");

    CHECK(run({"invariants", "--n", "2", "--m", "4"}).code == cli::kInvalidKnot);
    CHECK(run({"invariants", "--n", "0", "--m", "3"}).code == cli::kInvalidKnot);
    CHECK(run({"invariants", "--n", "2", "--m", "3", "--order", "7"}).code == cli::kUnsupported);
    CHECK(run({"invariants", "--n", "2"}).code == cli::kUnsupported);
    CHECK(run({"frobnicate"}).code == cli::kUnsupported);
    CHECK_FALSE(run({"invariants", "--n", "2", "--m", "4"}).err.empty());
}

TEST_CASE("invariants --method extract agrees with closed forms")
{
    const json closed = run({"invariants", "--n", "3", "--m", "-5"}).doc()["payload"];
    const json extracted =
        run({"invariants", "--n", "3", "--m", "-5", "--method", "extract"}).doc()["payload"];
    for (const char* table : {"alpha_tilde", "alpha", "beta"})
        CHECK(closed[table] == extracted[table]);
    REQUIRE(extracted["extraction"].size() == 5);
    CHECK(extracted["extraction"][4]["rank"] == 9);
}

TEST_CASE("csv and table output")
{
    const Run csv = run({"invariants", "--n", "2", "--m", "3", "--format", "csv"});
    REQUIRE(csv.code == 0);
    std::istringstream lines(csv.out);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header == "name,i,j,value");
    CHECK(first == "alpha_tilde,2,1,4/1");
    CHECK(csv.out.find("beta,6,9,271/1\n") != std::string::npos);
    CHECK(csv.out.find("lissajous,,,obstructed\n") != std::string::npos);

    const Run table = run({"invariants", "--n", "2", "--m", "3", "--format", "table"});
    CHECK(table.out.rfind("name", 0) == 0);
    CHECK(run({"invariants", "--n", "2", "--m", "3", "--format", "xml"}).code == cli::kUnsupported);
}

TEST_CASE("expand")
{
    const json su = run({"expand", "--family", "su_n", "--N", "2", "--n", "2", "--m", "3", "--order", "2"})
                        .doc()["payload"];
    CHECK(frac(su["coefficients"][2]) == "-3/1");
    CHECK(su["normalized"] == true);

    const json su2 = run({"expand", "--family", "su2", "--j", "1", "--n", "1", "--m", "5"}).doc()["payload"];
    CHECK(su2["coefficients"][0]["exact_decimal"] == "1");
    for (std::size_t d = 1; d < su2["coefficients"].size(); ++d)
        CHECK(su2["coefficients"][d]["num"] == "0");

    const json so = run({"expand", "--family", "so_n", "--N", "7", "--n", "2", "--m", "3", "--order", "2"})
                        .doc()["payload"];
    CHECK(frac(so["coefficients"][2]) == "-15/2");

    const json un = run({"expand", "--family", "su_n", "--N", "3", "--n", "2", "--m", "3", "--order", "1",
                         "--unnormalized"})
                        .doc()["payload"];
    CHECK(un["coefficients"][0]["exact_decimal"] == "3");  // fundamental of SU(3)

    CHECK(run({"expand", "--family", "so_n", "--N", "3", "--n", "2", "--m", "3"}).code == cli::kUnsupported);
    CHECK(run({"expand", "--family", "su_n", "--n", "2", "--m", "3"}).code == cli::kUnsupported);
    CHECK(run({"expand", "--family", "e8", "--N", "3", "--n", "2", "--m", "3"}).code == cli::kUnsupported);
    CHECK(run({"expand", "--family", "su_n", "--N", "3", "--n", "4", "--m", "6"}).code == cli::kInvalidKnot);
}

TEST_CASE("verify")
{
    const Run rel = run({"verify", "--suite", "relations"});
    CHECK(rel.code == 0);
    CHECK(rel.doc()["payload"]["pass"] == true);

    const Run integ = run({"verify", "--suite", "integrality", "--bound", "30"});
    CHECK(integ.code == 0);
    CHECK(integ.doc()["payload"]["suites"][0]["notes"].size() == 12);

    const Run lhs = run({"verify", "--suite", "relations", "--reading", "lhs-beta54"});
    CHECK(lhs.code == cli::kVerificationFailed);
    CHECK(lhs.doc()["payload"]["first_failure"].get<std::string>().find("{4,-3} order5.1") !=
          std::string::npos);

    const Run broken = run({"verify", "--suite", "all", "--inject-fault", "sign"});
    CHECK(broken.code == cli::kVerificationFailed);
    const std::string first = broken.doc()["payload"]["first_failure"];
    CHECK(first.find("closed-forms: alpha_tilde_4,3") == 0);
    CHECK(broken.err.find(first) != std::string::npos);
}

TEST_CASE("scan")
{
    const json lis = run({"scan", "--predicate", "lissajous-obstructed", "--max", "10"}).doc()["payload"];
    auto has = [&](int n, int m) {
        for (const auto& row : lis["rows"])
            if (row["n"] == n && row["m"] == m)
                return true;
        return false;
    };
    CHECK(has(3, 2));
    CHECK(has(5, 2));
    CHECK(has(4, 3));
    CHECK_FALSE(has(5, 3));  // beta_21 = 12

    const json ni = run({"scan", "--predicate", "non-integer", "--max", "6"}).doc()["payload"];
    REQUIRE(ni["count"].get<int>() > 0);
    CHECK(ni["rows"][0]["n"] == 2);
    CHECK(ni["rows"][0]["m"] == 2);
    CHECK(ni["rows"][0]["invariant"] == "beta_21");
    CHECK(frac(ni["rows"][0]["value"]) == "3/8");

    const Run curve = run({"scan", "--predicate", "beta-curve", "--max", "20", "--format", "csv"});
    CHECK(curve.out.rfind("n,m,beta_21,beta_31\n3,-2,1/1,-1/1\n", 0) == 0);
    CHECK(run({"scan", "--predicate", "nope"}).code == cli::kUnsupported);
}

TEST_CASE("--out and determinism")
{
    const std::string path = "test_cli_out.json";
    const Run r = run({"--out", path, "invariants", "--n", "4", "--m", "7"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream file;
    file << in.rdbuf();
    CHECK(json::parse(file.str())["payload"]["knot"]["canonical"] == "{7,4}");
    std::remove(path.c_str());

    const auto a = run({"invariants", "--n", "5", "--m", "6"});
    const auto b = run({"invariants", "--n", "5", "--m", "6"});
    CHECK(a.out == b.out);
}

TEST_CASE("guard terms")
{
    const auto a = run({"--guard-terms", "1", "invariants", "--n", "2", "--m", "5", "--method", "extract"});
    const auto b = run({"--guard-terms", "4", "invariants", "--n", "2", "--m", "5", "--method", "extract"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.doc()["payload"]["beta"] == b.doc()["payload"]["beta"]);
    CHECK(run({"--guard-terms", "-1", "invariants", "--n", "2", "--m", "5"}).code == cli::kUnsupported);
    // the HOMFLY division loses a term, so no guard at all is not enough
    const auto none = run({"--guard-terms", "0", "invariants", "--n", "2", "--m", "5", "--method", "extract"});
    CHECK(none.code == cli::kUnsupported);
    CHECK(none.err.find("raise the guard") != std::string::npos);
}
