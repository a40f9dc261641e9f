#include "doctest.h"
#include "generators.hpp"

#include "vassiliev/matrix.hpp"

using namespace vassiliev;

namespace {

ExactMatrix system_of(const std::vector<std::vector<long>>& rows)
{
    ExactMatrix m(0, rows.front().size() - 1);
    for (const auto& r : rows) {
        std::vector<Rational> coeffs(r.begin(), r.end() - 1);
        m.append_row(coeffs, r.back());
    }
    return m;
}

}  // namespace

TEST_CASE("identity system")
{
    const auto r = solve_exact(system_of({{1, 0, 4}, {0, 1, 8}}));
    REQUIRE(r.solution);
    CHECK(r.rank == 2);
    CHECK(r.consistent);
    CHECK((*r.solution)[0] == Rational(4));
    CHECK((*r.solution)[1] == Rational(8));
}

TEST_CASE("dependent rows give a rank diagnosis")
{
    const auto r = solve_exact(system_of({{1, 1, 2}, {2, 2, 4}}));
    CHECK_FALSE(r.solution);
    CHECK(r.rank == 1);
    CHECK(r.consistent);
}

TEST_CASE("consistent overdetermined system")
{
    const auto r = solve_exact(system_of({{1, 5}, {2, 10}, {3, 15}}));
    REQUIRE(r.solution);
    CHECK(r.rank == 1);
    CHECK((*r.solution)[0] == Rational(5));
}

TEST_CASE("inconsistent overdetermined system")
{
    const auto r = solve_exact(system_of({{1, 5}, {2, 11}}));
    CHECK_FALSE(r.solution);
    CHECK(r.rank == 1);
    CHECK_FALSE(r.consistent);
}

TEST_CASE("pivot search skips leading zeros")
{
    const auto r = solve_exact(system_of({{0, 2, 6}, {3, 0, 9}}));
    REQUIRE(r.solution);
    CHECK((*r.solution)[0] == Rational(3));
    CHECK((*r.solution)[1] == Rational(3));
}

TEST_CASE("empty system is rejected")
{
    CHECK_THROWS_AS(solve_exact(ExactMatrix(0, 2)), std::invalid_argument);
    ExactMatrix m(0, 2);
    CHECK_THROWS_AS(m.append_row({1}, 0), std::invalid_argument);
}

TEST_CASE("property: A x = A v recovers v for full column rank A")
{
    testing::Gen gen(5);
    int solved = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t cols = static_cast<std::size_t>(gen.integer(1, 6));
        const std::size_t rows = cols + static_cast<std::size_t>(gen.integer(0, 3));
        std::vector<Rational> v(cols);
        for (auto& x : v)
            x = gen.small_rational();
        ExactMatrix a(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            Rational b(0);
            for (std::size_t c = 0; c < cols; ++c) {
                a(r, c) = gen.small_rational();
                b += a(r, c) * v[c];
            }
            a.rhs(r) = b;
        }
        const auto res = solve_exact(a);
        CHECK(res.consistent);
        if (res.rank == cols) {
            REQUIRE(res.solution);
            CHECK(*res.solution == v);
            ++solved;
        }
    }
    CHECK(solved > 60);
}
