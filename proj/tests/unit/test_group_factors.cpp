#include "doctest.h"

#include "generators.hpp"
#include "vassiliev/errors.hpp"
#include "vassiliev/group_factors.hpp"

using namespace vassiliev;

TEST_CASE("slot bookkeeping")
{
    CHECK(all_slots().size() == 18);
    CHECK(primitive_slots().size() == 12);
    CHECK(all_slots(4).size() == 5);
    CHECK_FALSE(is_primitive({6, 3}));
    CHECK(is_primitive({6, 5}));
    CHECK(compound_factors({6, 3}) == std::vector<Slot>{{2, 1}, {4, 2}});
    CHECK(slot_key({5, 4}) == "5,4");
    CHECK_THROWS_AS(all_slots(7), std::invalid_argument);
}

TEST_CASE("Casimir tables")
{
    const auto su2 = casimirs(GroupFamily::SU_N, 2);
    CHECK(su2.C2 == Rational(-3, 4));
    CHECK(su2.C3 == Rational(-3, 4));
    CHECK(su2.C4 == Rational(9, 8));
    CHECK(su2.dim == Rational(2));

    CHECK(casimirs(GroupFamily::SO_N, 5).C3 == Rational(-3, 4));
    CHECK(casimirs(GroupFamily::SO_N, 7).dim == Rational(7));

    const auto spin = casimirs(GroupFamily::SU2, 1);
    CHECK(spin.C2 == Rational(-3, 4));
    CHECK(spin == su2);

    // C2 = C3 = A = -j(j+2)/4 for every spin label
    for (int j = 1; j <= 8; ++j) {
        const auto c = casimirs(GroupFamily::SU2, j);
        CHECK(c.C2 == Rational(-j * (j + 2), 4));
        CHECK(c.C3 == c.C2);
        CHECK(c.dim == Rational(j + 1));
    }

    CHECK_THROWS_AS(casimirs(GroupFamily::SU_N, 1), InvalidGroup);
    CHECK_THROWS_AS(casimirs(GroupFamily::SO_N, 2), InvalidGroup);
    CHECK_THROWS_AS(casimirs(GroupFamily::SU2, 0), InvalidGroup);
    CHECK_THROWS_AS(casimirs(GroupFamily::SU_N_x_SU2, 3), InvalidGroup);
}

TEST_CASE("group factor vector, single factor")
{
    const auto v = group_factor_vector(GroupInstance::su_n(3));
    CHECK(v.r(0, 1) == Rational(1));
    CHECK(v.r(2, 1) == Rational(-2));
    CHECK(v.r(4, 1) == v.r(2, 1) * v.r(2, 1));
    CHECK(v.dim() == Rational(3));
    CHECK_THROWS_AS(v.r(1, 1), std::out_of_range);
    CHECK_THROWS_AS(v.r(4, 4), std::out_of_range);
    CHECK_THROWS_AS(v.r(7, 1), std::out_of_range);
}

TEST_CASE("group factor vector, product group")
{
    const auto v = group_factor_vector(GroupInstance::product(2, 1));
    CHECK(v.r(2, 1) == Rational(-3, 2));
    CHECK(v.dim() == Rational(4));
    CHECK(group_factor_vector(GroupInstance::product(3, 2)).dim() == Rational(9));
}

TEST_CASE("ZeroCasimirDivision")
{
    CasimirSet bad = casimirs(GroupFamily::SU_N, 3);
    bad.C2 = 0;
    CHECK_THROWS_AS(group_factor_vector({bad}), ZeroCasimirDivision);
    CHECK_THROWS_AS(group_factor_vector(std::vector<CasimirSet>{}), std::invalid_argument);
}

TEST_CASE("property: compound factors, C2 identity and additivity")
{
    testing::Gen gen(2024);
    for (int trial = 0; trial < 40; ++trial) {
        CasimirSet c{gen.nonzero_rational(), gen.small_rational(), gen.small_rational(),
                     gen.small_rational(), gen.small_rational(), gen.small_rational(),
                     gen.nonzero_rational()};
        const auto one = group_factor_vector({c});
        CHECK(one.r(3, 1) * c.C2 == c.C3 * c.C3);
        CHECK(one.r(5, 1) == one.r(2, 1) * one.r(3, 1));
        CHECK(one.r(6, 1) == one.r(2, 1) * one.r(2, 1) * one.r(2, 1));
        CHECK(one.r(6, 2) == one.r(3, 1) * one.r(3, 1));
        CHECK(one.r(6, 3) == one.r(2, 1) * one.r(4, 2));
        CHECK(one.r(6, 4) == one.r(2, 1) * one.r(4, 3));

        const auto two = group_factor_vector({c, c});
        for (Slot s : primitive_slots())
            CHECK(two.r(s) == 2 * one.r(s));
        CHECK(two.dim() == c.dim * c.dim);
    }
}
