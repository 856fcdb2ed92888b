#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "erpoly/emergence.hpp"
#include "erpoly/family.hpp"
#include "erpoly/zfactor.hpp"
#include "erpoly/zpoly.hpp"

using erpoly::Int;
using erpoly::ZPoly;
using erpoly::zpoly;

TEST_CASE("the family member a = 1 emerges at depth 1", "[emergence]") {
    const ZPoly f = zpoly({1, 3, -10, -8});
    const auto rep = erpoly::emergent_depth(f, 2);
    REQUIRE(rep.poly == f);
    REQUIRE(rep.depth.has_value());
    REQUIRE(*rep.depth == 1);
    REQUIRE(rep.iterates_checked == 2);
    REQUIRE(rep.first_reducible_factor_degrees == std::vector<long>{3, 6});
    REQUIRE(rep.factors.has_value());
    REQUIRE(rep.factors->content == 1);
    const auto t = erpoly::family_coeffs(Int(1));
    REQUIRE(rep.factors->factors[0].poly == t.g);
    REQUIRE(rep.factors->factors[1].poly == t.h);
    REQUIRE(rep.factors->reconstruct() == erpoly::compose(f, f));

    REQUIRE(erpoly::check_er_at_depth(f, 1));
    REQUIRE(!erpoly::check_er_at_depth(f, 0));
    REQUIRE(!erpoly::check_er_at_depth(f, 2));  // already reducible at 1
}

TEST_CASE("stopping early leaves the depth open", "[emergence]") {
    const ZPoly f = zpoly({1, 3, -10, -8});
    const auto rep = erpoly::emergent_depth(f, 0);
    REQUIRE(!rep.depth.has_value());
    REQUIRE(rep.iterates_checked == 1);
    REQUIRE(rep.first_reducible_factor_degrees.empty());
    REQUIRE(!rep.factors.has_value());
}

TEST_CASE("reducible input is depth 0", "[emergence]") {
    const auto rep = erpoly::emergent_depth(zpoly({-1, 0, 1}), 3);
    REQUIRE(rep.depth.has_value());
    REQUIRE(*rep.depth == 0);
    REQUIRE(rep.iterates_checked == 1);
    REQUIRE(rep.first_reducible_factor_degrees == std::vector<long>{1, 1});
    REQUIRE(erpoly::check_er_at_depth(zpoly({-1, 0, 1}), 0));
}

TEST_CASE("a persistently irreducible quadratic", "[emergence]") {
    // every iterate of x^2 + 1 within the budget stays irreducible
    const auto rep = erpoly::emergent_depth(zpoly({1, 0, 1}), 5);
    REQUIRE(!rep.depth.has_value());
    REQUIRE(rep.iterates_checked == 6);
    REQUIRE(!rep.factors.has_value());
}

TEST_CASE("degree budget", "[emergence]") {
    // a cubic composed three times has degree 81, past the envelope of 80
    REQUIRE_THROWS_AS(erpoly::emergent_depth(zpoly({1, 3, -10, -8}), 3), erpoly::BudgetError);
    REQUIRE_THROWS_AS(erpoly::emergent_depth(zpoly({1, 0, 1}), 6), erpoly::BudgetError);
    REQUIRE_THROWS_AS(erpoly::emergent_depth(zpoly({1, 0, 0, 0, 1}), 3), erpoly::BudgetError);
    // the largest admissible requests still run
    REQUIRE(!erpoly::emergent_depth(zpoly({1, 0, 1}), 5).depth.has_value());
    REQUIRE(erpoly::emergent_depth(zpoly({1, 3, -10, -8}), 2).depth.has_value());
    // BudgetError is distinguishable from bad arguments
    REQUIRE_THROWS_AS(erpoly::emergent_depth(zpoly({3, 1}), 1), std::invalid_argument);
    REQUIRE_THROWS_AS(erpoly::emergent_depth(ZPoly::constant(Int(5)), 1), std::invalid_argument);
}

TEST_CASE("depth verdict is seed-independent", "[emergence]") {
    const ZPoly f = zpoly({1, 3, -10, -8});
    const auto a = erpoly::emergent_depth(f, 2, 1);
    const auto b = erpoly::emergent_depth(f, 2, 77777);
    REQUIRE(a.depth == b.depth);
    REQUIRE(a.first_reducible_factor_degrees == b.first_reducible_factor_degrees);
    REQUIRE(a.factors->factors.size() == b.factors->factors.size());
}

TEST_CASE("agrees with direct factorization over a small box", "[emergence]") {
    for (long long b = -2; b <= 2; ++b)
        for (long long c = -2; c <= 2; ++c)
            for (long long d = -2; d <= 2; ++d) {
                const ZPoly f = zpoly({d, c, b, 1});
                const auto rep = erpoly::emergent_depth(f, 1);
                const bool red0 = erpoly::is_nontrivial(erpoly::factor(f));
                const bool red1 = erpoly::is_nontrivial(erpoly::factor(erpoly::compose(f, f)));
                if (red0) {
                    REQUIRE(rep.depth == 0u);
                } else if (red1) {
                    REQUIRE(rep.depth == 1u);
                    REQUIRE(rep.factors->reconstruct() == erpoly::compose(f, f));
                } else {
                    REQUIRE(!rep.depth.has_value());
                }
            }
}
