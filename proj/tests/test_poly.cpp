#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "erpoly/detail/rng.hpp"
#include "erpoly/poly.hpp"
#include "erpoly/zpoly.hpp"
#include "support/oracles.hpp"

using erpoly::Int;
using erpoly::ZPoly;
using erpoly::zpoly;

namespace {

ZPoly random_poly(erpoly::detail::SplitMix64& rng, long max_deg, long long bound) {
    const long deg = static_cast<long>(rng.below(static_cast<std::uint64_t>(max_deg + 1)));
    std::vector<Int> c;
    for (long i = 0; i <= deg; ++i)
        c.push_back(Int(static_cast<long long>(rng.below(2 * bound + 1)) - bound));
    return ZPoly(std::move(c));
}

}  // namespace

TEST_CASE("construction normalizes trailing zeros", "[poly]") {
    REQUIRE(ZPoly(std::vector<Int>{1, 2, 0, 0}) == zpoly({1, 2}));
    REQUIRE(ZPoly(std::vector<Int>{0, 0, 0}).is_zero());
    REQUIRE(ZPoly::zero().degree() == erpoly::kNegInfDegree);
    REQUIRE(ZPoly::zero().degree() == -1);
    REQUIRE(ZPoly::constant(Int(7)).degree() == 0);
    REQUIRE(ZPoly::variable().degree() == 1);
    REQUIRE(zpoly({5, 0, 3}).coeff(1) == 0);
    REQUIRE(zpoly({5, 0, 3}).coeff(17) == 0);  // out of range reads as 0
    REQUIRE(zpoly({5, 0, 3}).leading() == 3);
}

TEST_CASE("ring arithmetic", "[poly]") {
    const ZPoly f = zpoly({1, 2, 3});   // 3x^2 + 2x + 1
    const ZPoly g = zpoly({-1, 0, 1});  // x^2 - 1

    SECTION("addition and subtraction") {
        REQUIRE(f + g == zpoly({0, 2, 4}));
        REQUIRE(f - f == ZPoly::zero());
        REQUIRE((f - g) + g == f);
        // cancellation drops the degree
        REQUIRE((zpoly({0, 0, 1}) - zpoly({1, 0, 1})).degree() == 0);
    }

    SECTION("multiplication") {
        REQUIRE(f * ZPoly::zero() == ZPoly::zero());
        REQUIRE(f * ZPoly::constant(Int(1)) == f);
        REQUIRE(zpoly({-1, 1}) * zpoly({1, 1}) == zpoly({-1, 0, 1}));
        REQUIRE(f * g == g * f);
        REQUIRE((f * g).degree() == f.degree() + g.degree());
    }

    SECTION("random ring identities") {
        erpoly::detail::SplitMix64 rng(42);
        for (int i = 0; i < 200; ++i) {
            const ZPoly a = random_poly(rng, 5, 10);
            const ZPoly b = random_poly(rng, 5, 10);
            const ZPoly c = random_poly(rng, 5, 10);
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("evaluation is Horner-exact", "[poly]") {
    const ZPoly f = zpoly({1, -2, 0, 5});  // 5x^3 - 2x + 1
    REQUIRE(erpoly::evaluate(f, Int(0)) == 1);
    REQUIRE(erpoly::evaluate(f, Int(2)) == 5 * 8 - 4 + 1);
    REQUIRE(erpoly::evaluate(f, Int(-3)) == 5 * -27 + 6 + 1);
    REQUIRE(erpoly::evaluate(ZPoly::zero(), Int(9)) == 0);
    // evaluation is a ring homomorphism
    erpoly::detail::SplitMix64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const ZPoly a = random_poly(rng, 4, 20);
        const ZPoly b = random_poly(rng, 4, 20);
        const Int t = Int(static_cast<long long>(rng.below(41)) - 20);
        REQUIRE((a * b)(t) == a(t) * b(t));
        REQUIRE((a + b)(t) == a(t) + b(t));
    }
}

TEST_CASE("composition", "[poly]") {
    const ZPoly x = ZPoly::variable();
    REQUIRE(erpoly::compose(zpoly({1, 0, 1}), zpoly({-1, 1})) == zpoly({2, -2, 1}));
    REQUIRE(erpoly::compose(x, x) == x);
    // constant inner collapses to an evaluation
    REQUIRE(erpoly::compose(zpoly({1, 2, 3}), ZPoly::constant(Int(2))) ==
            ZPoly::constant(Int(1 + 4 + 12)));
    erpoly::detail::SplitMix64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const ZPoly outer = random_poly(rng, 3, 8);
        const ZPoly inner = random_poly(rng, 3, 8);
        if (outer.degree() < 1 || inner.degree() < 1) continue;
        REQUIRE(erpoly::compose(outer, inner).degree() == outer.degree() * inner.degree());
        // evaluation commutes with composition
        const Int t = Int(static_cast<long long>(rng.below(11)) - 5);
        REQUIRE(erpoly::compose(outer, inner)(t) == outer(inner(t)));
    }
}

TEST_CASE("derivative", "[poly]") {
    REQUIRE(erpoly::derivative(zpoly({7})) == ZPoly::zero());
    REQUIRE(erpoly::derivative(zpoly({1, 2, 3, 4})) == zpoly({2, 6, 12}));
    const ZPoly a = zpoly({1, 1, 1});
    const ZPoly b = zpoly({0, 2, 5});
    // product rule
    REQUIRE(erpoly::derivative(a * b) ==
            erpoly::derivative(a) * b + a * erpoly::derivative(b));
}

TEST_CASE("content and primitive part", "[poly]") {
    REQUIRE(erpoly::content(zpoly({4, 6})) == 2);
    REQUIRE(erpoly::content(zpoly({4, -6})) == -2);  // sign follows the leading coefficient
    REQUIRE(erpoly::content(zpoly({0, 0, 5})) == 5);
    REQUIRE(erpoly::primitive_part(zpoly({4, -6})) == zpoly({-2, 3}));
    REQUIRE_THROWS_AS(erpoly::content(ZPoly::zero()), std::invalid_argument);
    erpoly::detail::SplitMix64 rng(3);
    for (int i = 0; i < 100; ++i) {
        ZPoly f = random_poly(rng, 5, 30);
        if (f.is_zero()) continue;
        auto [c, p] = erpoly::content_primitive(f);
        REQUIRE(ZPoly::constant(c) * p == f);
        REQUIRE(erpoly::content(p) == 1);
        REQUIRE(p.leading() > 0);
    }
}

TEST_CASE("exact division", "[poly]") {
    SECTION("known quotients") {
        REQUIRE(*erpoly::try_divide(zpoly({-1, 0, 1}), zpoly({-1, 1})) == zpoly({1, 1}));
        // non-monic split: 6x^2 + x - 2 = (2x - 1)(3x + 2)
        REQUIRE(*erpoly::try_divide(zpoly({-2, 1, 6}), zpoly({-1, 2})) == zpoly({2, 3}));
        REQUIRE(!erpoly::try_divide(zpoly({1, 0, 1}), zpoly({-1, 1})).has_value());
        // divisible over Q but not over Z
        REQUIRE(!erpoly::try_divide(zpoly({0, 1}), zpoly({0, 2})).has_value());
        REQUIRE(*erpoly::try_divide(zpoly({0, 2}), zpoly({2})) == zpoly({0, 1}));
        REQUIRE_THROWS_AS(erpoly::try_divide(zpoly({1}), ZPoly::zero()), std::invalid_argument);
    }

    SECTION("multiply then divide round-trips") {
        erpoly::detail::SplitMix64 rng(5);
        for (int i = 0; i < 200; ++i) {
            const ZPoly a = random_poly(rng, 4, 12);
            const ZPoly b = random_poly(rng, 4, 12);
            if (a.is_zero() || b.is_zero()) continue;
            auto q = erpoly::try_divide(a * b, b);
            REQUIRE(q.has_value());
            REQUIRE(*q == a);
        }
    }
}

TEST_CASE("primitive gcd", "[poly]") {
    REQUIRE(erpoly::gcd(zpoly({-1, 0, 1}), zpoly({-1, 0, 0, 1})) == zpoly({-1, 1}));
    REQUIRE(erpoly::gcd(zpoly({1, 2, 1}), zpoly({1, 1})) == zpoly({1, 1}));
    // contents are discarded: this is the primitive (Q[x]) gcd
    REQUIRE(erpoly::gcd(zpoly({6, 0, 6}), zpoly({4, 4})) == zpoly({1}));
    REQUIRE(erpoly::gcd(ZPoly::zero(), zpoly({-3, -6})) == zpoly({1, 2}));
    REQUIRE_THROWS_AS(erpoly::gcd(ZPoly::zero(), ZPoly::zero()), std::invalid_argument);
    // result has positive leading coefficient and divides both inputs
    erpoly::detail::SplitMix64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const ZPoly a = random_poly(rng, 4, 9);
        const ZPoly b = random_poly(rng, 4, 9);
        const ZPoly m = random_poly(rng, 2, 9);
        if (a.is_zero() || b.is_zero() || m.is_zero()) continue;
        const ZPoly g = erpoly::gcd(a * m, b * m);
        REQUIRE(g.leading() > 0);
        REQUIRE(erpoly::try_divide(a * m, g).has_value());
        REQUIRE(erpoly::try_divide(b * m, g).has_value());
        // the common factor m must show up (up to content)
        REQUIRE(erpoly::try_divide(g, erpoly::primitive_part(m)).has_value());
    }
}

TEST_CASE("iteration convention", "[poly]") {
    const ZPoly f = zpoly({0, 0, 1});  // x^2
    REQUIRE(erpoly::iterate(f, 0) == f);
    REQUIRE(erpoly::iterate(f, 1) == erpoly::compose(f, f));
    REQUIRE(erpoly::iterate(f, 2).degree() == 8);  // d^(n+1) with d = 2, n = 2
    REQUIRE_THROWS_AS(erpoly::iterate(zpoly({3}), 1), std::invalid_argument);
    const ZPoly g = zpoly({1, 3, -10, -8});
    REQUIRE(erpoly::iterate(g, 1).degree() == 9);
}

TEST_CASE("conjugate family", "[poly]") {
    const ZPoly f = zpoly({4, 3, 2, 1});
    REQUIRE(erpoly::conjugate_family(f) == zpoly({-4, 3, -2, 1}));
    REQUIRE(erpoly::conjugate_family(erpoly::conjugate_family(f)) == f);
    // conjugation commutes with self-composition, which is why it preserves
    // emergent reducibility
    erpoly::detail::SplitMix64 rng(23);
    for (int i = 0; i < 50; ++i) {
        const ZPoly g = random_poly(rng, 3, 10);
        if (g.degree() < 1) continue;
        REQUIRE(erpoly::compose(erpoly::conjugate_family(g), erpoly::conjugate_family(g)) ==
                erpoly::conjugate_family(erpoly::compose(g, g)));
    }
}

TEST_CASE("canonical ordering", "[poly]") {
    REQUIRE(erpoly::canonical_less(zpoly({5, 1}), zpoly({0, 0, 1})));   // degree first
    REQUIRE(erpoly::canonical_less(zpoly({-1, 1}), zpoly({0, 1})));     // then lex ascending
    REQUIRE(!erpoly::canonical_less(zpoly({0, 1}), zpoly({0, 1})));     // irreflexive
    REQUIRE(erpoly::canonical_less(zpoly({0, 1, 2}), zpoly({0, 2, 2})));
}

TEST_CASE("parse and format", "[poly]") {
    SECTION("coefficient lists") {
        REQUIRE(erpoly::parse_zpoly("1,3,-10,-8") == zpoly({1, 3, -10, -8}));
        REQUIRE(erpoly::parse_zpoly(" 0, 0,  -1, 1 ") == zpoly({0, 0, -1, 1}));
        REQUIRE(erpoly::parse_zpoly("0") == ZPoly::zero());
        REQUIRE(erpoly::parse_zpoly("0,0") == ZPoly::zero());
    }

    SECTION("expressions") {
        REQUIRE(erpoly::parse_zpoly("x^3 - x^2") == zpoly({0, 0, -1, 1}));
        REQUIRE(erpoly::parse_zpoly("-8*x^3-10*x^2+3*x+1") == zpoly({1, 3, -10, -8}));
        REQUIRE(erpoly::parse_zpoly("2x^2 + x") == zpoly({0, 1, 2}));  // '*' optional
        REQUIRE(erpoly::parse_zpoly("-x") == zpoly({0, -1}));
        REQUIRE(erpoly::parse_zpoly("42") == zpoly({42}));
        REQUIRE(erpoly::parse_zpoly("x + x + 1") == zpoly({1, 2}));  // like terms collect
    }

    SECTION("rejected inputs") {
        REQUIRE_THROWS_AS(erpoly::parse_zpoly(""), erpoly::ParseError);
        REQUIRE_THROWS_AS(erpoly::parse_zpoly("1,,2"), erpoly::ParseError);
        REQUIRE_THROWS_AS(erpoly::parse_zpoly("x^"), erpoly::ParseError);
        REQUIRE_THROWS_AS(erpoly::parse_zpoly("y+1"), erpoly::ParseError);
        REQUIRE_THROWS_AS(erpoly::parse_zpoly("x^-1"), erpoly::ParseError);
        REQUIRE_THROWS_AS(erpoly::parse_zpoly("3..5"), erpoly::ParseError);
    }

    SECTION("format round-trips through parse") {
        REQUIRE(erpoly::format_zpoly(ZPoly::zero()) == "0");
        REQUIRE(erpoly::format_zpoly(zpoly({0, 0, -1, 1})) == "x^3 - x^2");
        erpoly::detail::SplitMix64 rng(29);
        for (int i = 0; i < 200; ++i) {
            const ZPoly f = random_poly(rng, 6, 50);
            REQUIRE(erpoly::parse_zpoly(erpoly::format_zpoly(f)) == f);
        }
    }
}

TEST_CASE("nested polynomials work as coefficients", "[poly]") {
    // Polynomial<ZPoly> is the BiPoly used for the symbolic family work.
    using Bi = erpoly::Polynomial<ZPoly>;
    const Bi ax = Bi(std::vector<ZPoly>{zpoly({0, 1}), zpoly({1})});  // x + a
    const Bi sq = ax * ax;                                            // x^2 + 2a x + a^2
    REQUIRE(sq.degree() == 2);
    REQUIRE(sq.coeff(0) == zpoly({0, 0, 1}));
    REQUIRE(sq.coeff(1) == zpoly({0, 2}));
    REQUIRE(sq.coeff(2) == zpoly({1}));
    REQUIRE((ax - ax).is_zero());
}
