#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "erpoly/detail/rng.hpp"
#include "erpoly/fppoly.hpp"
#include "erpoly/zpoly.hpp"

using erpoly::FpPoly;

namespace {

/// Every monic polynomial of exact degree d over F_p, by digit counting.
std::vector<FpPoly> all_monic(std::uint64_t p, unsigned d) {
    std::vector<FpPoly> out;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::uint64_t> c(d + 1, 0);
        std::uint64_t rest = code;
        for (unsigned i = 0; i < d; ++i) {
            c[i] = rest % p;
            rest /= p;
        }
        c[d] = 1;
        out.emplace_back(p, std::move(c));
    }
    return out;
}

/// Reference irreducibility: no monic divisor of degree in [1, d/2].
bool irreducible_by_trial_division(const FpPoly& f) {
    const unsigned d = static_cast<unsigned>(f.degree());
    for (unsigned k = 1; 2 * k <= d; ++k)
        for (const FpPoly& g : all_monic(f.modulus(), k))
            if ((f % g).is_zero()) return false;
    return true;
}

FpPoly random_fppoly(erpoly::detail::SplitMix64& rng, std::uint64_t p, unsigned max_deg) {
    const unsigned d = static_cast<unsigned>(rng.below(max_deg + 1));
    std::vector<std::uint64_t> c;
    for (unsigned i = 0; i <= d; ++i) c.push_back(rng.below(p));
    return FpPoly(p, std::move(c));
}

}  // namespace

TEST_CASE("modulus validation", "[fppoly]") {
    REQUIRE_THROWS_AS(FpPoly(4, {1, 1}), std::invalid_argument);  // composite
    REQUIRE_THROWS_AS(FpPoly(1, {1}), std::invalid_argument);
    REQUIRE_THROWS_AS(FpPoly(0x100000007ULL, {1}), std::invalid_argument);  // >= 2^32
    REQUIRE_NOTHROW(FpPoly(4294967291ULL, {1, 1}));  // largest 32-bit prime
}

TEST_CASE("reduction from Z is a ring homomorphism", "[fppoly]") {
    const FpPoly r = erpoly::reduce_mod_p(erpoly::zpoly({-1, -8, 14, 3}), 5);
    REQUIRE(r == FpPoly(5, {4, 2, 4, 3}));
    erpoly::detail::SplitMix64 rng(101);
    for (std::uint64_t p : {2ULL, 3ULL, 7ULL, 9973ULL}) {
        for (int i = 0; i < 40; ++i) {
            std::vector<erpoly::Int> ac, bc;
            for (int j = 0; j < 5; ++j) {
                ac.push_back(erpoly::Int(static_cast<long long>(rng.below(2001)) - 1000));
                bc.push_back(erpoly::Int(static_cast<long long>(rng.below(2001)) - 1000));
            }
            const erpoly::ZPoly a(ac), b(bc);
            REQUIRE(erpoly::reduce_mod_p(a * b, p) ==
                    erpoly::reduce_mod_p(a, p) * erpoly::reduce_mod_p(b, p));
            REQUIRE(erpoly::reduce_mod_p(a + b, p) ==
                    erpoly::reduce_mod_p(a, p) + erpoly::reduce_mod_p(b, p));
        }
    }
}

TEST_CASE("mod-p arithmetic basics", "[fppoly]") {
    const FpPoly f(7, {1, 2, 3});
    const FpPoly g(7, {6, 5});
    REQUIRE(f + g == FpPoly(7, {0, 0, 3}));
    REQUIRE(f - f == FpPoly::zero(7));
    REQUIRE((f * g).degree() == 3);
    REQUIRE_THROWS_AS(f + FpPoly(5, {1}), std::invalid_argument);  // modulus mismatch
    REQUIRE(make_monic(FpPoly(7, {2, 4})) == FpPoly(7, {4, 1}));
    REQUIRE(FpPoly(5, {0, 0, 5}).is_zero());  // coefficients reduce on construction
}

TEST_CASE("divrem and gcd", "[fppoly]") {
    erpoly::detail::SplitMix64 rng(202);
    for (std::uint64_t p : {2ULL, 3ULL, 13ULL}) {
        for (int i = 0; i < 60; ++i) {
            const FpPoly a = random_fppoly(rng, p, 6);
            const FpPoly b = random_fppoly(rng, p, 4);
            if (b.is_zero()) continue;
            const auto [q, r] = erpoly::divrem(a, b);
            REQUIRE(q * b + r == a);
            REQUIRE(r.degree() < b.degree());
        }
    }
    // x^2 + 4 = (x + 1)(x + 4) over F_5
    const FpPoly d = erpoly::gcd(FpPoly(5, {4, 0, 1}), FpPoly(5, {4, 1}) * FpPoly(5, {2, 1}));
    REQUIRE(d == FpPoly(5, {4, 1}));
    // x^2 + 1 has no roots over F_3, so it is coprime to x + 1
    REQUIRE(erpoly::gcd(FpPoly(3, {1, 1}), FpPoly(3, {1, 0, 1})) == FpPoly::one(3));
}

TEST_CASE("pow_mod matches repeated multiplication", "[fppoly]") {
    const FpPoly m(7, {3, 0, 1, 1});
    const FpPoly x = FpPoly::variable(7);
    FpPoly acc = FpPoly::one(7);
    for (int e = 0; e <= 20; ++e) {
        REQUIRE(erpoly::pow_mod(x, erpoly::Int(e), m) == acc);
        acc = (acc * x) % m;
    }
}

TEST_CASE("Rabin irreducibility agrees with trial division exhaustively", "[fppoly]") {
    // Every monic polynomial of degree 1..4 over F_2 and F_3, plus degree
    // 1..3 over F_5. Degree 3 = a prime degree is the regression surface
    // for the subgroup-check part of the test.
    for (std::uint64_t p : {2ULL, 3ULL}) {
        for (unsigned d = 1; d <= 4; ++d)
            for (const FpPoly& f : all_monic(p, d))
                REQUIRE(erpoly::is_irreducible_mod_p(f) == irreducible_by_trial_division(f));
    }
    for (unsigned d = 1; d <= 3; ++d)
        for (const FpPoly& f : all_monic(5, d))
            REQUIRE(erpoly::is_irreducible_mod_p(f) == irreducible_by_trial_division(f));
    // (x-1)(x-2)(x-3) over F_7 passes the Frobenius fixed-point check alone
    const FpPoly split =
        FpPoly(7, {6, 1}) * FpPoly(7, {5, 1}) * FpPoly(7, {4, 1});
    REQUIRE(!erpoly::is_irreducible_mod_p(split));
    REQUIRE(erpoly::is_irreducible_mod_p(FpPoly(3, {1, 0, 2, 1})));  // the family's case 1
    REQUIRE(erpoly::is_irreducible_mod_p(FpPoly(3, {1, 2, 0, 1})));  // the family's case 2
}

TEST_CASE("factor_mod_p reconstructs and certifies", "[fppoly]") {
    erpoly::detail::SplitMix64 rng(303);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 13ULL}) {
        int done = 0;
        while (done < 40) {
            FpPoly f = random_fppoly(rng, p, 7);
            if (f.degree() < 1) continue;
            ++done;
            const erpoly::FpFactorization fac = erpoly::factor_mod_p(f, 7);
            FpPoly prod = FpPoly::constant(p, fac.unit);
            long degsum = 0;
            for (const auto& [poly, mult] : fac.factors) {
                REQUIRE(poly.is_monic());
                REQUIRE(erpoly::is_irreducible_mod_p(poly));
                for (unsigned i = 0; i < mult; ++i) prod = prod * poly;
                degsum += poly.degree() * static_cast<long>(mult);
            }
            REQUIRE(prod == f);
            REQUIRE(degsum == f.degree());
        }
    }
}

TEST_CASE("factor_mod_p handles repeated and p-th power factors", "[fppoly]") {
    // (x+1)^2 (x^2+1) over F_3
    const FpPoly a = FpPoly(3, {1, 1});
    const FpPoly b = FpPoly(3, {1, 0, 1});
    const auto fac = erpoly::factor_mod_p(a * a * b);
    REQUIRE(fac.factors.size() == 2);
    REQUIRE(fac.factors[0].poly == a);
    REQUIRE(fac.factors[0].multiplicity == 2);
    REQUIRE(fac.factors[1].poly == b);
    REQUIRE(fac.factors[1].multiplicity == 1);

    // x^9 + 1 = (x+1)^9 over F_3: the derivative-vanishing branch, twice
    std::vector<std::uint64_t> c(10, 0);
    c[0] = 1;
    c[9] = 1;
    const auto ninth = erpoly::factor_mod_p(FpPoly(3, std::move(c)));
    REQUIRE(ninth.factors.size() == 1);
    REQUIRE(ninth.factors[0].poly == FpPoly(3, {1, 1}));
    REQUIRE(ninth.factors[0].multiplicity == 9);
}

TEST_CASE("equal-degree splitting over F_2 uses the table route", "[fppoly]") {
    // Two irreducible cubics and the irreducible quadratic over F_2.
    const FpPoly q(2, {1, 1, 1});
    const FpPoly c1(2, {1, 1, 0, 1});
    const FpPoly c2(2, {1, 0, 1, 1});
    const auto fac = erpoly::factor_mod_p(q * c1 * c2);
    REQUIRE(fac.factors.size() == 3);
    REQUIRE(fac.factors[0].poly == q);
    // the two cubics in canonical (lexicographic ascending) order
    REQUIRE(fac.factors[1].poly == c2);
    REQUIRE(fac.factors[2].poly == c1);
}

TEST_CASE("factorization mod p is seed-independent", "[fppoly]") {
    erpoly::detail::SplitMix64 rng(404);
    for (int i = 0; i < 25; ++i) {
        FpPoly f = random_fppoly(rng, 13, 8);
        if (f.degree() < 2) continue;
        const auto fac_a = erpoly::factor_mod_p(f, 1);
        const auto fac_b = erpoly::factor_mod_p(f, 999);
        REQUIRE(fac_a.factors.size() == fac_b.factors.size());
        for (std::size_t k = 0; k < fac_a.factors.size(); ++k) {
            REQUIRE(fac_a.factors[k].poly == fac_b.factors[k].poly);
            REQUIRE(fac_a.factors[k].multiplicity == fac_b.factors[k].multiplicity);
        }
    }
}

TEST_CASE("format_fppoly", "[fppoly]") {
    REQUIRE(erpoly::format_fppoly(FpPoly(3, {1, 0, 2, 1})) == "x^3 + 2*x^2 + 1");
    REQUIRE(erpoly::format_fppoly(FpPoly::zero(7)) == "0");
}
