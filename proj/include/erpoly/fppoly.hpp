#pragma once

// Polynomial arithmetic and factorization over prime fields F_p.
//
// Supplies the modular side of the toolkit: coefficientwise reduction of
// integer polynomials, the Rabin irreducibility test (the engine behind
// mod-p certificates), and full factorization via squarefree decomposition,
// distinct-degree factorization, and equal-degree splitting.
//
// Moduli are machine-word primes (p < 2^32), so every coefficient product
// fits in 64 bits before reduction. Values are immutable after construction
// and safe to share across threads; the only randomness (equal-degree
// splitting) is driven by a caller-supplied seed.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "erpoly/detail/rng.hpp"
#include "erpoly/ints.hpp"
#include "erpoly/zpoly.hpp"

namespace erpoly {

namespace detail {

// Trial-division primality: moduli are small by design, so this is cheap
// and has no probabilistic caveats.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw std::invalid_argument("inv_mod_u64: not invertible");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

}  // namespace detail

/// Dense univariate polynomial over F_p, ascending-degree coefficients in
/// [0, p), no trailing zeros. Both operands of any binary operation must
/// share the same modulus.
class FpPoly {
public:
    explicit FpPoly(std::uint64_t p) : p_(p) { check_modulus(p); }

    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
        check_modulus(p);
        for (auto& v : c_) v %= p_;
        normalize();
    }

    static FpPoly zero(std::uint64_t p) { return FpPoly(p); }
    static FpPoly constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }
    static FpPoly one(std::uint64_t p) { return constant(p, 1); }
    static FpPoly variable(std::uint64_t p) { return FpPoly(p, {0, 1}); }

    std::uint64_t modulus() const { return p_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return c_.empty() ? kNegInfDegree : static_cast<long>(c_.size()) - 1; }

    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    std::uint64_t leading() const {
        if (c_.empty()) throw std::logic_error("FpPoly::leading on zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend bool operator==(const FpPoly& a, const FpPoly& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b) {
        check_same(a, b);
        std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
        return FpPoly(a.p_, std::move(r));
    }

    friend FpPoly operator-(const FpPoly& a, const FpPoly& b) {
        check_same(a, b);
        std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
        return FpPoly(a.p_, std::move(r));
    }

    friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
        check_same(a, b);
        if (a.is_zero() || b.is_zero()) return zero(a.p_);
        std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = (r[i + j] + a.c_[i] * b.c_[j]) % a.p_;
        }
        return FpPoly(a.p_, std::move(r));
    }

    friend FpPoly operator*(const FpPoly& a, std::uint64_t s) {
        std::vector<std::uint64_t> r = a.c_;
        s %= a.p_;
        for (auto& v : r) v = v * s % a.p_;
        return FpPoly(a.p_, std::move(r));
    }

private:
    static void check_modulus(std::uint64_t p) {
        if (p >> 32) throw std::invalid_argument("FpPoly: modulus must fit in 32 bits");
        if (!detail::is_prime_u64(p))
            throw std::invalid_argument("FpPoly: modulus " + std::to_string(p) + " is not prime");
    }

    static void check_same(const FpPoly& a, const FpPoly& b) {
        if (a.p_ != b.p_)
            throw std::invalid_argument("FpPoly: modulus mismatch (" + std::to_string(a.p_) +
                                        " vs " + std::to_string(b.p_) + ")");
    }

    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

/// Coefficientwise reduction of an integer polynomial into F_p[x]; the
/// degree drops when p divides the leading coefficient.
inline FpPoly reduce_mod_p(const ZPoly& f, std::uint64_t p) {
    const Int pm = p;
    std::vector<std::uint64_t> r;
    r.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        Int v = c % pm;
        if (v < 0) v += pm;
        r.push_back(v.convert_to<std::uint64_t>());
    }
    return FpPoly(p, std::move(r));
}

inline FpPoly make_monic(const FpPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("make_monic: zero polynomial");
    if (f.is_monic()) return f;
    return f * detail::inv_mod_u64(f.leading(), f.modulus());
}

inline FpPoly derivative(const FpPoly& f) {
    const std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> r;
    const auto& c = f.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i) r.push_back(c[i] * (i % p) % p);
    return FpPoly(p, std::move(r));
}

/// Quotient and remainder with deg(remainder) < deg(divisor).
inline std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("divrem: division by zero polynomial");
    const std::uint64_t p = a.modulus();
    if (b.modulus() != p) throw std::invalid_argument("divrem: modulus mismatch");
    if (a.degree() < b.degree()) return {FpPoly::zero(p), a};
    std::vector<std::uint64_t> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const std::uint64_t inv_lead = detail::inv_mod_u64(bc.back(), p);
    std::vector<std::uint64_t> quot(rem.size() - bc.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        std::uint64_t q = rem[k + bc.size() - 1] * inv_lead % p;
        if (q == 0) continue;
        quot[k] = q;
        for (std::size_t j = 0; j < bc.size(); ++j)
            rem[k + j] = (rem[k + j] + p - q * bc[j] % p) % p;
    }
    return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

inline FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divrem(a, b).second; }
inline FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divrem(a, b).first; }

/// Monic greatest common divisor.
inline FpPoly gcd(const FpPoly& p, const FpPoly& q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd: both arguments zero");
    FpPoly a = p, b = q;
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// base^e mod m by square-and-multiply; e is an arbitrary-precision
/// nonnegative exponent (equal-degree splitting needs (p^d - 1)/2).
inline FpPoly pow_mod(const FpPoly& base, Int e, const FpPoly& m) {
    if (m.degree() < 1) throw std::invalid_argument("pow_mod: modulus polynomial must be nonconstant");
    if (e < 0) throw std::invalid_argument("pow_mod: negative exponent");
    FpPoly r = FpPoly::one(base.modulus());
    FpPoly b = base % m;
    while (e > 0) {
        if ((e & 1) != 0) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

/// Rabin's criterion: f of degree d is irreducible over F_p iff
/// x^(p^d) = x (mod f) and gcd(x^(p^(d/t)) - x, f) = 1 for every prime t | d.
inline bool is_irreducible_mod_p(const FpPoly& f) {
    const long d = f.degree();
    if (d < 1) throw std::invalid_argument("is_irreducible_mod_p: constant polynomial");
    if (d == 1) return true;
    const std::uint64_t p = f.modulus();
    const FpPoly fm = make_monic(f);
    const FpPoly x = FpPoly::variable(p);

    // frob[i] = x^(p^(i+1)) mod f, built by repeated p-th powering.
    std::vector<FpPoly> frob;
    frob.reserve(static_cast<std::size_t>(d));
    FpPoly h = x;
    for (long i = 0; i < d; ++i) {
        h = pow_mod(h, Int(p), fm);
        frob.push_back(h);
    }
    if (frob.back() != x % fm) return false;
    long rest = d;
    for (long t = 2; t * t <= rest; ++t) {
        if (rest % t != 0) continue;
        if (gcd(frob[static_cast<std::size_t>(d / t) - 1] - x, fm).degree() != 0) return false;
        while (rest % t == 0) rest /= t;
    }
    if (rest > 1) {
        if (gcd(frob[static_cast<std::size_t>(d / rest) - 1] - x, fm).degree() != 0) return false;
    }
    return true;
}

struct FpFactor {
    FpPoly poly;  // monic irreducible
    unsigned multiplicity;
};

/// unit * prod factor^multiplicity = input, with monic irreducible factors
/// in canonical order (degree, then lexicographic ascending coefficients).
struct FpFactorization {
    std::uint64_t p;
    std::uint64_t unit;
    std::vector<FpFactor> factors;
};

inline bool canonical_less(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
}

namespace detail {

// Squarefree decomposition over F_p (Yun's method adapted to characteristic
// p: when the derivative vanishes the polynomial is a p-th power, and the
// p-th root just contracts exponents since c^p = c in F_p).
inline void squarefree_mod_p(const FpPoly& f, unsigned mult, std::vector<std::pair<FpPoly, unsigned>>& out) {
    const std::uint64_t p = f.modulus();
    FpPoly d = derivative(f);
    if (d.is_zero()) {
        std::vector<std::uint64_t> root;
        for (std::size_t i = 0; i < f.coeffs().size(); i += static_cast<std::size_t>(p))
            root.push_back(f.coeffs()[i]);
        squarefree_mod_p(FpPoly(p, std::move(root)), mult * static_cast<unsigned>(p), out);
        return;
    }
    FpPoly c = gcd(f, d);
    FpPoly w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        FpPoly y = gcd(w, c);
        FpPoly part = w / y;
        if (part.degree() > 0) out.emplace_back(make_monic(part), mult * i);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (c.degree() > 0) squarefree_mod_p(c, mult, out);
}

// Distinct-degree factorization of a monic squarefree polynomial: returns
// (product of all irreducible factors of degree d, d) pairs.
inline std::vector<std::pair<FpPoly, long>> distinct_degree(const FpPoly& f) {
    const std::uint64_t p = f.modulus();
    std::vector<std::pair<FpPoly, long>> out;
    FpPoly v = f;
    FpPoly h = FpPoly::variable(p) % v;
    const FpPoly x = FpPoly::variable(p);
    long d = 0;
    while (v.degree() >= 2 * (d + 1)) {
        ++d;
        h = pow_mod(h, Int(p), v);
        FpPoly g = gcd(h - x, v);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            v = v / g;
            h = h % v;
        }
    }
    if (v.degree() > 0) out.emplace_back(v, v.degree());
    return out;
}

// All monic irreducibles of exact degree d over F_2, ascending-coefficient
// lexicographic order. The factorization pipeline only needs d <= deg/2,
// and degrees stay single-digit here, so the table is tiny.
inline std::vector<FpPoly> irreducibles_deg_d_mod2(long d) {
    std::vector<FpPoly> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << d); ++bits) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1, 0);
        for (long i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = (bits >> i) & 1;
        c.back() = 1;
        FpPoly cand(2, std::move(c));
        if (is_irreducible_mod_p(cand)) out.push_back(std::move(cand));
    }
    return out;
}

// Equal-degree splitting of a monic squarefree product of irreducibles all
// of degree d. Odd p: Cantor-Zassenhaus random splitting. p = 2: exhaustive
// trial division by the degree-d irreducible table (less code, same
// certainty at these degrees).
inline void equal_degree(const FpPoly& f, long d, SplitMix64& rng, std::vector<FpPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const std::uint64_t p = f.modulus();
    if (p == 2) {
        FpPoly v = f;
        for (const FpPoly& q : irreducibles_deg_d_mod2(d)) {
            while (v.degree() >= d) {
                auto [quot, rem] = divrem(v, q);
                if (!rem.is_zero()) break;
                out.push_back(q);
                v = std::move(quot);
            }
            if (v.degree() == 0) break;
        }
        if (v.degree() != 0) throw std::logic_error("equal_degree: mod-2 table split incomplete");
        return;
    }
    const Int e = (pow_int(Int(p), static_cast<unsigned>(d)) - 1) / 2;
    FpPoly g = FpPoly::zero(p);
    for (;;) {
        std::vector<std::uint64_t> rc(static_cast<std::size_t>(f.degree()), 0);
        for (auto& v : rc) v = rng.below(p);
        FpPoly a(p, std::move(rc));
        if (a.degree() < 1) continue;
        FpPoly b = pow_mod(a, e, f) - FpPoly::one(p);
        if (b.is_zero()) continue;
        g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) break;
    }
    equal_degree(g, d, rng, out);
    equal_degree(f / g, d, rng, out);
}

}  // namespace detail

/// Full factorization over F_p: squarefree decomposition, then
/// distinct-degree, then equal-degree splitting. The rng_seed drives only
/// the Cantor-Zassenhaus stage; the returned multiset is the same for every
/// seed (canonical order applied before return).
inline FpFactorization factor_mod_p(const FpPoly& f, std::uint64_t rng_seed = 0) {
    if (f.degree() < 1) throw std::invalid_argument("factor_mod_p: constant polynomial");
    FpFactorization result{f.modulus(), f.leading(), {}};
    detail::SplitMix64 rng(rng_seed);
    std::vector<std::pair<FpPoly, unsigned>> squarefree;
    detail::squarefree_mod_p(make_monic(f), 1, squarefree);
    for (const auto& [part, mult] : squarefree) {
        for (const auto& [prod, d] : detail::distinct_degree(part)) {
            std::vector<FpPoly> irr;
            detail::equal_degree(prod, d, rng, irr);
            for (auto& q : irr) result.factors.push_back({std::move(q), mult});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(), [](const FpFactor& a, const FpFactor& b) {
        return canonical_less(a.poly, b.poly);
    });
    return result;
}

inline std::string format_fppoly(const FpPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c[i]);
        } else {
            if (c[i] != 1) out += std::to_string(c[i]) + "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace erpoly
