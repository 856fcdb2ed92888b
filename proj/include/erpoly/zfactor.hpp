#pragma once

// Complete factorization of integer polynomials into content and primitive
// irreducible factors, via Zassenhaus: rational-root extraction, squarefree
// decomposition (Yun), modular factorization at a well-chosen prime, Hensel
// lifting to a Mignotte-sized precision, and subset recombination with the
// leading-coefficient trick. Also exports the multi-prime irreducibility
// certificate machinery built on the same parts.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "erpoly/detail/intfactor.hpp"
#include "erpoly/fppoly.hpp"
#include "erpoly/ints.hpp"
#include "erpoly/zpoly.hpp"

namespace erpoly {

/// Conservative bound on the absolute value of any coefficient of any
/// integer factor of f: B = 2^(deg f) * ceil(||f||_2) * |lc(f)|.
inline Int mignotte_bound(const ZPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("mignotte_bound: zero polynomial");
    Int sumsq = 0;
    for (const auto& c : f.coeffs()) sumsq += c * c;
    return pow_int(Int(2), static_cast<unsigned>(f.degree())) * ceil_sqrt(sumsq) *
           abs_int(f.leading());
}

namespace detail {

inline std::uint64_t next_prime_after(std::uint64_t n) {
    std::uint64_t p = n + 1;
    while (!is_prime_u64(p)) ++p;
    return p;
}

// Coefficients reduced into [0, m).
inline ZPoly mod_m(const ZPoly& f, const Int& m) {
    std::vector<Int> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) {
        Int r = v % m;
        if (r < 0) r += m;
        c.push_back(std::move(r));
    }
    return ZPoly(std::move(c));
}

// Symmetric representatives in (-m/2, m/2].
inline ZPoly symmetric_rep(const ZPoly& f, const Int& m) {
    std::vector<Int> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) {
        Int r = v % m;
        if (r < 0) r += m;
        if (2 * r > m) r -= m;
        c.push_back(std::move(r));
    }
    return ZPoly(std::move(c));
}

inline Int inv_mod_int(const Int& a, const Int& m) {
    Int t = 0, nt = 1;
    Int r = m, nr = ((a % m) + m) % m;
    while (nr != 0) {
        Int q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw std::invalid_argument("inv_mod_int: not invertible");
    return t < 0 ? t + m : t;
}

inline ZPoly fp_to_zpoly(const FpPoly& f) {
    std::vector<Int> c;
    c.reserve(f.coeffs().size());
    for (auto v : f.coeffs()) c.emplace_back(v);
    return ZPoly(std::move(c));
}

// Extended Euclid over F_p for coprime a, b: returns (s, t) with
// s*a + t*b = 1 exactly in F_p[x], deg s < deg b, deg t < deg a.
inline std::pair<FpPoly, FpPoly> bezout_coprime(const FpPoly& a, const FpPoly& b) {
    const std::uint64_t p = a.modulus();
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = FpPoly::one(p), s1 = FpPoly::zero(p);
    FpPoly t0 = FpPoly::zero(p), t1 = FpPoly::one(p);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        FpPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        FpPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.degree() != 0) throw std::invalid_argument("bezout_coprime: arguments not coprime");
    const std::uint64_t inv = inv_mod_u64(r0.leading(), p);
    return {s0 * inv, t0 * inv};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rational roots
// ---------------------------------------------------------------------------

/// All rational roots of f, each p/q in lowest terms with q | lc(f) and
/// p | constant term, sorted ascending. Small-prime screening certifies the
/// (common) no-root case before any divisor enumeration; every surviving
/// candidate is confirmed by exact evaluation of q^n * f(p/q).
inline std::vector<Rational> rational_roots(const ZPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rational> roots;
    if (f.degree() < 1) return roots;

    ZPoly g = f;
    if (g.constant_term() == 0) {
        roots.emplace_back(0);
        const auto& c = g.coeffs();
        std::size_t shift = 0;
        while (c[shift] == 0) ++shift;
        g = ZPoly(std::vector<Int>(c.begin() + static_cast<long>(shift), c.end()));
    }
    if (g.degree() < 1) return roots;
    g = primitive_part(g);

    // Screening: a root p/q in lowest terms has q | lc, so for any prime
    // l not dividing lc, p * q^-1 is a root of g mod l. No roots mod l
    // means no rational roots at all; otherwise the residue sets filter
    // the divisor candidates below.
    struct Screen {
        std::uint64_t ell;
        std::uint64_t root_mask;  // bit r set iff g(r) = 0 mod ell
    };
    constexpr std::uint64_t kScreenPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                               29, 31, 37, 41, 43, 47, 53, 59, 61};
    constexpr int kMaxScreens = 5;
    std::vector<Screen> screens;
    for (std::uint64_t ell : kScreenPrimes) {
        if (g.leading() % Int(ell) == 0) continue;
        const FpPoly gl = reduce_mod_p(g, ell);
        std::uint64_t mask = 0;
        for (std::uint64_t r = 0; r < ell; ++r) {
            std::uint64_t acc = 0;
            for (std::size_t i = gl.coeffs().size(); i-- > 0;)
                acc = (acc * r + gl.coeffs()[i]) % ell;
            if (acc == 0) mask |= std::uint64_t(1) << r;
        }
        if (mask == 0) {
            std::sort(roots.begin(), roots.end());
            return roots;  // certified: no further rational roots exist
        }
        screens.push_back({ell, mask});
        if (screens.size() >= kMaxScreens) break;
    }

    const Int f1 = evaluate(g, 1);
    const Int fm1 = evaluate(g, -1);
    const std::vector<Int> num_divs = detail::positive_divisors(abs_int(g.constant_term()));
    const std::vector<Int> den_divs = detail::positive_divisors(abs_int(g.leading()));
    const std::size_t n = static_cast<std::size_t>(g.degree());

    for (const Int& q : den_divs) {
        std::vector<Int> qpow(n + 1);
        qpow[0] = 1;
        for (std::size_t i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * q;
        // Residues q^-1 mod each screen prime, for the candidate filter.
        std::vector<std::uint64_t> qinv(screens.size());
        for (std::size_t si = 0; si < screens.size(); ++si) {
            const std::uint64_t ell = screens[si].ell;
            qinv[si] = detail::inv_mod_u64((q % Int(ell)).convert_to<std::uint64_t>(), ell);
        }
        for (const Int& pnum : num_divs) {
            if (gcd_int(pnum, q) != 1) continue;
            for (int sgn : {1, -1}) {
                const Int p = sgn > 0 ? pnum : -pnum;
                bool pass = true;
                for (std::size_t si = 0; si < screens.size() && pass; ++si) {
                    const std::uint64_t ell = screens[si].ell;
                    Int pr = p % Int(ell);
                    if (pr < 0) pr += ell;
                    const std::uint64_t res =
                        pr.convert_to<std::uint64_t>() * qinv[si] % ell;
                    pass = (screens[si].root_mask >> res) & 1;
                }
                if (!pass) continue;
                // Classical filters: (p - q) | f(1) and (p + q) | f(-1).
                if (f1 != 0 && p != q && f1 % (p - q) != 0) continue;
                if (fm1 != 0 && p != -q && fm1 % (p + q) != 0) continue;
                Int acc = 0;
                for (std::size_t i = n + 1; i-- > 0;)
                    acc = acc * p + g.coeff(i) * qpow[n - i];
                if (acc == 0) roots.emplace_back(p, q);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ---------------------------------------------------------------------------
// Factorization types
// ---------------------------------------------------------------------------

struct ZFactor {
    ZPoly poly;  // primitive, positive leading coefficient, irreducible
    unsigned multiplicity;
};

/// content * prod poly^multiplicity = original polynomial, factors in
/// canonical order (degree, then lexicographic ascending coefficients).
struct Factorization {
    Int content;
    std::vector<ZFactor> factors;

    ZPoly reconstruct() const {
        ZPoly r = ZPoly::constant(content);
        for (const auto& fac : factors)
            for (unsigned i = 0; i < fac.multiplicity; ++i) r = r * fac.poly;
        return r;
    }
};

/// True when the primitive part splits nontrivially (content never counts
/// toward reducibility).
inline bool is_nontrivial(const Factorization& fac) {
    unsigned total = 0;
    for (const auto& f : fac.factors) total += f.multiplicity;
    return total >= 2;
}

// ---------------------------------------------------------------------------
// Prime selection
// ---------------------------------------------------------------------------

struct PrimeCandidate {
    std::uint64_t p;
    long factor_count;  // number of irreducible factors of f mod p
};

struct PrimeChoice {
    std::uint64_t prime;
    std::vector<PrimeCandidate> examined;
};

/// Among the first T admissible primes (p prime, p not dividing lc(f), and
/// f squarefree mod p), the one whose modular factorization has the fewest
/// irreducible factors. A count of 1 is unbeatable and stops the scan.
/// f must be squarefree and primitive.
inline PrimeChoice choose_prime(const ZPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("choose_prime: constant polynomial");
    constexpr int kCandidatePrimes = 5;
    constexpr int kGiveUpAfter = 1000;
    PrimeChoice out{0, {}};
    long best = LONG_MAX;
    std::uint64_t p = 2;
    int scanned = 0;
    while (static_cast<int>(out.examined.size()) < kCandidatePrimes) {
        if (++scanned > kGiveUpAfter)
            throw std::invalid_argument("choose_prime: no admissible prime (input not squarefree?)");
        if (f.leading() % Int(p) != 0) {
            const FpPoly fp = reduce_mod_p(f, p);
            if (gcd(fp, derivative(fp)).degree() == 0) {
                long count = 0;
                for (const auto& [prod, d] : detail::distinct_degree(make_monic(fp)))
                    count += prod.degree() / d;
                out.examined.push_back({p, count});
                if (count < best) {
                    best = count;
                    out.prime = p;
                }
                if (count == 1) break;
            }
        }
        p = detail::next_prime_after(p);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

struct HenselStep {
    const ZPoly& target;  // the (monic) polynomial being lifted toward
    const ZPoly& g;
    const ZPoly& h;
    const Int& modulus;  // target = g*h holds mod this
};

using HenselObserver = std::function<void(const HenselStep&)>;

namespace detail {

// One pairwise linear lift: F monic mod pk with coefficients in [0, pk),
// F = g0*h0 mod p. Returns (g, h) monic with F = g*h mod pk, g = g0 and
// h = h0 mod p. The observer sees every intermediate precision.
inline std::pair<ZPoly, ZPoly> lift_pair(const ZPoly& F, const FpPoly& g0, const FpPoly& h0,
                                         std::uint64_t p, const Int& pk,
                                         const HenselObserver& observer) {
    auto [s, t] = bezout_coprime(g0, h0);
    ZPoly g = fp_to_zpoly(g0);
    ZPoly h = fp_to_zpoly(h0);
    Int mj = p;
    while (mj < pk) {
        const ZPoly diff = F - g * h;  // divisible by mj coefficientwise
        std::vector<std::uint64_t> ec(diff.coeffs().size());
        for (std::size_t i = 0; i < ec.size(); ++i) {
            Int v = (diff.coeffs()[i] / mj) % Int(p);
            if (v < 0) v += p;
            ec[i] = v.convert_to<std::uint64_t>();
        }
        const FpPoly e(p, std::move(ec));
        auto [q, r] = divrem(s * e, h0);
        const FpPoly dg = t * e + q * g0;  // degree < deg g0, exactly
        g += ZPoly::constant(mj) * fp_to_zpoly(dg);
        h += ZPoly::constant(mj) * fp_to_zpoly(r);
        mj *= p;
        if (observer) observer(HenselStep{F, g, h, mj});
    }
    return {std::move(g), std::move(h)};
}

inline void lift_tree(const ZPoly& F, const std::vector<FpPoly>& seeds, std::size_t lo,
                      std::size_t hi, std::uint64_t p, const Int& pk,
                      const HenselObserver& observer, std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        out[lo] = F;
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    FpPoly g0 = FpPoly::one(p), h0 = FpPoly::one(p);
    for (std::size_t i = lo; i < mid; ++i) g0 = g0 * seeds[i];
    for (std::size_t i = mid; i < hi; ++i) h0 = h0 * seeds[i];
    auto [g, h] = lift_pair(F, g0, h0, p, pk, observer);
    lift_tree(g, seeds, lo, mid, p, pk, observer, out);
    lift_tree(h, seeds, mid, hi, p, pk, observer, out);
}

}  // namespace detail

/// Lift a mod-p factorization to mod p^k by iterated pairwise linear
/// lifting over a balanced factor tree. Seeds must be monic, pairwise
/// coprime, and multiply to the monic normalization of f mod p; the
/// returned factors (symmetric representatives, coefficients in
/// (-p^k/2, p^k/2]) are congruent to their seeds mod p and multiply to
/// lc(f)^-1 * f mod p^k.
inline std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<FpPoly>& seeds,
                                      std::uint64_t p, unsigned k,
                                      const HenselObserver& observer = {}) {
    if (f.degree() < 1) throw std::invalid_argument("hensel_lift: constant polynomial");
    if (k < 1) throw std::invalid_argument("hensel_lift: precision k must be >= 1");
    if (seeds.empty()) throw std::invalid_argument("hensel_lift: no seed factors");
    if (f.leading() % Int(p) == 0)
        throw std::invalid_argument("hensel_lift: p divides the leading coefficient");
    const FpPoly fbar = reduce_mod_p(f, p);
    if (gcd(fbar, derivative(fbar)).degree() != 0)
        throw std::invalid_argument("hensel_lift: f is not squarefree mod p");
    FpPoly prod = FpPoly::one(p);
    for (const auto& s : seeds) {
        if (!s.is_monic()) throw std::invalid_argument("hensel_lift: seed factor not monic");
        prod = prod * s;
    }
    if (prod != make_monic(fbar))
        throw std::invalid_argument("hensel_lift: seed product does not match f mod p");

    const Int pk = pow_int(Int(p), k);
    const Int linv = detail::inv_mod_int(f.leading(), pk);
    const ZPoly F = detail::mod_m(ZPoly::constant(linv) * f, pk);
    std::vector<ZPoly> lifted(seeds.size(), ZPoly::zero());
    detail::lift_tree(F, seeds, 0, seeds.size(), p, pk, observer, lifted);
    for (auto& g : lifted) g = detail::symmetric_rep(g, pk);
    return lifted;
}

// ---------------------------------------------------------------------------
// Squarefree decomposition and the Zassenhaus core
// ---------------------------------------------------------------------------

namespace detail {

// Yun's algorithm over Z (characteristic 0): f primitive with positive
// leading coefficient; returns pairwise-coprime squarefree primitive parts
// with their multiplicities.
inline std::vector<std::pair<ZPoly, unsigned>> squarefree_decompose(const ZPoly& f) {
    std::vector<std::pair<ZPoly, unsigned>> out;
    const ZPoly df = derivative(f);
    ZPoly a = gcd(f, df);
    if (a.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    ZPoly b = *try_divide(f, a);
    ZPoly c = *try_divide(df, a);
    ZPoly d = c - derivative(b);
    unsigned i = 1;
    while (b.degree() > 0) {
        ZPoly g = d.is_zero() ? detail::positive_primitive(b) : gcd(b, d);
        b = *try_divide(b, g);
        c = *try_divide(d, g);
        d = c - derivative(b);
        if (g.degree() > 0) out.emplace_back(std::move(g), i);
        ++i;
    }
    return out;
}

// Zassenhaus on a primitive squarefree polynomial with positive leading
// coefficient: modular factorization at the chosen prime, Hensel lift past
// twice the Mignotte bound of lc(s)*s, then subset recombination by
// increasing cardinality (lexicographic within a cardinality). Smallest
// subsets are found first, so every accepted candidate is irreducible.
inline std::vector<ZPoly> factor_squarefree_primitive(const ZPoly& s, std::uint64_t rng_seed) {
    if (s.degree() == 1) return {s};
    const PrimeChoice choice = choose_prime(s);
    const std::uint64_t p = choice.prime;
    const FpFactorization mf = factor_mod_p(reduce_mod_p(s, p), rng_seed);
    if (mf.factors.size() == 1) return {s};  // irreducible mod p certificate

    const Int bound = mignotte_bound(s * ZPoly::constant(s.leading()));
    unsigned k = 1;
    Int pk = p;
    while (pk <= 2 * bound) {
        pk *= p;
        ++k;
    }
    std::vector<FpPoly> seeds;
    seeds.reserve(mf.factors.size());
    for (const auto& fac : mf.factors) seeds.push_back(fac.poly);
    const std::vector<ZPoly> lifted = hensel_lift(s, seeds, p, k);

    std::vector<ZPoly> out;
    std::vector<std::size_t> avail(lifted.size());
    std::iota(avail.begin(), avail.end(), std::size_t{0});
    ZPoly w = s;
    std::size_t cnt = 1;
    while (2 * cnt <= avail.size()) {
        std::vector<std::size_t> sel(cnt);
        std::iota(sel.begin(), sel.end(), std::size_t{0});
        auto next_combination = [&sel, &avail]() {
            std::size_t i = sel.size();
            while (i-- > 0) {
                if (sel[i] + (sel.size() - i) < avail.size()) {
                    ++sel[i];
                    for (std::size_t j = i + 1; j < sel.size(); ++j) sel[j] = sel[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        bool accepted = false;
        do {
            long degsum = 0;
            for (std::size_t j : sel) degsum += lifted[avail[j]].degree();
            if (degsum >= w.degree()) continue;  // proper divisors only
            ZPoly cand = ZPoly::constant(w.leading() % pk);
            for (std::size_t j : sel) cand = mod_m(cand * lifted[avail[j]], pk);
            cand = primitive_part(symmetric_rep(cand, pk));
            if (auto quot = try_divide(w, cand)) {
                out.push_back(std::move(cand));
                w = std::move(*quot);
                for (std::size_t j = sel.size(); j-- > 0;)
                    avail.erase(avail.begin() + static_cast<long>(sel[j]));
                accepted = true;
                break;
            }
        } while (next_combination());
        if (!accepted) ++cnt;
    }
    if (w.degree() > 0) out.push_back(std::move(w));
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// factor and is_irreducible
// ---------------------------------------------------------------------------

/// Factor f into content and primitive irreducible factors. The rng_seed
/// feeds only the modular equal-degree splitting; the result is canonical
/// and seed-independent.
inline Factorization factor(const ZPoly& f, std::uint64_t rng_seed = 0) {
    if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    auto [cont, prim] = content_primitive(f);
    Factorization out{std::move(cont), {}};
    if (prim.degree() == 0) return out;

    ZPoly w = std::move(prim);
    for (const Rational& r : rational_roots(w)) {
        const ZPoly lin({-numerator(r), denominator(r)});
        unsigned mult = 0;
        while (auto quot = try_divide(w, lin)) {
            w = std::move(*quot);
            ++mult;
        }
        out.factors.push_back({lin, mult});
    }
    if (w.degree() >= 1) {
        for (const auto& [part, mult] : detail::squarefree_decompose(w))
            for (auto& irr : detail::factor_squarefree_primitive(part, rng_seed))
                out.factors.push_back({std::move(irr), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const ZFactor& a, const ZFactor& b) { return canonical_less(a.poly, b.poly); });
    return out;
}

enum class IrreducibilityRoute { kDegreeOne, kModularCertificate, kFactorization };

struct IrreducibilityResult {
    bool irreducible;
    IrreducibilityRoute route;
    std::uint64_t certificate_prime;             // set iff route is kModularCertificate
    std::optional<Factorization> factorization;  // set iff route is kFactorization
};

/// Scan the first k_primes primes not dividing lc(f) for a modular
/// irreducibility certificate; returns the first certifying prime, if any.
/// (Irreducibility mod p with the degree preserved proves the primitive
/// part irreducible over Q; the converse fails, so absence proves nothing.)
inline std::optional<std::uint64_t> modular_certificate(const ZPoly& f, int k_primes = 5) {
    if (f.degree() < 1) throw std::invalid_argument("modular_certificate: constant polynomial");
    std::uint64_t p = 2;
    for (int tried = 0; tried < k_primes;) {
        if (f.leading() % Int(p) != 0) {
            ++tried;
            if (is_irreducible_mod_p(reduce_mod_p(f, p))) return p;
        }
        p = detail::next_prime_after(p);
    }
    return std::nullopt;
}

/// Decide irreducibility of the primitive part of f over Q. Modular
/// certificates are tried at the first K primes not dividing the leading
/// coefficient; if none certifies, full factorization decides.
inline IrreducibilityResult is_irreducible(const ZPoly& f, std::uint64_t rng_seed = 0) {
    if (f.degree() < 1) throw std::invalid_argument("is_irreducible: constant polynomial");
    if (f.degree() == 1)
        return {true, IrreducibilityRoute::kDegreeOne, 0, std::nullopt};
    const ZPoly prim = primitive_part(f);
    if (auto p = modular_certificate(prim))
        return {true, IrreducibilityRoute::kModularCertificate, *p, std::nullopt};
    Factorization fac = factor(prim, rng_seed);
    const bool irr = !is_nontrivial(fac);
    return {irr, IrreducibilityRoute::kFactorization, 0, std::move(fac)};
}

}  // namespace erpoly
