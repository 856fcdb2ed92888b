#pragma once

// Integer factorization support for rational-root extraction: trial
// division by small primes, Miller-Rabin (deterministic base set below
// 2^64), and Pollard-Brent rho for the stubborn cofactors. Constant terms
// of composed polynomials get large, so the Int paths matter.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/multiprecision/miller_rabin.hpp>

#include "erpoly/detail/rng.hpp"
#include "erpoly/ints.hpp"

namespace erpoly {
namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e != 0) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic below 2^64 with this base set.
inline bool miller_rabin_u64(std::uint64_t n) {
    constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (std::uint64_t p : kBases)
        if (n % p == 0) return n == p;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kBases) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s && witness; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

// Brent's cycle variant of Pollard rho; n odd composite > 1.
inline std::uint64_t pollard_brent_u64(std::uint64_t n, SplitMix64& rng) {
    for (;;) {
        std::uint64_t y = rng.below(n - 1) + 1;
        std::uint64_t c = rng.below(n - 1) + 1;
        std::uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
        const std::uint64_t m = 128;
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
            for (std::uint64_t k = 0; k < r && g == 1; k += m) {
                ys = y;
                const std::uint64_t lim = std::min(m, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = (mulmod_u64(y, y, n) + c) % n;
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (mulmod_u64(ys, ys, n) + c) % n;
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
    }
}

inline bool is_prime_int(const Int& n) {
    if (n < 2) return false;
    if (n <= Int(~std::uint64_t(0))) return miller_rabin_u64(n.convert_to<std::uint64_t>());
    // Beyond 64 bits: probabilistic, error < 4^-32; root candidates are
    // re-verified by exact evaluation so a miss cannot yield a wrong root.
    return boost::multiprecision::miller_rabin_test(n, 32);
}

inline Int pollard_brent_int(const Int& n, SplitMix64& rng) {
    for (;;) {
        Int y = Int(rng.next()) % (n - 1) + 1;
        Int c = Int(rng.next()) % (n - 1) + 1;
        Int g = 1, q = 1, x = 0, ys = 0;
        std::uint64_t r = 1;
        const std::uint64_t m = 128;
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
            for (std::uint64_t k = 0; k < r && g == 1; k += m) {
                ys = y;
                const std::uint64_t lim = std::min(m, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs_int(x - y) % n;
                }
                g = gcd_int(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd_int(abs_int(x - ys), n);
            }
        }
        if (g != n) return g;
    }
}

inline void factor_into(Int n, std::vector<Int>& primes) {
    if (n == 1) return;
    if (is_prime_int(n)) {
        primes.push_back(std::move(n));
        return;
    }
    SplitMix64 rng(0x9e3779b97f4a7c15ULL);
    Int d = n <= Int(~std::uint64_t(0))
                ? Int(pollard_brent_u64(n.convert_to<std::uint64_t>(), rng))
                : pollard_brent_int(n, rng);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

/// Prime factorization of n >= 1 as sorted (prime, exponent) pairs.
inline std::vector<std::pair<Int, unsigned>> factor_integer(Int n) {
    if (n < 1) throw std::invalid_argument("factor_integer: argument must be positive");
    std::vector<Int> primes;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        while (n % p == 0) {
            primes.push_back(Int(p));
            n /= p;
        }
    }
    factor_into(std::move(n), primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Int, unsigned>> out;
    for (auto& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(std::move(p), 1u);
    }
    return out;
}

/// All positive divisors of n >= 1, ascending.
inline std::vector<Int> positive_divisors(const Int& n) {
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : factor_integer(n)) {
        const std::size_t base = divs.size();
        Int pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace detail
}  // namespace erpoly
