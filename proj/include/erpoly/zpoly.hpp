#pragma once

// Exact arithmetic on dense integer polynomials: content/primitive part,
// primitive-PRS gcd, exact division, composition and self-iteration, and a
// text round-trip (ascending coefficient lists or expressions in x).

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "erpoly/ints.hpp"
#include "erpoly/poly.hpp"

namespace erpoly {

using ZPoly = Polynomial<Int>;

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline ZPoly zpoly(std::vector<long long> coeffs) {
    std::vector<Int> c(coeffs.begin(), coeffs.end());
    return ZPoly(std::move(c));
}

inline ZPoly derivative(const ZPoly& f) {
    std::vector<Int> c;
    const auto& fc = f.coeffs();
    for (std::size_t i = 1; i < fc.size(); ++i) c.push_back(fc[i] * Int(i));
    return ZPoly(std::move(c));
}

inline Int evaluate(const ZPoly& f, const Int& t) { return f(t); }

/// gcd of all coefficients, carrying the sign of the leading coefficient.
/// content(f) * primitive_part(f) == f with primitive_part having gcd 1 and
/// a positive leading coefficient.
inline Int content(const ZPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("content: zero polynomial");
    Int g = 0;
    for (const auto& c : f.coeffs()) g = gcd_int(g, c);
    if (f.leading() < 0) g = -g;
    return g;
}

inline std::pair<Int, ZPoly> content_primitive(const ZPoly& f) {
    Int c = content(f);
    std::vector<Int> q;
    q.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) q.push_back(v / c);
    return {c, ZPoly(std::move(q))};
}

inline ZPoly primitive_part(const ZPoly& f) { return content_primitive(f).second; }

/// Exact quotient f / g in Z[x], or nullopt when g does not divide f there.
inline std::optional<ZPoly> try_divide(const ZPoly& f, const ZPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("try_divide: zero divisor");
    if (f.is_zero()) return ZPoly::zero();
    if (f.degree() < g.degree()) return std::nullopt;
    std::vector<Int> rem = f.coeffs();
    std::vector<Int> quot(f.coeffs().size() - g.coeffs().size() + 1, Int(0));
    const auto& gc = g.coeffs();
    const Int& glead = gc.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Int& top = rem[k + gc.size() - 1];
        if (top == 0) continue;
        if (top % glead != 0) return std::nullopt;
        Int q = top / glead;
        for (std::size_t j = 0; j < gc.size(); ++j) rem[k + j] -= q * gc[j];
        quot[k] = std::move(q);
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return ZPoly(std::move(quot));
}

namespace detail {

// Pseudo-remainder of u by v (deg u >= deg v >= 0): some scalar multiple of
// the true remainder, which is all the primitive PRS needs.
inline ZPoly pseudo_rem(const ZPoly& u, const ZPoly& v) {
    ZPoly r = u;
    const Int& d = v.leading();
    while (!r.is_zero() && r.degree() >= v.degree()) {
        ZPoly s = ZPoly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - v.degree()));
        r = r * d - s * v;
    }
    return r;
}

inline ZPoly positive_primitive(const ZPoly& f) { return primitive_part(f); }

}  // namespace detail

/// Primitive gcd in Z[x] with positive leading coefficient, via the
/// primitive polynomial remainder sequence (no rational arithmetic). This
/// represents the Q[x] gcd up to a scalar unit.
inline ZPoly gcd(const ZPoly& p, const ZPoly& q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd: both arguments zero");
    if (p.is_zero()) return detail::positive_primitive(q);
    if (q.is_zero()) return detail::positive_primitive(p);
    ZPoly a = detail::positive_primitive(p);
    ZPoly b = detail::positive_primitive(q);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = detail::pseudo_rem(a, b);
        a = std::move(b);
        b = r.is_zero() ? ZPoly::zero() : detail::positive_primitive(r);
    }
    return a;
}

/// f composed with itself n times under the convention iterate(f, 0) = f,
/// iterate(f, n) = f(iterate(f, n-1)); n counts compositions, so the result
/// has degree d^(n+1) for deg f = d.
inline ZPoly iterate(const ZPoly& f, unsigned n) {
    if (f.degree() < 1) throw std::invalid_argument("iterate: constant polynomial");
    ZPoly g = f;
    for (unsigned i = 0; i < n; ++i) g = compose(f, g);
    return g;
}

/// The conjugate polynomial x -> -f(-x); it has the same iteration and
/// reducibility behaviour as f.
inline ZPoly conjugate_family(const ZPoly& f) {
    std::vector<Int> c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (i % 2 == 0) c[i] = -c[i];
    return ZPoly(std::move(c));
}

/// Total ordering used wherever factor lists must be reproducible: by
/// degree, then lexicographically on the ascending coefficient sequence.
inline bool canonical_less(const ZPoly& a, const ZPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] != bc[i]) return ac[i] < bc[i];
    }
    return false;
}

// ---------------------------------------------------------------------------
// Text round-trip.
//
// parse_zpoly accepts either a comma-separated ascending coefficient list
// ("1,3,-10,-8") or an expression in x with integer coefficients and '^'
// powers ("x^3 + 2*x^2 + 1"; the '*' is optional). format_zpoly emits the
// descending-degree human form; parse(format(f)) == f.
// ---------------------------------------------------------------------------

namespace detail {

inline Int parse_integer(std::string_view s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
    if (i == s.size()) throw ParseError("expected integer, got '" + std::string(s) + "'");
    Int v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("non-integer coefficient '" + std::string(s) + "'");
        v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace detail

inline ZPoly parse_zpoly(std::string_view text) {
    constexpr std::size_t kMaxExponent = 100000;
    std::string_view s = detail::trim(text);
    if (s.empty()) throw ParseError("empty polynomial text");

    if (s.find(',') != std::string_view::npos) {
        std::vector<Int> coeffs;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t next = s.find(',', pos);
            std::string_view tok =
                detail::trim(s.substr(pos, next == std::string_view::npos ? next : next - pos));
            coeffs.push_back(detail::parse_integer(tok));
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
        return ZPoly(std::move(coeffs));
    }

    // Expression form: sequence of signed terms, each [int]['*']['x'['^'exp]].
    std::vector<Int> coeffs;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto add_term = [&](const Int& c, std::size_t e) {
        if (e >= coeffs.size()) coeffs.resize(e + 1, Int(0));
        coeffs[e] += c;
    };
    skip_ws();
    bool first = true;
    while (i < s.size()) {
        int sgn = 1;
        skip_ws();
        if (s[i] == '+' || s[i] == '-') {
            sgn = (s[i] == '-') ? -1 : 1;
            ++i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' before term at position " + std::to_string(i));
        }
        first = false;
        skip_ws();
        Int mag = 1;
        bool have_digits = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            mag = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                mag = mag * 10 + (s[i++] - '0');
            have_digits = true;
        }
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip_ws();
        }
        std::size_t e = 0;
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i;
            e = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_ws();
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    throw ParseError("expected exponent after '^'");
                std::size_t exp = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    exp = exp * 10 + (s[i++] - '0');
                    if (exp > kMaxExponent) throw ParseError("exponent too large");
                }
                e = exp;
            }
        } else if (!have_digits) {
            throw ParseError("expected coefficient or 'x' at position " + std::to_string(i));
        }
        add_term(sgn < 0 ? Int(-mag) : mag, e);
        skip_ws();
    }
    return ZPoly(std::move(coeffs));
}

inline std::string format_zpoly(const ZPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    const auto& c = f.coeffs();
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        bool neg = c[i] < 0;
        if (first) {
            if (neg) out << '-';
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        Int mag = abs_int(c[i]);
        if (i == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag << '*';
            out << 'x';
            if (i > 1) out << '^' << i;
        }
    }
    return out.str();
}

}  // namespace erpoly
