#pragma once

// Dense univariate polynomial over a commutative ring T, stored in
// ascending-degree order: coeffs()[i] is the coefficient of x^i.
//
// The coefficient vector is empty iff the polynomial is zero; otherwise the
// last entry is nonzero. degree() of the zero polynomial returns the
// sentinel kNegInfDegree.
//
// T must provide value semantics, +, -, unary -, *, == and a
// default constructor yielding the ring zero. Instantiated in this project
// with Int (integer polynomials) and with Polynomial<Int> itself
// (polynomials in x whose coefficients are integer polynomials in a
// parameter).

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace erpoly {

inline constexpr int kNegInfDegree = -1;

namespace detail {

template <typename T>
bool is_zero_value(const T& v) {
    if constexpr (requires { v.is_zero(); }) {
        return v.is_zero();
    } else {
        return v == T{};
    }
}

}  // namespace detail

template <typename T>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial zero() { return Polynomial{}; }

    static Polynomial constant(T c) {
        Polynomial r;
        if (!detail::is_zero_value(c)) r.coeffs_.push_back(std::move(c));
        return r;
    }

    /// The monomial x.
    static Polynomial variable() {
        Polynomial r;
        r.coeffs_ = {T{}, unit()};
        return r;
    }

    /// c * x^k.
    static Polynomial monomial(T c, std::size_t k) {
        Polynomial r;
        if (detail::is_zero_value(c)) return r;
        r.coeffs_.assign(k, T{});
        r.coeffs_.push_back(std::move(c));
        return r;
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// kNegInfDegree for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<T>& coeffs() const { return coeffs_; }

    /// Coefficient of x^i (zero beyond the stored range).
    T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T{}; }

    const T& leading() const {
        if (coeffs_.empty()) throw std::invalid_argument("leading: zero polynomial");
        return coeffs_.back();
    }

    T constant_term() const { return coeff(0); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), T{});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] = r.coeffs_[i] + b.coeffs_[i];
        r.normalize();
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), T{});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] = r.coeffs_[i] - b.coeffs_[i];
        r.normalize();
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        Polynomial r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, T{});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (detail::is_zero_value(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        r.normalize();
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Polynomial& a, const T& s) {
        if (detail::is_zero_value(s)) return zero();
        Polynomial r = a;
        for (auto& c : r.coeffs_) c = c * s;
        r.normalize();
        return r;
    }
    friend Polynomial operator*(const T& s, const Polynomial& a) { return a * s; }

    /// Horner evaluation at a ring element.
    T operator()(const T& t) const {
        T acc{};
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
        return acc;
    }

private:
    static T unit() {
        if constexpr (requires { T(1); }) {
            return T(1);
        } else {
            return T::constant(1);  // nested polynomial ring
        }
    }

    void normalize() {
        while (!coeffs_.empty() && detail::is_zero_value(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

/// outer(inner(x)) by Horner's scheme in the inner polynomial.
template <typename T>
Polynomial<T> compose(const Polynomial<T>& outer, const Polynomial<T>& inner) {
    Polynomial<T> acc;
    const auto& oc = outer.coeffs();
    for (std::size_t i = oc.size(); i-- > 0;) acc = acc * inner + Polynomial<T>::constant(oc[i]);
    return acc;
}

}  // namespace erpoly
