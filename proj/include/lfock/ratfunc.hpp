#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lfock/scalar.hpp"

namespace lfock {

/// Dense univariate polynomial, constant term first. Trailing zero
/// coefficients are always trimmed (exact zeros only, in both backends).
template <typename S>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const S& v) { return Poly(std::vector<S>{v}); }
    static Poly monomial(const S& v, std::size_t k) {
        std::vector<S> c(k + 1, S(0));
        c[k] = v;
        return Poly(std::move(c));
    }

    const std::vector<S>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    S coeff(std::size_t k) const { return k < c_.size() ? c_[k] : S(0); }

    /// Number of trailing u-powers dividing the polynomial (0 for p(0) != 0).
    std::size_t low_order() const {
        std::size_t k = 0;
        while (k < c_.size() && c_[k].is_zero()) ++k;
        return k;
    }

    Poly shifted_down(std::size_t k) const {
        if (is_zero()) return Poly{};
        std::vector<S> c(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
        return Poly(std::move(c));
    }

    S eval(const S& x) const {
        S acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly{};
        std::vector<S> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * S(static_cast<long long>(i));
        return Poly(std::move(d));
    }

    /// Coefficient-reversed polynomial: u^{deg} * p(1/u).
    Poly reversed() const {
        std::vector<S> c(c_.rbegin(), c_.rend());
        return Poly(std::move(c));
    }

    Poly operator-() const {
        std::vector<S> c(c_);
        for (auto& x : c) x = -x;
        return Poly(std::move(c));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()), S(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        std::vector<S> c(a.c_.size() + b.c_.size() - 1, S(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    Poly operator*(const S& s) const {
        std::vector<S> c(c_);
        for (auto& x : c) x *= s;
        return Poly(std::move(c));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!exactly_equal(a.c_[i], b.c_[i])) return false;
        return true;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<S> c_;
};

namespace detail {

// Euclidean remainder; leading coefficient of b must be invertible (field).
template <typename S>
Poly<S> poly_rem(Poly<S> a, const Poly<S>& b) {
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const S q = a.coeff(static_cast<std::size_t>(a.degree())) /
                    b.coeff(static_cast<std::size_t>(db));
        a = a - b * Poly<S>::monomial(q, static_cast<std::size_t>(a.degree() - db));
    }
    return a;
}

// Monic gcd; exact backend only (float roundoff makes Euclid meaningless).
template <typename S>
Poly<S> poly_gcd(Poly<S> a, Poly<S> b) {
    while (!b.is_zero()) {
        Poly<S> r = poly_rem(a, b);
        a = b;
        b = r;
    }
    if (!a.is_zero()) {
        const S lead = a.coeff(static_cast<std::size_t>(a.degree()));
        a = a * (S(1) / lead);
    }
    return a;
}

template <typename S>
Poly<S> poly_div_exact(const Poly<S>& a, const Poly<S>& b) {
    // exact quotient, caller guarantees divisibility
    Poly<S> rem = a;
    std::vector<S> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, S(0));
    const int db = b.degree();
    while (!rem.is_zero() && rem.degree() >= db) {
        const std::size_t k = static_cast<std::size_t>(rem.degree() - db);
        const S c = rem.coeff(static_cast<std::size_t>(rem.degree())) /
                    b.coeff(static_cast<std::size_t>(db));
        q[k] = c;
        rem = rem - b * Poly<S>::monomial(c, k);
    }
    return Poly<S>(std::move(q));
}

} // namespace detail

/// Rational function in the variable u = q^{1/2-s}, stored as
/// u^upow * num/den with num(0) != 0 (unless num = 0) and den(0) != 0.
/// The explicit integer u-power makes the u <-> 1/u functional-equation
/// symmetry a structural check. Denominator is monic in the exact backend.
template <typename S>
class RatFuncU {
public:
    RatFuncU() : upow_(0), num_{}, den_{S(1)} {}
    RatFuncU(long long n) : RatFuncU(Poly<S>::constant(S(n)), Poly<S>::constant(S(1)), 0) {}
    explicit RatFuncU(const S& v) : RatFuncU(Poly<S>::constant(v), Poly<S>::constant(S(1)), 0) {}

    RatFuncU(Poly<S> num, Poly<S> den, int upow = 0)
        : upow_(upow), num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    static RatFuncU from_poly(Poly<S> p, int upow = 0) {
        return RatFuncU(std::move(p), Poly<S>::constant(S(1)), upow);
    }
    static RatFuncU monomial_u(int k) {
        return RatFuncU(Poly<S>::constant(S(1)), Poly<S>::constant(S(1)), k);
    }

    int upow() const { return upow_; }
    const Poly<S>& num() const { return num_; }
    const Poly<S>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFuncU operator-() const { return RatFuncU(-num_, den_, upow_); }

    friend RatFuncU operator+(const RatFuncU& a, const RatFuncU& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const int m = std::min(a.upow_, b.upow_);
        const Poly<S> ua = shift_up(a.num_, static_cast<std::size_t>(a.upow_ - m));
        const Poly<S> ub = shift_up(b.num_, static_cast<std::size_t>(b.upow_ - m));
        return RatFuncU(ua * b.den_ + ub * a.den_, a.den_ * b.den_, m);
    }
    friend RatFuncU operator-(const RatFuncU& a, const RatFuncU& b) { return a + (-b); }
    friend RatFuncU operator*(const RatFuncU& a, const RatFuncU& b) {
        return RatFuncU(a.num_ * b.num_, a.den_ * b.den_, a.upow_ + b.upow_);
    }
    friend RatFuncU operator/(const RatFuncU& a, const RatFuncU& b) {
        if (b.is_zero()) throw DivisionByZero("rational function division by zero");
        return RatFuncU(a.num_ * b.den_, a.den_ * b.num_, a.upow_ - b.upow_);
    }
    RatFuncU operator*(const S& s) const { return RatFuncU(num_ * s, den_, upow_); }

    /// Structural equality of canonical forms (exact in the exact backend).
    friend bool operator==(const RatFuncU& a, const RatFuncU& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.upow_ == b.upow_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    S eval(const S& u0) const {
        if (is_zero()) return S(0);
        const S dv = den_.eval(u0);
        if (dv.is_zero()) throw PoleAtPoint("denominator vanishes at evaluation point");
        if (upow_ < 0 && u0.is_zero()) throw PoleAtPoint("negative u-power at u = 0");
        return pow_int(u0, upow_) * num_.eval(u0) / dv;
    }

    /// u * d/du. With f = u^m n/d this is u^m (m n d + u(n'd - n d')) / d^2.
    RatFuncU u_log_derivative() const {
        if (is_zero()) return RatFuncU{};
        const Poly<S> np = num_.derivative();
        const Poly<S> dp = den_.derivative();
        Poly<S> top = num_ * den_ * S(upow_) + shift_up(np * den_ - num_ * dp, 1);
        return RatFuncU(std::move(top), den_ * den_, upow_);
    }

    /// f(1/u), canonical.
    RatFuncU reciprocal() const {
        if (is_zero()) return RatFuncU{};
        return RatFuncU(num_.reversed(), den_.reversed(),
                        -upow_ - num_.degree() + den_.degree());
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        if (upow_ != 0) s += "u^" + std::to_string(upow_) + " * ";
        s += "(" + poly_str(num_) + ")";
        if (den_.degree() > 0 || !exactly_equal(den_.coeff(0), S(1)))
            s += " / (" + poly_str(den_) + ")";
        return s;
    }

private:
    static Poly<S> shift_up(const Poly<S>& p, std::size_t k) {
        if (p.is_zero() || k == 0) return p;
        std::vector<S> c(p.coeffs().size() + k, S(0));
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i + k] = p.coeffs()[i];
        return Poly<S>(std::move(c));
    }

    static std::string poly_str(const Poly<S>& p) {
        if (p.is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
            if (p.coeffs()[i].is_zero()) continue;
            std::string c = p.coeffs()[i].str();
            if (!s.empty()) {
                if (c.front() == '-') {
                    s += " - ";
                    c.erase(c.begin());
                } else {
                    s += " + ";
                }
            }
            s += c;
            if (i == 1) s += "*u";
            if (i > 1) s += "*u^" + std::to_string(i);
        }
        return s;
    }

    void canonicalize() {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num_.is_zero()) {
            upow_ = 0;
            den_ = Poly<S>::constant(S(1));
            return;
        }
        const std::size_t ln = num_.low_order();
        const std::size_t ld = den_.low_order();
        upow_ += static_cast<int>(ln) - static_cast<int>(ld);
        num_ = num_.shifted_down(ln);
        den_ = den_.shifted_down(ld);
        if constexpr (scalar_traits<S>::is_exact) {
            Poly<S> g = detail::poly_gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = detail::poly_div_exact(num_, g);
                den_ = detail::poly_div_exact(den_, g);
            }
        }
        const S lead = den_.coeff(static_cast<std::size_t>(den_.degree()));
        if (!exactly_equal(lead, S(1))) {
            const S inv = S(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    int upow_;
    Poly<S> num_;
    Poly<S> den_;
};

/// (-1)^r (u d/du)^r f: realizes (ln q)^{-r} (d/ds)^r under u = q^{1/2-s},
/// so that evaluation at u = 1 gives the r-th central s-derivative.
template <typename S>
RatFuncU<S> log_derivative_power(RatFuncU<S> f, int r) {
    if (r < 0) throw InvalidParameters("log_derivative_power needs r >= 0");
    for (int i = 0; i < r; ++i) f = -f.u_log_derivative();
    return f;
}

template <typename S>
S rf_eval(const RatFuncU<S>& f, const S& u0) {
    return f.eval(u0);
}

/// Structural check for f(u) = f(1/u). Float backend compares canonical
/// coefficients at `rel_tol`.
template <typename S>
bool is_self_reciprocal(const RatFuncU<S>& f, double rel_tol = 0.0) {
    const RatFuncU<S> g = f.reciprocal();
    if constexpr (scalar_traits<S>::is_exact) {
        return f == g;
    } else {
        if (f.upow() != g.upow()) return false;
        if (f.num().degree() != g.num().degree() || f.den().degree() != g.den().degree())
            return false;
        for (int i = 0; i <= f.num().degree(); ++i)
            if (!approx_equal(f.num().coeff(static_cast<std::size_t>(i)),
                              g.num().coeff(static_cast<std::size_t>(i)), rel_tol))
                return false;
        for (int i = 0; i <= f.den().degree(); ++i)
            if (!approx_equal(f.den().coeff(static_cast<std::size_t>(i)),
                              g.den().coeff(static_cast<std::size_t>(i)), rel_tol))
                return false;
        return true;
    }
}

/// Power-series coefficients c_0..c_n of f around u = 0.
/// Requires no pole at 0 (upow >= 0 and den(0) != 0 after canonicalization).
template <typename S>
std::vector<S> series_coefficients(const RatFuncU<S>& f, std::size_t n) {
    std::vector<S> out(n + 1, S(0));
    if (f.is_zero()) return out;
    if (f.upow() < 0) throw PoleAtPoint("series expansion at a pole (negative u-power)");
    const S d0 = f.den().coeff(0);
    const std::size_t m = static_cast<std::size_t>(f.upow());
    for (std::size_t k = 0; k <= n; ++k) {
        S acc = (k >= m) ? f.num().coeff(k - m) : S(0);
        const std::size_t jmax = std::min<std::size_t>(k, static_cast<std::size_t>(f.den().degree()));
        for (std::size_t j = 1; j <= jmax; ++j) acc -= f.den().coeff(j) * out[k - j];
        out[k] = acc / d0;
    }
    return out;
}

} // namespace lfock
