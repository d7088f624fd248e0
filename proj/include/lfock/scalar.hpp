#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "lfock/errors.hpp"

namespace lfock {

namespace mp = boost::multiprecision;

/// Exact scalar backend: arbitrary-precision rationals.
/// All field operations are closed and exact; division by zero throws.
class Rational {
public:
    using rep = mp::cpp_rational;

    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    explicit Rational(rep v) : v_(std::move(v)) {}

    static Rational ratio(long long num, long long den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        if (den < 0) {  // keep the canonical positive-denominator form
            num = -num;
            den = -den;
        }
        return Rational(rep(mp::cpp_int(num), mp::cpp_int(den)));
    }

    /// Accepts "p", "-p", "p/q" with arbitrary-size integers.
    static Rational parse(std::string_view s) {
        try {
            rep v{std::string(s)};
            return Rational(std::move(v));
        } catch (const std::exception&) {
            throw InvalidParameters("cannot parse rational: '" + std::string(s) + "'");
        }
    }

    const rep& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

    double to_double() const { return v_.convert_to<double>(); }

    std::string str() const {
        std::ostringstream os;
        os << v_;
        return os.str();
    }

private:
    rep v_;
};

/// Floating scalar backend: complex numbers at a configurable precision.
/// Semantic equality always goes through approx_equal with an explicit
/// relative tolerance; operator== is deliberately not provided.
template <typename R>
class Complex {
public:
    using real_type = R;

    Complex() : v_(0) {}
    Complex(long long n) : v_(static_cast<R>(n)) {}
    Complex(R re, R im) : v_(re, im) {}
    explicit Complex(std::complex<R> v) : v_(v) {}

    static Complex polar(R modulus, R angle) {
        return Complex(std::polar(modulus, angle));
    }

    const std::complex<R>& value() const { return v_; }
    R real() const { return v_.real(); }
    R imag() const { return v_.imag(); }
    bool is_zero() const { return v_.real() == R(0) && v_.imag() == R(0); }

    Complex operator-() const { return Complex(-v_); }
    Complex& operator+=(const Complex& o) { v_ += o.v_; return *this; }
    Complex& operator-=(const Complex& o) { v_ -= o.v_; return *this; }
    Complex& operator*=(const Complex& o) { v_ *= o.v_; return *this; }
    Complex& operator/=(const Complex& o) {
        if (o.is_zero()) throw DivisionByZero("complex division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }

    double to_double() const { return static_cast<double>(v_.real()); }

    std::string str() const {
        std::ostringstream os;
        os.precision(max_digits());
        os << v_.real();
        os << (std::signbit(v_.imag()) ? "" : "+");
        os << v_.imag() << "i";
        return os.str();
    }

    static constexpr int max_digits() { return std::numeric_limits<R>::max_digits10; }

private:
    std::complex<R> v_;
};

using Cplx = Complex<double>;
using CplxExt = Complex<long double>;

template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static constexpr const char* backend_name = "exact";
};

template <>
struct scalar_traits<Cplx> {
    static constexpr bool is_exact = false;
    static constexpr const char* backend_name = "float";
};

template <>
struct scalar_traits<CplxExt> {
    static constexpr bool is_exact = false;
    static constexpr const char* backend_name = "float-ext";
};

inline double abs_double(const Rational& a) { return std::abs(a.to_double()); }

template <typename R>
double abs_double(const Complex<R>& a) {
    return static_cast<double>(std::abs(a.value()));
}

/// Exact backend: identity. Float backend: relative comparison at `rel_tol`,
/// with agreement declared when both magnitudes are 0.
inline bool approx_equal(const Rational& a, const Rational& b, double /*rel_tol*/) {
    return a == b;
}

template <typename R>
bool approx_equal(const Complex<R>& a, const Complex<R>& b, double rel_tol) {
    const double d = abs_double(a - b);
    const double m = std::max(abs_double(a), abs_double(b));
    if (m == 0.0) return true;
    return d <= rel_tol * m;
}

/// Bitwise value equality, used for determinism checks (serial vs parallel
/// kernels must produce identical results), not for semantic comparisons.
inline bool exactly_equal(const Rational& a, const Rational& b) { return a == b; }

template <typename R>
bool exactly_equal(const Complex<R>& a, const Complex<R>& b) {
    return a.value() == b.value();
}

template <typename S>
S pow_int(S base, long long e) {
    if (e < 0) {
        if (base.is_zero()) throw DivisionByZero("zero raised to negative power");
        return S(1) / pow_int(base, -e);
    }
    S acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

/// Square root of a scalar. Exact backend: defined only when the argument is
/// the square of a rational, otherwise InvalidParameters (the exact backend
/// cannot carry q^{1/2} for non-square q).
inline Rational scalar_sqrt(const Rational& a) {
    const mp::cpp_int num = mp::numerator(a.value());
    const mp::cpp_int den = mp::denominator(a.value());
    if (num < 0) throw InvalidParameters("square root of negative rational");
    const mp::cpp_int rn = mp::sqrt(num);
    const mp::cpp_int rd = mp::sqrt(den);
    if (rn * rn != num || rd * rd != den)
        throw InvalidParameters("rational is not a perfect square: " + a.str());
    return Rational(mp::cpp_rational(rn, rd));
}

template <typename R>
Complex<R> scalar_sqrt(const Complex<R>& a) {
    return Complex<R>(std::sqrt(a.value()));
}

} // namespace lfock
