#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lfock/ratfunc.hpp"
#include "lfock/scalar.hpp"

namespace lfock {

enum class Parity { Even, Odd };

/// A super vector space described by its Frobenius eigenvalues: the carrier
/// of H^i cohomology data. Eigenvalues must be nonzero.
template <typename S>
struct FrobSpace {
    Parity parity = Parity::Odd;
    int degree = 1;
    std::vector<S> eigenvalues;

    FrobSpace() = default;
    FrobSpace(Parity p, int deg, std::vector<S> eigs)
        : parity(p), degree(deg), eigenvalues(std::move(eigs)) {
        for (const auto& a : eigenvalues)
            if (a.is_zero()) throw InvalidParameters("Frobenius eigenvalue must be nonzero");
    }
};

/// Tate-type shearing <m>: multiplies every eigenvalue by q^{-m/2}
/// (plus a parity flip and degree shift tracked by the caller).
template <typename S>
std::vector<S> shear_eigenvalues(std::span<const S> alphas, int m, const S& q) {
    const S factor = pow_int(scalar_sqrt(q), -static_cast<long long>(m));
    std::vector<S> out;
    out.reserve(alphas.size());
    for (const auto& a : alphas) out.push_back(a * factor);
    return out;
}

/// L(sigma, s) for H^1-only data, rewritten via q^{-s} = q^{-1/2} u:
/// prod_i (1 - alpha_i q^{-1/2} u). Empty eigenvalue list gives 1.
template <typename S>
RatFuncU<S> lfunction(const FrobSpace<S>& h1, const S& q) {
    if (h1.degree != 1)
        throw InvalidParameters("lfunction expects H^1 data (degree label 1)");
    const S qinv_half = S(1) / scalar_sqrt(q);
    Poly<S> p = Poly<S>::constant(S(1));
    for (const auto& a : h1.eigenvalues)
        p = p * Poly<S>({S(1), -(a * qinv_half)});
    return RatFuncU<S>::from_poly(std::move(p));
}

/// Root number: prod_i alpha_i q^{-1/2}, the i = 1 factor of the graded
/// determinant product (exponent +1 on H^1).
template <typename S>
S root_number(const FrobSpace<S>& h1, const S& q) {
    const S qinv_half = S(1) / scalar_sqrt(q);
    S e(1);
    for (const auto& a : h1.eigenvalues) e *= a * qinv_half;
    return e;
}

/// H^1 Frobenius data of an irreducible tensor local system on a genus-g
/// curve. The eigenvalue count 2n(n-1)(g-1) is the exponent D of the
/// normalizing power in the symmetric L-function.
template <typename S>
struct LocalSystemH1 {
    S q;
    int g = 2;
    int n = 2;
    std::vector<S> alphas;

    LocalSystemH1(S q_, int g_, int n_, std::vector<S> alphas_)
        : q(std::move(q_)), g(g_), n(n_), alphas(std::move(alphas_)) {
        if (g < 2 || n < 1) throw InvalidParameters("need g >= 2 and n >= 1");
        const std::size_t want =
            static_cast<std::size_t>(2LL * n * (n - 1) * (g - 1));
        if (alphas.size() != want)
            throw InvalidParameters("expected " + std::to_string(want) +
                                    " H^1 eigenvalues, got " + std::to_string(alphas.size()));
        for (const auto& a : alphas)
            if (a.is_zero()) throw InvalidParameters("Frobenius eigenvalue must be nonzero");
    }

    /// Test affordance: trusts the eigenvalue list as-is. Synthetic fixtures
    /// use eigenvalue counts unreachable as 2n(n-1)(g-1).
    static LocalSystemH1 synthetic(S q_, int g_, int n_, std::vector<S> alphas_) {
        return LocalSystemH1(unchecked{}, std::move(q_), g_, n_, std::move(alphas_));
    }

    std::vector<S> normalized_eigenvalues() const {
        return shear_eigenvalues<S>(alphas, 1, q);  // b_i = alpha_i q^{-1/2}
    }

private:
    struct unchecked {};
    LocalSystemH1(unchecked, S q_, int g_, int n_, std::vector<S> alphas_)
        : q(std::move(q_)), g(g_), n(n_), alphas(std::move(alphas_)) {
        for (const auto& a : alphas)
            if (a.is_zero()) throw InvalidParameters("Frobenius eigenvalue must be nonzero");
    }
};

/// Normalized pair L-function Ltilde(sigma + sigma^*, s) as
/// u^{-D} prod_i (1 - b_i u)(1 - b_i^{-1} u), b_i = alpha_i q^{-1/2}.
/// Dual eigenvalues are q/alpha_i by construction (Poincare duality), so the
/// result is always u <-> 1/u symmetric.
template <typename S>
RatFuncU<S> normalized_pair_lfunction(const LocalSystemH1<S>& sys) {
    const std::vector<S> b = sys.normalized_eigenvalues();
    Poly<S> p = Poly<S>::constant(S(1));
    for (const auto& bi : b) {
        // (1 - b u)(1 - u/b) = 1 - (b + 1/b) u + u^2
        p = p * Poly<S>({S(1), -(bi + S(1) / bi), S(1)});
    }
    return RatFuncU<S>::from_poly(std::move(p), -static_cast<int>(b.size()));
}

/// (ln q)^{-r} (d/ds)^r Ltilde at s = 1/2, computed algebraically at u = 1.
template <typename S>
S central_derivative(const LocalSystemH1<S>& sys, int r) {
    return rf_eval(log_derivative_power(normalized_pair_lfunction(sys), r), S(1));
}

/// The (ln q)-rescaled residue of L(sigma x sigma^*, s) at s = 1:
/// prod_i (1 - alpha_i q^{-1}) / (1 - q^{-1}). A pure algebraic number; the
/// raw residue (with its transcendental ln q) is never materialized.
template <typename S>
S residue_scalar(std::span<const S> adjoint_alphas, const S& q) {
    if (q.is_zero() || exactly_equal(q, S(1)))
        throw DivisionByZero("residue scalar undefined at q = 1");
    const S qinv = S(1) / q;
    S num(1);
    for (const auto& a : adjoint_alphas) num *= S(1) - a * qinv;
    return num / (S(1) - qinv);
}

template <typename S>
S residue_scalar(const std::vector<S>& adjoint_alphas, const S& q) {
    return residue_scalar(std::span<const S>(adjoint_alphas), q);
}

/// Advisory weight-1 purity check: |alpha| = q^{1/2}. Float backend checks
/// with a tolerance; exact backend can only prove it for alpha^2 = q.
/// Returns human-readable warnings, never throws.
template <typename S>
std::vector<std::string> weight_one_warnings(std::span<const S> alphas, const S& q,
                                             double rel_tol = 1e-9) {
    std::vector<std::string> warnings;
    if constexpr (scalar_traits<S>::is_exact) {
        for (const auto& a : alphas)
            if (!(a * a == q))
                warnings.push_back("eigenvalue " + a.str() +
                                   " is not provably of weight 1 (alpha^2 != q)");
    } else {
        const double want = std::sqrt(abs_double(q));
        for (const auto& a : alphas) {
            const double m = abs_double(a);
            if (std::abs(m - want) > rel_tol * want)
                warnings.push_back("eigenvalue " + a.str() + " has |alpha| = " +
                                   std::to_string(m) + ", expected q^{1/2} = " +
                                   std::to_string(want));
        }
    }
    return warnings;
}

} // namespace lfock
