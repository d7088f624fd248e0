#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lfock/identity.hpp"
#include "lfock/scalar.hpp"

namespace lfock {

namespace detail {

/// Uniform in [0, 1) from the raw 64-bit stream; the standard distributions
/// are implementation-defined, this keeps seeds portable.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline long long uniform_range(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

template <typename S>
struct sampler;

template <>
struct sampler<Rational> {
    /// Rational roots of unity are just +-1.
    static Rational unit(std::mt19937_64& rng) { return Rational((rng() & 1) ? -1 : 1); }

    /// Small positive rational for adjoint pairs {a, q/a}; avoids a = 1 and
    /// a = q so no residue factor degenerates.
    static Rational dual_pair_seed(std::mt19937_64& rng, const Rational& q) {
        while (true) {
            const long long num = uniform_range(rng, 2, 9);
            const long long den = uniform_range(rng, 1, 4);
            Rational a = Rational::ratio(num, den);
            if (a == Rational(1) || a == q) continue;
            if ((q / a) == Rational(1) || (q / a) == q) continue;
            return a;
        }
    }
};

template <typename R>
struct sampler<Complex<R>> {
    static Complex<R> unit(std::mt19937_64& rng) {
        const double theta = 6.283185307179586476925 * uniform01(rng);
        return Complex<R>::polar(R(1), static_cast<R>(theta));
    }

    /// Weight-1 point on the circle |a| = q^{1/2}; its dual q/a is the
    /// complex conjugate.
    static Complex<R> dual_pair_seed(std::mt19937_64& rng, const Complex<R>& q) {
        return scalar_sqrt(q) * unit(rng);
    }
};

} // namespace detail

/// Deterministic, seed-reproducible PeriodSpec. Float backend: H^1 data
/// sampled uniformly on the unit circle (alpha_i = q^{1/2} b_i), adjoint
/// multisets built from dual pairs {a, q/a}, characters roots of unity.
/// Exact backend: the rational roots of unity +-1 for b_i and characters,
/// small rational dual pairs for the adjoints; q must be a perfect square so
/// q^{1/2} stays rational. The mandated cardinalities are all even, so dual
/// pairs always suffice and no +-q^{1/2} fixed point is ever forced.
template <typename S>
PeriodSpec<S> generate_spec(long long q, int n, int g, std::uint64_t seed) {
    if (q < 2) throw InvalidParameters("q must be at least 2");
    if (n < 1) throw InvalidParameters("n must be at least 1");
    if (g < 2)
        throw InvalidParameters(
            "g must be at least 2 (no irreducible system of rank > 1 exists at genus 1)");
    const S qs(q);
    const S sqrt_q = scalar_sqrt(qs);  // exact backend: rejects non-square q

    std::mt19937_64 rng(seed);
    using samp = detail::sampler<S>;

    const auto n_h1 = static_cast<std::size_t>(2LL * n * (n - 1) * (g - 1));
    std::vector<S> h1;
    h1.reserve(n_h1);
    for (std::size_t i = 0; i < n_h1; ++i) h1.push_back(sqrt_q * samp::unit(rng));

    const S chi_n_half = samp::unit(rng);
    const S chi_n1_half = samp::unit(rng);

    auto make_adjoint = [&](long long count) {
        std::vector<S> out;
        out.reserve(static_cast<std::size_t>(count));
        for (long long i = 0; i < count / 2; ++i) {
            const S a = samp::dual_pair_seed(rng, qs);
            out.push_back(a);
            out.push_back(qs / a);
        }
        return out;
    };

    return PeriodSpec<S>::make(qs, n, g, std::move(h1), chi_n_half, chi_n1_half,
                               make_adjoint(2LL * n * n * (g - 1) + 2),
                               make_adjoint(2LL * (n - 1) * (n - 1) * (g - 1) + 2));
}

} // namespace lfock
