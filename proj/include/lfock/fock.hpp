#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <optional>
#include <utility>
#include <vector>

#include "lfock/scalar.hpp"

namespace lfock {

/// Basis generator of M = L + L^*: e_i (starred = false) or f_i (starred = true).
struct MGen {
    bool starred = false;
    int index = 0;

    static MGen e(int i) { return MGen{false, i}; }
    static MGen f(int i) { return MGen{true, i}; }

    friend bool operator==(const MGen& a, const MGen& b) {
        return a.starred == b.starred && a.index == b.index;
    }
};

/// The symplectic pairing on the odd space M = L + L^*, in the dual-basis
/// convention omega(e_i, f_j) = delta_ij = omega(f_j, e_i), zero on L x L
/// and L^* x L^*. Symmetric because M is odd. omega_X = (-1)^{n-1} omega.
template <typename S>
struct OmegaForm {
    int D = 0;
    int sign_n = 1;  // (-1)^{n-1}

    OmegaForm(int D_, int sign_n_) : D(D_), sign_n(sign_n_) {
        if (D < 0) throw InvalidParameters("OmegaForm needs D >= 0");
        if (sign_n != 1 && sign_n != -1) throw InvalidParameters("sign_n must be +1 or -1");
    }

    S omega(const MGen& a, const MGen& b) const {
        check(a);
        check(b);
        if (a.starred == b.starred) return S(0);
        return a.index == b.index ? S(1) : S(0);
    }

    S omega_x(const MGen& a, const MGen& b) const {
        return omega(a, b) * S(sign_n);
    }

    /// Dual partner under the omega identification M* = M: e_i <-> f_i.
    static MGen partner(const MGen& a) { return MGen{!a.starred, a.index}; }

private:
    void check(const MGen& a) const {
        if (a.index < 0 || a.index >= D) throw IndexOutOfRange("M generator index out of range");
    }
};

/// Single term of a Fock-space vector: coefficient times a subset basis state.
template <typename S>
struct FockTerm {
    std::uint32_t state = 0;
    S coeff = S(0);
};

/// Linear operator given by its action on every basis vector (sparse, signed).
/// Dense matrices are never materialized.
template <typename S>
using FockOp = std::function<std::vector<FockTerm<S>>(std::uint32_t)>;

/// The 2^D-dimensional exterior-algebra module over the Clifford algebra of
/// M = L + L^*, with basis e_S indexed by subsets S of {0..D-1}. Carries the
/// Frobenius eigenvalues b_i on L and the lowest-weight eigenvalue lambda0.
/// The grading places e_S in degree |S| - D/2; the vacuum e_{} has even
/// parity by convention (only lambda0^2 enters any verified identity, so the
/// absorbed parity of the twisting line is unobservable).
template <typename S>
class FockModule {
public:
    static constexpr int max_dimension = 20;

    FockModule(std::vector<S> b, S lambda0, int sign_n)
        : b_(std::move(b)), lambda0_(std::move(lambda0)), sign_n_(sign_n) {
        if (static_cast<int>(b_.size()) > max_dimension)
            throw InvalidParameters("Fock module dimension too large");
        if (sign_n_ != 1 && sign_n_ != -1)
            throw InvalidParameters("sign_n must be +1 or -1");
        for (const auto& bi : b_)
            if (bi.is_zero()) throw InvalidParameters("Frobenius eigenvalue on L must be nonzero");
    }

    int dim_l() const { return static_cast<int>(b_.size()); }
    std::uint32_t dim() const { return 1u << dim_l(); }
    const std::vector<S>& b() const { return b_; }
    const S& lambda0() const { return lambda0_; }
    int sign_n() const { return sign_n_; }
    OmegaForm<S> omega_form() const { return OmegaForm<S>(dim_l(), sign_n_); }

    /// The module underlying the dual system: eigenvalues b_i^{-1} on L(sigma^*),
    /// lowest-weight eigenvalue supplied by the caller.
    FockModule dual(S dual_lambda0) const {
        std::vector<S> binv;
        binv.reserve(b_.size());
        for (const auto& bi : b_) binv.push_back(S(1) / bi);
        return FockModule(std::move(binv), std::move(dual_lambda0), sign_n_);
    }

    static int parity_sign(std::uint32_t state) {
        return (std::popcount(state) & 1) ? -1 : 1;
    }

    /// Fermionic sign (-1)^{#{s in S : s < i}}.
    static int sign_below(std::uint32_t state, int i) {
        return (std::popcount(state & ((1u << i) - 1u)) & 1) ? -1 : 1;
    }

    /// Left exterior multiplication by e_i: e_S -> +- e_{S u {i}}, 0 if i in S.
    std::optional<FockTerm<S>> apply_raise(int i, std::uint32_t state) const {
        check_index(i);
        const std::uint32_t bit = 1u << i;
        if (state & bit) return std::nullopt;
        return FockTerm<S>{state | bit, S(sign_below(state, i))};
    }

    /// Contraction by f_i, scaled so {raise(i), lower(j)} = sign_n delta_ij.
    std::optional<FockTerm<S>> apply_lower(int i, std::uint32_t state) const {
        check_index(i);
        const std::uint32_t bit = 1u << i;
        if (!(state & bit)) return std::nullopt;
        return FockTerm<S>{state & ~bit, S(sign_n_ * sign_below(state, i))};
    }

    std::optional<FockTerm<S>> apply_generator(const MGen& g, std::uint32_t state) const {
        return g.starred ? apply_lower(g.index, state) : apply_raise(g.index, state);
    }

    /// Diagonal Frobenius eigenvalue on e_S: lambda0 prod_{i in S} b_i.
    S frobenius_eigenvalue(std::uint32_t state) const {
        S v = lambda0_;
        for (int i = 0; i < dim_l(); ++i)
            if (state & (1u << i)) v *= b_[static_cast<std::size_t>(i)];
        return v;
    }

    FockOp<S> raise_op(int i) const {
        check_index(i);
        return [this, i](std::uint32_t s) {
            std::vector<FockTerm<S>> out;
            if (auto t = apply_raise(i, s)) out.push_back(*t);
            return out;
        };
    }

    FockOp<S> lower_op(int i) const {
        check_index(i);
        return [this, i](std::uint32_t s) {
            std::vector<FockTerm<S>> out;
            if (auto t = apply_lower(i, s)) out.push_back(*t);
            return out;
        };
    }

    FockOp<S> frobenius_op() const {
        return [this](std::uint32_t s) {
            return std::vector<FockTerm<S>>{FockTerm<S>{s, frobenius_eigenvalue(s)}};
        };
    }

    static FockOp<S> identity_op() {
        return [](std::uint32_t s) {
            return std::vector<FockTerm<S>>{FockTerm<S>{s, S(1)}};
        };
    }

    /// Projector onto the degree-d graded piece (occupation |S| = d + D/2).
    /// d with 2d + D odd matches no graded piece and is rejected; d out of
    /// [-D/2, D/2] gives the zero operator.
    FockOp<S> degree_projector(int d) const {
        const int occ2 = 2 * d + dim_l();
        if (occ2 & 1) throw DegreeOutOfRange("degree 2d+D must be even");
        const int occ = occ2 / 2;
        return [occ](std::uint32_t s) {
            std::vector<FockTerm<S>> out;
            if (std::popcount(s) == occ) out.push_back(FockTerm<S>{s, S(1)});
            return out;
        };
    }

    /// Composition fg: apply g first, then f.
    static FockOp<S> compose(FockOp<S> f, FockOp<S> g) {
        return [f = std::move(f), g = std::move(g)](std::uint32_t s) {
            std::vector<FockTerm<S>> out;
            for (const auto& tg : g(s))
                for (const auto& tf : f(tg.state))
                    out.push_back(FockTerm<S>{tf.state, tf.coeff * tg.coeff});
            return out;
        };
    }

    /// Parity-signed trace: sum_S (-1)^{|S|} <e_S | op e_S>.
    S supertrace(const FockOp<S>& op) const {
        S acc(0);
        const std::uint32_t dim_total = dim();
        for (std::uint32_t s = 0; s < dim_total; ++s) {
            for (const auto& t : op(s))
                if (t.state == s) acc += S(parity_sign(s)) * t.coeff;
        }
        return acc;
    }

    /// Dimension of the degree-d piece: binomial(D, d + D/2).
    long long graded_dimension(int d) const {
        const int occ2 = 2 * d + dim_l();
        if (occ2 & 1) throw DegreeOutOfRange("degree 2d+D must be even");
        const int occ = occ2 / 2;
        if (occ < 0 || occ > dim_l()) return 0;
        long long v = 1;
        for (int i = 0; i < occ; ++i) v = v * (dim_l() - i) / (i + 1);
        return v;
    }

private:
    void check_index(int i) const {
        if (i < 0 || i >= dim_l()) throw IndexOutOfRange("Fock generator index out of range");
    }

    std::vector<S> b_;
    S lambda0_;
    int sign_n_;
};

/// Frobenius eigenvalue on the lowest-weight vector:
/// q^{-n^2(g-1)/2} chi_{det sigma_{n-1}}(O^{1/2})^{-n} chi_{det sigma_n}(O^{1/2})^{-n+1}.
template <typename S>
S lowest_weight_eigenvalue(const S& q, int n, int g, const S& chi_n1_half, const S& chi_n_half) {
    if (chi_n1_half.is_zero() || chi_n_half.is_zero())
        throw InvalidParameters("character values must be nonzero");
    const S sq = scalar_sqrt(q);
    return pow_int(sq, -static_cast<long long>(n) * n * (g - 1)) *
           pow_int(chi_n1_half, -n) * pow_int(chi_n_half, -(n - 1));
}

namespace detail {

/// Signed elementary-symmetric accumulation: coefficients of
/// prod_i (1 + x_i t) computed by DP over the list, lowest degree first.
template <typename S>
std::vector<S> elementary_symmetric(std::span<const S> xs) {
    std::vector<S> e(xs.size() + 1, S(0));
    e[0] = S(1);
    std::size_t filled = 0;
    for (const auto& x : xs) {
        ++filled;
        for (std::size_t k = filled; k >= 1; --k) e[k] += x * e[k - 1];
    }
    return e;
}

} // namespace detail

/// Graded Frobenius trace on Sym of a two-piece space: one even generator of
/// eigenvalue q^{-1} (geometric series) tensored with the exterior algebra on
/// odd generators of eigenvalues alpha_i q^{-1} (alternating elementary-
/// symmetric sum). The generating-function route, independent of the closed
/// product formula of residue_scalar.
template <typename S>
S sym_algebra_trace(std::span<const S> adjoint_alphas, const S& q) {
    if (q.is_zero()) throw DivergentSeries("q must be invertible");
    if (exactly_equal(q, S(1)))
        throw DivergentSeries("geometric series diverges at q = 1");
    if constexpr (!scalar_traits<S>::is_exact) {
        if (abs_double(S(1) / q) >= 1.0)
            throw DivergentSeries("geometric series diverges for |q^{-1}| >= 1");
    }
    const S qinv = S(1) / q;
    std::vector<S> scaled;
    scaled.reserve(adjoint_alphas.size());
    for (const auto& a : adjoint_alphas) scaled.push_back(-(a * qinv));
    const std::vector<S> e = detail::elementary_symmetric(std::span<const S>(scaled));
    S odd_part(0);
    for (const auto& ek : e) odd_part += ek;
    const S even_part = S(1) / (S(1) - qinv);
    return even_part * odd_part;
}

template <typename S>
S sym_algebra_trace(const std::vector<S>& adjoint_alphas, const S& q) {
    return sym_algebra_trace(std::span<const S>(adjoint_alphas), q);
}

} // namespace lfock
