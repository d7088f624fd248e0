#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lfock/fock.hpp"
#include "lfock/scalar.hpp"

namespace lfock {

/// Sign sequence in {+1,-1}^r with zero sum: indexes the tensor slots of
/// M^{(x)r}, slot k ranging over L when +1 and over L^* when -1.
class EpsilonPattern {
public:
    EpsilonPattern() = default;
    EpsilonPattern(std::initializer_list<int> entries)
        : EpsilonPattern(std::vector<int>(entries)) {}
    explicit EpsilonPattern(std::vector<int> entries) : e_(std::move(entries)) {
        int sum = 0;
        for (int v : e_) {
            if (v != 1 && v != -1) throw InvalidParameters("pattern entries must be +1 or -1");
            sum += v;
        }
        if (sum != 0) throw InvalidParameters("pattern entries must sum to zero");
    }

    int r() const { return static_cast<int>(e_.size()); }
    int entry(int k) const { return e_[static_cast<std::size_t>(k)]; }
    const std::vector<int>& entries() const { return e_; }

    EpsilonPattern negated() const {
        std::vector<int> n(e_);
        for (int& v : n) v = -v;
        return EpsilonPattern(std::move(n));
    }

    friend bool operator==(const EpsilonPattern& a, const EpsilonPattern& b) {
        return a.e_ == b.e_;
    }
    /// Lexicographic with +1 before -1.
    friend bool operator<(const EpsilonPattern& a, const EpsilonPattern& b) {
        return std::lexicographical_compare(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end(),
                                            [](int x, int y) { return x > y; });
    }

private:
    std::vector<int> e_;
};

/// All balanced sign patterns of length r, lexicographic (+1 first).
/// binomial(r, r/2) patterns for even r, none for odd r.
inline std::vector<EpsilonPattern> epsilon_patterns(int r) {
    if (r < 0) throw InvalidParameters("pattern length must be nonnegative");
    std::vector<EpsilonPattern> out;
    if (r % 2 != 0) return out;
    std::vector<int> cur(static_cast<std::size_t>(r), 0);
    auto rec = [&](auto&& self, int k, int plus, int minus) -> void {
        if (k == r) {
            out.emplace_back(cur);
            return;
        }
        if (plus < r / 2) {
            cur[static_cast<std::size_t>(k)] = 1;
            self(self, k + 1, plus + 1, minus);
        }
        if (minus < r / 2) {
            cur[static_cast<std::size_t>(k)] = -1;
            self(self, k + 1, plus, minus + 1);
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

/// Multilinear functional on one L^{epsilon} tensor factor: a coefficient per
/// r-tuple of basis indices (slot k runs over e_1..e_D when pattern_k = +1,
/// f_1..f_D when -1). Dense storage up to 10^6 coefficients, sparse beyond.
template <typename S>
class CycleTensor {
public:
    static constexpr std::size_t dense_limit = 1'000'000;

    CycleTensor(int D, EpsilonPattern pattern)
        : D_(D), pat_(std::move(pattern)), size_(tuple_count(D, pat_.r())) {
        if (D < 0) throw InvalidParameters("CycleTensor needs D >= 0");
        if (size_ <= dense_limit) dense_.assign(size_, S(0));
    }

    int D() const { return D_; }
    int r() const { return pat_.r(); }
    const EpsilonPattern& pattern() const { return pat_; }
    std::size_t size() const { return size_; }
    bool dense() const { return !dense_.empty() || size_ == 0; }

    static std::size_t tuple_count(int D, int r) {
        std::size_t n = 1;
        for (int k = 0; k < r; ++k) n *= static_cast<std::size_t>(D);
        return n;
    }

    /// Tuple decoding: slot 0 is the most significant base-D digit, so linear
    /// order equals lexicographic tuple order.
    void decode(std::size_t idx, std::span<int> tuple) const {
        for (int k = r() - 1; k >= 0; --k) {
            tuple[static_cast<std::size_t>(k)] = static_cast<int>(idx % static_cast<std::size_t>(D_));
            idx /= static_cast<std::size_t>(D_);
        }
    }

    std::size_t encode(std::span<const int> tuple) const {
        std::size_t idx = 0;
        for (int k = 0; k < r(); ++k) {
            const int t = tuple[static_cast<std::size_t>(k)];
            if (t < 0 || t >= D_) throw IndexOutOfRange("tuple index out of range");
            idx = idx * static_cast<std::size_t>(D_) + static_cast<std::size_t>(t);
        }
        return idx;
    }

    S coeff_at(std::size_t idx) const {
        if (dense()) return dense_[idx];
        auto it = sparse_.find(idx);
        return it == sparse_.end() ? S(0) : it->second;
    }

    S coeff(std::span<const int> tuple) const { return coeff_at(encode(tuple)); }

    void set_at(std::size_t idx, S v) {
        if (dense()) {
            dense_[idx] = std::move(v);
        } else if (!v.is_zero()) {
            sparse_[idx] = std::move(v);
        } else {
            sparse_.erase(idx);
        }
    }

    void set(std::span<const int> tuple, S v) { set_at(encode(tuple), std::move(v)); }

private:
    int D_;
    EpsilonPattern pat_;
    std::size_t size_;
    std::vector<S> dense_;
    std::unordered_map<std::size_t, S> sparse_;
};

/// Full pattern-sum z = sum over balanced patterns of per-pattern tensors.
template <typename S>
struct CycleSum {
    int D = 0;
    int r = 0;
    std::map<EpsilonPattern, CycleTensor<S>> parts;
};

enum class Exec { Serial, Parallel };

namespace detail {

/// Diagonal matrix element of the word a(x_1)...a(x_r) Frob on e_S, with the
/// rightmost factor applied first. occ_filter >= 0 restricts the trace to
/// states of that occupation number (the graded projector; it commutes with
/// the diagonal Frobenius).
template <typename S>
S cycle_coefficient(const FockModule<S>& mod, const EpsilonPattern& pat,
                    std::span<const int> tuple, bool dual_roles, int occ_filter) {
    const std::uint32_t dim = mod.dim();
    const int r = pat.r();
    S acc(0);
    for (std::uint32_t s = 0; s < dim; ++s) {
        if (occ_filter >= 0 && std::popcount(s) != occ_filter) continue;
        S coeff = mod.frobenius_eigenvalue(s);
        std::uint32_t cur = s;
        bool alive = true;
        for (int k = r - 1; k >= 0; --k) {
            const bool up = (pat.entry(k) == 1) != dual_roles;
            const int idx = tuple[static_cast<std::size_t>(k)];
            const auto t = up ? mod.apply_raise(idx, cur) : mod.apply_lower(idx, cur);
            if (!t) {
                alive = false;
                break;
            }
            cur = t->state;
            coeff *= t->coeff;
        }
        if (alive && cur == s) acc += S(FockModule<S>::parity_sign(s)) * coeff;
    }
    return acc;
}

/// The trace is diagonal, so a tuple contributes only when its raised and
/// lowered index multisets agree. Cheap pre-check used by the parallel kernel.
inline bool tuple_balanced(const EpsilonPattern& pat, std::span<const int> tuple, bool dual_roles,
                           std::span<int> scratch) {
    for (int& v : scratch) v = 0;
    for (int k = 0; k < pat.r(); ++k) {
        const bool up = (pat.entry(k) == 1) != dual_roles;
        scratch[static_cast<std::size_t>(tuple[static_cast<std::size_t>(k)])] += up ? 1 : -1;
    }
    for (int v : scratch)
        if (v != 0) return false;
    return true;
}

template <typename S>
void fill_coefficients_serial(const FockModule<S>& mod, bool dual_roles, int occ_filter,
                              CycleTensor<S>& out) {
    const std::size_t n = out.size();
    std::vector<int> tuple(static_cast<std::size_t>(out.r()));
    for (std::size_t i = 0; i < n; ++i) {
        out.decode(i, tuple);
        out.set_at(i, cycle_coefficient(mod, out.pattern(), tuple, dual_roles, occ_filter));
    }
}

template <typename S>
void fill_coefficients_parallel(const FockModule<S>& mod, bool dual_roles, int occ_filter,
                                CycleTensor<S>& out) {
    const std::size_t n = out.size();
    if (!out.dense()) {  // sparse storage is not safe for concurrent writes
        fill_coefficients_serial(mod, dual_roles, occ_filter, out);
        return;
    }
    const long long nn = static_cast<long long>(n);
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::vector<int> tuple(static_cast<std::size_t>(out.r()));
        std::vector<int> scratch(static_cast<std::size_t>(out.D()));
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long long i = 0; i < nn; ++i) {
            const std::size_t idx = static_cast<std::size_t>(i);
            out.decode(idx, tuple);
            if (!tuple_balanced(out.pattern(), tuple, dual_roles, scratch)) continue;
            out.set_at(idx, cycle_coefficient(mod, out.pattern(), tuple, dual_roles, occ_filter));
        }
    }
}

template <typename S>
CycleTensor<S> make_cycle_tensor(const FockModule<S>& mod, const EpsilonPattern& pattern,
                                 bool dual_roles, int occ_filter, Exec exec) {
    CycleTensor<S> out(mod.dim_l(), pattern);
    if (exec == Exec::Serial)
        fill_coefficients_serial(mod, dual_roles, occ_filter, out);
    else
        fill_coefficients_parallel(mod, dual_roles, occ_filter, out);
    return out;
}

} // namespace detail

/// Fake special cycle class for one pattern: coefficient at (x_1,...,x_r) is
/// supertrace(a(x_1) o ... o a(x_r) o Frob) with a(e_i) = raise(i),
/// a(f_j) = lower(j), rightmost factor acting first.
template <typename S>
CycleTensor<S> fake_cycle_class(const FockModule<S>& mod, const EpsilonPattern& pattern,
                                Exec exec = Exec::Parallel) {
    return detail::make_cycle_tensor(mod, pattern, false, -1, exec);
}

/// Graded refinement: the supertrace restricted to the degree-d piece.
/// d out of [-D/2, D/2] gives the zero tensor; d with 2d + D odd matches no
/// graded piece and is rejected.
template <typename S>
CycleTensor<S> graded_cycle_class(const FockModule<S>& mod, const EpsilonPattern& pattern, int d,
                                  Exec exec = Exec::Parallel) {
    const int occ2 = 2 * d + mod.dim_l();
    if (occ2 & 1) throw DegreeOutOfRange("degree 2d+D must be even");
    const int occ = occ2 / 2;
    if (occ < 0 || occ > mod.dim_l()) return CycleTensor<S>(mod.dim_l(), pattern);
    return detail::make_cycle_tensor(mod, pattern, false, occ, exec);
}

/// z_{sigma^*, r} on one pattern, computed on the dual module (eigenvalues
/// b_i^{-1}, caller-supplied lowest weight) with the raise/lower roles of the
/// pattern swapped: slot +1 now acts by the dual module's own raising.
template <typename S>
CycleTensor<S> dual_system_cycle_class(const FockModule<S>& dual_mod, const EpsilonPattern& pattern,
                                       Exec exec = Exec::Parallel) {
    return detail::make_cycle_tensor(dual_mod, pattern, true, -1, exec);
}

template <typename S>
CycleSum<S> cycle_class_sum(const FockModule<S>& mod, int r, Exec exec = Exec::Parallel) {
    CycleSum<S> z{mod.dim_l(), r, {}};
    for (const auto& pat : epsilon_patterns(r))
        z.parts.emplace(pat, fake_cycle_class(mod, pat, exec));
    return z;
}

template <typename S>
CycleSum<S> dual_cycle_class_sum(const FockModule<S>& dual_mod, int r, Exec exec = Exec::Parallel) {
    CycleSum<S> z{dual_mod.dim_l(), r, {}};
    for (const auto& pat : epsilon_patterns(r))
        z.parts.emplace(pat, dual_system_cycle_class(dual_mod, pat, exec));
    return z;
}

/// Koszul sign of interleaving x_1..x_r y_1..y_r -> x_1 y_1 .. x_r y_r with
/// every slot odd: (-1)^{r(r-1)/2}. This is one of the three frozen sign
/// conventions; see omega_dual_pairing.
inline int koszul_interleave_sign(int r) {
    return ((static_cast<long long>(r) * (r - 1) / 2) % 2 == 0) ? 1 : -1;
}

/// Pairing on (M^{(x)r})^* induced by omega. In the dual basis the inverse
/// Gram matrix pairs each slot with its e <-> f partner, so complementary
/// patterns couple and
///   omega(z, z') = kappa_r * sum_x z(x) z'(partner x),
/// where partner x keeps the index tuple and flips the pattern. The three
/// conventions frozen here (delta-normalized omega blocks, sign_n on the
/// lowering operator, interleave Koszul sign) were calibrated on the exact
/// r = 0 and (r = 2, D = 2) instances; larger (r, D) are genuine tests.
template <typename S>
S omega_dual_pairing(const CycleTensor<S>& z, const CycleTensor<S>& zp, const OmegaForm<S>& form,
                     Exec exec = Exec::Parallel) {
    if (z.D() != form.D || zp.D() != form.D)
        throw PatternMismatch("tensor dimension does not match the form");
    if (z.r() != zp.r()) throw PatternMismatch("tensors have different r");
    if (!(zp.pattern() == z.pattern().negated()))
        throw PatternMismatch("patterns are not componentwise opposite");
    const std::size_t n = z.size();
    const S kappa = S(koszul_interleave_sign(z.r()));
    if (exec == Exec::Serial || n < 2) {
        S acc(0);
        for (std::size_t i = 0; i < n; ++i) acc += z.coeff_at(i) * zp.coeff_at(i);
        return kappa * acc;
    }
    // parallel products, index-ordered reduction for float reproducibility
    std::vector<S> terms(n, S(0));
    const long long nn = static_cast<long long>(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < nn; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        terms[idx] = z.coeff_at(idx) * zp.coeff_at(idx);
    }
    S acc(0);
    for (const auto& t : terms) acc += t;
    return kappa * acc;
}

/// Pairing of two full pattern-sums: complementary components couple.
template <typename S>
S omega_dual_pairing(const CycleSum<S>& z, const CycleSum<S>& zp, const OmegaForm<S>& form,
                     Exec exec = Exec::Parallel) {
    if (z.r != zp.r) throw PatternMismatch("pattern-sums have different r");
    S acc(0);
    for (const auto& [pat, tensor] : z.parts) {
        const auto it = zp.parts.find(pat.negated());
        if (it == zp.parts.end()) continue;
        acc += omega_dual_pairing(tensor, it->second, form, exec);
    }
    return acc;
}

} // namespace lfock
