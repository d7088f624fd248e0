// Acceptance suite: one pass/fail line per criterion, pinned tolerances.
// Exit status 0 only if every criterion passes.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "lfock/generate.hpp"
#include "lfock/identity.hpp"

using namespace lfock;

namespace {

using SpecQ = PeriodSpec<Rational>;
using SpecC = PeriodSpec<Cplx>;

struct Criterion {
    std::string name;
    std::string description;
    bool pass = true;
    double limit_ms = 0.0;  // 0 = no stated runtime bound
    double wall_ms = 0.0;
    std::string note;
};

SpecQ exact_fixture(long long q, std::vector<int> b_signs, int chi_n, int chi_n1) {
    const Rational qs(q);
    const Rational sq = scalar_sqrt(qs);
    std::vector<Rational> alphas;
    for (int s : b_signs) alphas.push_back(Rational(s) * sq);
    const std::vector<Rational> adj = {sq, sq};  // self-dual: q / sqrt(q) = sqrt(q)
    return SpecQ::synthetic(qs, 2, 2, alphas, Rational(chi_n), Rational(chi_n1), adj, adj);
}

std::vector<SpecQ> a1_fixtures() {
    return {
        exact_fixture(4, {-1, -1}, 1, 1),
        exact_fixture(4, {-1, -1}, -1, 1),
        exact_fixture(4, {-1, -1}, 1, -1),
        exact_fixture(4, {1, -1}, -1, -1),
        exact_fixture(4, {-1, -1, -1, -1}, 1, 1),
        exact_fixture(4, {-1, -1, -1, -1}, -1, 1),
        exact_fixture(9, {-1, -1, -1, -1}, 1, -1),
        exact_fixture(9, {-1, -1}, -1, -1),
        exact_fixture(9, {-1, 1, -1, -1}, 1, 1),
        exact_fixture(4, {-1, -1, 1, 1}, -1, -1),
    };
}

template <typename F>
void run(std::vector<Criterion>& all, std::string name, std::string description, double limit_ms,
         F&& body) {
    Criterion c;
    c.name = std::move(name);
    c.description = std::move(description);
    c.limit_ms = limit_ms;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.note = std::string("exception: ") + e.what();
    }
    c.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_ms > 0 && c.wall_ms > c.limit_ms) {
        c.pass = false;
        c.note += " [over runtime budget]";
    }
    all.push_back(std::move(c));
}

void expect(Criterion& c, bool ok, const std::string& what) {
    if (!ok) {
        c.pass = false;
        if (!c.note.empty()) c.note += "; ";
        c.note += what;
    }
}

} // namespace

int main() {
    std::vector<Criterion> results;

    run(results, "A1", "r = 0 norm identity, exact, 10 fixtures, discrepancy exactly 0", 1000.0,
        [](Criterion& c) {
            int idx = 0;
            for (const auto& spec : a1_fixtures()) {
                const auto rep = kolyvagin_norm_check(spec, 0);
                expect(c, rep.pass && rep.abs_err == 0.0,
                       "fixture " + std::to_string(idx) + " discrepancy " + rep.lhs + " vs " +
                           rep.rhs);
                ++idx;
            }
        });

    run(results, "A2", "norm identity, float, r = 2 (1e-8) and r = 4 (1e-6), D = 4 and D = 8",
        30000.0, [](Criterion& c) {
            auto drive = [&](const SpecC& spec, const std::string& tag) {
                const auto r2 = kolyvagin_norm_check(spec, 2);
                expect(c, r2.rel_err <= 1e-8,
                       tag + " r=2 rel " + std::to_string(r2.rel_err));
                const auto r4 = kolyvagin_norm_check(spec, 4);
                expect(c, r4.rel_err <= 1e-6,
                       tag + " r=4 rel " + std::to_string(r4.rel_err));
            };
            for (std::uint64_t seed = 0; seed < 20; ++seed)
                drive(generate_spec<Cplx>(4, 2, 2, seed), "D4 seed " + std::to_string(seed));
            for (std::uint64_t seed = 100; seed < 105; ++seed)
                drive(generate_spec<Cplx>(4, 2, 3, seed), "D8 seed " + std::to_string(seed));
        });

    run(results, "A3", "functional equation symmetry and odd-derivative vanishing, 50 specs", 0.0,
        [](Criterion& c) {
            for (std::uint64_t seed = 0; seed < 25; ++seed) {
                const auto spec = generate_spec<Cplx>(4, 2, 2, seed);
                const auto lt = normalized_pair_lfunction(spec.system());
                expect(c, is_self_reciprocal(lt, 1e-12), "float symmetry seed " + std::to_string(seed));
                for (int r : {1, 3, 5}) {
                    const Cplx d = rf_eval(log_derivative_power(lt, r), Cplx(1, 0));
                    expect(c, abs_double(d) <= 1e-12,
                           "float odd r=" + std::to_string(r) + " seed " + std::to_string(seed));
                }
            }
            for (std::uint64_t seed = 0; seed < 25; ++seed) {
                const auto spec = generate_spec<Rational>(4, 2, 2, seed);
                const auto lt = normalized_pair_lfunction(spec.system());
                expect(c, is_self_reciprocal(lt), "exact symmetry seed " + std::to_string(seed));
                for (int r : {1, 3, 5})
                    expect(c, rf_eval(log_derivative_power(lt, r), Rational(1)).is_zero(),
                           "exact odd r=" + std::to_string(r));
            }
        });

    run(results, "A4", "headline identity end-to-end, exact fixtures and float specs", 0.0,
        [](Criterion& c) {
            int idx = 0;
            for (const auto& spec : a1_fixtures()) {
                for (int r : {0, 2}) {
                    const auto rep = main_identity_check(spec, r);
                    expect(c, rep.pass && rep.abs_err == 0.0,
                           "exact fixture " + std::to_string(idx) + " r=" + std::to_string(r));
                }
                ++idx;
            }
            for (std::uint64_t seed = 0; seed < 20; ++seed) {
                const auto spec = generate_spec<Cplx>(4, 2, 2, seed);
                for (int r : {0, 2}) {
                    const auto rep = main_identity_check(spec, r);
                    expect(c, rep.rel_err <= 1e-8,
                           "float seed " + std::to_string(seed) + " r=" + std::to_string(r) +
                               " rel " + std::to_string(rep.rel_err));
                }
            }
            for (std::uint64_t seed = 100; seed < 105; ++seed) {
                const auto spec = generate_spec<Cplx>(4, 2, 3, seed);
                for (int r : {0, 2}) {
                    const auto rep = main_identity_check(spec, r);
                    expect(c, rep.rel_err <= 1e-8, "float D8 seed " + std::to_string(seed));
                }
            }
        });

    run(results, "A5", "dual-cycle relation componentwise, D <= 6, r <= 4", 0.0, [](Criterion& c) {
        auto fixtures = a1_fixtures();
        fixtures.push_back(exact_fixture(4, {-1, -1, -1, -1, -1, -1}, -1, 1));  // D = 6
        int idx = 0;
        for (const auto& spec : fixtures) {
            for (int r : {0, 2, 4}) {
                const auto rep = dual_relation_check(spec, r);
                expect(c, rep.pass && rep.abs_err == 0.0,
                       "exact fixture " + std::to_string(idx) + " r=" + std::to_string(r));
            }
            ++idx;
        }
        const Tolerance tol{1e-10};
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto spec = generate_spec<Cplx>(4, 2, 2, seed);
            for (int r : {0, 2, 4}) {
                const auto rep = dual_relation_check(spec, r, tol);
                expect(c, rep.pass, "float seed " + std::to_string(seed) + " r=" +
                                        std::to_string(r) + " abs " + std::to_string(rep.abs_err));
            }
        }
    });

    run(results, "A6", "nondegeneracy: Gram determinant equals the predicted residue power", 0.0,
        [](Criterion& c) {
            const SpecQ d2 = exact_fixture(4, {-1, -1}, 1, -1);
            const SpecQ d3 = SpecQ::synthetic(
                Rational(4), 2, 2, {Rational(-2), Rational(-2), Rational(6)}, Rational(1),
                Rational(-1), {Rational(2), Rational(2)}, {Rational(-2), Rational(-2)});
            for (const auto& spec : {d2, d3}) {
                for (int r : {0, 2}) {
                    const auto rep = nondegeneracy_check(spec, r);
                    expect(c, rep.pass && rep.abs_err == 0.0,
                           "D=" + std::to_string(spec.D()) + " r=" + std::to_string(r) + " det " +
                               rep.lhs + " vs " + rep.rhs);
                    expect(c, rep.lhs != "0", "determinant must be nonzero");
                }
            }
        });

    run(results, "A7", "two-path residue oracle on 100 random exact self-dual multisets", 0.0,
        [](Criterion& c) {
            std::mt19937_64 rng(777);
            auto rand_rat = [&]() {
                while (true) {
                    const Rational v = Rational::ratio(static_cast<long long>(rng() % 17) - 8,
                                                       1 + static_cast<long long>(rng() % 6));
                    if (!v.is_zero()) return v;
                }
            };
            for (int trial = 0; trial < 100; ++trial) {
                const Rational q(2 + static_cast<long long>(rng() % 9));
                std::vector<Rational> alphas;
                const int pairs = static_cast<int>(rng() % 7);  // size <= 12
                for (int i = 0; i < pairs; ++i) {
                    Rational a = rand_rat();
                    if (a == q) a = Rational::ratio(1, 3);
                    alphas.push_back(a);
                    alphas.push_back(q / a);
                }
                expect(c, sym_algebra_trace(alphas, q) == residue_scalar(alphas, q),
                       "trial " + std::to_string(trial));
            }
        });

    run(results, "A8", "Clifford operator suite, exhaustive for D <= 6", 5000.0, [](Criterion& c) {
        std::mt19937_64 rng(31337);
        auto rand_sign = [&]() { return (rng() & 1) ? 1 : -1; };
        for (int D = 1; D <= 6; ++D) {
            std::vector<Rational> alphas;
            for (int i = 0; i < D; ++i)
                alphas.push_back(Rational(2 * rand_sign()));  // weight-1 over q = 4
            for (int n : {2, 3}) {  // both parities of sign_n
                const SpecQ spec = SpecQ::synthetic(Rational(4), n, 2, alphas, Rational(1),
                                                    Rational(-1), {Rational(2), Rational(2)},
                                                    {Rational(2), Rational(2)});
                const auto rep = clifford_relations_check(spec);
                expect(c, rep.pass && rep.abs_err == 0.0,
                       "D=" + std::to_string(D) + " n=" + std::to_string(n));
            }
        }
    });

    bool all_pass = true;
    for (const auto& c : results) {
        std::printf("%s %-70s %s (%.0f ms)%s%s\n", c.name.c_str(), c.description.c_str(),
                    c.pass ? "PASS" : "FAIL", c.wall_ms, c.note.empty() ? "" : "  -- ",
                    c.note.c_str());
        all_pass = all_pass && c.pass;
    }
    std::printf("acceptance: %s\n", all_pass ? "ALL PASS" : "FAILURES PRESENT");
    return all_pass ? 0 : 1;
}
