#include <doctest.h>

#include <random>

#include "lfock/identity.hpp"

using namespace lfock;

namespace {

using SpecQ = PeriodSpec<Rational>;

/// q = 4, n = 2, g = 2, b = (-1,-1), trivial characters, self-dual adjoints.
SpecQ reference_fixture() {
    return SpecQ::synthetic(Rational(4), 2, 2, {Rational(-2), Rational(-2)}, Rational(1),
                            Rational(1), {Rational(2), Rational(2)}, {Rational(2), Rational(2)});
}

Rational rand_nonzero(std::mt19937_64& rng) {
    while (true) {
        const Rational v = Rational::ratio(static_cast<long long>(rng() % 11) - 5,
                                           1 + static_cast<long long>(rng() % 4));
        if (!v.is_zero()) return v;
    }
}

SpecQ random_synthetic(std::mt19937_64& rng, int D, int n = 2) {
    std::vector<Rational> alphas;
    for (int i = 0; i < D; ++i) alphas.push_back(rand_nonzero(rng) * Rational(2));  // sqrt(4) = 2
    std::vector<Rational> adj = {Rational(2), Rational(2)};
    return SpecQ::synthetic(Rational(4), n, 2, alphas, rand_nonzero(rng), rand_nonzero(rng), adj,
                            adj);
}

} // namespace

TEST_CASE("beta_sigma closed form and parity") {
    const Rational q(4);
    // trivial characters, all b_i = 1: beta = q^{-n^2(g-1)}
    const SpecQ spec = SpecQ::synthetic(q, 2, 2, {Rational(2), Rational(2)}, Rational(1),
                                        Rational(1), {}, {});
    CHECK(beta_sigma(spec, 0) == Rational::ratio(1, 256));
    CHECK(beta_sigma(spec, 2) == -beta_sigma(spec, 0));
    CHECK(beta_sigma(spec, 4) == beta_sigma(spec, 0));
    CHECK_THROWS_AS(beta_sigma(spec, 1), OddR);
}

TEST_CASE("beta_sigma equals (-1)^{r/2} lambda0^2 epsilon") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        const SpecQ spec = random_synthetic(rng, 1 + static_cast<int>(rng() % 4));
        const Rational lam =
            lowest_weight_eigenvalue(spec.q, spec.n, spec.g, spec.chi_n1_half, spec.chi_n_half);
        for (int r : {0, 2}) {
            const Rational sign = (r / 2 % 2 == 0) ? Rational(1) : Rational(-1);
            CHECK(beta_sigma(spec, r) == sign * lam * lam * spec.epsilon());
        }
    }
}

TEST_CASE("norm identity on the reference fixture: frozen values") {
    const SpecQ spec = reference_fixture();
    const auto r0 = kolyvagin_norm_check(spec, 0);
    CHECK(r0.pass);
    CHECK(r0.lhs == "1/16");
    CHECK(r0.rhs == "1/16");
    CHECK(r0.abs_err == 0.0);

    const auto r2 = kolyvagin_norm_check(spec, 2);
    CHECK(r2.pass);
    CHECK(r2.lhs == "-1/16");

    const auto r4 = kolyvagin_norm_check(spec, 4);
    CHECK(r4.pass);
    CHECK(r4.lhs == "5/32");

    const auto r6 = kolyvagin_norm_check(spec, 6);
    CHECK(r6.pass);
    CHECK(r6.lhs == "-17/32");

    const auto odd = kolyvagin_norm_check(spec, 3);
    CHECK(odd.pass);
    CHECK(odd.lhs == "0");
    CHECK(odd.rhs == "0");
}

TEST_CASE("norm identity holds exactly for random rational data, D in {2,4}") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 8; ++trial) {
        const int D = (trial % 2 == 0) ? 2 : 4;
        const int n = (trial % 3 == 0) ? 3 : 2;  // both parities of sign_n
        const SpecQ spec = random_synthetic(rng, D, n);
        for (int r : {0, 2, 4}) {
            const auto rep = kolyvagin_norm_check(spec, r);
            CHECK(rep.pass);
            CHECK(rep.abs_err == 0.0);
        }
        CHECK(main_identity_check(spec, 2).pass);
        CHECK(dual_relation_check(spec, 2).pass);
    }
}

TEST_CASE("top exterior power carries lambda0 times the root number") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        const SpecQ spec = random_synthetic(rng, 4);
        const auto mod = spec.fock_module();
        const std::uint32_t top = mod.dim() - 1;  // all generators occupied
        CHECK(mod.frobenius_eigenvalue(top) == mod.lambda0() * spec.epsilon());
    }
}

TEST_CASE("dual relation: closed form at r = 0 and exact componentwise match") {
    std::mt19937_64 rng(37);
    const SpecQ spec = random_synthetic(rng, 4);
    // gamma for trivial characters is epsilon^{-1}
    const SpecQ trivial = reference_fixture();
    CHECK(dual_relation_scalar(trivial) == Rational(1) / trivial.epsilon());

    for (int r : {0, 2, 4}) {
        const auto rep = dual_relation_check(spec, r);
        CHECK(rep.pass);
        CHECK(rep.abs_err == 0.0);
    }

    // r = 0 closed forms: lambda0' prod(1 - 1/b) = gamma lambda0 prod(1 - b)
    const auto mod = spec.fock_module();
    const auto dual = spec.dual_fock_module();
    Rational lhs = dual.lambda0();
    Rational rhs = dual_relation_scalar(spec) * mod.lambda0();
    for (const auto& bi : mod.b()) {
        lhs *= Rational(1) - Rational(1) / bi;
        rhs *= Rational(1) - bi;
    }
    CHECK(lhs == rhs);
}

TEST_CASE("intersection pairing: unit residues, homogeneity, zero residue") {
    // residue scalars equal to 1: adjoint list {1} over q = 4
    const SpecQ unit = SpecQ::synthetic(Rational(4), 2, 2, {Rational(-2), Rational(-2)},
                                        Rational(1), Rational(1), {Rational(1)}, {Rational(1)});
    const auto z = cycle_class_sum(unit.fock_module(), 0);
    const auto zd = dual_cycle_class_sum(unit.dual_fock_module(), 0);
    // r = 0 with unit residues: plain product of the two scalars
    CHECK(intersection_dual_pairing(unit, z, zd, 0) ==
          z.parts.begin()->second.coeff_at(0) * zd.parts.begin()->second.coeff_at(0));

    // scaling both residue scalars by t scales the output by t^{-2}
    SpecQ scaled = unit;
    scaled.adjoint_n_alphas = {Rational(-2)};   // residue scalar 2
    scaled.adjoint_n1_alphas = {Rational(-2)};
    CHECK(residue_scalar(scaled.adjoint_n_alphas, scaled.q) == Rational(2));
    CHECK(intersection_dual_pairing(scaled, z, zd, 0) ==
          intersection_dual_pairing(unit, z, zd, 0) / Rational(4));

    // vanishing residue is an error
    SpecQ degenerate = unit;
    degenerate.adjoint_n_alphas = {Rational(4)};  // alpha = q kills the residue
    CHECK_THROWS_AS(intersection_dual_pairing(degenerate, z, zd, 0), ZeroResidue);
}

TEST_CASE("main identity on the reference fixture: frozen value 9/16") {
    const SpecQ spec = reference_fixture();
    const auto r0 = main_identity_check(spec, 0);
    CHECK(r0.pass);
    CHECK(r0.lhs == "9/16");
    CHECK(r0.rhs == "9/16");
    const auto r2 = main_identity_check(spec, 2);
    CHECK(r2.pass);
    const auto odd = main_identity_check(spec, 1);
    CHECK(odd.pass);
    CHECK(odd.lhs == "0");
}

TEST_CASE("main identity: permutation invariance and duality stability") {
    std::mt19937_64 rng(43);
    const SpecQ spec = random_synthetic(rng, 4);
    SpecQ permuted = spec;
    std::swap(permuted.h1_alphas[0], permuted.h1_alphas[3]);
    std::swap(permuted.h1_alphas[1], permuted.h1_alphas[2]);

    for (int r : {0, 2}) {
        const auto a = main_identity_check(spec, r);
        const auto b = main_identity_check(permuted, r);
        CHECK(a.pass);
        CHECK(b.pass);
        CHECK(a.lhs == b.lhs);
        CHECK(a.rhs == b.rhs);
        // swapping sigma and sigma^* data leaves the pass status unchanged
        CHECK(main_identity_check(spec.dualized(), r).pass);
    }
}

TEST_CASE("graded dimension check: both residue routes and the generating function") {
    const SpecQ empty = SpecQ::synthetic(Rational(4), 2, 2, {Rational(-2), Rational(-2)},
                                         Rational(1), Rational(1), {}, {});
    const auto rep = graded_dimension_check(empty);
    CHECK(rep.pass);
    CHECK(rep.lhs == "4/3");
    CHECK(rep.rhs == "4/3");

    const auto rep2 = graded_dimension_check(reference_fixture());
    CHECK(rep2.pass);
    CHECK(rep2.lhs == "1/3");
}

TEST_CASE("nondegeneracy: Gram determinant matches the predicted power") {
    const SpecQ spec = reference_fixture();
    for (int r : {0, 2}) {
        const auto rep = nondegeneracy_check(spec, r);
        CHECK(rep.pass);
        CHECK(rep.abs_err == 0.0);
    }
    // D = 3 synthetic instance
    const SpecQ d3 = SpecQ::synthetic(Rational(4), 2, 2,
                                      {Rational(-2), Rational(-2), Rational(6)}, Rational(1),
                                      Rational(1), {Rational(2), Rational(2)},
                                      {Rational(2), Rational(2)});
    const auto rep3 = nondegeneracy_check(d3, 2);
    CHECK(rep3.pass);
}

TEST_CASE("functional equation and clifford bundles pass") {
    const SpecQ spec = reference_fixture();
    for (int r : {0, 1, 2, 3}) CHECK(functional_equation_check(spec, r).pass);
    CHECK(clifford_relations_check(spec).pass);
}

TEST_CASE("strict PeriodSpec validation") {
    const Rational q(4);
    std::vector<Rational> h1(4, Rational(-2));
    std::vector<Rational> adj_n = {Rational(2), Rational(2), Rational(2), Rational(2), Rational(2),
                                   Rational(2), Rational(2), Rational(2), Rational(2), Rational(2)};
    std::vector<Rational> adj_n1 = {Rational(2), Rational(2), Rational(2), Rational(2)};
    CHECK_NOTHROW(SpecQ::make(q, 2, 2, h1, Rational(1), Rational(1), adj_n, adj_n1));

    // wrong h1 cardinality
    CHECK_THROWS_AS(SpecQ::make(q, 2, 2, {Rational(-2)}, Rational(1), Rational(1), adj_n, adj_n1),
                    InvalidParameters);
    // adjoint multiset not closed under a -> q/a
    auto broken = adj_n;
    broken[0] = Rational(3);
    CHECK_THROWS_AS(SpecQ::make(q, 2, 2, h1, Rational(1), Rational(1), broken, adj_n1),
                    InvalidParameters);
    // zero character
    CHECK_THROWS_AS(SpecQ::synthetic(q, 2, 2, h1, Rational(0), Rational(1), {}, {}),
                    InvalidParameters);
}

TEST_CASE("float backend tracks the exact backend through the full pipeline") {
    std::mt19937_64 rng(53);
    auto to_float = [](const std::vector<Rational>& xs) {
        std::vector<Cplx> out;
        for (const auto& x : xs) out.emplace_back(x.to_double(), 0.0);
        return out;
    };
    for (int trial = 0; trial < 5; ++trial) {
        const SpecQ spec = random_synthetic(rng, 4);
        const auto fspec = PeriodSpec<Cplx>::synthetic(
            Cplx(spec.q.to_double(), 0), spec.n, spec.g, to_float(spec.h1_alphas),
            Cplx(spec.chi_n_half.to_double(), 0), Cplx(spec.chi_n1_half.to_double(), 0),
            to_float(spec.adjoint_n_alphas), to_float(spec.adjoint_n1_alphas));
        for (int r : {0, 2}) {
            const auto exact = kolyvagin_norm_check(spec, r);
            const auto approx = kolyvagin_norm_check(fspec, r);
            CHECK(exact.pass);
            CHECK(approx.pass);
            CHECK(approx.abs_err <= 1e-10);
            const double want = Rational::parse(exact.lhs).to_double();
            if (std::abs(want) > 1e-8) {
                const auto z = cycle_class_sum(fspec.fock_module(), r);
                const Cplx lhs = omega_dual_pairing(z, z, fspec.fock_module().omega_form());
                CHECK(approx_equal(lhs, Cplx(want, 0), 1e-10));
            }
        }
    }
}

TEST_CASE("reports are deterministic") {
    const SpecQ spec = reference_fixture();
    const auto a = kolyvagin_norm_check(spec, 2);
    const auto b = kolyvagin_norm_check(spec, 2);
    CHECK(a.identity == b.identity);
    CHECK(a.lhs == b.lhs);
    CHECK(a.rhs == b.rhs);
    CHECK(a.abs_err == b.abs_err);
    CHECK(a.pass == b.pass);
}
