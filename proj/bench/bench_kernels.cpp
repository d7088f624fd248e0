// Benchmark comparing the serial reference kernels against the OpenMP
// parallel ones: cycle-class coefficient fill and the dual pairing. Results
// are checked for exact agreement before timing is reported.

#include <chrono>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "lfock/generate.hpp"
#include "lfock/identity.hpp"

using namespace lfock;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

template <typename F>
double time_ms(F&& f, int repeats) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const double t0 = now_ms();
        f();
        best = std::min(best, now_ms() - t0);
    }
    return best;
}

bool sums_equal(const CycleSum<Cplx>& a, const CycleSum<Cplx>& b) {
    for (const auto& [pat, ta] : a.parts) {
        const auto it = b.parts.find(pat);
        if (it == b.parts.end()) return false;
        for (std::size_t i = 0; i < ta.size(); ++i)
            if (!exactly_equal(ta.coeff_at(i), it->second.coeff_at(i))) return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel benchmark"};
    int D = 10;
    int r = 4;
    int repeats = 3;
    app.add_option("--D", D, "Fock dimension (default 10)");
    app.add_option("--r", r, "tensor order (default 4)");
    app.add_option("--repeats", repeats, "timing repeats, best-of (default 3)");
    CLI11_PARSE(app, argc, argv);

    // synthetic float module: unit-circle eigenvalues
    std::mt19937_64 rng(12345);
    std::vector<Cplx> b;
    for (int i = 0; i < D; ++i)
        b.push_back(Cplx::polar(1.0, 6.2831853071795864 * detail::uniform01(rng)));
    const FockModule<Cplx> mod(b, Cplx(0.5, 0.25), -1);

#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "OpenMP not enabled; parallel path degrades to serial\n";
#endif
    std::cout << "D = " << D << ", r = " << r << ", patterns = " << epsilon_patterns(r).size()
              << ", tuples/pattern = " << CycleTensor<Cplx>::tuple_count(D, r) << "\n";

    CycleSum<Cplx> zs, zp;
    const double t_serial =
        time_ms([&] { zs = cycle_class_sum(mod, r, Exec::Serial); }, repeats);
    const double t_parallel =
        time_ms([&] { zp = cycle_class_sum(mod, r, Exec::Parallel); }, repeats);

    if (!sums_equal(zs, zp)) {
        std::cerr << "FAIL: serial and parallel cycle classes differ\n";
        return 1;
    }

    const OmegaForm<Cplx> form = mod.omega_form();
    Cplx ps, pp;
    const double t_pair_serial =
        time_ms([&] { ps = omega_dual_pairing(zs, zs, form, Exec::Serial); }, repeats);
    const double t_pair_parallel =
        time_ms([&] { pp = omega_dual_pairing(zp, zp, form, Exec::Parallel); }, repeats);

    if (!exactly_equal(ps, pp)) {
        std::cerr << "FAIL: serial and parallel pairings differ\n";
        return 1;
    }

    // the parallel kernel also skips provably-zero (unbalanced) tuples, so
    // the speedup combines pruning and threading over the plain reference
    std::cout << "cycle classes  serial: " << t_serial << " ms   parallel: " << t_parallel
              << " ms   speedup: " << t_serial / t_parallel << "x\n";
    std::cout << "dual pairing   serial: " << t_pair_serial << " ms   parallel: " << t_pair_parallel
              << " ms   speedup: " << t_pair_serial / t_pair_parallel << "x\n";
    std::cout << "pairing value: " << ps.str() << " (serial == parallel)\n";
    return 0;
}
