#include <algorithm>

#include "lfock/generate.hpp"
#include "lfock/spec_io.hpp"

namespace lfock {

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = {
        "kolyvagin",      "dual_relation",       "main_identity", "graded_dimension",
        "nondegeneracy",  "functional_equation", "clifford",
    };
    return names;
}

void validate(const RunConfig& config) {
    if (config.backend != "exact" && config.backend != "float")
        throw InvalidConfig("backend must be 'exact' or 'float'");
    if (config.tolerance <= 0) throw InvalidConfig("tolerance must be positive");
    if (config.precision_bits < 1 || config.precision_bits > 64)
        throw InvalidConfig("precision must be between 1 and 64 bits");
    for (int r : config.r_values)
        if (r < 0) throw InvalidConfig("r values must be nonnegative");
    if (config.spec_path.empty()) {
        if (config.q < 2) throw InvalidConfig("q must be at least 2");
        if (config.g < 2) throw InvalidConfig("g must be at least 2");
        if (config.n < 1) throw InvalidConfig("n must be at least 1");
    }
    if (config.format != "json" && config.format != "csv")
        throw InvalidConfig("format must be 'json' or 'csv'");
    const auto& known = known_checks();
    for (const auto& name : config.suite)
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw InvalidConfig("unknown check name: " + name);
}

namespace {

template <typename S>
SuiteResult run_suite_backend(const RunConfig& config) {
    PeriodSpec<S> spec = [&] {
        if (!config.spec_path.empty()) {
            const auto j = nlohmann::json::parse(read_text_file(config.spec_path), nullptr, false);
            if (j.is_discarded()) throw IOError("cannot parse spec JSON: " + config.spec_path);
            return spec_from_json<S>(j);
        }
        return generate_spec<S>(config.q, config.n, config.g, config.seed);
    }();

    SuiteResult result;
    result.warnings = weight_one_warnings(std::span<const S>(spec.h1_alphas), spec.q);

    std::vector<std::string> suite = config.suite;
    if (suite.empty()) suite = known_checks();
    const Tolerance tol{config.tolerance};

    for (const auto& name : suite) {
        if (name == "graded_dimension") {
            result.reports.push_back(graded_dimension_check(spec, tol));
        } else if (name == "clifford") {
            result.reports.push_back(clifford_relations_check(spec, tol));
        } else {
            for (int r : config.r_values) {
                if (name == "kolyvagin")
                    result.reports.push_back(kolyvagin_norm_check(spec, r, tol));
                else if (name == "dual_relation")
                    result.reports.push_back(dual_relation_check(spec, r, tol));
                else if (name == "main_identity")
                    result.reports.push_back(main_identity_check(spec, r, tol));
                else if (name == "functional_equation")
                    result.reports.push_back(functional_equation_check(spec, r, tol));
                else if (name == "nondegeneracy" && r <= 2 &&
                         epsilon_patterns(r).size() *
                                 CycleTensor<S>::tuple_count(spec.D(), r) <=
                             256)
                    result.reports.push_back(nondegeneracy_check(spec, r, tol));
                // nondegeneracy is quadratic in the functional basis; the
                // runner skips r > 2 and oversized bases (see README)
            }
        }
    }

    result.exit_code = 0;
    for (const auto& rep : result.reports)
        if (!rep.pass) result.exit_code = 1;
    return result;
}

} // namespace

SuiteResult run_suite(const RunConfig& config) {
    validate(config);
    if (config.backend == "exact") return run_suite_backend<Rational>(config);
    if (config.precision_bits <= 53) return run_suite_backend<Cplx>(config);
    return run_suite_backend<CplxExt>(config);
}

} // namespace lfock
