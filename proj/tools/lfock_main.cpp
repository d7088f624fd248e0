// Command-line front end: spec generation, L-function inspection,
// verification suites, and report reformatting. Thin shell over the library;
// every behavior here is reachable through run_suite and friends.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lfock/generate.hpp"
#include "lfock/spec_io.hpp"

namespace {

struct CommonOpts {
    std::string spec_path;
    long long q = 4;
    int n = 2;
    int g = 2;
    std::uint64_t seed = 0;
    std::string backend = "exact";
    int precision = 53;
};

void add_source_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--spec", o.spec_path, "spec JSON file (overrides generator parameters)");
    cmd->add_option("--q", o.q, "prime power q");
    cmd->add_option("--n", o.n, "rank parameter n");
    cmd->add_option("--g", o.g, "curve genus g");
    cmd->add_option("--seed", o.seed, "generator seed");
    cmd->add_option("--backend", o.backend, "scalar backend: exact | float")
        ->check(CLI::IsMember({"exact", "float"}));
    cmd->add_option("--precision", o.precision, "float mantissa bits (53 = double, 64 = extended)");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        lfock::write_text_file(out_path, text);
}

template <typename S>
lfock::PeriodSpec<S> load_spec(const CommonOpts& o) {
    if (!o.spec_path.empty()) {
        const auto j = nlohmann::json::parse(lfock::read_text_file(o.spec_path), nullptr, false);
        if (j.is_discarded()) throw lfock::IOError("cannot parse spec JSON: " + o.spec_path);
        return lfock::spec_from_json<S>(j);
    }
    return lfock::generate_spec<S>(o.q, o.n, o.g, o.seed);
}

template <typename S>
int print_lfun(const CommonOpts& o, const std::vector<int>& r_values) {
    const auto spec = load_spec<S>(o);
    for (const auto& w : lfock::weight_one_warnings(std::span<const S>(spec.h1_alphas), spec.q))
        std::cerr << "warning: " << w << "\n";
    const auto sys = spec.system();
    std::cout << "backend:  " << lfock::scalar_traits<S>::backend_name << "\n";
    std::cout << "L(u)    = " << lfock::lfunction(spec.h1_space(), spec.q).str() << "\n";
    std::cout << "epsilon = " << spec.epsilon().str() << "\n";
    std::cout << "Lt(u)   = " << lfock::normalized_pair_lfunction(sys).str() << "\n";
    for (int r : r_values)
        std::cout << "central derivative r=" << r << ": "
                  << lfock::central_derivative(sys, r).str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"function-field L-functions and super/Clifford period identities"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::vector<int> r_values = {0, 2};
    std::string out_path;
    std::string format = "json";
    std::vector<std::string> suite;
    double tolerance = 1e-8;

    auto* gen = app.add_subcommand("generate", "generate an admissible spec and write it as JSON");
    add_source_opts(gen, opts);
    gen->add_option("--out", out_path, "output path (default stdout)");

    auto* lf = app.add_subcommand("lfun", "print L, epsilon, the normalized L and derivatives");
    add_source_opts(lf, opts);
    lf->add_option("--r", r_values, "derivative orders")->delimiter(',');

    auto* ver = app.add_subcommand("verify", "run verification suites over a spec");
    add_source_opts(ver, opts);
    ver->add_option("--r", r_values, "derivative orders")->delimiter(',');
    ver->add_option("--suite", suite, "checks to run (default: all)")->delimiter(',');
    ver->add_option("--tol", tolerance, "relative tolerance (float backend)");
    ver->add_option("--out", out_path, "report path (default stdout)");
    ver->add_option("--format", format, "report format: json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string report_in;
    auto* rep = app.add_subcommand("report", "reformat a report file");
    rep->add_option("--in", report_in, "input report (json or csv)")->required();
    rep->add_option("--out", out_path, "output path (default stdout)");
    rep->add_option("--format", format, "output format: json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            std::string text;
            if (opts.backend == "exact")
                text = lfock::spec_to_json(
                           lfock::generate_spec<lfock::Rational>(opts.q, opts.n, opts.g, opts.seed))
                           .dump(2) +
                       "\n";
            else
                text = lfock::spec_to_json(
                           lfock::generate_spec<lfock::Cplx>(opts.q, opts.n, opts.g, opts.seed))
                           .dump(2) +
                       "\n";
            emit(text, out_path);
            return 0;
        }

        if (lf->parsed()) {
            if (opts.backend == "exact") return print_lfun<lfock::Rational>(opts, r_values);
            if (opts.precision <= 53) return print_lfun<lfock::Cplx>(opts, r_values);
            return print_lfun<lfock::CplxExt>(opts, r_values);
        }

        if (ver->parsed()) {
            lfock::RunConfig config;
            config.spec_path = opts.spec_path;
            config.q = opts.q;
            config.n = opts.n;
            config.g = opts.g;
            config.seed = opts.seed;
            config.r_values = r_values;
            config.backend = opts.backend;
            config.precision_bits = opts.precision;
            config.tolerance = tolerance;
            config.out_path = out_path;
            config.format = format;
            config.suite = suite;

            const lfock::SuiteResult result = lfock::run_suite(config);
            for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
            emit(format == "csv" ? lfock::reports_to_csv(result.reports)
                                 : lfock::reports_to_json(result.reports),
                 out_path);
            return result.exit_code;
        }

        if (rep->parsed()) {
            const std::string text = lfock::read_text_file(report_in);
            std::vector<lfock::VerificationReport> records;
            const auto nonspace = text.find_first_not_of(" \t\r\n");
            if (nonspace != std::string::npos && text[nonspace] == '[')
                records = lfock::reports_from_json(text);
            else
                records = lfock::reports_from_csv(text);
            emit(format == "csv" ? lfock::reports_to_csv(records)
                                 : lfock::reports_to_json(records),
                 out_path);
            return 0;
        }
    } catch (const lfock::InvalidConfig& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const lfock::IOError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const lfock::InvalidParameters& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const lfock::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
