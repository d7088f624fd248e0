#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "lfock/identity.hpp"
#include "lfock/scalar.hpp"

namespace lfock {

// Scalar wire encoding: exact rationals as "p/q" strings (plain integers
// accepted), complex floats as [re, im] pairs (plain numbers accepted).

inline nlohmann::json scalar_to_json(const Rational& v) { return v.str(); }

template <typename R>
nlohmann::json scalar_to_json(const Complex<R>& v) {
    return nlohmann::json::array({static_cast<double>(v.real()), static_cast<double>(v.imag())});
}

inline void scalar_from_json(const nlohmann::json& j, Rational& out) {
    if (j.is_string()) {
        out = Rational::parse(j.get<std::string>());
        return;
    }
    if (j.is_number_integer()) {
        out = Rational(j.get<long long>());
        return;
    }
    throw InvalidParameters("exact scalar must be a \"p/q\" string or an integer");
}

template <typename R>
void scalar_from_json(const nlohmann::json& j, Complex<R>& out) {
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        out = Complex<R>(static_cast<R>(j[0].get<double>()), static_cast<R>(j[1].get<double>()));
        return;
    }
    if (j.is_number()) {
        out = Complex<R>(static_cast<R>(j.get<double>()), R(0));
        return;
    }
    if (j.is_string()) {  // rational fixture read into the float backend
        const Rational r = Rational::parse(j.get<std::string>());
        out = Complex<R>(static_cast<R>(r.to_double()), R(0));
        return;
    }
    throw InvalidParameters("float scalar must be [re, im], a number, or a \"p/q\" string");
}

template <typename S>
nlohmann::json spec_to_json(const PeriodSpec<S>& spec) {
    nlohmann::json j;
    j["q"] = scalar_to_json(spec.q);
    j["n"] = spec.n;
    j["g"] = spec.g;
    j["chi_n_half"] = scalar_to_json(spec.chi_n_half);
    j["chi_n1_half"] = scalar_to_json(spec.chi_n1_half);
    auto list = [](const std::vector<S>& xs) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& x : xs) a.push_back(scalar_to_json(x));
        return a;
    };
    j["h1_alphas"] = list(spec.h1_alphas);
    j["adjoint_n_alphas"] = list(spec.adjoint_n_alphas);
    j["adjoint_n1_alphas"] = list(spec.adjoint_n1_alphas);
    return j;
}

template <typename S>
PeriodSpec<S> spec_from_json(const nlohmann::json& j, bool strict = true) {
    auto need = [&](const char* key) -> const nlohmann::json& {
        if (!j.contains(key)) throw InvalidParameters(std::string("spec missing field: ") + key);
        return j.at(key);
    };
    auto scalar = [&](const nlohmann::json& v) {
        S s;
        scalar_from_json(v, s);
        return s;
    };
    auto list = [&](const nlohmann::json& v) {
        if (!v.is_array()) throw InvalidParameters("expected an array of scalars");
        std::vector<S> out;
        out.reserve(v.size());
        for (const auto& x : v) out.push_back(scalar(x));
        return out;
    };
    const int n = need("n").template get<int>();
    const int g = need("g").template get<int>();
    const S q = scalar(need("q"));
    auto h1 = list(need("h1_alphas"));
    auto adj_n = list(need("adjoint_n_alphas"));
    auto adj_n1 = list(need("adjoint_n1_alphas"));
    const S chi_n = scalar(need("chi_n_half"));
    const S chi_n1 = scalar(need("chi_n1_half"));
    if (strict)
        return PeriodSpec<S>::make(q, n, g, std::move(h1), chi_n, chi_n1, std::move(adj_n),
                                   std::move(adj_n1));
    return PeriodSpec<S>::synthetic(q, n, g, std::move(h1), chi_n, chi_n1, std::move(adj_n),
                                    std::move(adj_n1));
}

/// Run configuration: spec source, requested derivative orders, backend and
/// precision, tolerance, suite selection, output sink.
struct RunConfig {
    std::string spec_path;  // empty: use the generator parameters below
    long long q = 4;
    int n = 2;
    int g = 2;
    std::uint64_t seed = 0;
    std::vector<int> r_values = {0, 2};
    std::string backend = "exact";  // "exact" | "float"
    int precision_bits = 53;        // float backend: 53 = double, up to 64 = long double
    double tolerance = 1e-8;
    std::string out_path;           // empty: stdout
    std::string format = "json";    // "json" | "csv"
    std::vector<std::string> suite;  // empty: every known check
};

const std::vector<std::string>& known_checks();

void validate(const RunConfig& config);  // throws InvalidConfig

struct SuiteResult {
    std::vector<VerificationReport> reports;
    std::vector<std::string> warnings;
    int exit_code = 0;  // 0 all pass, 1 some check failed
};

/// Executes the selected checks over all requested r values. Configuration
/// problems throw InvalidConfig/IOError; a failing check is a report entry.
SuiteResult run_suite(const RunConfig& config);

// Report serialization. CSV columns: identity,r,lhs,rhs,abs_err,rel_err,pass.
// JSON records additionally carry backend and wall_ms.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);
std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::vector<VerificationReport> reports_from_json(const std::string& text);
std::vector<VerificationReport> reports_from_csv(const std::string& text);

std::string read_text_file(const std::string& path);            // IOError
void write_text_file(const std::string& path, const std::string& text);  // IOError

} // namespace lfock
