#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lfock/spec_io.hpp"

namespace lfock {

namespace {

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::string out = "identity,r,lhs,rhs,abs_err,rel_err,pass\n";
    for (const auto& rep : reports) {
        out += rep.identity + "," + std::to_string(rep.r) + "," + rep.lhs + "," + rep.rhs + "," +
               fmt_double(rep.abs_err) + "," + fmt_double(rep.rel_err) + "," +
               (rep.pass ? "true" : "false") + "\n";
    }
    return out;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rep : reports) {
        nlohmann::json j;
        j["identity"] = rep.identity;
        j["r"] = rep.r;
        j["lhs"] = rep.lhs;
        j["rhs"] = rep.rhs;
        j["abs_err"] = rep.abs_err;
        j["rel_err"] = rep.rel_err;
        j["pass"] = rep.pass;
        j["backend"] = rep.backend;
        j["wall_ms"] = rep.wall_ms;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::vector<VerificationReport> reports_from_json(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw IOError(std::string("cannot parse report JSON: ") + e.what());
    }
    if (!arr.is_array()) throw IOError("report JSON must be an array");
    std::vector<VerificationReport> out;
    out.reserve(arr.size());
    for (const auto& j : arr) {
        VerificationReport rep;
        rep.identity = j.at("identity").get<std::string>();
        rep.r = j.at("r").get<int>();
        rep.lhs = j.at("lhs").get<std::string>();
        rep.rhs = j.at("rhs").get<std::string>();
        rep.abs_err = j.at("abs_err").get<double>();
        rep.rel_err = j.at("rel_err").get<double>();
        rep.pass = j.at("pass").get<bool>();
        rep.backend = j.value("backend", std::string{});
        rep.wall_ms = j.value("wall_ms", 0.0);
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<VerificationReport> reports_from_csv(const std::string& text) {
    std::vector<VerificationReport> out;
    std::istringstream is(text);
    std::string line;
    bool header = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (header) {  // cells never contain commas by construction
            header = false;
            continue;
        }
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() != 7) throw IOError("malformed report CSV row: " + line);
        VerificationReport rep;
        rep.identity = cells[0];
        rep.r = std::stoi(cells[1]);
        rep.lhs = cells[2];
        rep.rhs = cells[3];
        rep.abs_err = std::stod(cells[4]);
        rep.rel_err = std::stod(cells[5]);
        rep.pass = (cells[6] == "true");
        out.push_back(std::move(rep));
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot open for reading: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream outf(path, std::ios::binary);
    if (!outf) throw IOError("cannot open for writing: " + path);
    outf << text;
    if (!outf) throw IOError("write failed: " + path);
}

} // namespace lfock
