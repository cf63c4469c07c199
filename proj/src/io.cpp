#include "thermocone/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "thermocone/format.hpp"

namespace thermocone::io {

namespace {

using nlohmann::json;

std::string line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

double read_real(const json& j, const std::string& field, const std::string& source) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf" || s == "Infinity") return INFINITY;
    }
    throw UsageError(source + ": field '" + field + "' must be a number");
}

std::vector<double> read_vector(const json& obj, const std::string& field,
                                const std::string& source) {
    const auto it = obj.find(field);
    if (it == obj.end()) throw UsageError(source + ": missing field '" + field + "'");
    if (!it->is_array() || it->empty())
        throw UsageError(source + ": field '" + field + "' must be a non-empty array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < it->size(); ++i) {
        const json& v = (*it)[i];
        if (!v.is_number())
            throw UsageError(source + ": field '" + field + "[" + std::to_string(i) +
                             "]' must be a number");
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

StateFile parse_state(const std::string& text, const std::string& source) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(source + ": malformed JSON at " + line_col(text, e.byte) + ": " +
                         e.what());
    }
    if (!j.is_object()) throw UsageError(source + ": top-level value must be an object");
    StateFile s;
    s.energies = read_vector(j, "energies", source);
    const auto beta = j.find("beta");
    if (beta == j.end()) throw UsageError(source + ": missing field 'beta'");
    s.beta = read_real(*beta, "beta", source);
    if (j.contains("state")) s.state = read_vector(j, "state", source);
    if (j.contains("target")) s.target = read_vector(j, "target", source);
    if (j.contains("catalyst_gibbs"))
        s.catalyst_gibbs = read_real(j["catalyst_gibbs"], "catalyst_gibbs", source);
    return s;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

StateFile read_state_file(const std::string& path) { return parse_state(read_text(path), path); }

nlohmann::json number(double x) {
    if (!std::isfinite(x)) return format_number(x, kJsonDigits);
    return std::stod(format_number(x, kJsonDigits));
}

nlohmann::json numbers(const std::vector<double>& xs) {
    json a = json::array();
    for (double x : xs) a.push_back(number(x));
    return a;
}

nlohmann::json one_based(const Order& order) {
    json a = json::array();
    for (std::size_t k : order) a.push_back(k + 1);
    return a;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace thermocone::io
