#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "thermocone/core.hpp"

namespace thermocone::io {

// Bad input file or arguments. The CLI maps these to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct StateFile {
    std::vector<double> energies;
    double beta = 0.0;
    std::vector<double> state;
    std::optional<std::vector<double>> target;
    std::optional<double> catalyst_gibbs;
};

// Parses {"energies": [...], "beta": x, "state": [...]} plus the optional
// "target" and "catalyst_gibbs" fields. `source` names the input in messages.
StateFile parse_state(const std::string& text, const std::string& source);
StateFile read_state_file(const std::string& path);

std::string read_text(const std::string& path);

// Number rounded to 12 significant digits; non-finite values become strings.
nlohmann::json number(double x);
nlohmann::json numbers(const std::vector<double>& xs);
nlohmann::json one_based(const Order& order);

// Pretty JSON with a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace thermocone::io
