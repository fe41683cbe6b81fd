#pragma once

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ainf::cli {

enum ExitCode { kOk = 0, kViolation = 1, kInconclusive = 2 };

struct Options {
    int max_weight = 8;
    int max_degree = 4;
    std::optional<std::pair<int, int>> degrees;
    std::string format = "text";
    std::uint64_t seed = 1;
    std::optional<int> stabilize;  // cap on the HP ladder
    bool conjecture = false;       // 1-connected experiment for verify prop23
};

struct Report {
    std::string command;
    nlohmann::json window;
    nlohmann::json results = nlohmann::json::array();
    std::vector<std::string> evidence;
    std::string status;
    std::vector<std::string> text;  // human-readable lines
    int exit_code = kOk;

    nlohmann::json to_json() const;
    std::string render(const std::string& format) const;
};

/// "3" or "1..4".
std::pair<int, int> parse_degrees(const std::string& s);

/// `command` is one of validate, hh, hc, hp, traces, bracket, cohomology,
/// deform, or verify with `check` in prop23, thm44, thm45, cor42, sbi,
/// quasi-iso. Errors are reported in the returned Report, never thrown.
Report run(const std::string& command, const std::string& check, const std::string& spec_path, const Options& opt);

}  // namespace ainf::cli
