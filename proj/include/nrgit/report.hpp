// Command implementations behind the nrgit command-line tool. Each command
// produces a JSON report; the text format is a line-per-field rendering of
// the same document.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "nrgit/binary_forms.hpp"

namespace nrgit {

namespace exit_code {
constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kDisagreement = 3;
constexpr int kInternal = 4;
}  // namespace exit_code

/// Malformed user input; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Report {
  nlohmann::ordered_json doc;
  int exit_code = exit_code::kOk;
};

/// Parses "inf=<k>,zero=<k>,roots=<k1+k2+...>"; omitted fields are 0 / empty.
Divisor parse_profile(int n, const std::string& text);

/// Parses "p/q" or an integer.
Rational parse_rational(const std::string& text);

/// Census degree guard, overridable through NRGIT_CENSUS_MAX_N.
int census_max_n();

Report cmd_classify(int n, std::int64_t m, std::int64_t r, const std::string& profile);
Report cmd_table1(int n, std::int64_t m, std::int64_t r);
Report cmd_walls(int n);
Report cmd_flips(int n, const std::string& tau);
Report cmd_census(int n, std::int64_t m, std::int64_t r);
Report cmd_unipotent(int n);

/// Standalone SVG of the fixed-point weights at a concrete display value of N.
std::string cmd_diagram(int n, std::int64_t m, std::int64_t r, const std::string& n_display);

std::string render_text(const nlohmann::ordered_json& doc);
std::string render(const Report& report, const std::string& format);

}  // namespace nrgit
