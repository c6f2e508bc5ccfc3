#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wormkit/geometry.hpp"

namespace wormkit {

/// One failed instance of a checked property.
struct Violation {
  std::string kind;
  std::vector<std::int64_t> tiles;
  std::vector<std::int64_t> worms;
  std::optional<Vec2> at;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

/// Outcome of a checker. Statistics keep insertion order so serialized
/// output is stable.
struct CheckReport {
  std::string name;
  std::vector<Violation> violations;
  std::vector<std::pair<std::string, std::string>> stats;

  bool passed() const noexcept { return violations.empty(); }

  void add_stat(std::string key, std::string value);
  void add_stat(std::string key, std::int64_t value);
  void add_stat(std::string key, double value);
  /// Value of a statistic, or nullopt if absent.
  std::optional<std::string> stat(const std::string& key) const;

  bool operator==(const CheckReport&) const = default;
};

using ValidationReport = CheckReport;

/// Line-oriented report format:
///
///   check <name>
///   status pass|fail
///   stat <key> <value>
///   violation <kind> tiles=<ids> worms=<ids> at=<x>,<y> detail=<text>
///   end
///
/// Ids are comma separated ("-" when empty); `at=-` when there is no point.
void write_report(std::ostream& os, const CheckReport& report);
std::string format_report(const CheckReport& report);
std::string format_reports(const std::vector<CheckReport>& reports);

/// Parses any number of reports, skipping '#' comment lines; throws Error
/// on malformed input.
std::vector<CheckReport> parse_reports(std::istream& is);

/// Shortest decimal text that reads back to exactly the same double.
std::string format_double(double value);

}  // namespace wormkit
