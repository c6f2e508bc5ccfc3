#include "wormkit/report.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace wormkit {

namespace {

std::string join_ids(const std::vector<std::int64_t>& ids) {
  if (ids.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ids[i]);
  }
  return out;
}

std::vector<std::int64_t> split_ids(const std::string& text) {
  std::vector<std::int64_t> ids;
  if (text == "-") return ids;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::int64_t value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) throw Error("malformed id list: " + text);
    ids.push_back(value);
    pos = comma + 1;
  }
  return ids;
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw Error("malformed number: " + text);
  }
  if (used != text.size()) throw Error("malformed number: " + text);
  return v;
}

// Field "key=value" where value runs to the next space.
std::string take_field(std::istringstream& in, const std::string& key) {
  std::string token;
  if (!(in >> token) || token.rfind(key + "=", 0) != 0) {
    throw Error("expected field '" + key + "'");
  }
  return token.substr(key.size() + 1);
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void CheckReport::add_stat(std::string key, std::string value) {
  stats.emplace_back(std::move(key), std::move(value));
}
void CheckReport::add_stat(std::string key, std::int64_t value) {
  stats.emplace_back(std::move(key), std::to_string(value));
}
void CheckReport::add_stat(std::string key, double value) {
  stats.emplace_back(std::move(key), format_double(value));
}

std::optional<std::string> CheckReport::stat(const std::string& key) const {
  for (const auto& [k, v] : stats) {
    if (k == key) return v;
  }
  return std::nullopt;
}

void write_report(std::ostream& os, const CheckReport& report) {
  os << "check " << report.name << '\n';
  os << "status " << (report.passed() ? "pass" : "fail") << '\n';
  for (const auto& [k, v] : report.stats) os << "stat " << k << ' ' << v << '\n';
  for (const auto& viol : report.violations) {
    os << "violation " << viol.kind << " tiles=" << join_ids(viol.tiles)
       << " worms=" << join_ids(viol.worms) << " at=";
    if (viol.at) {
      os << format_double(viol.at->x()) << ',' << format_double(viol.at->y());
    } else {
      os << '-';
    }
    os << " detail=" << viol.detail << '\n';
  }
  os << "end\n";
}

std::string format_report(const CheckReport& report) {
  std::ostringstream os;
  write_report(os, report);
  return os.str();
}

std::string format_reports(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) write_report(os, r);
  return os.str();
}

std::vector<CheckReport> parse_reports(std::istream& is) {
  std::vector<CheckReport> out;
  std::optional<CheckReport> current;
  int status = -1;  // -1 unset, 0 fail, 1 pass
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream in(line);
    std::string head;
    in >> head;
    if (head == "check") {
      if (current) throw Error("nested check block");
      current.emplace();
      in >> current->name;
      status = -1;
      continue;
    }
    if (!current) throw Error("record outside a check block: " + line);
    if (head == "status") {
      std::string s;
      in >> s;
      if (s != "pass" && s != "fail") throw Error("bad status: " + s);
      status = s == "pass" ? 1 : 0;
    } else if (head == "stat") {
      std::string key;
      in >> key;
      std::string value;
      std::getline(in >> std::ws, value);
      current->add_stat(key, value);
    } else if (head == "violation") {
      Violation v;
      in >> v.kind;
      v.tiles = split_ids(take_field(in, "tiles"));
      v.worms = split_ids(take_field(in, "worms"));
      const std::string at = take_field(in, "at");
      if (at != "-") {
        const auto comma = at.find(',');
        if (comma == std::string::npos) throw Error("malformed point: " + at);
        v.at = Vec2{parse_double(at.substr(0, comma)), parse_double(at.substr(comma + 1))};
      }
      std::string rest;
      std::getline(in >> std::ws, rest);
      if (rest.rfind("detail=", 0) != 0) throw Error("expected field 'detail'");
      v.detail = rest.substr(7);
      current->violations.push_back(std::move(v));
    } else if (head == "end") {
      if (status < 0) throw Error("check block without status");
      if ((status == 1) != current->passed()) throw Error("status disagrees with violations");
      out.push_back(std::move(*current));
      current.reset();
    } else {
      throw Error("unknown record: " + head);
    }
  }
  if (current) throw Error("unterminated check block");
  return out;
}

}  // namespace wormkit
