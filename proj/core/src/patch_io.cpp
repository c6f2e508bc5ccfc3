#include "wormkit/patch_io.hpp"

#include <fstream>
#include <sstream>

namespace wormkit {

namespace {

double parse_number(const std::string& token, std::size_t line_no) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) {
    throw FormatError("line " + std::to_string(line_no) + ": bad number '" + token + "'");
  }
  return v;
}

}  // namespace

void write_patch_file(std::ostream& os, const Patch& patch, const std::string& generator) {
  os << "wormkit-patch " << kPatchFormatVersion << '\n';
  if (!generator.empty()) os << "generator " << generator << '\n';
  os << "tiles " << patch.tile_count() << '\n';
  for (const Tile& t : patch.tiles()) {
    const Pgram& s = t.shape;
    os << format_double(s.anchor().x()) << ' ' << format_double(s.anchor().y()) << ' '
       << format_double(s.u().x()) << ' ' << format_double(s.u().y()) << ' '
       << format_double(s.v().x()) << ' ' << format_double(s.v().y()) << '\n';
  }
}

std::string format_patch_file(const Patch& patch, const std::string& generator) {
  std::ostringstream os;
  write_patch_file(os, patch, generator);
  return os.str();
}

PatchFile parse_patch_file(std::istream& is) {
  PatchFile file;
  std::string line;
  std::size_t line_no = 0;
  bool have_magic = false;
  long long expected = -1;

  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream in(line);
    std::string head;
    in >> head;

    if (!have_magic) {
      if (head != "wormkit-patch") throw FormatError("not a wormkit patch file");
      if (!(in >> file.version) || file.version != kPatchFormatVersion) {
        throw FormatError("unsupported patch format version");
      }
      have_magic = true;
      continue;
    }
    if (expected < 0) {
      if (head == "generator") {
        std::getline(in >> std::ws, file.generator);
        continue;
      }
      if (head != "tiles" || !(in >> expected) || expected < 0) {
        throw FormatError("line " + std::to_string(line_no) + ": expected 'tiles <count>'");
      }
      continue;
    }

    std::vector<double> v{parse_number(head, line_no)};
    for (std::string token; in >> token;) v.push_back(parse_number(token, line_no));
    if (v.size() != 6) {
      throw FormatError("line " + std::to_string(line_no) + ": expected 6 numbers per tile");
    }
    try {
      file.tiles.push_back(Pgram::unchecked(Vec2{v[0], v[1]}, Vec2{v[2], v[3]}, Vec2{v[4], v[5]}));
    } catch (const GeometryError& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_magic) throw FormatError("empty patch file");
  if (expected < 0) throw FormatError("missing 'tiles' header");
  if (static_cast<long long>(file.tiles.size()) != expected) {
    throw FormatError("tile count mismatch: header says " + std::to_string(expected) + ", found " +
                      std::to_string(file.tiles.size()));
  }
  return file;
}

PatchFile read_patch_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return parse_patch_file(in);
}

Patch load_patch(const std::filesystem::path& path) {
  const PatchFile file = read_patch_file(path);
  return build_patch(file.tiles);
}

void save_patch(const std::filesystem::path& path, const Patch& patch, const std::string& generator) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  write_patch_file(out, patch, generator);
  if (!out) throw FormatError("write failed: " + path.string());
}

}  // namespace wormkit
