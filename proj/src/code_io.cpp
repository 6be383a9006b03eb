#include "pds/code_io.hpp"

#include "pds/errors.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace pds {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

// Parses "key=value" and checks the key.
int parse_field(std::string_view token, std::string_view key, std::size_t line_no) {
  int value = 0;
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key ||
      token[key.size()] != '=' || !parse_int(token.substr(key.size() + 1), value)) {
    throw FormatError(line_no, "expected " + std::string(key) + "=<int>, got '" +
                                   std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto end = s.find(sep, start);
    parts.push_back(s.substr(start, end == std::string_view::npos ? s.npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

TorusParams parse_header(std::string_view line, std::size_t line_no) {
  auto tokens = split(line, ' ');
  if (tokens.size() != 2) throw FormatError(line_no, "expected header 'p=<p> n=<n>'");
  const int p = parse_field(tokens[0], "p", line_no);
  const int n = parse_field(tokens[1], "n", line_no);
  try {
    return TorusParams(p, n);
  } catch (const InvalidInputError& e) {
    throw FormatError(line_no, e.what());
  }
}

// Parses the code whose header sits at lines[first]; stops at an empty line
// or at the end. Returns the index one past the last consumed line.
std::size_t parse_code_block(const std::vector<std::string_view>& lines, std::size_t first,
                             std::size_t line_offset, CodeSet& out) {
  const TorusParams params = parse_header(lines[first], first + 1 + line_offset);
  CodeSet code(params);
  bool have_prev = false;
  VertexIndex prev = 0;
  std::size_t i = first + 1;
  for (; i < lines.size() && !lines[i].empty(); ++i) {
    const std::size_t line_no = i + 1 + line_offset;
    auto fields = split(lines[i], ',');
    if (fields.size() != static_cast<std::size_t>(params.n())) {
      throw FormatError(line_no, "expected " + std::to_string(params.n()) + " residues");
    }
    TorusPoint pt;
    for (auto f : fields) {
      int c = 0;
      if (!parse_int(f, c) || c < 0 || c >= params.p()) {
        throw FormatError(line_no, "bad residue '" + std::string(f) + "'");
      }
      pt.coords.push_back(c);
    }
    const VertexIndex idx = index_of(pt, params);
    if (have_prev && idx <= prev) {
      throw FormatError(line_no, idx == prev ? "duplicate codeword" : "codewords not sorted by index");
    }
    code.insert(idx);
    prev = idx;
    have_prev = true;
  }
  out = std::move(code);
  return i;
}

}  // namespace

std::string format_point(const TorusPoint& pt) {
  std::string s;
  for (std::size_t i = 0; i < pt.coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(pt.coords[i]);
  }
  return s;
}

void write_code(std::ostream& os, const CodeSet& code) {
  os << code.params().to_string() << '\n';
  for (VertexIndex v : code.indices()) os << format_point(point_of(v, code.params())) << '\n';
}

std::string serialize_code(const CodeSet& code) {
  std::ostringstream os;
  write_code(os, code);
  return os.str();
}

CodeSet parse_code(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw FormatError(1, "empty code file");
  CodeSet code{TorusParams(3)};
  std::size_t end = parse_code_block(lines, 0, 0, code);
  for (; end < lines.size(); ++end) {
    if (!lines[end].empty()) throw FormatError(end + 1, "unexpected content after blank line");
  }
  return code;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

CodeSet read_code_file(const std::filesystem::path& path) { return parse_code(read_text_file(path)); }

void write_code_file(const std::filesystem::path& path, const CodeSet& code) {
  write_text_file(path, serialize_code(code));
}

std::string serialize_family(const FamilyFile& family) {
  std::ostringstream os;
  os << "pds-family v" << kFamilyFormatVersion << " p=" << family.p << " n=" << family.n
     << " count=" << family.codes.size() << " complete=" << (family.complete ? 1 : 0) << '\n';
  for (const auto& code : family.codes) {
    os << '\n';
    write_code(os, code);
  }
  return os.str();
}

FamilyFile parse_family(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw FormatError(1, "empty family file");
  auto tokens = split(lines[0], ' ');
  if (tokens.size() != 6 || tokens[0] != "pds-family") {
    throw FormatError(1, "expected 'pds-family v<version> p= n= count= complete='");
  }
  if (tokens[1] != "v" + std::to_string(kFamilyFormatVersion)) {
    throw FormatError(1, "unsupported family format version '" + std::string(tokens[1]) + "'");
  }
  FamilyFile family;
  family.p = parse_field(tokens[2], "p", 1);
  family.n = parse_field(tokens[3], "n", 1);
  const int count = parse_field(tokens[4], "count", 1);
  const int complete = parse_field(tokens[5], "complete", 1);
  if (complete != 0 && complete != 1) throw FormatError(1, "complete must be 0 or 1");
  family.complete = complete == 1;

  std::size_t i = 1;
  while (i < lines.size()) {
    if (!lines[i].empty()) throw FormatError(i + 1, "expected blank line before code");
    ++i;
    if (i >= lines.size()) break;
    CodeSet code{TorusParams(3)};
    i = parse_code_block(lines, i, 0, code);
    if (code.params().p() != family.p || code.params().n() != family.n) {
      throw FormatError(i, "code parameters differ from family header");
    }
    family.codes.push_back(std::move(code));
  }
  if (static_cast<int>(family.codes.size()) != count) {
    throw FormatError(1, "header count=" + std::to_string(count) + " but file holds " +
                             std::to_string(family.codes.size()) + " codes");
  }
  return family;
}

}  // namespace pds
