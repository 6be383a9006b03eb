#pragma once

// Text formats.
//
// Code file (bit-exact):
//   p=<p> n=<n>
//   <c1>,<c2>,...,<cn>        one codeword per line, sorted by index
//
// Family file:
//   pds-family v1 p=<p> n=<n> count=<N> complete=<0|1>
//   followed by N code files, each preceded by one empty line.

#include "pds/torus.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pds {

inline constexpr int kFamilyFormatVersion = 1;

std::string format_point(const TorusPoint& pt);
std::string serialize_code(const CodeSet& code);
void write_code(std::ostream& os, const CodeSet& code);

// Throws FormatError with the offending line number.
CodeSet parse_code(std::string_view text);
CodeSet read_code_file(const std::filesystem::path& path);
void write_code_file(const std::filesystem::path& path, const CodeSet& code);

struct FamilyFile {
  int p = 0;
  int n = 0;
  bool complete = false;
  std::vector<CodeSet> codes;
};

std::string serialize_family(const FamilyFile& family);
FamilyFile parse_family(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace pds
