#pragma once

#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cksplice/binary_matrix.hpp"
#include "cksplice/errors.hpp"

// Text format: first line N, then N lines of N space-separated 0/1 entries.
// Lines whose first non-blank character is '#' are comments; blank lines are
// ignored. Output is canonical: single spaces, '\n' endings, no comments.

namespace cksplice {

inline BinaryMatrix read_matrix(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("matrix file: missing size line");

  std::istringstream head(lines[0]);
  long long n = 0;
  std::string trailing;
  if (!(head >> n) || (head >> trailing) || n <= 0) {
    throw ParseError("matrix file: first line must be a positive size N");
  }
  const auto size = static_cast<std::size_t>(n);
  if (lines.size() != size + 1) {
    throw ParseError("matrix file: expected " + std::to_string(size) + " rows, found " +
                     std::to_string(lines.size() - 1));
  }
  BinaryMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) {
    std::istringstream row(lines[i + 1]);
    std::string token;
    std::size_t j = 0;
    while (row >> token) {
      if (j >= size) throw ParseError("matrix file: row " + std::to_string(i + 1) + " has too many entries");
      if (token != "0" && token != "1") {
        throw ParseError("matrix file: entry '" + token + "' is not 0 or 1");
      }
      m.set(i, j++, token == "1");
    }
    if (j != size) throw ParseError("matrix file: row " + std::to_string(i + 1) + " has too few entries");
  }
  return m;
}

inline BinaryMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

inline BinaryMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file: " + path);
  return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const BinaryMatrix& m) {
  out << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << (m(i, j) ? '1' : '0');
    out << '\n';
  }
}

inline std::string format_matrix(const BinaryMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

}  // namespace cksplice
