#include "latred/matrix_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace latred {

namespace {

// Pull the next content line, skipping blanks and '#' comments.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

BigInt parse_int(const std::string& tok) {
  if (tok.empty()) throw InputError("empty integer token");
  const bool signed_tok = tok[0] == '-' || tok[0] == '+';
  std::size_t i = signed_tok ? 1 : 0;
  if (i == tok.size()) throw InputError("malformed integer: " + tok);
  for (; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9') throw InputError("malformed integer: " + tok);
  return BigInt(tok[0] == '+' ? tok.substr(1) : tok);  // gmp rejects a leading '+'
}

}  // namespace

IntMatrix parse_matrix(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw InputError("empty matrix file");
  std::istringstream header(line);
  long rows = 0, cols = 0;
  if (!(header >> rows >> cols) || rows < 1 || cols < 1)
    throw InputError("malformed header, expected \"rows cols\"");
  std::string extra;
  if (header >> extra) throw InputError("trailing tokens after header");

  IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long r = 0; r < rows; ++r) {
    if (!next_line(in, line))
      throw InputError("unexpected end of file at row " + std::to_string(r + 1));
    std::istringstream row(line);
    std::string tok;
    for (long c = 0; c < cols; ++c) {
      if (!(row >> tok))
        throw InputError("too few entries in row " + std::to_string(r + 1));
      m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = parse_int(tok);
    }
    if (row >> tok) throw InputError("too many entries in row " + std::to_string(r + 1));
  }
  return m;
}

IntMatrix parse_matrix_string(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

IntMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_matrix(in);
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m.at(r, c);
    }
    out << '\n';
  }
  return out.str();
}

std::string matrix_digest(const IntMatrix& m) {
  const std::string text = format_matrix(m);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char byte : text) {
    h ^= byte;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace latred
