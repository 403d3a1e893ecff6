#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sepcode/code.hpp"

namespace sepcode {

/// Malformed code text. line() is 1-based; 0 when the problem is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Text format: a header line "n M q", then M lines of n integers in 0..q-1,
// one codeword per line (the transpose of the incidence matrix, whose columns
// are codewords). '#' starts a comment; blank lines are ignored.

Code read_code(std::istream& in);
Code read_code_file(const std::filesystem::path& path);
void write_code(std::ostream& out, const Code& code);
void write_code_file(const std::filesystem::path& path, const Code& code);

}  // namespace sepcode
