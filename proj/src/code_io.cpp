#include "sepcode/code_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace sepcode {

namespace {

std::vector<std::uint64_t> tokens(const std::string& raw, std::size_t line_no) {
  std::string line = raw.substr(0, raw.find('#'));
  std::vector<std::uint64_t> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
      throw ParseError(line_no, "expected a non-negative integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Code read_code(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0, m = 0;
  std::uint64_t q = 0;
  bool have_header = false;
  std::vector<Codeword> words;
  std::map<Codeword, std::size_t> first_seen;

  while (std::getline(in, line)) {
    ++line_no;
    auto vals = tokens(line, line_no);
    if (vals.empty()) continue;
    if (!have_header) {
      if (vals.size() != 3) throw ParseError(line_no, "header must be 'n M q'");
      n = vals[0];
      m = vals[1];
      q = vals[2];
      if (n < 1 || m < 1 || q < 2 || q > UINT32_MAX)
        throw ParseError(line_no, "header requires n >= 1, M >= 1, q >= 2");
      have_header = true;
      continue;
    }
    if (words.size() == m) throw ParseError(line_no, "more than M = " + std::to_string(m) + " codewords");
    if (vals.size() != n)
      throw ParseError(line_no, "expected " + std::to_string(n) + " symbols, got " + std::to_string(vals.size()));
    std::vector<Letter> e;
    e.reserve(n);
    for (auto v : vals) {
      if (v >= q) throw ParseError(line_no, "symbol " + std::to_string(v) + " outside 0.." + std::to_string(q - 1));
      e.push_back(static_cast<Letter>(v));
    }
    Codeword w(std::move(e));
    if (auto [it, fresh] = first_seen.emplace(w, line_no); !fresh)
      throw ParseError(line_no, "duplicate codeword (first on line " + std::to_string(it->second) + ")");
    words.push_back(std::move(w));
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (words.size() != m)
    throw ParseError(line_no, "expected " + std::to_string(m) + " codewords, found " + std::to_string(words.size()));
  try {
    return Code(n, static_cast<std::uint32_t>(q), std::move(words));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

Code read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return read_code(in);
}

void write_code(std::ostream& out, const Code& code) {
  out << code.length() << ' ' << code.size() << ' ' << code.alphabet_size() << '\n';
  for (const auto& w : code.words()) {
    for (std::size_t i = 0; i < w.length(); ++i) out << (i ? " " : "") << w[i];
    out << '\n';
  }
}

void write_code_file(const std::filesystem::path& path, const Code& code) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_code(out, code);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace sepcode
