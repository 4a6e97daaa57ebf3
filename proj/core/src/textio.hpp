#pragma once

// Internal line/token scanner shared by the file-format parsers.

#include <string>
#include <string_view>
#include <vector>

#include "minv/errors.hpp"
#include "minv/rational.hpp"

namespace minv::detail {

struct Token {
  std::string text;
  int column;  // 1-based byte offset in the source line
};

struct Line {
  int number;  // 1-based
  std::vector<Token> tokens;
};

/// Splits into whitespace-separated tokens, dropping blank lines and
/// everything after '#'.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++lineNo;

    Line line{lineNo, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == '#') break;
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r' &&
             raw[i] != '#')
        ++i;
      line.tokens.push_back(Token{std::string(raw.substr(start, i - start)),
                                  static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));

    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return lines;
}

[[noreturn]] inline void fail(int line, int column, const std::string& msg) {
  throw ParseError(msg, line, column);
}

inline Rational parse_rational(const Token& tok, int line) {
  try {
    return Rational::parse(tok.text);
  } catch (const InputError& e) {
    fail(line, tok.column, e.what());
  }
}

}  // namespace minv::detail
