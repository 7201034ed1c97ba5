// Internal: whitespace/comment tokenizer shared by the .mua and .fa
// parsers. '#' starts a comment running to end of line; CRLF tolerated.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "mua/monoalg.hpp"

namespace mua::detail {

struct Token {
  std::string text;
  int line;  // 1-based
  int col;   // 1-based
};

inline std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::string cur;
  int cur_line = 0, cur_col = 0;
  bool in_comment = false;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back({cur, cur_line, cur_col});
      cur.clear();
    }
  };
  for (char ch : text) {
    if (ch == '\n') {
      flush();
      in_comment = false;
      ++line;
      col = 1;
      continue;
    }
    if (ch == '\r') {
      ++col;
      continue;
    }
    if (in_comment) {
      ++col;
      continue;
    }
    if (ch == '#') {
      flush();
      in_comment = true;
      ++col;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\f' || ch == '\v') {
      flush();
      ++col;
      continue;
    }
    if (cur.empty()) {
      cur_line = line;
      cur_col = col;
    }
    cur.push_back(ch);
    ++col;
  }
  flush();
  return out;
}

inline std::string where(const Token& t) {
  return "line " + std::to_string(t.line) + ", col " + std::to_string(t.col);
}

inline int parse_nat(const Token& t, const char* what) {
  if (t.text.empty() || t.text.size() > 9 ||
      !std::all_of(t.text.begin(), t.text.end(),
                   [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError(where(t) + ": " + what + " '" + t.text +
                     "' is not a non-negative integer");
  return std::stoi(t.text);
}

}  // namespace mua::detail
