#include <cctype>
#include <charconv>
#include <string>

#include "hilbert/dsl.hpp"

namespace hilbert::dsl {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_keyword(std::string_view w) { return w == "let" || w == "vec" || w == "op" || w == "span"; }

}  // namespace

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      if (input[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };

  // End sits just past the last token, not after trailing blanks.
  SourcePos tail{1, 1};
  std::size_t seen = 0;
  while (i < input.size()) {
    if (out.size() != seen) {
      seen = out.size();
      tail = {line, col};
    }
    const char c = input[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {  // comment to end of line
      while (i < input.size() && input[i] != '\n') advance(1);
      continue;
    }
    const SourcePos pos{line, col};

    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i + 1 < input.size() &&
                                                        std::isdigit(static_cast<unsigned char>(input[i + 1])))) {
      std::size_t j = i;
      while (j < input.size() && std::isdigit(static_cast<unsigned char>(input[j]))) ++j;
      if (j < input.size() && input[j] == '.') {
        ++j;
        while (j < input.size() && std::isdigit(static_cast<unsigned char>(input[j]))) ++j;
      }
      std::string text(input.substr(i, j - i));
      double value = 0.0;
      const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
      if (res.ec != std::errc() || text.back() == '.' || text.front() == '.') {
        fail(ErrorKind::LexError, "malformed number '" + text + "'", pos);
      }
      TokenKind kind = TokenKind::Number;
      if (j < input.size() && input[j] == 'i' && !(j + 1 < input.size() && ident_char(input[j + 1]))) {
        kind = TokenKind::Imag;
        ++j;
      } else if (j < input.size() && ident_char(input[j])) {
        SourcePos bad{line, col + static_cast<int>(j - i)};
        fail(ErrorKind::LexError, "unexpected character '" + std::string(1, input[j]) + "' after number", bad);
      }
      out.push_back({kind, std::string(input.substr(i, j - i)), pos, value});
      advance(j - i);
      continue;
    }

    if (ident_start(c)) {
      std::size_t j = i;
      while (j < input.size() && ident_char(input[j])) ++j;
      std::string word(input.substr(i, j - i));
      if (word == "i") {
        out.push_back({TokenKind::Imag, word, pos, 1.0});
      } else {
        out.push_back({is_keyword(word) ? TokenKind::Keyword : TokenKind::Ident, word, pos, 0.0});
      }
      advance(j - i);
      continue;
    }

    if (c == '"') {
      std::size_t j = i + 1;
      while (j < input.size() && input[j] != '"' && input[j] != '\n') ++j;
      if (j >= input.size() || input[j] != '"') fail(ErrorKind::LexError, "unterminated string", pos);
      out.push_back({TokenKind::String, std::string(input.substr(i + 1, j - i - 1)), pos, 0.0});
      advance(j + 1 - i);
      continue;
    }

    if ((c == '<' || c == '=') && i + 1 < input.size() && input[i + 1] == '=') {
      out.push_back({TokenKind::Operator, std::string(input.substr(i, 2)), pos, 0.0});
      advance(2);
      continue;
    }
    if (c == '+' || c == '-' || c == '*') {
      out.push_back({TokenKind::Operator, std::string(1, c), pos, 0.0});
      advance(1);
      continue;
    }
    if (c == '(' || c == ')' || c == '[' || c == ']' || c == '{' || c == '}' || c == ',' || c == ';' || c == '=') {
      out.push_back({TokenKind::Punct, std::string(1, c), pos, 0.0});
      advance(1);
      continue;
    }
    fail(ErrorKind::LexError, "unexpected character '" + std::string(1, c) + "'", pos);
  }
  if (out.size() != seen) tail = {line, col};
  out.push_back({TokenKind::End, "", tail, 0.0});
  return out;
}

}  // namespace hilbert::dsl
