#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hilbert/error.hpp"
#include "hilbert/numeric.hpp"
#include "hilbert/value.hpp"

namespace hilbert::dsl {

// --- tokens ----------------------------------------------------------------

enum class TokenKind { Ident, Number, Imag, String, Punct, Operator, Keyword, End };

struct Token {
  TokenKind kind;
  std::string lexeme;
  SourcePos pos;
  double number = 0.0;  // Number and Imag: the coefficient

  bool is(TokenKind k, std::string_view text) const { return kind == k && lexeme == text; }
};

// Numbers are decimals with an optional fraction; a number immediately
// followed by `i` is an imaginary literal and a bare `i` is the imaginary
// unit. Throws LexError at the offending character.
std::vector<Token> tokenize(std::string_view input);

// --- syntax tree -----------------------------------------------------------

enum class ExprKind { Number, Imag, Var, String, Call, Apply, VecLit, OpLit, Row, SpanLit };
enum class Op { Add, Sub, Mul, Neg, Leq, Eq };

struct Expr {
  ExprKind kind = ExprKind::Number;
  SourcePos pos;
  double number = 0.0;  // Number, Imag
  std::string name;     // Var, Call, String
  Op op = Op::Add;      // Apply
  std::vector<Expr> args;

  // Structural equality; positions are ignored.
  bool same_as(const Expr& other) const;
};

struct Binding {
  std::string name;
  Expr expr;
  SourcePos pos;
};

struct Script {
  std::vector<Binding> lets;
  Expr body;
};

// script := { "let" IDENT "=" expr ";" } expr
// Throws ParseError listing what was expected at the failing token.
Script parse_script(const std::vector<Token>& tokens);
Expr parse_expression(const std::vector<Token>& tokens);

// Parses a single REPL line: either `let x = expr [;]` or an expression.
struct ReplLine {
  std::optional<Binding> binding;
  std::optional<Expr> expr;
};
ReplLine parse_repl_line(const std::vector<Token>& tokens);

const std::vector<std::string>& builtin_names();

// Fully parenthesized source text; parse(tokenize(print(e))) reproduces e.
std::string print(const Expr& e);
std::string print(const Script& s);

// --- evaluation ------------------------------------------------------------

// Insertion-ordered bindings; rebinding a name is an error.
class Env {
 public:
  void bind(const std::string& name, Value value, SourcePos pos = {});
  const Value* lookup(const std::string& name) const;
  const std::vector<std::pair<std::string, Value>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, Value>> entries_;
};

Value eval(const Expr& e, const Env& env, const Tolerance& tol = {});
// Binds the script's lets into `env` in order, then evaluates the body.
Value eval_script(const Script& s, Env& env, const Tolerance& tol = {});
// tokenize + parse_script + eval_script in a fresh environment.
Value eval_source(std::string_view source, const Tolerance& tol = {});

// --- output ----------------------------------------------------------------

// Scalars print as a+bi with `precision` significant digits; components below
// half a unit in the last printed place (relative to max(1, |z|)) print as 0
// and negative zero prints as 0.
std::string format_scalar(CScalar z, int precision);
std::string format_value(const Value& v, int precision = 9);

}  // namespace hilbert::dsl
