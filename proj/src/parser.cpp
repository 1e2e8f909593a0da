#include <algorithm>
#include <charconv>
#include <sstream>

#include "hilbert/dsl.hpp"

namespace hilbert::dsl {

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{
      "ket",     "id",        "top",        "bot",       "zero",     "adj",   "norm",  "inner",
      "proj",    "kernel",    "eigenspace", "butterfly", "sandwich", "img",   "applyv", "compose",
      "scale",   "sup",       "inf",        "ocompl",    "classical", "trunc", "dim"};
  return names;
}

bool Expr::same_as(const Expr& other) const {
  if (kind != other.kind || args.size() != other.args.size()) return false;
  switch (kind) {
    case ExprKind::Number:
    case ExprKind::Imag:
      if (number != other.number) return false;
      break;
    case ExprKind::Var:
    case ExprKind::String:
    case ExprKind::Call:
      if (name != other.name) return false;
      break;
    case ExprKind::Apply:
      if (op != other.op) return false;
      break;
    default:
      break;
  }
  for (std::size_t k = 0; k < args.size(); ++k)
    if (!args[k].same_as(other.args[k])) return false;
  return true;
}

namespace {

Expr make_node(ExprKind kind, SourcePos pos) {
  Expr e;
  e.kind = kind;
  e.pos = pos;
  return e;
}

// Binding powers, loosest first.
constexpr int kCompare = 10;
constexpr int kAdditive = 20;
constexpr int kMultiplicative = 30;
constexpr int kPrefix = 40;

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  Script script() {
    Script s;
    while (peek().is(TokenKind::Keyword, "let")) {
      s.lets.push_back(binding(true));
    }
    s.body = expression();
    expect_end();
    return s;
  }

  Expr single() {
    Expr e = expression();
    expect_end();
    return e;
  }

  ReplLine repl_line() {
    ReplLine line;
    if (peek().is(TokenKind::Keyword, "let")) {
      line.binding = binding(false);
      if (peek().is(TokenKind::Punct, ";")) next();
    } else {
      line.expr = expression();
      if (peek().is(TokenKind::Punct, ";")) next();
    }
    expect_end();
    return line;
  }

  Expr expression(int min_bp = 0) {
    Expr lhs = prefix();
    for (;;) {
      const Token& t = peek();
      if (t.kind != TokenKind::Operator) break;
      const int bp = infix_power(t.lexeme);
      if (bp <= min_bp) break;
      next();
      Expr rhs = expression(bp);
      Expr node = make_node(ExprKind::Apply, t.pos);
      node.op = infix_op(t.lexeme);
      node.args.push_back(std::move(lhs));
      node.args.push_back(std::move(rhs));
      lhs = std::move(node);
      if (bp == kCompare && peek().kind == TokenKind::Operator && infix_power(peek().lexeme) == kCompare) {
        error({"end of comparison"});
      }
    }
    return lhs;
  }

 private:
  const Token& peek() const { return toks_[std::min(pos_, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }

  [[noreturn]] void error(const std::vector<std::string>& expected) const {
    const Token& t = peek();
    std::ostringstream msg;
    msg << "expected ";
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (k > 0) msg << (k + 1 == expected.size() ? " or " : ", ");
      msg << expected[k];
    }
    msg << ", found " << (t.kind == TokenKind::End ? std::string("end of input") : "'" + t.lexeme + "'");
    fail(ErrorKind::ParseError, msg.str(), t.pos);
  }

  void expect_punct(const char* p) {
    if (!peek().is(TokenKind::Punct, p)) error({std::string("'") + p + "'"});
    next();
  }

  void expect_end() {
    if (peek().kind != TokenKind::End) error({"end of input"});
  }

  Binding binding(bool require_semicolon) {
    const Token& let = next();
    if (peek().kind != TokenKind::Ident) error({"identifier"});
    Binding b{next().lexeme, make_node(ExprKind::Number, {}), let.pos};
    expect_punct("=");
    b.expr = expression();
    if (require_semicolon) expect_punct(";");
    return b;
  }

  static int infix_power(const std::string& op) {
    if (op == "<=" || op == "==") return kCompare;
    if (op == "+" || op == "-") return kAdditive;
    if (op == "*") return kMultiplicative;
    return 0;
  }

  static Op infix_op(const std::string& op) {
    if (op == "<=") return Op::Leq;
    if (op == "==") return Op::Eq;
    if (op == "+") return Op::Add;
    if (op == "-") return Op::Sub;
    return Op::Mul;
  }

  std::vector<Expr> list_until(const char* close) {
    std::vector<Expr> items;
    if (peek().is(TokenKind::Punct, close)) {
      next();
      return items;
    }
    for (;;) {
      items.push_back(expression());
      if (peek().is(TokenKind::Punct, ",")) {
        next();
        continue;
      }
      if (peek().is(TokenKind::Punct, close)) {
        next();
        return items;
      }
      error({"','", std::string("'") + close + "'"});
    }
  }

  std::vector<Expr> nonempty_list_until(const char* close) {
    if (peek().is(TokenKind::Punct, close)) error({"expression"});
    return list_until(close);
  }

  Expr prefix() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Number: {
        next();
        Expr e = make_node(ExprKind::Number, t.pos);
        e.number = t.number;
        return e;
      }
      case TokenKind::Imag: {
        next();
        Expr e = make_node(ExprKind::Imag, t.pos);
        e.number = t.number;
        return e;
      }
      case TokenKind::String: {
        next();
        Expr e = make_node(ExprKind::String, t.pos);
        e.name = t.lexeme;
        return e;
      }
      case TokenKind::Operator:
        if (t.lexeme == "-") {
          next();
          Expr e = make_node(ExprKind::Apply, t.pos);
          e.op = Op::Neg;
          e.args.push_back(expression(kPrefix));
          return e;
        }
        break;
      case TokenKind::Punct:
        if (t.lexeme == "(") {
          next();
          Expr inner = expression();
          expect_punct(")");
          return inner;
        }
        break;
      case TokenKind::Keyword:
        if (t.lexeme == "vec") {
          next();
          expect_punct("[");
          Expr e = make_node(ExprKind::VecLit, t.pos);
          e.args = nonempty_list_until("]");
          return e;
        }
        if (t.lexeme == "op") {
          next();
          expect_punct("[");
          Expr e = make_node(ExprKind::OpLit, t.pos);
          for (;;) {
            const Token& open = peek();
            expect_punct("[");
            Expr row = make_node(ExprKind::Row, open.pos);
            row.args = nonempty_list_until("]");
            e.args.push_back(std::move(row));
            if (peek().is(TokenKind::Punct, ",")) {
              next();
              continue;
            }
            expect_punct("]");
            return e;
          }
        }
        if (t.lexeme == "span") {
          next();
          expect_punct("{");
          Expr e = make_node(ExprKind::SpanLit, t.pos);
          e.args = nonempty_list_until("}");
          return e;
        }
        break;
      case TokenKind::Ident: {
        next();
        if (peek().is(TokenKind::Punct, "(")) {
          const auto& names = builtin_names();
          if (std::find(names.begin(), names.end(), t.lexeme) == names.end()) {
            fail(ErrorKind::ParseError, "unknown function '" + t.lexeme + "'", t.pos);
          }
          next();
          Expr e = make_node(ExprKind::Call, t.pos);
          e.name = t.lexeme;
          e.args = list_until(")");
          return e;
        }
        Expr e = make_node(ExprKind::Var, t.pos);
        e.name = t.lexeme;
        return e;
      }
      case TokenKind::End:
        break;
    }
    error({"expression"});
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

std::string number_text(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

const char* op_symbol(Op op) {
  switch (op) {
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Neg: return "-";
    case Op::Leq: return "<=";
    case Op::Eq: return "==";
  }
  return "?";
}

std::string join(const std::vector<Expr>& items) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k > 0) out += ", ";
    out += print(items[k]);
  }
  return out;
}

}  // namespace

Script parse_script(const std::vector<Token>& tokens) { return Parser(tokens).script(); }

Expr parse_expression(const std::vector<Token>& tokens) { return Parser(tokens).single(); }

ReplLine parse_repl_line(const std::vector<Token>& tokens) { return Parser(tokens).repl_line(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Number: return number_text(e.number);
    case ExprKind::Imag: return number_text(e.number) + "i";
    case ExprKind::Var: return e.name;
    case ExprKind::String: return "\"" + e.name + "\"";
    case ExprKind::Call: return e.name + "(" + join(e.args) + ")";
    case ExprKind::Apply:
      if (e.op == Op::Neg) return "(-" + print(e.args[0]) + ")";
      return "(" + print(e.args[0]) + " " + op_symbol(e.op) + " " + print(e.args[1]) + ")";
    case ExprKind::VecLit: return "vec[" + join(e.args) + "]";
    case ExprKind::Row: return "[" + join(e.args) + "]";
    case ExprKind::OpLit: return "op[" + join(e.args) + "]";
    case ExprKind::SpanLit: return "span{" + join(e.args) + "}";
  }
  return "";
}

std::string print(const Script& s) {
  std::string out;
  for (const auto& b : s.lets) out += "let " + b.name + " = " + print(b.expr) + "; ";
  return out + print(s.body);
}

}  // namespace hilbert::dsl
