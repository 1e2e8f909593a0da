#include <algorithm>
#include <cmath>
#include <sstream>

#include "hilbert/dsl.hpp"
#include "hilbert/hop.hpp"
#include "hilbert/hsub.hpp"
#include "hilbert/hvec.hpp"

namespace hilbert::dsl {

void Env::bind(const std::string& name, Value value, SourcePos pos) {
  if (lookup(name) != nullptr) fail(ErrorKind::Rebinding, "'" + name + "' is already bound", pos);
  entries_.emplace_back(name, std::move(value));
}

const Value* Env::lookup(const std::string& name) const {
  for (const auto& [n, v] : entries_)
    if (n == name) return &v;
  return nullptr;
}

namespace {

const char* sort_label(const Value& v) { return sort_name(sort_of(v)); }

[[noreturn]] void type_error(const std::string& what, SourcePos pos) { fail(ErrorKind::TypeError, what, pos); }

[[noreturn]] void binary_type_error(const char* op, const Value& a, const Value& b, SourcePos pos) {
  type_error(std::string("'") + op + "' is not defined for " + sort_label(a) + " and " + sort_label(b), pos);
}

class Evaluator {
 public:
  Evaluator(const Env& env, const Tolerance& tol) : env_(env), tol_(tol) {}

  Value eval(const Expr& e) {
    try {
      return eval_node(e);
    } catch (const Error& err) {
      if (err.pos().valid()) throw;
      throw Error(err.kind(), err.message(), e.pos);
    }
  }

 private:
  Value eval_node(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Number: return CScalar(e.number, 0.0);
      case ExprKind::Imag: return CScalar(0.0, e.number);
      case ExprKind::Var: {
        const Value* v = env_.lookup(e.name);
        if (v == nullptr) fail(ErrorKind::UnboundIdentifier, "'" + e.name + "' is not bound", e.pos);
        return *v;
      }
      case ExprKind::String: type_error("a string is only valid as the map argument of classical", e.pos);
      case ExprKind::Apply: return apply_op(e);
      case ExprKind::VecLit: {
        std::vector<CScalar> c;
        for (const auto& a : e.args) c.push_back(scalar(a));
        return HVec(std::move(c));
      }
      case ExprKind::OpLit: {
        std::vector<std::vector<CScalar>> rows;
        for (const auto& row : e.args) {
          std::vector<CScalar> r;
          for (const auto& a : row.args) r.push_back(scalar(a));
          if (!rows.empty() && r.size() != rows.front().size()) {
            fail(ErrorKind::DimMismatch, "operator literal rows differ in length", row.pos);
          }
          rows.push_back(std::move(r));
        }
        return from_matrix(rows);
      }
      case ExprKind::Row: type_error("a bare row is not a value", e.pos);
      case ExprKind::SpanLit: {
        std::vector<HVec> vs;
        for (const auto& a : e.args) vs.push_back(vector(a));
        for (std::size_t k = 1; k < vs.size(); ++k) {
          if (vs[k].dim() != vs[0].dim()) fail(ErrorKind::DimMismatch, "span of vectors of different dimensions", e.args[k].pos);
        }
        return span(vs, vs.front().dim(), tol_);
      }
      case ExprKind::Call: return call(e);
    }
    type_error("unsupported expression", e.pos);
  }

  // --- typed argument helpers -------------------------------------------

  template <class T>
  T expect(const Expr& e, const char* what) {
    Value v = eval(e);
    if (auto* p = std::get_if<T>(&v)) return std::move(*p);
    type_error(std::string("expected ") + what + ", found " + sort_label(v), e.pos);
  }

  CScalar scalar(const Expr& e) { return expect<CScalar>(e, "scalar"); }
  HVec vector(const Expr& e) { return expect<HVec>(e, "vector"); }
  HOp op(const Expr& e) { return expect<HOp>(e, "operator"); }
  Subspace space(const Expr& e) { return expect<Subspace>(e, "subspace"); }

  std::size_t index(const Expr& e) {
    const CScalar z = scalar(e);
    if (z.imag() != 0.0 || z.real() < 0.0 || z.real() != std::floor(z.real()) || z.real() > 1e9) {
      type_error("expected a non-negative integer", e.pos);
    }
    return static_cast<std::size_t>(z.real());
  }

  std::size_t positive(const Expr& e) {
    const std::size_t n = index(e);
    if (n == 0) fail(ErrorKind::InvalidValue, "dimension must be positive", e.pos);
    return n;
  }

  // --- operators ------------------------------------------------------------

  Value apply_op(const Expr& e) {
    if (e.op == Op::Neg) {
      Value v = eval(e.args[0]);
      if (auto* z = std::get_if<CScalar>(&v)) return -*z;
      if (auto* x = std::get_if<HVec>(&v)) return vneg(*x);
      if (auto* a = std::get_if<HOp>(&v)) return oneg(*a);
      if (auto* s = std::get_if<Subspace>(&v)) return ocomplement(*s, tol_);
      type_error(std::string("unary '-' is not defined for ") + sort_label(v), e.pos);
    }
    Value lhs = eval(e.args[0]);
    Value rhs = eval(e.args[1]);
    switch (e.op) {
      case Op::Add: return add_values(lhs, rhs, e.pos);
      case Op::Sub: return sub_values(lhs, rhs, e.pos);
      case Op::Mul: return mul_values(lhs, rhs, e.pos);
      case Op::Leq: return leq_values(lhs, rhs, e.pos);
      case Op::Eq: return eq_values(lhs, rhs, e.pos);
      case Op::Neg: break;
    }
    type_error("unsupported operator", e.pos);
  }

  Value add_values(const Value& a, const Value& b, SourcePos pos) {
    if (sort_of(a) != sort_of(b)) binary_type_error("+", a, b, pos);
    switch (sort_of(a)) {
      case Sort::Scalar: return std::get<CScalar>(a) + std::get<CScalar>(b);
      case Sort::Vector: return vadd(std::get<HVec>(a), std::get<HVec>(b));
      case Sort::Operator: return add(std::get<HOp>(a), std::get<HOp>(b));
      case Sort::Space: return ssup(std::get<Subspace>(a), std::get<Subspace>(b), tol_);
      case Sort::Bool: break;
    }
    binary_type_error("+", a, b, pos);
  }

  Value sub_values(const Value& a, const Value& b, SourcePos pos) {
    if (sort_of(a) != sort_of(b)) binary_type_error("-", a, b, pos);
    switch (sort_of(a)) {
      case Sort::Scalar: return std::get<CScalar>(a) - std::get<CScalar>(b);
      case Sort::Vector: return vsub(std::get<HVec>(a), std::get<HVec>(b));
      case Sort::Operator: return sub(std::get<HOp>(a), std::get<HOp>(b));
      default: break;
    }
    binary_type_error("-", a, b, pos);
  }

  Value mul_values(const Value& a, const Value& b, SourcePos pos) {
    if (auto* c = std::get_if<CScalar>(&a)) {
      if (auto* d = std::get_if<CScalar>(&b)) return *c * *d;
      if (auto* x = std::get_if<HVec>(&b)) return vscale(*c, *x);
      if (auto* m = std::get_if<HOp>(&b)) return oscale(*c, *m);
    }
    if (auto* m = std::get_if<HOp>(&a)) {
      if (auto* n = std::get_if<HOp>(&b)) return compose(*m, *n);
      if (auto* x = std::get_if<HVec>(&b)) return apply(*m, *x);
      if (auto* s = std::get_if<Subspace>(&b)) return image(*m, *s, tol_);
      if (auto* c = std::get_if<CScalar>(&b)) return oscale(*c, *m);
    }
    if (auto* x = std::get_if<HVec>(&a)) {
      if (auto* c = std::get_if<CScalar>(&b)) return vscale(*c, *x);
    }
    binary_type_error("*", a, b, pos);
  }

  Value leq_values(const Value& a, const Value& b, SourcePos pos) {
    if (sort_of(a) != sort_of(b)) binary_type_error("<=", a, b, pos);
    switch (sort_of(a)) {
      case Sort::Scalar: return complex_leq(std::get<CScalar>(a), std::get<CScalar>(b), tol_);
      case Sort::Operator: return loewner_leq(std::get<HOp>(a), std::get<HOp>(b), tol_);
      case Sort::Space: return leq(std::get<Subspace>(a), std::get<Subspace>(b), tol_);
      default: break;
    }
    binary_type_error("<=", a, b, pos);
  }

  Value eq_values(const Value& a, const Value& b, SourcePos pos) {
    if (sort_of(a) != sort_of(b)) binary_type_error("==", a, b, pos);
    switch (sort_of(a)) {
      case Sort::Scalar: return approx_eq(std::get<CScalar>(a), std::get<CScalar>(b), tol_);
      case Sort::Vector: return approx_eq(std::get<HVec>(a), std::get<HVec>(b), tol_);
      case Sort::Operator: return approx_eq(std::get<HOp>(a), std::get<HOp>(b), tol_);
      case Sort::Space: return seq(std::get<Subspace>(a), std::get<Subspace>(b), tol_);
      case Sort::Bool: return std::get<bool>(a) == std::get<bool>(b);
    }
    binary_type_error("==", a, b, pos);
  }

  // --- builtins -------------------------------------------------------------

  void arity(const Expr& e, std::size_t n) {
    if (e.args.size() != n) {
      type_error(e.name + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s") + ", got " +
                     std::to_string(e.args.size()),
                 e.pos);
    }
  }

  PartialMap partial_map(const Expr& e, std::size_t dom, std::size_t cod) {
    if (e.kind != ExprKind::String) type_error("classical expects a map string such as \"0->1,1->_\"", e.pos);
    PartialMap pi{dom, cod, std::vector<std::optional<std::size_t>>(dom)};
    std::vector<bool> seen(dom, false);
    std::stringstream entries(e.name);
    std::string item;
    while (std::getline(entries, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
      if (item.empty()) continue;
      const auto arrow = item.find("->");
      if (arrow == std::string::npos) fail(ErrorKind::InvalidValue, "map entry '" + item + "' lacks '->'", e.pos);
      const std::string from = item.substr(0, arrow);
      const std::string to = item.substr(arrow + 2);
      auto parse_index = [&](const std::string& s) -> std::size_t {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
          fail(ErrorKind::InvalidValue, "map entry '" + item + "' is malformed", e.pos);
        }
        return std::stoul(s);
      };
      const std::size_t x = parse_index(from);
      if (x >= dom) fail(ErrorKind::IndexOutOfRange, "map source " + from + " outside domain", e.pos);
      if (seen[x]) fail(ErrorKind::InvalidValue, "map source " + from + " listed twice", e.pos);
      seen[x] = true;
      if (to != "_") pi.images[x] = parse_index(to);
    }
    pi.validate();
    return pi;
  }

  Value call(const Expr& e) {
    const std::string& f = e.name;
    const auto& a = e.args;
    if (f == "ket") {
      arity(e, 2);
      return ket(index(a[0]), positive(a[1]));
    }
    if (f == "id") {
      arity(e, 1);
      return identity(positive(a[0]));
    }
    if (f == "top") {
      arity(e, 1);
      return top(positive(a[0]));
    }
    if (f == "bot") {
      arity(e, 1);
      return bot(positive(a[0]));
    }
    if (f == "zero") {
      arity(e, 2);
      return zero(positive(a[0]), positive(a[1]));
    }
    if (f == "adj") {
      arity(e, 1);
      return adjoint(op(a[0]));
    }
    if (f == "norm") {
      arity(e, 1);
      Value v = eval(a[0]);
      if (auto* x = std::get_if<HVec>(&v)) return CScalar(vnorm(*x));
      if (auto* m = std::get_if<HOp>(&v)) return CScalar(op_norm(*m, tol_));
      if (auto* z = std::get_if<CScalar>(&v)) return CScalar(std::abs(*z));
      type_error(std::string("norm is not defined for ") + sort_label(v), a[0].pos);
    }
    if (f == "inner") {
      arity(e, 2);
      return inner(vector(a[0]), vector(a[1]));
    }
    if (f == "proj") {
      arity(e, 1);
      return proj(space(a[0]));
    }
    if (f == "kernel") {
      arity(e, 1);
      return kernel(op(a[0]), tol_);
    }
    if (f == "eigenspace") {
      arity(e, 2);
      return eigenspace(scalar(a[0]), op(a[1]), tol_);
    }
    if (f == "butterfly") {
      arity(e, 2);
      return butterfly(vector(a[0]), vector(a[1]));
    }
    if (f == "sandwich") {
      arity(e, 2);
      return sandwich(op(a[0]), op(a[1]));
    }
    if (f == "img") {
      arity(e, 2);
      return image(op(a[0]), space(a[1]), tol_);
    }
    if (f == "applyv") {
      arity(e, 2);
      return apply(op(a[0]), vector(a[1]));
    }
    if (f == "compose") {
      arity(e, 2);
      return compose(op(a[0]), op(a[1]));
    }
    if (f == "scale") {
      arity(e, 2);
      const CScalar c = scalar(a[0]);
      Value v = eval(a[1]);
      if (auto* x = std::get_if<HVec>(&v)) return vscale(c, *x);
      if (auto* m = std::get_if<HOp>(&v)) return oscale(c, *m);
      type_error(std::string("scale expects a vector or operator, found ") + sort_label(v), a[1].pos);
    }
    if (f == "sup") {
      arity(e, 2);
      return ssup(space(a[0]), space(a[1]), tol_);
    }
    if (f == "inf") {
      arity(e, 2);
      return sinf(space(a[0]), space(a[1]), tol_);
    }
    if (f == "ocompl") {
      arity(e, 1);
      return ocomplement(space(a[0]), tol_);
    }
    if (f == "classical") {
      arity(e, 3);
      const std::size_t dom = positive(a[0]);
      const std::size_t cod = positive(a[1]);
      return classical_operator(partial_map(a[2], dom, cod));
    }
    if (f == "trunc") {
      if (a.empty()) arity(e, 1);
      const HVec x = vector(a[0]);
      std::vector<std::size_t> keep;
      for (std::size_t k = 1; k < a.size(); ++k) keep.push_back(index(a[k]));
      return trunc(keep, x);
    }
    if (f == "dim") {
      arity(e, 1);
      Value v = eval(a[0]);
      if (auto* x = std::get_if<HVec>(&v)) return CScalar(static_cast<double>(x->dim()));
      if (auto* s = std::get_if<Subspace>(&v)) return CScalar(static_cast<double>(sdim(*s)));
      type_error(std::string("dim is not defined for ") + sort_label(v), a[0].pos);
    }
    fail(ErrorKind::UnboundIdentifier, "unknown function '" + f + "'", e.pos);
  }

  const Env& env_;
  const Tolerance& tol_;
};

}  // namespace

Value eval(const Expr& e, const Env& env, const Tolerance& tol) { return Evaluator(env, tol).eval(e); }

Value eval_script(const Script& s, Env& env, const Tolerance& tol) {
  for (const auto& b : s.lets) {
    if (env.lookup(b.name) != nullptr) fail(ErrorKind::Rebinding, "'" + b.name + "' is already bound", b.pos);
    Value v = eval(b.expr, env, tol);
    env.bind(b.name, std::move(v), b.pos);
  }
  return eval(s.body, env, tol);
}

Value eval_source(std::string_view source, const Tolerance& tol) {
  Env env;
  return eval_script(parse_script(tokenize(source)), env, tol);
}

}  // namespace hilbert::dsl
