#include <cmath>
#include <cstdio>
#include <string>

#include "hilbert/dsl.hpp"
#include "hilbert/hsub.hpp"

namespace hilbert::dsl {

namespace {

std::string real_text(double v, int precision) {
  if (v == 0.0) v = 0.0;  // drops the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::string join_vector(std::span<const CScalar> xs, int precision) {
  std::string out = "[";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k > 0) out += ", ";
    out += format_scalar(xs[k], precision);
  }
  return out + "]";
}

// Basis read off the projector: Gram-Schmidt over P e_0, P e_1, ... depends
// only on the space, not on how it was built.
std::vector<HVec> canonical_basis(const Subspace& s) {
  if (sdim(s) == 0) return {};
  const HOp p = proj(s);
  std::vector<HVec> cols;
  cols.reserve(p.cols());
  for (std::size_t c = 0; c < p.cols(); ++c) cols.push_back(p.column(c));
  return gram_schmidt0(cols);
}

}  // namespace

std::string format_scalar(CScalar z, int precision) {
  if (precision < 1) precision = 1;
  const double scale = std::max(1.0, std::abs(z));
  const double snap = 0.5 * std::pow(10.0, -precision) * scale;
  double re = z.real(), im = z.imag();
  if (std::abs(re) < snap) re = 0.0;
  if (std::abs(im) < snap) im = 0.0;
  if (im == 0.0) return real_text(re, precision);
  std::string imag = real_text(std::abs(im), precision) + "i";
  if (re == 0.0) return (im < 0 ? "-" : "") + imag;
  return real_text(re, precision) + (im < 0 ? "-" : "+") + imag;
}

std::string format_value(const Value& v, int precision) {
  switch (sort_of(v)) {
    case Sort::Scalar:
      return format_scalar(std::get<CScalar>(v), precision);
    case Sort::Bool:
      return std::get<bool>(v) ? "true" : "false";
    case Sort::Vector:
      return join_vector(std::get<HVec>(v).coeffs(), precision);
    case Sort::Operator: {
      const HOp& a = std::get<HOp>(v);
      std::string out = "[";
      for (std::size_t r = 0; r < a.rows(); ++r) {
        if (r > 0) out += ", ";
        out += join_vector(a.entries().subspan(r * a.cols(), a.cols()), precision);
      }
      return out + "]";
    }
    case Sort::Space: {
      std::string out = "span{";
      const auto basis = canonical_basis(std::get<Subspace>(v));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k > 0) out += ", ";
        out += join_vector(basis[k].coeffs(), precision);
      }
      return out + "}";
    }
  }
  return "";
}

}  // namespace hilbert::dsl
