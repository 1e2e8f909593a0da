#include "hilbert/json_io.hpp"

#include <string>

#include "hilbert/error.hpp"

namespace hilbert {

Sort sort_of(const Value& v) { return static_cast<Sort>(v.index()); }

const char* sort_name(Sort s) {
  switch (s) {
    case Sort::Scalar: return "scalar";
    case Sort::Vector: return "vector";
    case Sort::Operator: return "operator";
    case Sort::Space: return "subspace";
    case Sort::Bool: return "bool";
  }
  return "?";
}

}  // namespace hilbert

namespace hilbert::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::InvalidValue, "malformed JSON " + what); }

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) bad(std::string(what) + ": missing \"" + key + "\"");
  return j.at(key);
}

std::size_t positive_size(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) bad(std::string(what) + ": expected a positive integer");
  return j.get<std::size_t>();
}

std::vector<CScalar> scalars(const json& j, std::size_t expected, const char* what) {
  if (!j.is_array() || j.size() != expected) {
    bad(std::string(what) + ": expected " + std::to_string(expected) + " coefficients");
  }
  std::vector<CScalar> out;
  out.reserve(expected);
  for (const auto& z : j) out.push_back(scalar_from_json(z));
  return out;
}

}  // namespace

json to_json(CScalar z) { return json::array({z.real(), z.imag()}); }

json to_json(const HVec& x) {
  json coeffs = json::array();
  for (const auto& z : x.coeffs()) coeffs.push_back(to_json(z));
  return {{"dim", x.dim()}, {"coeffs", coeffs}};
}

json to_json(const HOp& a) {
  json entries = json::array();
  for (const auto& z : a.entries()) entries.push_back(to_json(z));
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", entries}};
}

json to_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& u : s.basis()) basis.push_back(to_json(u));
  return {{"ambient", s.ambient()}, {"basis", basis}};
}

json to_json(const PartialMap& pi) {
  json map = json::array();
  for (const auto& img : pi.images) map.push_back(img ? json(*img) : json(nullptr));
  return {{"dom", pi.domain_size}, {"cod", pi.codomain_size}, {"map", map}};
}

json value_to_json(const Value& v) {
  json payload = std::visit([](const auto& x) -> json {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, bool>) {
      return json(x);
    } else {
      return to_json(x);
    }
  }, v);
  return {{"sort", sort_name(sort_of(v))}, {"value", payload}};
}

CScalar scalar_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) bad("scalar: expected [re, im]");
  const CScalar z{j[0].get<double>(), j[1].get<double>()};
  if (!is_finite(z)) bad("scalar: not finite");
  return z;
}

HVec vector_from_json(const json& j) {
  const std::size_t n = positive_size(field(j, "dim", "vector"), "vector dim");
  return HVec(scalars(field(j, "coeffs", "vector"), n, "vector"));
}

HOp operator_from_json(const json& j) {
  const std::size_t m = positive_size(field(j, "rows", "operator"), "operator rows");
  const std::size_t n = positive_size(field(j, "cols", "operator"), "operator cols");
  return HOp(m, n, scalars(field(j, "entries", "operator"), m * n, "operator"));
}

Subspace subspace_from_json(const json& j, const Tolerance& tol) {
  const std::size_t n = positive_size(field(j, "ambient", "subspace"), "subspace ambient");
  const json& basis = field(j, "basis", "subspace");
  if (!basis.is_array()) bad("subspace: basis must be an array");
  std::vector<HVec> onb;
  for (const auto& v : basis) onb.push_back(vector_from_json(v));
  return Subspace(n, std::move(onb), tol);
}

PartialMap partial_map_from_json(const json& j) {
  PartialMap pi;
  pi.domain_size = positive_size(field(j, "dom", "partial map"), "partial map dom");
  pi.codomain_size = positive_size(field(j, "cod", "partial map"), "partial map cod");
  const json& map = field(j, "map", "partial map");
  if (!map.is_array()) bad("partial map: map must be an array");
  for (const auto& e : map) {
    if (e.is_null()) {
      pi.images.emplace_back();
    } else if (e.is_number_integer() && e.get<long long>() >= 0) {
      pi.images.emplace_back(e.get<std::size_t>());
    } else {
      bad("partial map: entries must be null or a non-negative index");
    }
  }
  pi.validate();
  return pi;
}

Value value_from_json(const json& j, const Tolerance& tol) {
  const json& sort = field(j, "sort", "value");
  const json& payload = field(j, "value", "value");
  if (!sort.is_string()) bad("value: sort must be a string");
  const auto s = sort.get<std::string>();
  if (s == "scalar") return scalar_from_json(payload);
  if (s == "vector") return vector_from_json(payload);
  if (s == "operator") return operator_from_json(payload);
  if (s == "subspace") return subspace_from_json(payload, tol);
  if (s == "bool") {
    if (!payload.is_boolean()) bad("value: bool payload must be true or false");
    return payload.get<bool>();
  }
  bad("value: unknown sort \"" + s + "\"");
}

}  // namespace hilbert::json_io
