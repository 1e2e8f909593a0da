#include "golden.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace golden {

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string chomp(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'')
      q += "'\\''";
    else
      q += c;
  }
  return q + "'";
}

}  // namespace

Run run_process(const std::string& cli, const std::vector<std::string>& args) {
  const fs::path err_file = fs::temp_directory_path() / ("golden_" + std::to_string(::getpid()) + ".err");
  std::string cmd = quote(cli);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>" + quote(err_file.string());
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int st = ::pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  r.err = slurp(err_file);
  fs::remove(err_file);
  return r;
}

namespace {

bool exact_kind(const std::string& s) {
  static const std::regex integer(R"(-?\d+)");
  return s == "true" || s == "false" || std::regex_match(s, integer);
}

const std::regex& number_re() {
  static const std::regex re(R"([-+]?(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?)");
  return re;
}

void split(const std::string& s, std::string& skeleton, std::vector<double>& nums) {
  skeleton.clear();
  nums.clear();
  auto it = std::sregex_iterator(s.begin(), s.end(), number_re());
  std::size_t last = 0;
  for (; it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    skeleton += s.substr(last, m.position() - last);
    // a leading sign inside "a+bi" is a separator, keep it in the skeleton
    std::string tok = m.str();
    if (!tok.empty() && (tok[0] == '+' || tok[0] == '-') && m.position() > 0 &&
        std::isdigit(static_cast<unsigned char>(s[m.position() - 1]))) {
      skeleton += tok[0] == '+' ? "+" : "-";
      tok.erase(0, 1);
      nums.push_back(std::stod(tok));
    } else {
      nums.push_back(std::stod(tok));
    }
    skeleton += "#";
    last = m.position() + m.length();
  }
  skeleton += s.substr(last);
}

}  // namespace

bool Summary::all_ok() const {
  return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const Outcome& o) { return o.ok; });
}

bool outputs_match(const std::string& got_raw, const std::string& expected_raw, double atol, std::string* why) {
  const std::string got = chomp(got_raw), expected = chomp(expected_raw);
  if (exact_kind(expected)) {
    if (got == expected) return true;
    if (why) *why = "expected '" + expected + "', got '" + got + "'";
    return false;
  }
  std::string sk_got, sk_exp;
  std::vector<double> n_got, n_exp;
  split(got, sk_got, n_got);
  split(expected, sk_exp, n_exp);
  if (sk_got != sk_exp || n_got.size() != n_exp.size()) {
    if (why) *why = "shape differs: expected '" + expected + "', got '" + got + "'";
    return false;
  }
  for (std::size_t k = 0; k < n_got.size(); ++k) {
    if (!(std::abs(n_got[k] - n_exp[k]) <= atol)) {
      if (why) *why = "number " + std::to_string(k) + " off: expected '" + expected + "', got '" + got + "'";
      return false;
    }
  }
  return true;
}

Summary run(const std::string& cli, const std::string& dir) {
  Summary s;
  std::vector<fs::path> exprs, bad;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".expr") exprs.push_back(e.path());
  if (fs::is_directory(fs::path(dir) / "malformed"))
    for (const auto& e : fs::directory_iterator(fs::path(dir) / "malformed"))
      if (e.path().extension() == ".expr") bad.push_back(e.path());
  std::sort(exprs.begin(), exprs.end());
  std::sort(bad.begin(), bad.end());

  for (const auto& p : exprs) {
    Outcome o{p.stem().string()};
    fs::path expected = p;
    expected.replace_extension(".out");
    const Run r = run_process(cli, {"eval", "--precision", "15", "--file", p.string()});
    if (r.status != 0) {
      o.detail = "exit " + std::to_string(r.status) + ": " + chomp(r.err);
    } else if (!fs::exists(expected)) {
      o.detail = "missing " + expected.filename().string();
    } else {
      o.ok = outputs_match(r.out, slurp(expected), 1e-9, &o.detail);
    }
    ++s.wellformed;
    s.cases.push_back(std::move(o));
  }

  static const std::regex header(R"(# error at (\d+:\d+))");
  for (const auto& p : bad) {
    Outcome o{"malformed/" + p.stem().string()};
    const std::string src = slurp(p);
    std::smatch m;
    const std::string first = src.substr(0, src.find('\n'));
    if (!std::regex_match(first, m, header)) {
      o.detail = "no '# error at L:C' header";
    } else {
      const std::string pos = m[1];
      const Run r = run_process(cli, {"eval", "--file", p.string()});
      const std::string diag = chomp(r.err);
      if (r.status != 2)
        o.detail = "exit " + std::to_string(r.status) + ", wanted 2";
      else if (diag.find('\n') != std::string::npos)
        o.detail = "diagnostic is not one line";
      else if (diag.find(" at " + pos + ":") == std::string::npos)
        o.detail = "diagnostic '" + diag + "' does not name " + pos;
      else
        o.ok = true;
    }
    ++s.malformed;
    s.cases.push_back(std::move(o));
  }
  return s;
}

}  // namespace golden
