#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "golden.hpp"
#include "hilbert/cli.hpp"

#include <json.hpp>

namespace fs = std::filesystem;
using hilbert::cli::run_cli;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "hilbert_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("eval") {
  auto r = cli({"eval", "inner(ket(0,2), ket(0,2))"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  CHECK(r.err.empty());

  r = cli({"eval", "ket("});
  CHECK(r.code == 2);
  CHECK(r.err.find("1:5") != std::string::npos);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

  CHECK(cli({"eval", "ket(0,2) * ket(0,2)"}).code == 1);
  CHECK(cli({"eval", "nope"}).code == 1);
  CHECK(cli({"eval", "--precision", "3", "norm(op[[1,1]])"}).out == "1.41\n");
  CHECK(cli({"eval", "--json", "1 <= 2"}).out == "{\"sort\":\"bool\",\"value\":true}\n");
  CHECK(cli({"eval", "--", "-(1i)"}).out == "-1i\n");
}

TEST_CASE("eval from a file") {
  const auto p = scratch("script.expr");
  std::ofstream(p) << "let x = ket(1,3);\ndim(span{x})\n";
  auto r = cli({"eval", "--file", p.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  CHECK(cli({"eval", "--file", (p.parent_path() / "missing.expr").string()}).code == 4);
  CHECK(cli({"eval"}).code == 1);
  CHECK(cli({"eval", "1", "--file", p.string()}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"check", "--trials", "0"}).code == 1);
  CHECK(cli({"check", "--only", "not_a_lemma"}).code == 1);
  auto r = cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("check") != std::string::npos);
}

TEST_CASE("repl keeps bindings and survives errors") {
  const auto r = cli({"repl"}, "let A = op[[0,1],[1,0]]\nA * ket(0,2)\nket(\nlet A = id(2)\n\n# comment\nadj(A) * A\n");
  CHECK(r.code == 0);
  CHECK(r.out == "A : operator\n[0, 1]\n[[1, 0], [0, 1]]\n");
  CHECK(r.err.find("ParseError") != std::string::npos);
  CHECK(r.err.find("Rebinding") != std::string::npos);
}

TEST_CASE("check") {
  auto r = cli({"check", "--seed", "5", "--max-dim", "4", "--trials", "5", "--only", "double_adj", "orthomodular"});
  CHECK(r.code == 0);
  CHECK(r.out.find("double_adj") != std::string::npos);
  r = cli({"check", "--seed", "5", "--max-dim", "4", "--trials", "5", "--json", "--only", "double_adj"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["checks"][0]["pass"] == 5);
}

TEST_CASE("convert") {
  const auto in = scratch("in.json"), out = scratch("out.json");
  std::ofstream(in) << R"({"sort":"operator","value":{"rows":1,"cols":2,"entries":[[1,0],[0,-1]]}})";
  auto r = cli({"convert", "--in", in.string(), "--out", out.string()});
  CHECK(r.code == 0);
  std::ifstream f(out);
  const auto j = nlohmann::json::parse(f);
  CHECK(j["sort"] == "operator");
  CHECK(j["value"]["entries"][1][1] == -1.0);

  std::ofstream(in) << "{not json";
  CHECK(cli({"convert", "--in", in.string(), "--out", out.string()}).code == 4);
  std::ofstream(in) << R"({"sort":"vector","value":{"dim":3,"coeffs":[[1,0]]}})";
  CHECK(cli({"convert", "--in", in.string(), "--out", out.string()}).code == 1);
  std::ofstream(in) << R"({"sort":"bool","value":false})";
  CHECK(cli({"convert", "--in", in.string(), "--out", "/nonexistent_dir/x.json"}).code == 4);
  CHECK(cli({"convert", "--in", (in.parent_path() / "nothing.json").string(), "--out", out.string()}).code == 4);
}

TEST_CASE("golden output comparison") {
  CHECK(golden::outputs_match("true\n", "true\n", 1e-9));
  CHECK_FALSE(golden::outputs_match("True\n", "true\n", 1e-9));
  CHECK_FALSE(golden::outputs_match("3", "3.0000000001", 0.0));
  CHECK(golden::outputs_match("[1.0000000000001, -2i]", "[1, -2i]", 1e-9));
  CHECK_FALSE(golden::outputs_match("[1, 2i]", "[1, -2i]", 1e-9));
  CHECK(golden::outputs_match("1.5-0.25i", "1.5000000000004-0.25i", 1e-9));
  CHECK_FALSE(golden::outputs_match("span{[1, 0]}", "span{[1, 0], [0, 1]}", 1e-9));
  CHECK_FALSE(golden::outputs_match("1.41", "1.42", 1e-9));
}
