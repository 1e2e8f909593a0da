#include "hilbert/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hilbert/dsl.hpp"
#include "hilbert/error.hpp"
#include "hilbert/json_io.hpp"
#include "hilbert/lemma_suite.hpp"

namespace hilbert::cli {

namespace {

int code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::LexError:
    case ErrorKind::ParseError:
      return kSyntaxError;
    default:
      return kEvalError;
  }
}

int report(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  return code_for(e);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;
  std::ostringstream ss;
  ss << f.rdbuf();
  if (f.bad()) return std::nullopt;
  return ss.str();
}

struct EvalOpts {
  std::string expr;
  std::string file;
  int precision = 9;
  bool json = false;
};

int cmd_eval(const EvalOpts& o, std::ostream& out, std::ostream& err) {
  std::string source = o.expr;
  if (!o.file.empty()) {
    auto text = read_file(o.file);
    if (!text) {
      err << "error: cannot read '" << o.file << "'\n";
      return kIoError;
    }
    source = std::move(*text);
  }
  try {
    const Value v = dsl::eval_source(source);
    if (o.json)
      out << json_io::value_to_json(v).dump() << "\n";
    else
      out << dsl::format_value(v, o.precision) << "\n";
    return kOk;
  } catch (const Error& e) {
    return report(e, err);
  }
}

int cmd_repl(int precision, std::istream& in, std::ostream& out, std::ostream& err, bool interactive) {
  dsl::Env env;
  std::string line;
  for (;;) {
    if (interactive) out << "> " << std::flush;
    if (!std::getline(in, line)) break;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      const auto parsed = dsl::parse_repl_line(dsl::tokenize(line));
      if (parsed.binding) {
        Value v = dsl::eval(parsed.binding->expr, env);
        env.bind(parsed.binding->name, std::move(v), parsed.binding->pos);
        out << parsed.binding->name << " : " << sort_name(sort_of(env.entries().back().second)) << "\n";
      } else {
        out << dsl::format_value(dsl::eval(*parsed.expr, env), precision) << "\n";
      }
    } catch (const Error& e) {
      report(e, err);
    }
  }
  if (interactive) out << "\n";
  return kOk;
}

struct CheckOpts {
  std::uint64_t seed = 42;
  std::size_t max_dim = 6;
  std::size_t trials = 200;
  std::vector<std::string> only;
  bool json = false;
  bool serial = false;
};

int cmd_check(const CheckOpts& o, std::ostream& out, std::ostream& err) {
  try {
    std::optional<std::vector<std::string>> filter;
    if (!o.only.empty()) filter = o.only;
    const auto rep = lemma_suite::run_checks(o.seed, o.max_dim, o.trials, filter, {},
                                             o.serial ? lemma_suite::Execution::Serial
                                                      : lemma_suite::Execution::Parallel);
    if (o.json)
      out << lemma_suite::report_to_json(rep).dump(2) << "\n";
    else
      out << lemma_suite::report_to_text(rep);
    if (!rep.all_passed()) {
      const auto failed = std::count_if(rep.checks.begin(), rep.checks.end(),
                                        [](const auto& c) { return c.fail > 0; });
      err << "error: " << failed << " check(s) failed\n";
      return kCheckFailed;
    }
    return kOk;
  } catch (const Error& e) {
    return report(e, err);
  }
}

struct ReplayOpts {
  std::string name;
  std::uint64_t trial_seed = 0;
  std::size_t max_dim = 6;
};

int cmd_replay(const ReplayOpts& o, std::ostream& out, std::ostream& err) {
  try {
    const auto r = lemma_suite::replay(o.name, o.trial_seed, o.max_dim);
    out << o.name << (r.pass ? " pass" : " FAIL") << " residual=" << r.residual << "\n";
    return r.pass ? kOk : kCheckFailed;
  } catch (const Error& e) {
    return report(e, err);
  }
}

int cmd_convert(const std::string& in_path, const std::string& out_path, std::ostream& err) {
  auto text = read_file(in_path);
  if (!text) {
    err << "error: cannot read '" << in_path << "'\n";
    return kIoError;
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(*text);
  } catch (const nlohmann::json::parse_error& e) {
    err << "error: '" << in_path << "' is not valid JSON: " << e.what() << "\n";
    return kIoError;
  }
  std::string dumped;
  try {
    dumped = json_io::value_to_json(json_io::value_from_json(j)).dump(2);
  } catch (const Error& e) {
    return report(e, err);
  }
  std::ofstream f(out_path, std::ios::binary);
  f << dumped << "\n";
  f.flush();
  if (!f) {
    err << "error: cannot write '" << out_path << "'\n";
    return kIoError;
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
            bool interactive) {
  CLI::App app{"Finite-dimensional Hilbert space calculator"};
  app.name("hilbert_cli");
  app.require_subcommand(1);

  EvalOpts eval_opts;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression and print the result");
  eval->add_option("expr", eval_opts.expr, "Expression (script) text");
  eval->add_option("--file", eval_opts.file, "Read the script from a file");
  eval->add_option("--precision", eval_opts.precision, "Significant digits")->check(CLI::Range(1, 17));
  eval->add_flag("--json", eval_opts.json, "Print the value as JSON");

  int repl_precision = 9;
  auto* repl = app.add_subcommand("repl", "Line-oriented interactive session");
  repl->add_option("--precision", repl_precision, "Significant digits")->check(CLI::Range(1, 17));

  CheckOpts check_opts;
  auto* check = app.add_subcommand("check", "Run the randomized conformance suite");
  check->add_option("--seed", check_opts.seed, "Master seed");
  check->add_option("--max-dim", check_opts.max_dim, "Largest dimension drawn")->check(CLI::PositiveNumber);
  check->add_option("--trials", check_opts.trials, "Trials per check")->check(CLI::PositiveNumber);
  check->add_option("--only", check_opts.only, "Run only these checks");
  check->add_flag("--json", check_opts.json, "JSON report");
  check->add_flag("--serial", check_opts.serial, "Run trials on one thread");

  ReplayOpts replay_opts;
  auto* replay = app.add_subcommand("replay", "Re-run one failing trial from its seed");
  replay->add_option("name", replay_opts.name, "Check name")->required();
  replay->add_option("trial-seed", replay_opts.trial_seed, "first_fail_seed from a report")->required();
  replay->add_option("--max-dim", replay_opts.max_dim, "Largest dimension drawn")->check(CLI::PositiveNumber);

  std::string in_path, out_path;
  auto* convert = app.add_subcommand("convert", "Validate and pretty-print a JSON value");
  convert->add_option("--in", in_path, "Input file")->required();
  convert->add_option("--out", out_path, "Output file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kEvalError;
  }

  if (eval->parsed()) {
    if (eval_opts.expr.empty() == eval_opts.file.empty()) {
      err << "error: eval needs exactly one of an expression or --file\n";
      return kEvalError;
    }
    return cmd_eval(eval_opts, out, err);
  }
  if (repl->parsed()) return cmd_repl(repl_precision, in, out, err, interactive);
  if (check->parsed()) return cmd_check(check_opts, out, err);
  if (replay->parsed()) return cmd_replay(replay_opts, out, err);
  return cmd_convert(in_path, out_path, err);
}

}  // namespace hilbert::cli
