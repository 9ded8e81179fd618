// Copyright 2026 The urmatch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "urmatch/cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <random>

#include <CLI11.hpp>

#include "urmatch/cli/graph_file.hpp"
#include "urmatch/cli/report.hpp"
#include "urmatch/crosscheck.hpp"
#include "urmatch/decomposition.hpp"
#include "urmatch/oracle.hpp"
#include "urmatch/recognition.hpp"
#include "urmatch/ur_core.hpp"

namespace urmatch::cli {
namespace {

struct CheckArgs {
  std::vector<std::string> files;
  std::string property = "both";
  bool json = false;
  bool witness = false;
  bool all_failures = false;
  bool verify = false;
  bool no_timing = false;
};

struct IsUrArgs {
  std::string file;
  std::string matching;
};

struct DecomposeArgs {
  std::string file;
  bool json = false;
};

struct OracleArgs {
  std::string file;
  std::string property;
  bool force = false;
};

struct SelftestArgs {
  std::size_t nmax = 5;
  std::size_t random = 200;
  std::uint64_t seed = 1;
};

void print_text(const RecognitionReport& report, bool with_property, bool witness,
                bool all_failures, const std::string& prefix, std::ostream& out) {
  out << prefix;
  if (with_property) out << to_string(report.property) << ' ';
  out << (report.answer ? "true" : "false");
  if (report.failure) out << ' ' << to_string(*report.failure);
  out << '\n';
  if (witness && report.property == Property::kSomeUr) {
    out << prefix << "witness "
        << (report.witness ? format_matching(*report.witness) : std::string("none"))
        << '\n';
  }
  if (all_failures && !report.all_failures.empty()) {
    out << prefix << "failures ";
    for (std::size_t i = 0; i < report.all_failures.size(); ++i) {
      out << (i ? "," : "") << to_string(report.all_failures[i]);
    }
    out << '\n';
  }
}

int check_file(const CheckArgs& args, const std::string& file, bool multiple,
               std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Graph g;
  try {
    g = read_graph_file(file);
  } catch (const ParseError& e) {
    err << file << ": parse error: " << e.what() << '\n';
    return kExitParse;
  }

  RecognitionOptions options;
  options.all_failures = args.all_failures;
  options.verify_blocks = args.verify;

  // every_ur first; some_ur reuses its decomposition.
  const GallaiEdmonds ge = gallai_edmonds(g);
  std::vector<RecognitionReport> reports;
  try {
    std::optional<RecognitionReport> every;
    if (args.property != "some") every = every_ur(g, ge, options);
    if (args.property != "every") reports.push_back(some_ur(g, ge, options));
    if (every) reports.push_back(*every);
  } catch (const InternalError& e) {
    err << file << ": internal cross-check failure: " << e.what() << '\n';
    return kExitInternal;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  const bool both = reports.size() > 1;
  for (const auto& report : reports) {
    if (args.json) {
      ReportContext context{file, g.order(), g.size(), std::nullopt, args.all_failures};
      if (!args.no_timing) context.runtime_ms = elapsed.count();
      out << report_json(report, context).dump() << '\n';
    } else {
      print_text(report, both, args.witness, args.all_failures,
                 multiple ? file + ": " : std::string(), out);
    }
  }
  return kExitOk;
}

int run_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  int status = kExitOk;
  for (const auto& file : args.files) {
    const int s = check_file(args, file, args.files.size() > 1, out, err);
    if (status == kExitOk) status = s;
  }
  return status;
}

int run_is_ur(const IsUrArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const Graph g = read_graph_file(args.file);
    const Matching m = parse_matching(args.matching, g);
    out << (is_uniquely_restricted(g, m) ? "true" : "false") << '\n';
    return kExitOk;
  } catch (const ParseError& e) {
    err << args.file << ": parse error: " << e.what() << '\n';
    return kExitParse;
  }
}

int run_decompose(const DecomposeArgs& args, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = read_graph_file(args.file);
  } catch (const ParseError& e) {
    err << args.file << ": parse error: " << e.what() << '\n';
    return kExitParse;
  }
  const GallaiEdmonds ge = gallai_edmonds(g);
  if (args.json) {
    out << decomposition_json(args.file, g, ge).dump() << '\n';
    return kExitOk;
  }
  auto line = [&](const char* label, const VertexSet& set) {
    out << label;
    for (Vertex v : set) out << ' ' << v;
    out << '\n';
  };
  out << "nu " << ge.maximum.size() << '\n';
  line("D", ge.d_set);
  line("A", ge.a_set);
  line("C", ge.c_set);
  for (std::size_t c = 0; c < ge.d_components.size(); ++c) {
    out << "d_component " << c << ':';
    for (Vertex v : ge.d_components[c]) out << ' ' << v;
    out << '\n';
  }
  out << "gb n=" << ge.gb.order() << " edges";
  for (const Edge& e : ge.gb.edges()) out << ' ' << e.u << '-' << e.v;
  out << '\n';
  return kExitOk;
}

std::optional<std::size_t> oracle_limit_from_env(std::ostream& err) {
  const char* raw = std::getenv(kOracleLimitEnv);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0') {
    err << kOracleLimitEnv << " must be a non-negative integer, ignoring '" << raw
        << "'\n";
    return std::nullopt;
  }
  return static_cast<std::size_t>(value);
}

int run_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = read_graph_file(args.file);
  } catch (const ParseError& e) {
    err << args.file << ": parse error: " << e.what() << '\n';
    return kExitParse;
  }
  oracle::Guard guard;
  guard.force = args.force;
  if (auto limit = oracle_limit_from_env(err)) guard.max_vertices = *limit;
  try {
    const oracle::Verdict verdict = oracle::ur_verdict(g, guard);
    if (args.property == "both") {
      out << "some " << (verdict.some ? "true" : "false") << '\n';
      out << "every " << (verdict.every ? "true" : "false") << '\n';
    } else {
      const bool answer = args.property == "some" ? verdict.some : verdict.every;
      out << (answer ? "true" : "false") << '\n';
    }
  } catch (const oracle::LimitExceeded& e) {
    err << args.file << ": " << e.what() << " (use --force or " << kOracleLimitEnv
        << ")\n";
    return kExitOracleLimit;
  }
  return kExitOk;
}

int run_selftest(const SelftestArgs& args, std::ostream& out, std::ostream& err) {
  constexpr std::size_t kMaxExhaustive = 7;
  if (args.nmax > kMaxExhaustive) {
    err << "selftest: --nmax above " << kMaxExhaustive
        << " would enumerate more than 2^21 graphs per order\n";
    return kExitOracleLimit;
  }
  std::size_t exhaustive = 0;
  std::size_t random = 0;
  std::size_t disagreements = 0;
  auto record = [&](const Graph& g, const oracle::Guard& guard) {
    const auto result = oracle::cross_check(g, guard);
    if (!result.ok()) {
      ++disagreements;
      for (const auto& p : result.problems) err << "selftest: " << p << '\n';
    }
  };

  for (std::size_t n = 0; n <= args.nmax; ++n) {
    for (const Graph& g : oracle::LabeledGraphs(n)) {
      record(g, {});
      ++exhaustive;
    }
  }
  std::mt19937_64 rng(args.seed);
  std::uniform_int_distribution<std::size_t> order(7, 10);
  constexpr double kDensities[] = {0.2, 0.4, 0.6};
  std::uniform_int_distribution<std::size_t> density(0, 2);
  oracle::Guard forced;
  forced.force = true;
  for (std::size_t i = 0; i < args.random; ++i) {
    const std::size_t n = order(rng);
    const double p = kDensities[density(rng)];
    record(oracle::random_graph(n, p, rng), forced);
    ++random;
  }
  out << "selftest: exhaustive=" << exhaustive << " random=" << random
      << " disagreements=" << disagreements << '\n';
  return disagreements == 0 ? kExitOk : kExitInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recognize graphs in which some or every maximum matching is "
               "uniquely restricted."};
  app.name("urmatch");
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Decide some-UR / every-UR");
  check_cmd->add_option("files", check.files, "Graph files")->required();
  check_cmd->add_option("--property", check.property, "some, every or both")
      ->check(CLI::IsMember({"some", "every", "both"}));
  check_cmd->add_flag("--json", check.json, "One JSON report per line");
  check_cmd->add_flag("--witness", check.witness, "Print the witness matching");
  check_cmd->add_flag("--all-failures", check.all_failures,
                      "Evaluate every condition, not just up to the first failure");
  check_cmd->add_flag("--verify", check.verify,
                      "Cross-check the odd-cycle block test on D-components");
  check_cmd->add_flag("--no-timing", check.no_timing, "Report runtime_ms as 0");

  IsUrArgs is_ur;
  auto* is_ur_cmd = app.add_subcommand("is-ur", "Is a given matching uniquely restricted");
  is_ur_cmd->add_option("file", is_ur.file, "Graph file")->required();
  is_ur_cmd->add_option("--matching", is_ur.matching, "u-v,u-v,...")->required();

  DecomposeArgs decompose;
  auto* decompose_cmd = app.add_subcommand("decompose", "Gallai-Edmonds decomposition");
  decompose_cmd->add_option("file", decompose.file, "Graph file")->required();
  decompose_cmd->add_flag("--json", decompose.json, "JSON output");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force answer (small graphs)");
  oracle_cmd->add_option("file", oracle_args.file, "Graph file")->required();
  oracle_cmd->add_option("--property", oracle_args.property, "some, every or both")
      ->required()
      ->check(CLI::IsMember({"some", "every", "both"}));
  oracle_cmd->add_flag("--force", oracle_args.force, "Ignore the size guard");

  SelftestArgs selftest;
  auto* selftest_cmd =
      app.add_subcommand("selftest", "Cross-validate the recognizers against the oracle");
  selftest_cmd->add_option("--nmax", selftest.nmax, "Exhaustive up to this order");
  selftest_cmd->add_option("--random", selftest.random, "Random graphs with 7..10 vertices");
  selftest_cmd->add_option("--seed", selftest.seed, "Random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*check_cmd) return run_check(check, out, err);
  if (*is_ur_cmd) return run_is_ur(is_ur, out, err);
  if (*decompose_cmd) return run_decompose(decompose, out, err);
  if (*oracle_cmd) return run_oracle(oracle_args, out, err);
  if (*selftest_cmd) return run_selftest(selftest, out, err);
  return kExitUsage;
}

}  // namespace urmatch::cli
