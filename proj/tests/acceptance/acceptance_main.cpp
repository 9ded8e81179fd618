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

// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "families.hpp"
#include "properties.hpp"
#include "urmatch/cli/app.hpp"
#include "urmatch/cli/graph_file.hpp"
#include "urmatch/crosscheck.hpp"
#include "urmatch/oracle.hpp"
#include "urmatch/recognition.hpp"
#include "urmatch/ur_core.hpp"

namespace {

using namespace urmatch;
using Clock = std::chrono::steady_clock;

constexpr double kOracleBudgetSeconds = 600.0;
constexpr double kScaleBudgetSeconds = 60.0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Tally {
  std::size_t graphs = 0;
  std::size_t disagreements = 0;
  std::vector<std::string> examples;

  void disagree(const std::string& what) {
    ++disagreements;
    if (examples.size() < 5) examples.push_back(what);
  }
};

// Witness checks shared by criteria 1-3 and reported under criterion 4.
Tally witness_tally;

void check_witness(const Graph& g, const RecognitionReport& some, std::size_t nu,
                   bool oracle_reachable) {
  if (!some.answer) return;
  ++witness_tally.graphs;
  if (!some.witness) {
    witness_tally.disagree(oracle::describe(g) + ": positive answer without witness");
    return;
  }
  const Matching& w = *some.witness;
  if (w.size() != nu) {
    witness_tally.disagree(oracle::describe(g) + ": witness size " + std::to_string(w.size()) +
                           " != nu " + std::to_string(nu));
  }
  if (!is_uniquely_restricted(g, w)) {
    witness_tally.disagree(oracle::describe(g) + ": witness not uniquely restricted");
  } else if (oracle_reachable && !oracle::is_ur(g, w, {.force = true})) {
    witness_tally.disagree(oracle::describe(g) + ": oracle rejects witness");
  }
}

void compare_with_oracle(const Graph& g, Tally& tally) {
  ++tally.graphs;
  const oracle::Verdict expected = oracle::ur_verdict(g, {.force = true});
  const GallaiEdmonds ge = gallai_edmonds(g);
  const RecognitionReport some = some_ur(g, ge);
  const RecognitionReport every = every_ur(g, ge);
  if (some.answer != expected.some || every.answer != expected.every) {
    tally.disagree(oracle::describe(g) + ": some " + std::to_string(some.answer) + "/" +
                   std::to_string(expected.some) + ", every " + std::to_string(every.answer) +
                   "/" + std::to_string(expected.every));
  }
  check_witness(g, some, expected.nu, true);
}

bool report(int id, bool pass, const std::string& summary,
            const std::vector<std::string>& details = {}) {
  std::cout << (pass ? "PASS" : "FAIL") << " [" << id << "] " << summary << '\n';
  if (!pass) {
    for (const auto& d : details) std::cout << "       " << d << '\n';
  }
  std::cout.flush();
  return pass;
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

bool criterion_exhaustive() {
  const auto start = Clock::now();
  Tally tally;
  for (const Graph& g : oracle::LabeledGraphs(6)) compare_with_oracle(g, tally);
  const double elapsed = seconds_since(start);
  const bool pass = tally.disagreements == 0 && tally.graphs == 32768 &&
                    elapsed < kOracleBudgetSeconds;
  return report(1, pass,
                "exhaustive oracle equivalence, all labeled graphs on 6 vertices: " +
                    std::to_string(tally.graphs) + " graphs, " +
                    std::to_string(tally.disagreements) + " disagreements, " +
                    format_seconds(elapsed),
                tally.examples);
}

bool criterion_random() {
  const auto start = Clock::now();
  Tally tally;
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::size_t> order(7, 10);
  constexpr double kDensities[] = {0.2, 0.4, 0.6};
  for (int i = 0; i < 5000; ++i) {
    const std::size_t n = order(rng);
    const double p = kDensities[i % 3];
    compare_with_oracle(oracle::random_graph(n, p, rng), tally);
  }
  const double elapsed = seconds_since(start);
  const bool pass = tally.disagreements == 0 && elapsed < kOracleBudgetSeconds;
  return report(2, pass,
                "randomized oracle equivalence, n in [7,10], p in {0.2,0.4,0.6}, seed 20260101: " +
                    std::to_string(tally.graphs) + " graphs, " +
                    std::to_string(tally.disagreements) + " disagreements, " +
                    format_seconds(elapsed),
                tally.examples);
}

bool criterion_families() {
  using namespace urmatch::testing;
  Tally tally;
  auto expect = [&](const std::string& name, const Graph& g, bool some_expected,
                    std::optional<bool> every_expected) {
    ++tally.graphs;
    const GallaiEdmonds ge = gallai_edmonds(g);
    const RecognitionReport some = some_ur(g, ge);
    const RecognitionReport every = every_ur(g, ge);
    if (some.answer != some_expected) tally.disagree(name + ": some_ur wrong");
    if (every_expected && every.answer != *every_expected) {
      tally.disagree(name + ": every_ur wrong");
    }
    const bool small = g.order() <= 10;
    if (small) {
      const oracle::Verdict v = oracle::ur_verdict(g, {.force = true});
      if (v.some != some_expected || (every_expected && v.every != *every_expected)) {
        tally.disagree(name + ": oracle disagrees with the expected family value");
      }
      if (v.some != some.answer || v.every != every.answer) {
        tally.disagree(name + ": algorithm disagrees with oracle");
      }
    }
    check_witness(g, some, maximum_matching(g).size(), small);
  };
  for (std::size_t k = 2; k <= 8; ++k) {
    expect("C" + std::to_string(2 * k), cycle_graph(2 * k), false, false);
  }
  for (std::size_t k = 1; k <= 8; ++k) {
    expect("C" + std::to_string(2 * k + 1), cycle_graph(2 * k + 1), true, true);
  }
  for (std::size_t n = 2; n <= 12; ++n) expect("P" + std::to_string(n), path_graph(n), true, true);
  for (std::size_t n = 4; n <= 8; ++n) {
    expect("K" + std::to_string(n), complete_graph(n), false, std::nullopt);
  }
  for (std::size_t k = 2; k <= 5; ++k) {
    expect("K" + std::to_string(k) + "," + std::to_string(k), complete_bipartite(k, k), false,
           std::nullopt);
  }
  return report(3, tally.disagreements == 0,
                "named families (even/odd cycles, paths, complete, complete bipartite): " +
                    std::to_string(tally.graphs) + " graphs, " +
                    std::to_string(tally.disagreements) + " mismatches",
                tally.examples);
}

bool criterion_witnesses() {
  return report(4, witness_tally.disagreements == 0 && witness_tally.graphs > 0,
                "witness soundness over criteria 1-3: " + std::to_string(witness_tally.graphs) +
                    " witnesses, " + std::to_string(witness_tally.disagreements) + " violations",
                witness_tally.examples);
}

bool criterion_properties() {
  using namespace urmatch::testing;
  const auto start = Clock::now();
  std::vector<PropertyResult> results;
  results.push_back(accessibility_equivalence(6));
  const EGoodParams e_good{.nmax = 6, .random_subsets = 3, .tie_break_seeds = 10, .seed = 41};
  results.push_back(e_good_oracle_agreement(e_good));
  results.push_back(e_good_independent_set_invariance(e_good));
  results.push_back(e_good_tie_break_invariance(e_good));
  results.push_back(v_plus_minus_invariance(6, 2000, 7, 42));
  results.push_back(edge_exchange_closure(6, 2000, 7, 43));
  results.push_back(konig_maximality(6, 2000, 7, 44));
  results.push_back(bipartite_ur_agreement(6));
  results.push_back(block_characterization(
      {.exhaustive_nmax = 7, .random_samples = 5000, .constructed = 2000, .seed = 45}));

  bool pass = true;
  std::vector<std::string> lines;
  std::size_t cases = 0;
  for (const auto& r : results) {
    pass = pass && r.ok() && r.cases > 0;
    cases += r.cases;
    lines.push_back(r.name + ": " + std::to_string(r.cases) + " cases, " +
                    std::to_string(r.failure_count) + " failures");
    for (const auto& f : r.failures) lines.push_back("  " + f);
  }
  report(5, pass,
         "lemma-level property suites: " + std::to_string(results.size()) + " suites, " +
             std::to_string(cases) + " cases, " + format_seconds(seconds_since(start)),
         lines);
  for (const auto& r : results) {
    std::cout << "       " << (r.ok() ? "ok  " : "FAIL") << ' ' << r.name << " (" << r.cases
              << " cases)\n";
  }
  return pass;
}

bool criterion_scale() {
  constexpr std::size_t kOrder = 1000;
  constexpr std::size_t kEdges = 10000;
  std::mt19937_64 rng(6);
  const Graph g = oracle::random_graph_with_edges(kOrder, kEdges, rng);
  const auto path = std::filesystem::temp_directory_path() / "urmatch_acceptance_scale.g";
  {
    std::ofstream f(path);
    f << cli::render_graph(g);
  }

  const auto start = Clock::now();
  std::ostringstream out;
  std::ostringstream err;
  const int status =
      cli::run({"check", path.string(), "--property", "both", "--json"}, out, err);
  const double elapsed = seconds_since(start);
  std::filesystem::remove(path);

  std::vector<std::string> problems;
  if (status != cli::kExitOk) problems.push_back("exit status " + std::to_string(status));
  if (!err.str().empty()) problems.push_back("stderr: " + err.str());
  std::istringstream lines(out.str());
  std::string line;
  std::vector<nlohmann::json> records;
  while (std::getline(lines, line)) {
    try {
      records.push_back(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      problems.push_back(std::string("invalid JSON: ") + e.what());
    }
  }
  const char* keys[] = {"input", "n", "m", "property", "answer", "witness", "failure", "runtime_ms"};
  std::string answers;
  if (records.size() != 2) problems.push_back("expected 2 records");
  for (const auto& r : records) {
    for (const char* k : keys) {
      if (!r.contains(k)) problems.push_back(std::string("missing key ") + k);
    }
    if (problems.empty()) {
      if (r["n"] != kOrder || r["m"] != kEdges) problems.push_back("wrong n/m");
      if (!r["answer"].is_boolean()) problems.push_back("answer not boolean");
      const bool answer = r["answer"].get<bool>();
      if (!answer && !(r["failure"].is_string() &&
                       parse_failure_tag(r["failure"].get<std::string>()))) {
        problems.push_back("negative answer without a known failure tag");
      }
      if (r["property"] == "some" && answer) {
        EdgeList edges;
        for (const auto& pair : r["witness"]) edges.emplace_back(pair[0], pair[1]);
        const Matching w(g, edges);
        if (w.size() != maximum_matching(g).size() || !is_uniquely_restricted(g, w)) {
          problems.push_back("unsound witness");
        }
      }
      answers += (answers.empty() ? "" : ", ") + r["property"].get<std::string>() + "=" +
                 (answer ? "true" : "false");
    }
  }
  if (elapsed >= kScaleBudgetSeconds) problems.push_back("over the time budget");
  return report(6, problems.empty(),
                "scale smoke test, n=1000 m=10000, check --property both --json: " + answers +
                    ", " + format_seconds(elapsed),
                problems);
}

}  // namespace

int main() {
  bool all = true;
  all &= criterion_exhaustive();
  all &= criterion_random();
  all &= criterion_families();
  all &= criterion_witnesses();
  all &= criterion_properties();
  all &= criterion_scale();
  std::cout << (all ? "all acceptance criteria passed" : "some acceptance criteria FAILED")
            << '\n';
  return all ? 0 : 1;
}
