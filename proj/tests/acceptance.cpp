// Acceptance gate: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tripack/cli.hpp"
#include "tripack/error.hpp"
#include "tripack/generator.hpp"
#include "tripack/graph_io.hpp"
#include "tripack/koenig.hpp"
#include "tripack/menger.hpp"
#include "tripack/oracle.hpp"
#include "tripack/solver.hpp"

using namespace tripack;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

const fs::path kFixtures{TRIPACK_FIXTURE_DIR};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Every solver run from criteria 1-4, kept for the network and colouring checks.
std::vector<SolveTrace> traces;

Outcome figure1_golden() {
  Outcome o;
  auto g = load_graph(kFixtures / "figure1.graph");
  auto start = Clock::now();
  auto tr = solve_traced(g);
  double t = seconds_since(start);
  const auto& c = tr.certificate;
  traces.push_back(tr);
  if (c.value != 5) o.fail("value " + std::to_string(c.value));
  if (!is_transversal(g, c.transversal) || c.transversal.size() != 5) o.fail("transversal does not verify");
  if (!is_packing(g, c.packing) || c.packing.size() != 5) o.fail("packing does not verify");
  if (t >= 0.1) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "value 5, both certificates verify, " + std::to_string(t * 1000) + " ms";
  return o;
}

Outcome figure1_uniqueness() {
  Outcome o;
  auto g = load_graph(kFixtures / "figure1.graph");
  auto start = Clock::now();
  auto res = brute_min_transversal(g, {}, true);
  double t = seconds_since(start);
  const std::vector<Edge> expected{{0, 2}, {0, 9}, {1, 2}, {1, 9}, {3, 8}};
  if (res.value != 5) o.fail("minimum " + std::to_string(res.value));
  if (res.all_minimum.size() != 1) {
    o.fail(std::to_string(res.all_minimum.size()) + " minimum transversals");
  } else if (res.all_minimum[0].edges != expected) {
    o.fail("minimum is not {02,12,09,19,38}");
  }
  if (t >= 30) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "exactly one minimum {02,12,09,19,38}, " + std::to_string(t * 1000) + " ms";
  return o;
}

Outcome five_way() {
  Outcome o;
  OracleBudget budget;
  budget.max_triangles = 3 * 25;
  budget.max_bc_edges = 25;
  budget.max_bc_vertices = 10;
  budget.time_limit = std::chrono::seconds(60);
  const double densities[] = {0.2, 0.5, 0.8};
  std::size_t instances = 0, mismatches = 0;
  auto start = Clock::now();
  std::uint64_t seed = 1000;
  for (std::size_t p = 1; p <= 3; ++p) {
    for (std::size_t q = 1; q <= 5; ++q) {
      for (std::size_t r = 1; r <= 5; ++r) {
        for (double d : densities) {
          auto g = generate({p, q, r, d, GenMode::BilaterallyComplete, 1, 1, seed++});
          auto tr = solve_traced(g);
          auto v = tr.certificate.value;
          bool agree = brute_max_packing(g, budget).value == v &&
                       brute_min_transversal(g, budget).value == v &&
                       uniform_transversal_min(g, budget).value == v &&
                       mao_cheng_min(g, budget).value == v;
          traces.push_back(std::move(tr));
          ++instances;
          if (!agree) {
            ++mismatches;
            o.fail("mismatch at seed " + std::to_string(seed - 1));
          }
        }
      }
    }
  }
  double t = seconds_since(start);
  if (instances < 200) o.fail("only " + std::to_string(instances) + " instances");
  if (t >= 60) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) {
    o.detail = std::to_string(instances) + " instances, " + std::to_string(mismatches) +
               " mismatches, " + std::to_string(t) + " s";
  }
  return o;
}

Outcome complete_tripartite() {
  Outcome o;
  std::size_t count = 0;
  for (std::size_t p = 1; p <= 4; ++p) {
    for (std::size_t q = p; q <= 4; ++q) {
      for (std::size_t r = q; r <= 4; ++r) {
        auto g = generate({p, q, r, 1.0, GenMode::Complete, 1, 1, 0});
        auto tr = solve_traced(g);
        const auto& c = tr.certificate;
        if (c.value != p * q) {
          o.fail("K_{" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) +
                 "} gave " + std::to_string(c.value));
        }
        if (!is_packing(g, c.packing) || c.packing.size() != p * q) o.fail("packing does not verify");
        traces.push_back(std::move(tr));
        ++count;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " complete graphs, value p*q each";
  return o;
}

Outcome menger_equality() {
  Outcome o;
  for (const auto& tr : traces) {
    const auto& h = tr.network;
    auto paths = max_disjoint_paths(h);
    auto sep = min_separator(h, max_flow(h));
    if (paths.value() != sep.size()) o.fail("paths " + std::to_string(paths.value()) +
                                            " != separator " + std::to_string(sep.size()));
    if (!is_disjoint_path_family(h, paths)) o.fail("path family not internally disjoint");
    if (!separates(h, sep.nodes)) o.fail("separator leaves an s-t path");
    if (tr.paths.value() != tr.separator.size() || !separates(h, tr.separator.nodes)) {
      o.fail("solver trace violates Menger equality");
    }
  }
  if (o.pass) o.detail = std::to_string(traces.size()) + " networks";
  return o;
}

Outcome koenig_correctness() {
  Outcome o;
  for (const auto& tr : traces) {
    const auto& f = tr.subgraph;
    const auto& c = tr.colouring;
    auto delta = f.max_degree();
    if (c.colour_count() != delta) o.fail("class count differs from max degree");
    if (delta > tr.oriented.p()) o.fail("max degree exceeds |A|");
    std::multiset<Edge> seen;
    for (const auto& cls : c.classes) {
      if (!is_matching(cls)) o.fail("a class is not a matching");
      seen.insert(cls.begin(), cls.end());
    }
    if (seen != std::multiset<Edge>(f.edges.begin(), f.edges.end())) o.fail("classes do not partition E(F)");
  }
  if (o.pass) o.detail = std::to_string(traces.size()) + " subgraphs";
  return o;
}

Outcome general_bounds() {
  Outcome o;
  std::size_t checked = 0, skipped = 0;
  const double densities[] = {0.3, 0.5, 0.7, 0.9};
  for (std::uint64_t seed = 0; checked < 150 && seed < 1000; ++seed) {
    GenSpec spec{1 + seed % 4, 1 + (seed / 4) % 4, 1 + (seed / 16) % 4, densities[seed % 4],
                 GenMode::General, densities[(seed / 2) % 4], densities[(seed / 3) % 4], 5000 + seed};
    auto g = generate(spec);
    std::size_t nu = 0, tau = 0;
    try {
      nu = brute_max_packing(g).value;
      tau = brute_min_transversal(g).value;
    } catch (const BudgetExceeded&) {
      ++skipped;
      continue;
    }
    ++checked;
    if (nu > tau || tau > 3 * nu) {
      o.fail("bound violated at seed " + std::to_string(spec.seed));
    }
  }
  if (checked < 100) o.fail("only " + std::to_string(checked) + " instances within budget");
  if (o.pass) {
    o.detail = std::to_string(checked) + " instances, " + std::to_string(skipped) + " over budget skipped";
  }
  return o;
}

std::string run_machine(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return std::to_string(code) + "\n" + out.str();
}

Outcome round_trip_and_determinism() {
  Outcome o;
  std::size_t fixtures = 0;
  for (const auto& entry : fs::directory_iterator(kFixtures)) {
    if (entry.path().extension() != ".graph") continue;
    auto g = load_graph(entry.path());
    auto text = serialize_graph(g);
    if (!(parse_graph(text) == g) || serialize_graph(parse_graph(text)) != text) {
      o.fail("round trip fails on " + entry.path().filename().string());
    }
    ++fixtures;
  }

  auto dir = fs::temp_directory_path() / "tripack_acceptance";
  fs::create_directories(dir);
  std::size_t seeds = 0;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    GenSpec spec{2, 4, 4, 0.4, GenMode::BilaterallyComplete, 1, 1, seed};
    auto g1 = generate(spec);
    auto g2 = generate(spec);
    if (!(g1 == g2) || serialize_graph(g1) != serialize_graph(g2)) o.fail("generator not deterministic");
    auto a = dir / ("a" + std::to_string(seed) + ".graph");
    auto b = dir / ("b" + std::to_string(seed) + ".graph");
    run_machine({"gen", "--p", "2", "--q", "4", "--r", "4", "--density", "0.4", "--seed",
                 std::to_string(seed), "-o", a.string()});
    run_machine({"gen", "--p", "2", "--q", "4", "--r", "4", "--density", "0.4", "--seed",
                 std::to_string(seed), "-o", b.string()});
    if (read_text_file(a) != read_text_file(b)) o.fail("gen output differs for seed " + std::to_string(seed));
    for (const char* cmd : {"solve", "oracle"}) {
      auto x = run_machine({cmd, a.string(), "--machine"});
      auto y = run_machine({cmd, b.string(), "--machine"});
      if (x != y || x.rfind("0\n", 0) != 0) {
        o.fail(std::string(cmd) + " machine output differs for seed " + std::to_string(seed));
      }
    }
    ++seeds;
  }
  fs::remove_all(dir);
  if (o.pass) {
    o.detail = std::to_string(fixtures) + " fixtures round-trip; " + std::to_string(seeds) +
               " seeds byte-identical";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*check)();
  };
  const Criterion criteria[] = {
      {"C1 figure-1 golden solve", figure1_golden},
      {"C2 figure-1 unique minimum transversal", figure1_uniqueness},
      {"C3 five-way agreement", five_way},
      {"C4 complete tripartite value p*q", complete_tripartite},
      {"C5 Menger equality", menger_equality},
      {"C6 Koenig colouring", koenig_correctness},
      {"C7 general packing/transversal bounds", general_bounds},
      {"C8 round trip and determinism", round_trip_and_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail << std::endl;
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
