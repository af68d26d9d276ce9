#include "tripack/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "tripack/error.hpp"
#include "tripack/generator.hpp"
#include "tripack/graph_io.hpp"
#include "tripack/oracle.hpp"
#include "tripack/solver.hpp"

namespace tripack::cli {

namespace {

using Json = nlohmann::ordered_json;

Json edge_list(std::span<const Edge> edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(to_string(e));
  return out;
}

Json triangle_list(std::span<const Triangle> triangles) {
  Json out = Json::array();
  for (const Triangle& t : triangles) out.push_back(to_string(t));
  return out;
}

Json vertex_list(std::span<const VertexId> vs) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(v);
  return out;
}

template <typename Range, typename Fn>
std::string join(const Range& items, Fn&& fmt) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ' ';
    out += fmt(item);
  }
  return out.empty() ? "(none)" : out;
}

std::string edges_text(std::span<const Edge> edges) {
  return join(edges, [](const Edge& e) { return to_string(e); });
}

std::string triangles_text(std::span<const Triangle> ts) {
  return join(ts, [](const Triangle& t) { return to_string(t); });
}

const char* verdict(bool ok) { return ok ? "ok" : "FAILED"; }

struct Common {
  bool machine = false;
};

// --- solve ---------------------------------------------------------------

int cmd_solve(const std::string& path, const std::string& export_network, const Common& common,
              std::ostream& out) {
  auto g = load_graph(path);
  auto trace = solve_traced(g);
  const Certificate& cert = trace.certificate;

  if (!export_network.empty()) {
    if (export_network == "-") {
      trace.network.write_arcs(out);
    } else {
      std::ofstream file(export_network);
      if (!file) throw Error("cannot write " + export_network);
      trace.network.write_arcs(file);
    }
  }

  if (common.machine) {
    Json doc;
    doc["command"] = "solve";
    doc["apex"] = std::string(to_string(trace.orientation.apex()));
    doc["value"] = cert.value;
    doc["transversal"] = edge_list(cert.transversal.edges);
    doc["packing"] = triangle_list(cert.packing.triangles);
    doc["network"] = {{"nodes", trace.network.node_count()},
                      {"arcs", trace.network.arcs().size()},
                      {"paths", trace.paths.value()},
                      {"separator", trace.separator.size()}};
    doc["colour_classes"] = trace.colouring.colour_count();
    doc["verified"] = {{"transversal", cert.transversal_verified},
                       {"packing", cert.packing_verified},
                       {"sizes_equal", cert.sizes_equal}};
    out << doc.dump(2) << '\n';
  } else {
    out << "graph: |A|=" << g.p() << " |B|=" << g.q() << " |C|=" << g.r()
        << ", apex part " << to_string(trace.orientation.apex()) << '\n';
    out << "value: " << cert.value << '\n';
    out << "transversal (" << cert.transversal.size() << "): " << edges_text(cert.transversal.edges)
        << '\n';
    out << "packing (" << cert.packing.size() << "): " << triangles_text(cert.packing.triangles)
        << '\n';
    out << "checks: transversal " << verdict(cert.transversal_verified) << ", packing "
        << verdict(cert.packing_verified) << ", sizes " << (cert.sizes_equal ? "equal" : "DIFFER")
        << '\n';
  }
  return cert.verified() ? kOk : kVerificationMismatch;
}

// --- verify --------------------------------------------------------------

struct Check {
  std::string name;
  std::size_t size = 0;
  bool valid = false;
  std::string reason;
};

int cmd_verify(const std::string& path, const std::string& transversal_path,
               const std::string& packing_path, const Common& common, std::ostream& out,
               std::ostream& err) {
  if (transversal_path.empty() && packing_path.empty()) {
    err << "verify: give --transversal FILE and/or --packing FILE\n";
    return kUsage;
  }
  auto g = load_graph(path);
  std::vector<Check> checks;
  if (!transversal_path.empty()) {
    Check c;
    c.name = "transversal";
    auto edges = parse_edge_list(read_text_file(transversal_path));
    c.size = edges.size();
    try {
      c.valid = is_transversal(g, edges);
      if (!c.valid) c.reason = "some triangle has no edge in the set";
    } catch (const PreconditionError& e) {
      c.reason = e.what();
    }
    checks.push_back(c);
  }
  if (!packing_path.empty()) {
    Check c;
    c.name = "packing";
    std::vector<Triangle> triangles;
    try {
      triangles = parse_triangle_list(read_text_file(packing_path), g);
      c.size = triangles.size();
      c.valid = is_packing(g, triangles);
      if (!c.valid) c.reason = "two triangles share an edge";
    } catch (const PreconditionError& e) {
      c.reason = e.what();
    } catch (const ParseError& e) {
      if (e.kind() == ParseError::Kind::Syntax) throw;
      c.reason = e.what();
    }
    checks.push_back(c);
  }

  bool all_valid = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.valid; });
  if (common.machine) {
    Json doc;
    doc["command"] = "verify";
    for (const Check& c : checks) {
      Json item{{"size", c.size}, {"valid", c.valid}};
      if (!c.reason.empty()) item["reason"] = c.reason;
      doc[c.name] = item;
    }
    doc["valid"] = all_valid;
    out << doc.dump(2) << '\n';
  } else {
    for (const Check& c : checks) {
      out << c.name << " (" << c.size << "): " << (c.valid ? "valid" : "INVALID");
      if (!c.reason.empty()) out << " - " << c.reason;
      out << '\n';
    }
  }
  return all_valid ? kOk : kVerificationMismatch;
}

// --- oracle --------------------------------------------------------------

struct OracleChoice {
  bool all = false;
  bool packing = false;
  bool transversal = false;
  bool uniform = false;
  bool mao_cheng = false;
  bool enumerate_min = false;
};

int cmd_oracle(const std::string& path, OracleChoice choice, const OracleBudget& budget,
               const Common& common, std::ostream& out) {
  auto g = load_graph(path);
  if (!(choice.packing || choice.transversal || choice.uniform || choice.mao_cheng)) {
    choice.all = true;
  }
  if (choice.enumerate_min) choice.transversal = true;
  const bool bilateral = detect_orientation(g).has_value();
  if (!bilateral && !choice.all && (choice.uniform || choice.mao_cheng)) {
    throw NotBilaterallyComplete();
  }

  Json doc;
  doc["command"] = "oracle";
  doc["bilaterally_complete"] = bilateral;
  std::vector<std::pair<std::string, std::size_t>> values;

  std::optional<Certificate> cert;
  if (bilateral) {
    cert = solve(g);
    values.emplace_back("solve", cert->value);
  }
  std::optional<PackingResult> packing;
  if (choice.all || choice.packing) {
    packing = brute_max_packing(g, budget);
    if (!is_packing(g, packing->witness)) throw InvariantViolation("packing witness failed");
    values.emplace_back("brute_max_packing", packing->value);
  }
  std::optional<TransversalResult> transversal;
  if (choice.all || choice.transversal) {
    transversal = brute_min_transversal(g, budget, choice.enumerate_min);
    if (!is_transversal(g, transversal->witness)) throw InvariantViolation("transversal witness failed");
    values.emplace_back("brute_min_transversal", transversal->value);
  }
  std::optional<UniformResult> uniform;
  if (bilateral && (choice.all || choice.uniform)) {
    uniform = uniform_transversal_min(g, budget);
    values.emplace_back("uniform_transversal_min", uniform->value);
  }
  std::optional<SubsetPairResult> subsets;
  if (bilateral && (choice.all || choice.mao_cheng)) {
    subsets = mao_cheng_min(g, budget);
    values.emplace_back("mao_cheng_min", subsets->value);
  }

  bool agree = std::all_of(values.begin(), values.end(),
                           [&](const auto& kv) { return kv.second == values.front().second; });
  // Without the equality guarantee only the general bounds can be checked.
  std::optional<bool> bounds;
  if (!bilateral && packing && transversal) {
    bounds = packing->value <= transversal->value && transversal->value <= 3 * packing->value;
  }
  bool ok = bilateral ? agree : bounds.value_or(true);

  if (common.machine) {
    Json vals;
    for (const auto& [name, v] : values) vals[name] = v;
    doc["values"] = vals;
    if (bilateral) doc["agree"] = agree;
    if (bounds) doc["bounds_hold"] = *bounds;
    if (packing) doc["packing_witness"] = triangle_list(packing->witness.triangles);
    if (transversal) {
      doc["transversal_witness"] = edge_list(transversal->witness.edges);
      if (choice.enumerate_min) {
        Json all = Json::array();
        for (const auto& t : transversal->all_minimum) all.push_back(edge_list(t.edges));
        doc["all_minimum_transversals"] = all;
      }
    }
    if (uniform) {
      doc["uniform_witness"] = {{"bc_edges", edge_list(uniform->bc_edges)},
                                {"cover", vertex_list(uniform->cover)}};
    }
    if (subsets) {
      doc["mao_cheng_witness"] = {{"b_kept", vertex_list(subsets->b_kept)},
                                  {"c_kept", vertex_list(subsets->c_kept)}};
    }
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& [name, v] : values) out << name << ": " << v << '\n';
    if (transversal && choice.enumerate_min) {
      out << "minimum transversals (" << transversal->all_minimum.size() << "):\n";
      for (const auto& t : transversal->all_minimum) out << "  " << edges_text(t.edges) << '\n';
    }
    if (uniform) {
      out << "uniform minimum at E'_BC = {" << edges_text(uniform->bc_edges) << "}, W = {"
          << join(uniform->cover, [](VertexId v) { return std::to_string(v); }) << "}\n";
    }
    if (bilateral) {
      out << (agree ? "agreement: all " + std::to_string(values.size()) + " values equal " +
                          std::to_string(values.front().second)
                    : std::string("agreement: MISMATCH"))
          << '\n';
    } else {
      out << "graph is not bilaterally-complete; ";
      if (bounds) {
        out << "packing <= transversal <= 3 * packing: " << (*bounds ? "holds" : "VIOLATED") << '\n';
      } else {
        out << "no cross-check available\n";
      }
    }
  }
  return ok ? kOk : kVerificationMismatch;
}

// --- gen / triangles -----------------------------------------------------

int cmd_gen(const GenSpec& spec, const std::string& output, std::ostream& out) {
  std::ostringstream text;
  text << "# generated: mode=" << to_string(spec.mode) << " p=" << spec.p << " q=" << spec.q
       << " r=" << spec.r << " bc_density=" << spec.bc_density;
  if (spec.mode == GenMode::General) {
    text << " ab_density=" << spec.ab_density << " ac_density=" << spec.ac_density;
  }
  text << " seed=" << spec.seed << '\n' << serialize_graph(generate(spec));
  if (output.empty() || output == "-") {
    out << text.str();
  } else {
    std::ofstream file(output);
    if (!file) throw Error("cannot write " + output);
    file << text.str();
  }
  return kOk;
}

int cmd_triangles(const std::string& path, const Common& common, std::ostream& out) {
  auto g = load_graph(path);
  auto ts = enumerate_triangles(g);
  if (common.machine) {
    Json doc;
    doc["command"] = "triangles";
    doc["count"] = ts.size();
    doc["triangles"] = triangle_list(ts);
    out << doc.dump(2) << '\n';
  } else {
    out << "triangles (" << ts.size() << "):\n";
    for (const Triangle& t : ts) out << "  " << to_string(t) << '\n';
  }
  return kOk;
}

}  // namespace

OracleBudget parse_budget(std::string_view text) {
  OracleBudget budget;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("budget item '" + std::string(item) + "' is not key=value");
    }
    std::string_view key = item.substr(0, eq);
    std::string_view value = item.substr(eq + 1);
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      throw std::invalid_argument("budget value '" + std::string(value) + "' is not a count");
    }
    if (key == "triangles") {
      budget.max_triangles = n;
    } else if (key == "bc-edges") {
      budget.max_bc_edges = n;
    } else if (key == "bc-vertices") {
      budget.max_bc_vertices = n;
    } else if (key == "seconds") {
      budget.time_limit = std::chrono::seconds(n);
    } else {
      throw std::invalid_argument("unknown budget key '" + std::string(key) + "'");
    }
  }
  return budget;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum triangle transversals and maximum triangle packings of tripartite graphs",
               "tripack"};
  app.require_subcommand(1);
  Common common;
  std::string budget_text;

  auto add_machine = [&](CLI::App* sub) {
    sub->add_flag("--machine", common.machine, "Emit one JSON document instead of text");
  };

  std::string graph_path;
  std::string export_network;
  auto* solve_cmd = app.add_subcommand("solve", "Certify a minimum transversal and maximum packing");
  solve_cmd->add_option("graph", graph_path, "Graph file")->required();
  solve_cmd->add_option("--export-network", export_network,
                        "Write the network arcs (tail head capacity) to a file, or - for stdout");
  add_machine(solve_cmd);

  std::string transversal_path;
  std::string packing_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a transversal and/or packing file");
  verify_cmd->add_option("graph", graph_path, "Graph file")->required();
  verify_cmd->add_option("--transversal", transversal_path, "File of u-v edge tokens");
  verify_cmd->add_option("--packing", packing_path, "File of x-y-z triangle tokens");
  add_machine(verify_cmd);

  OracleChoice choice;
  auto* oracle_cmd = app.add_subcommand("oracle", "Run exact brute-force baselines against solve");
  oracle_cmd->add_option("graph", graph_path, "Graph file")->required();
  oracle_cmd->add_flag("--all", choice.all, "Run every applicable baseline (default)");
  oracle_cmd->add_flag("--packing", choice.packing, "Maximum packing search");
  oracle_cmd->add_flag("--transversal", choice.transversal, "Minimum transversal search");
  oracle_cmd->add_flag("--uniform", choice.uniform, "Uniform transversal minimum");
  oracle_cmd->add_flag("--mao-cheng", choice.mao_cheng, "Subset-pair minimum over B and C");
  oracle_cmd->add_flag("--enumerate-min", choice.enumerate_min, "List every minimum transversal");
  oracle_cmd->add_option("--budget", budget_text,
                         "Limits, e.g. triangles=40,bc-edges=14,bc-vertices=14,seconds=30");
  add_machine(oracle_cmd);

  GenSpec spec;
  std::string mode_text = "bilateral";
  std::string output;
  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded random graph file");
  gen_cmd->add_option("--p", spec.p, "|A|")->required();
  gen_cmd->add_option("--q", spec.q, "|B|")->required();
  gen_cmd->add_option("--r", spec.r, "|C|")->required();
  gen_cmd->add_option("--density", spec.bc_density, "BC edge probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--ab-density", spec.ab_density, "AB edge probability (general mode)")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--ac-density", spec.ac_density, "AC edge probability (general mode)")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--mode", mode_text, "bilateral | complete | general")
      ->check(CLI::IsMember({"bilateral", "complete", "general"}));
  gen_cmd->add_option("--seed", spec.seed, "64-bit seed");
  gen_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* triangles_cmd = app.add_subcommand("triangles", "List every triangle");
  triangles_cmd->add_option("graph", graph_path, "Graph file")->required();
  add_machine(triangles_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(graph_path, export_network, common, out);
    if (verify_cmd->parsed()) {
      return cmd_verify(graph_path, transversal_path, packing_path, common, out, err);
    }
    if (oracle_cmd->parsed()) {
      OracleBudget budget = budget_text.empty() ? OracleBudget{} : parse_budget(budget_text);
      return cmd_oracle(graph_path, choice, budget, common, out);
    }
    if (gen_cmd->parsed()) {
      spec.mode = *parse_gen_mode(mode_text);
      return cmd_gen(spec, output, out);
    }
    if (triangles_cmd->parsed()) return cmd_triangles(graph_path, common, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ParseError::Kind::Syntax ? kParseError : kValidationError;
  } catch (const ValidationError& e) {
    err << "error: invalid graph: " << e.what() << '\n';
    return kValidationError;
  } catch (const NotBilaterallyComplete& e) {
    err << "error: " << e.what() << '\n';
    return kNotBilaterallyComplete;
  } catch (const BudgetExceeded& e) {
    err << "error: oracle budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const InvariantViolation& e) {
    err << "error: internal check failed: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace tripack::cli
