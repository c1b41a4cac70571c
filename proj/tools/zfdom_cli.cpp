#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zfdom/certify.hpp"
#include "zfdom/domination.hpp"
#include "zfdom/forcing.hpp"
#include "zfdom/generators.hpp"
#include "zfdom/graph.hpp"
#include "zfdom/harness.hpp"
#include "zfdom/structure.hpp"

namespace {

using nlohmann::ordered_json;

// Graphs come either from a positional graph6 argument or, when that is
// empty, one graph6 string per stdin line.
std::vector<zfdom::Graph> read_graphs(const std::string& positional) {
  std::vector<zfdom::Graph> graphs;
  if (!positional.empty()) {
    graphs.push_back(zfdom::parse_graph6(positional));
    return graphs;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    graphs.push_back(zfdom::parse_graph6(line));
  }
  if (graphs.empty())
    throw std::runtime_error("no graph given (argument or stdin)");
  return graphs;
}

zfdom::VertexSet parse_vertex_list(const std::string& text, int n) {
  zfdom::VertexSet set = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int v = std::stoi(item);
    if (v < 0 || v >= n)
      throw std::runtime_error("vertex " + std::to_string(v) +
                               " out of range for order " + std::to_string(n));
    set |= zfdom::vs_bit(v);
  }
  return set;
}

ordered_json unit_to_json(const zfdom::Unit& u) {
  ordered_json j;
  j["kind"] = u.kind == zfdom::UnitKind::triangle ? "triangle" : "diamond";
  j["members"] = zfdom::vs_to_vector(u.members);
  if (u.kind == zfdom::UnitKind::diamond) {
    j["a"] = u.a;
    j["b"] = u.b;
    j["c"] = u.c;
    j["d"] = u.d;
  }
  return j;
}

ordered_json certificate_to_json(const zfdom::CertificateLog& log) {
  ordered_json j;
  j["mode"] = log.initial_mode == zfdom::InitializationMode::path ? "path"
                                                                  : "cycle";
  j["dominating_set"] = zfdom::vs_to_vector(log.dominating_set);
  j["initial_set"] = zfdom::vs_to_vector(log.initial_set);
  ordered_json swaps = ordered_json::array();
  for (const zfdom::RuleApplication& ra : log.rule_applications) {
    ordered_json s;
    s["rule"] = ra.rule;
    s["removed"] = ra.removed;
    s["added"] = ra.added;
    swaps.push_back(s);
  }
  j["rule_applications"] = swaps;
  j["final_set"] = zfdom::vs_to_vector(log.final_set);
  ordered_json steps = ordered_json::array();
  for (auto [forcer, forced] : log.final_trace.steps)
    steps.push_back(ordered_json::array({forcer, forced}));
  j["trace"] = steps;
  j["verified"] = log.verified;
  if (!log.verified) {
    j["failure_reason"] = log.failure_reason;
    j["stuck_blue"] = zfdom::vs_to_vector(log.stuck_blue);
  }
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"zero forcing and domination toolkit for cubic graphs"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "emit a named graph as graph6");
  int necklace_k = 0;
  std::string named;
  gen->add_option("--necklace", necklace_k,
                  "diamond necklace with this many diamonds (k >= 2)");
  gen->add_option("--named", named,
                  "named graph: K4, prism, fig7_order10, fig9_order14");

  // enumerate
  auto* enumerate = app.add_subcommand(
      "enumerate", "list connected cubic graphs of a given order");
  int enum_order = 0;
  bool enum_claw_free = false, enum_diamond_free = false;
  enumerate->add_option("--order", enum_order, "number of vertices (even)")
      ->required();
  enumerate->add_flag("--claw-free", enum_claw_free, "keep claw-free only");
  enumerate->add_flag("--diamond-free", enum_diamond_free,
                      "keep diamond-free only");

  // partition
  auto* partition = app.add_subcommand(
      "partition", "print the triangle/diamond unit partition as JSON");
  std::string partition_g6;
  partition->add_option("graph6", partition_g6, "graph in graph6 form");

  // force
  auto* force = app.add_subcommand("force", "run zero forcing");
  std::string force_g6, force_set;
  bool force_min = false;
  force->add_option("graph6", force_g6, "graph in graph6 form");
  force->add_option("--set", force_set, "comma-separated initial blue set");
  force->add_flag("--min", force_min,
                  "compute the zero forcing number and a witness");

  // dominate
  auto* dominate = app.add_subcommand("dominate", "compute domination values");
  std::string dom_g6;
  bool want_gamma = false, want_i = false, want_alpha = false;
  dominate->add_option("graph6", dom_g6, "graph in graph6 form");
  dominate->add_flag("--gamma", want_gamma, "domination number");
  dominate->add_flag("--i", want_i, "independent domination number");
  dominate->add_flag("--alpha", want_alpha, "independence number");

  // certify
  auto* certify = app.add_subcommand(
      "certify",
      "build a forcing set of size gamma + 1 for a connected cubic "
      "claw-free diamond-free graph");
  std::string cert_g6, cert_set;
  certify->add_option("graph6", cert_g6, "graph in graph6 form");
  certify->add_option("--set", cert_set,
                      "independent dominating set to start from "
                      "(default: computed)");

  // sweep
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "tabulate invariants over connected cubic graphs");
  std::vector<int> sweep_orders;
  bool sweep_claw_free = false, sweep_diamond_free = false;
  std::string sweep_format = "jsonl", sweep_out;
  int sweep_jobs = 1;
  sweep_cmd->add_option("--order", sweep_orders, "orders to cover (even)")
      ->required();
  sweep_cmd->add_flag("--claw-free", sweep_claw_free, "keep claw-free only");
  sweep_cmd->add_flag("--diamond-free", sweep_diamond_free,
                      "keep diamond-free only");
  sweep_cmd->add_option("--format", sweep_format, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  sweep_cmd->add_option("--out", sweep_out, "output file (default stdout)");
  sweep_cmd->add_option("--jobs", sweep_jobs, "worker threads");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "check the bound z <= gamma + 2 and its equality cases");
  std::string verify_what = "theorem";
  int verify_max_order = 10;
  int verify_jobs = 1;
  verify->add_option("what", verify_what, "only 'theorem' is supported");
  verify->add_option("--max-order", verify_max_order,
                     "largest order to sweep (even, >= 4)");
  verify->add_option("--jobs", verify_jobs, "worker threads");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    if ((necklace_k >= 2) == !named.empty()) {
      std::cerr << "generate: pass exactly one of --necklace or --named\n";
      return 2;
    }
    zfdom::Graph g = necklace_k >= 2 ? zfdom::diamond_necklace(necklace_k)
                                     : zfdom::named_graph(named);
    std::cout << zfdom::write_graph6(g) << '\n';
    return 0;
  }

  if (enumerate->parsed()) {
    if (enum_order >= 16)
      std::cerr << "note: order " << enum_order
                << " enumeration may take a while\n";
    zfdom::CubicEnumerationConfig ec;
    ec.n = enum_order;
    ec.require_claw_free = enum_claw_free;
    ec.require_diamond_free = enum_diamond_free;
    zfdom::enumerate_cubic(ec, [](const zfdom::Graph& g) {
      std::cout << zfdom::canonical_form(g) << '\n';
    });
    return 0;
  }

  if (partition->parsed()) {
    for (const zfdom::Graph& g : read_graphs(partition_g6)) {
      zfdom::DeltaDPartition p = zfdom::delta_d_partition(g);
      ordered_json j;
      ordered_json units = ordered_json::array();
      for (const zfdom::Unit& u : p.units) units.push_back(unit_to_json(u));
      j["units"] = units;
      ordered_json cross = ordered_json::array();
      for (auto [a, b] : p.unit_adjacency)
        cross.push_back(ordered_json::array({a, b}));
      j["unit_adjacency"] = cross;
      std::cout << j.dump() << '\n';
    }
    return 0;
  }

  if (force->parsed()) {
    for (const zfdom::Graph& g : read_graphs(force_g6)) {
      if (force_min) {
        zfdom::ZeroForcingResult r = zfdom::zero_forcing_number(g);
        std::cout << "z = " << r.number
                  << "  witness = " << zfdom::vs_to_string(r.witness) << '\n';
        continue;
      }
      if (force_set.empty()) {
        std::cerr << "force: pass --set or --min\n";
        return 2;
      }
      zfdom::VertexSet initial = parse_vertex_list(force_set, g.n);
      zfdom::ForcingTrace trace = zfdom::closure(g, initial);
      for (auto [forcer, forced] : trace.steps)
        std::cout << forcer << " -> " << forced << '\n';
      std::cout << "closure = " << zfdom::vs_to_string(trace.final_set)
                << (trace.final_set == zfdom::vs_full(g.n) ? "  (forcing set)"
                                                           : "")
                << '\n';
    }
    return 0;
  }

  if (dominate->parsed()) {
    if (!want_gamma && !want_i && !want_alpha) want_gamma = true;
    for (const zfdom::Graph& g : read_graphs(dom_g6)) {
      if (want_gamma) {
        zfdom::DominationWitness w = zfdom::domination_number(g);
        std::cout << "gamma = " << w.number
                  << "  witness = " << zfdom::vs_to_string(w.set) << '\n';
      }
      if (want_i) {
        zfdom::DominationWitness w = zfdom::independent_domination_number(g);
        std::cout << "i = " << w.number
                  << "  witness = " << zfdom::vs_to_string(w.set) << '\n';
      }
      if (want_alpha) {
        zfdom::DominationWitness w = zfdom::independence_number(g);
        std::cout << "alpha = " << w.number
                  << "  witness = " << zfdom::vs_to_string(w.set) << '\n';
      }
    }
    return 0;
  }

  if (certify->parsed()) {
    bool all_verified = true;
    for (const zfdom::Graph& g : read_graphs(cert_g6)) {
      zfdom::CertificateLog log =
          cert_set.empty()
              ? zfdom::build_two_factor_certificate(g)
              : zfdom::run_scheduler(g, parse_vertex_list(cert_set, g.n));
      std::cout << certificate_to_json(log).dump() << '\n';
      all_verified = all_verified && log.verified;
    }
    return all_verified ? 0 : 1;
  }

  if (sweep_cmd->parsed()) {
    zfdom::SweepConfig sc;
    sc.orders = sweep_orders;
    sc.require_claw_free = sweep_claw_free;
    sc.require_diamond_free = sweep_diamond_free;
    std::vector<zfdom::InvariantRecord> records =
        zfdom::sweep(sc, sweep_jobs);
    zfdom::ReportFormat fmt = sweep_format == "csv"
                                  ? zfdom::ReportFormat::csv
                                  : zfdom::ReportFormat::jsonl;
    if (sweep_out.empty()) {
      zfdom::write_report(records, fmt, std::cout);
    } else {
      std::ofstream out(sweep_out);
      if (!out) {
        std::cerr << "sweep: cannot open " << sweep_out << '\n';
        return 2;
      }
      zfdom::write_report(records, fmt, out);
    }
    return 0;
  }

  if (verify->parsed()) {
    if (verify_what != "theorem") {
      std::cerr << "verify: unknown target '" << verify_what << "'\n";
      return 2;
    }
    if (verify_max_order < 4 || verify_max_order % 2 != 0) {
      std::cerr << "verify: --max-order must be an even number >= 4\n";
      return 2;
    }
    zfdom::SweepConfig sc;
    sc.require_claw_free = true;
    for (int n = 4; n <= verify_max_order; n += 2) sc.orders.push_back(n);
    std::vector<zfdom::InvariantRecord> records =
        zfdom::sweep(sc, verify_jobs);
    zfdom::TheoremReport report =
        zfdom::check_equality_characterization(records);
    std::cout << "graphs checked: " << records.size() << '\n';
    std::cout << "max slack (z - gamma): " << report.max_slack << '\n';
    std::cout << "equality graphs (z = gamma + 2):";
    for (const std::string& s : report.equality_graphs) std::cout << ' ' << s;
    std::cout << '\n';
    for (const std::string& v : report.violations)
      std::cout << "VIOLATION: " << v << '\n';
    std::cout << (report.ok ? "theorem check PASSED" : "theorem check FAILED")
              << '\n';
    return report.ok ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
