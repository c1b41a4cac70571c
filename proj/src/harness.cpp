#include "zfdom/harness.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "zfdom/domination.hpp"
#include "zfdom/forcing.hpp"
#include "zfdom/generators.hpp"

namespace zfdom {

bool is_necklace_star(const Graph& g) {
  if (g.n == 4) return canonical_form(g) == canonical_form(named_graph("K4"));
  if (g.n >= 8 && g.n % 4 == 0)
    return canonical_form(g) == canonical_form(diamond_necklace(g.n / 4));
  return false;
}

InvariantRecord compute_record(const Graph& g) {
  InvariantRecord r;
  r.graph6 = canonical_form(g);
  r.n = g.n;
  r.z = zero_forcing_number(g).number;
  r.gamma = domination_number(g).number;
  r.i = independent_domination_number(g).number;
  r.alpha = independence_number(g).number;
  r.claw_free = is_claw_free(g);
  r.diamond_free = find_diamonds(g).empty();
  r.is_necklace_star = is_necklace_star(g);
  r.slack = r.z - r.gamma;
  return r;
}

std::vector<InvariantRecord> sweep(const SweepConfig& config, int jobs) {
  std::vector<Graph> graphs;
  for (int order : config.orders) {
    CubicEnumerationConfig ec;
    ec.n = order;
    ec.require_connected = true;
    ec.require_claw_free = config.require_claw_free;
    ec.require_diamond_free = config.require_diamond_free;
    enumerate_cubic(ec, [&](const Graph& g) { graphs.push_back(g); });
  }

  std::vector<InvariantRecord> records(graphs.size());
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs <= 1 || graphs.size() <= 1) {
    for (size_t i = 0; i < graphs.size(); ++i)
      records[i] = compute_record(graphs[i]);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= graphs.size()) return;
        records[i] = compute_record(graphs[i]);
      }
    };
    std::vector<std::thread> pool;
    int count = std::min<int>(jobs, static_cast<int>(graphs.size()));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::sort(records.begin(), records.end(),
            [](const InvariantRecord& a, const InvariantRecord& b) {
              if (a.n != b.n) return a.n < b.n;
              return a.graph6 < b.graph6;
            });
  return records;
}

TheoremReport check_equality_characterization(
    const std::vector<InvariantRecord>& records) {
  TheoremReport report;
  for (const InvariantRecord& r : records) {
    if (!r.claw_free) {
      report.violations.push_back(r.graph6 +
                                  ": record is not claw-free; the bound "
                                  "only covers claw-free graphs");
      continue;
    }
    report.max_slack = std::max(report.max_slack, r.slack);
    if (r.slack > 2)
      report.violations.push_back(
          r.graph6 + ": z = " + std::to_string(r.z) + " exceeds gamma + 2 = " +
          std::to_string(r.gamma + 2));
    if (r.slack == 2) {
      report.equality_graphs.push_back(r.graph6);
      if (!r.is_necklace_star)
        report.violations.push_back(
            r.graph6 + ": z = gamma + 2 but the graph is not K4 or a "
                       "diamond necklace");
    }
    if (r.is_necklace_star && r.slack != 2)
      report.violations.push_back(
          r.graph6 + ": necklace-star graph with slack " +
          std::to_string(r.slack) + " instead of 2");
    if (r.slack == 1) report.near_graphs.push_back(r.graph6);
  }
  report.ok = report.violations.empty();
  return report;
}

TheoremReport check_diamond_free_survey(
    const std::vector<InvariantRecord>& records) {
  TheoremReport report;
  for (const InvariantRecord& r : records) {
    if (!r.diamond_free) continue;
    report.max_slack = std::max(report.max_slack, r.slack);
    if (r.slack >= 2) report.equality_graphs.push_back(r.graph6);
    if (r.slack == 1) report.near_graphs.push_back(r.graph6);
    if (r.claw_free && r.slack > 2) {
      report.violations.push_back(
          r.graph6 + ": z = " + std::to_string(r.z) + " exceeds gamma + 2 = " +
          std::to_string(r.gamma + 2));
      report.ok = false;
    }
  }
  return report;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

void write_report(const std::vector<InvariantRecord>& records,
                  ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::csv)
    out << "graph6,n,z,gamma,i,alpha,claw_free,diamond_free,is_necklace_star,"
           "slack\n";
  for (const InvariantRecord& r : records) {
    if (format == ReportFormat::csv) {
      out << r.graph6 << ',' << r.n << ',' << r.z << ',' << r.gamma << ','
          << r.i << ',' << r.alpha << ',' << bool_text(r.claw_free) << ','
          << bool_text(r.diamond_free) << ',' << bool_text(r.is_necklace_star)
          << ',' << r.slack << '\n';
    } else {
      out << "{\"graph6\":\"" << json_escape(r.graph6) << "\",\"n\":" << r.n
          << ",\"z\":" << r.z << ",\"gamma\":" << r.gamma << ",\"i\":" << r.i
          << ",\"alpha\":" << r.alpha
          << ",\"claw_free\":" << bool_text(r.claw_free)
          << ",\"diamond_free\":" << bool_text(r.diamond_free)
          << ",\"is_necklace_star\":" << bool_text(r.is_necklace_star)
          << ",\"slack\":" << r.slack << "}\n";
    }
  }
}

}  // namespace zfdom
