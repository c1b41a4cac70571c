// Acceptance gate: exercises the headline guarantees end to end and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zfdom/certify.hpp"
#include "zfdom/domination.hpp"
#include "zfdom/forcing.hpp"
#include "zfdom/generators.hpp"
#include "zfdom/graph.hpp"
#include "zfdom/harness.hpp"

using namespace zfdom;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok,
            const std::string& detail, double seconds) {
  std::printf("[%d] %s: %s (%s, %.1fs)\n", index, ok ? "PASS" : "FAIL",
              name.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// --- Criterion 1: closed forms for the diamond necklace family ------------

void criterion_necklace_family() {
  Timer t;
  bool ok = true;
  std::string detail;
  for (int k = 2; k <= 5; ++k) {
    Graph g = diamond_necklace(k);
    int z = zero_forcing_number(g).number;
    int gamma = domination_number(g).number;
    int i = independent_domination_number(g).number;
    detail += (k > 2 ? "  " : "") + std::string("k=") + std::to_string(k) +
              ": z=" + std::to_string(z) + " gamma=" + std::to_string(gamma);
    ok = ok && z == k + 2 && gamma == k && i == k;
  }
  report(1, "necklace family: z = k+2 and gamma = i = k for k = 2..5", ok,
         detail, t.seconds());
}

// --- Criterion 2: anchor graphs -------------------------------------------

void criterion_anchors() {
  Timer t;
  auto zg = [](const Graph& g) {
    return std::pair<int, int>{zero_forcing_number(g).number,
                               domination_number(g).number};
  };
  auto [zk4, gk4] = zg(named_graph("K4"));
  auto [zpr, gpr] = zg(named_graph("prism"));
  auto [zn2, gn2] = zg(diamond_necklace(2));
  bool ok = zk4 == 3 && gk4 == 1 && zpr == 3 && gpr == 2 && zn2 == 4 &&
            gn2 == 2;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "K4 (%d,%d)  prism (%d,%d)  2-necklace (%d,%d)", zk4, gk4,
                zpr, gpr, zn2, gn2);
  report(2, "anchor graphs hit (z, gamma) = (3,1), (3,2), (4,2)", ok, buf,
         t.seconds());
}

// --- Criterion 3: the order-10 and order-14 mixed-unit graphs -------------

void criterion_named_fixtures() {
  Timer t;
  Graph f7 = named_graph("fig7_order10");
  Graph f9 = named_graph("fig9_order14");
  int z7 = zero_forcing_number(f7).number;
  int g7 = domination_number(f7).number;
  int z9 = zero_forcing_number(f9).number;
  int g9 = domination_number(f9).number;
  // The solver value for the order-14 graph is cross-checked against the
  // naive oracle rather than any published table.
  int g9_oracle = oracle::naive_domination_number(f9);
  bool ok = z7 == 4 && g7 == 3 && z9 == 5 && g9 == g9_oracle &&
            z9 <= g9 + 2;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "order-10: z=%d gamma=%d; order-14: z=%d gamma=%d (oracle %d)",
                z7, g7, z9, g9, g9_oracle);
  report(3, "mixed-unit fixtures: z=4/gamma=3 and z=5 with verified gamma",
         ok, buf, t.seconds());
}

// --- Criterion 4: the bound and its equality set over the full sweep ------

void criterion_sweep_characterization() {
  Timer t;
  SweepConfig sc;
  sc.orders = {4, 6, 8, 10, 12, 14};
  sc.require_claw_free = true;
  std::vector<InvariantRecord> records = sweep(sc, 4);
  TheoremReport rep = check_equality_characterization(records);

  std::set<std::string> expected = {canonical_form(named_graph("K4")),
                                    canonical_form(diamond_necklace(2)),
                                    canonical_form(diamond_necklace(3))};
  std::set<std::string> got(rep.equality_graphs.begin(),
                            rep.equality_graphs.end());
  bool ok = rep.ok && got == expected;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "%zu graphs, max slack %d, %zu equality graphs, %zu "
                "violations",
                records.size(), rep.max_slack, rep.equality_graphs.size(),
                rep.violations.size());
  report(4,
         "z <= gamma + 2 on all connected cubic claw-free graphs n <= 14, "
         "equality exactly on K4 and the 2- and 3-necklaces",
         ok, buf, t.seconds());
}

// --- Criterion 5: constructive certificates on the diamond-free corpus ----

void criterion_certificates() {
  Timer t;
  int total = 0, verified = 0;
  bool sizes_ok = true;
  for (int n = 6; n <= 14; n += 2) {
    CubicEnumerationConfig c;
    c.n = n;
    c.require_claw_free = true;
    c.require_diamond_free = true;
    enumerate_cubic(c, [&](const Graph& g) {
      ++total;
      CertificateLog log = build_two_factor_certificate(g);
      if (log.verified) ++verified;
      sizes_ok = sizes_ok &&
                 vs_count(log.final_set) == vs_count(log.dominating_set) + 1 &&
                 is_forcing_set(g, log.final_set);
    });
  }
  bool ok = total > 0 && verified == total && sizes_ok;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d/%d certificates verified at size gamma+1",
                verified, total);
  report(5,
         "every connected cubic claw-free diamond-free graph 6 <= n <= 14 "
         "gets a verified forcing set of size gamma + 1",
         ok, buf, t.seconds());
}

// --- Criterion 6: solver agreement with naive oracles, all classes n <= 8 -

void criterion_oracle_agreement() {
  Timer t;
  long long total = 0, agreed = 0;
  for (int n = 1; n <= 8; ++n) {
    enumerate_graphs(n, n > 1 ? n - 1 : 0, [&](const Graph& g) {
      ++total;
      bool match =
          zero_forcing_number(g).number ==
              oracle::naive_zero_forcing_number(g) &&
          domination_number(g).number == oracle::naive_domination_number(g);
      if (match) ++agreed;
    });
  }
  bool ok = total == 13598 && agreed == total;  // series 1,2,4,11,34,156,1044,12346
  char buf[128];
  std::snprintf(buf, sizeof buf, "%lld/%lld graphs agree", agreed, total);
  report(6,
         "z and gamma match the naive oracles on every isomorphism class "
         "with n <= 8",
         ok, buf, t.seconds());
}

// --- Criterion 7: property suite spot checks ------------------------------

void criterion_properties() {
  Timer t;
  std::mt19937 rng(20260817);
  bool ok = true;
  // Closure laws on random graphs.
  for (int trial = 0; trial < 200 && ok; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    std::bernoulli_distribution coin(0.25);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    Graph g = from_edge_list(n, edges);
    std::uniform_int_distribution<VertexSet> dist(0, vs_full(n));
    VertexSet s = dist(rng);
    VertexSet c = closure_set(g, s);
    ok = ok && (s & ~c) == 0 && closure_set(g, c) == c &&
         closure(g, s).final_set == c;
    VertexSet bigger = s | dist(rng);
    ok = ok && (c & ~closure_set(g, bigger)) == 0;
  }
  // Domination laws across the claw-free cubic corpus.
  int corpus = 0;
  for (int n : {6, 8, 10}) {
    CubicEnumerationConfig c;
    c.n = n;
    c.require_claw_free = true;
    enumerate_cubic(c, [&](const Graph& g) {
      ++corpus;
      ok = ok &&
           domination_number(g).number ==
               independent_domination_number(g).number &&
           4 * domination_number(g).number >= g.n;
    });
  }
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "closure laws on 200 random graphs, domination laws on %d "
                "corpus graphs",
                corpus);
  report(7, "property suite spot checks", ok, buf, t.seconds());
}

// --- Criterion 8: secondary forcing bounds on the corpus ------------------

void criterion_secondary_bounds() {
  Timer t;
  int checked = 0;
  bool ok = true;
  for (int n : {6, 8, 10, 12}) {
    CubicEnumerationConfig c;
    c.n = n;
    c.require_claw_free = true;
    enumerate_cubic(c, [&](const Graph& g) {
      ++checked;
      int z = zero_forcing_number(g).number;
      ok = ok && z <= independence_number(g).number + 1 &&
           z <= 2 * domination_number(g).number;
    });
  }
  // K4 is excluded above (n starts at 6): it is the unique exception.
  Graph k4 = named_graph("K4");
  ok = ok && zero_forcing_number(k4).number >
                 independence_number(k4).number + 1;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d corpus graphs beyond K4", checked);
  report(8, "z <= alpha + 1 and z <= 2 gamma on claw-free cubic graphs "
            "beyond K4",
         ok, buf, t.seconds());
}

}  // namespace

int main() {
  Timer total;
  criterion_necklace_family();
  criterion_anchors();
  criterion_named_fixtures();
  criterion_sweep_characterization();
  criterion_certificates();
  criterion_oracle_agreement();
  criterion_properties();
  criterion_secondary_bounds();
  std::printf("%d/8 criteria passed (%.1fs total)\n", 8 - failures,
              total.seconds());
  return failures == 0 ? 0 : 1;
}
