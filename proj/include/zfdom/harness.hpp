#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zfdom/graph.hpp"

namespace zfdom {

// One row of a sweep: every invariant we track for a single graph. The
// graph6 string is the canonical form, so records are stable across runs
// and across relabelings of the same graph.
struct InvariantRecord {
  std::string graph6;
  int n = 0;
  int z = 0;      // zero forcing number
  int gamma = 0;  // domination number
  int i = 0;      // independent domination number
  int alpha = 0;  // independence number
  bool claw_free = false;
  bool diamond_free = false;
  bool is_necklace_star = false;
  int slack = 0;  // z - gamma
};

InvariantRecord compute_record(const Graph& g);

// True when g is K4 or a diamond necklace (checked up to isomorphism).
bool is_necklace_star(const Graph& g);

struct SweepConfig {
  std::vector<int> orders;
  bool require_claw_free = true;
  bool require_diamond_free = false;
};

// Computes records for every connected cubic graph of the requested orders
// that passes the filters. `jobs` > 1 parallelizes the invariant
// computation; the result is sorted by (n, graph6) either way.
std::vector<InvariantRecord> sweep(const SweepConfig& config, int jobs = 1);

struct TheoremReport {
  bool ok = true;
  int max_slack = 0;
  std::vector<std::string> equality_graphs;  // slack == 2
  std::vector<std::string> near_graphs;      // slack == 1
  std::vector<std::string> violations;       // human-readable failures
};

// Checks Z <= gamma + 2 on every claw-free record and that slack == 2 holds
// exactly for the necklace-star graphs. ok is false on any violation.
TheoremReport check_equality_characterization(
    const std::vector<InvariantRecord>& records);

// Surveys the diamond-free records: reports the maximum slack and lists any
// graph reaching slack >= 2. Informational; ok stays true unless the
// claw-free bound itself breaks.
TheoremReport check_diamond_free_survey(
    const std::vector<InvariantRecord>& records);

enum class ReportFormat { jsonl, csv };

// Writes one line per record. Output is byte-identical across runs for the
// same record list.
void write_report(const std::vector<InvariantRecord>& records,
                  ReportFormat format, std::ostream& out);

}  // namespace zfdom
