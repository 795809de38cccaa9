#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tmcap/capacity.hpp"
#include "tmcap/choquet.hpp"
#include "tmcap/slln.hpp"

namespace tmcap::io {

// --- capacity spec documents ------------------------------------------------
//
// {
//   "frame": ["H", "T"],
//   "mass":  [ {"subset": ["H"], "weight": 0.4},
//              {"subset": ["H", "T"], "weight": 0.6} ],
//   "rv":    {"H": 1.0, "T": 0.0}
// }
//
// The table variant replaces "mass" with a full "capacity" table:
//   "capacity": [ {"subset": ["H"], "value": 0.6}, ... ]
// listing every nonempty subset once (the empty set defaults to 0).

struct ParsedSpec {
  MassFunction mass;
  std::optional<RandomVariable> rv;
};

ParsedSpec parse_capacity_spec(const std::string& text);

struct ParsedTableSpec {
  Capacity capacity;
  std::optional<RandomVariable> rv;
};

ParsedTableSpec parse_capacity_table_spec(const std::string& text);

std::string capacity_spec_to_json(const MassFunction& mass, const RandomVariable* rv = nullptr);

// --- joint spec documents (verify-independence) -----------------------------
//
// {
//   "left":  {"frame": ["H","T"], "mass": [...], "rv": {"H":1,"T":0}},
//   "right": { ... },                  // optional, defaults to "left"
//   "joint": [ {"subset": ["H|H","T|T"], "weight": 1.0}, ... ]  // optional
// }
//
// Without "joint" the fully independent product of the two masses is used.
// An explicit "joint" may put mass on arbitrary subsets of the product frame
// (labels are "<left>|<right>"), so non-product joints are expressible.

struct ParsedJointSpec {
  ProductLayout layout;
  MassFunction joint;
  RandomVariable first;
  RandomVariable second;
};

ParsedJointSpec parse_joint_spec(const std::string& text);

// --- report serialization ----------------------------------------------------

std::string monotonicity_report_to_json(const MonotonicityReport& report, const Frame& frame);
MonotonicityReport monotonicity_report_from_json(const std::string& text, const Frame& frame);

std::string independence_to_json(const IndependenceReport& pairwise,
                                 const DistributionReport& identical);
std::pair<IndependenceReport, DistributionReport> independence_from_json(const std::string& text);

// Summary of an SLLN run: everything except the traces, which go to CSV.
std::string slln_summary_to_json(const SllnReport& report);
// Parses a summary back; the returned report carries empty traces.
SllnReport slln_summary_from_json(const std::string& text);

// --- trace CSV ----------------------------------------------------------------
//
// Columns: n, min_avg, max_avg, dist_lo, dist_hi with dist_* the absolute
// deviation of the running averages from the target endpoints. Floats are
// written with 17 significant digits so parsing recovers them exactly.

struct TraceRow {
  std::uint64_t step = 0;
  double min_avg = 0.0;
  double max_avg = 0.0;
  double dist_lo = 0.0;
  double dist_hi = 0.0;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

std::string trace_to_csv(const ReplicationSummary& replication, const Interval& target);
std::vector<TraceRow> trace_from_csv(const std::string& text);

// Writes summary.json plus one trace_rNNN.csv per replication; returns the
// paths written (summary first). Throws E_IO on filesystem failures.
std::vector<std::filesystem::path> emit_slln_results(const SllnReport& report,
                                                     const std::filesystem::path& out_dir);

// Small file helpers used by the CLI; throw E_IO.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace tmcap::io
