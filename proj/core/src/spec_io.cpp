#include "tmcap/spec_io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace tmcap::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json document = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (document.is_discarded()) {
    fail(ErrorCode::parse, "document is not valid JSON");
  }
  return document;
}

const json& require_field(const json& document, const char* key) {
  const auto it = document.find(key);
  if (it == document.end()) {
    fail(ErrorCode::parse, std::string("missing required field \"") + key + "\"");
  }
  return *it;
}

double require_number(const json& value, const char* what) {
  if (!value.is_number()) {
    fail(ErrorCode::parse, std::string(what) + " must be a number");
  }
  const double x = value.get<double>();
  if (!std::isfinite(x)) {
    fail(ErrorCode::parse, std::string(what) + " must be finite");
  }
  return x;
}

Frame parse_frame(const json& document) {
  const json& labels_json = require_field(document, "frame");
  if (!labels_json.is_array() || labels_json.empty()) {
    fail(ErrorCode::parse, "\"frame\" must be a nonempty array of labels");
  }
  std::vector<std::string> labels;
  for (const auto& label : labels_json) {
    if (!label.is_string()) fail(ErrorCode::parse, "frame labels must be strings");
    labels.push_back(label.get<std::string>());
  }
  return Frame(std::move(labels));
}

SubsetMask parse_subset(const Frame& frame, const json& subset_json) {
  if (!subset_json.is_array()) {
    fail(ErrorCode::parse, "\"subset\" must be an array of labels");
  }
  std::vector<std::string> labels;
  for (const auto& label : subset_json) {
    if (!label.is_string()) fail(ErrorCode::parse, "subset labels must be strings");
    labels.push_back(label.get<std::string>());
  }
  return frame.mask_of(labels);
}

// Shared by the mass and joint documents: entries are validated, the sum is
// checked against E_NORMALIZATION, then MassFunction enforces the rest.
MassFunction parse_mass_entries(const Frame& frame, const json& entries) {
  if (!entries.is_array() || entries.empty()) {
    fail(ErrorCode::parse, "\"mass\" must be a nonempty array of {subset, weight} entries");
  }
  std::map<SubsetMask, double> weights;
  double total = 0.0;
  for (const auto& entry : entries) {
    if (!entry.is_object()) fail(ErrorCode::parse, "mass entries must be objects");
    const SubsetMask set = parse_subset(frame, require_field(entry, "subset"));
    const double weight = require_number(require_field(entry, "weight"), "mass weight");
    if (!weights.emplace(set, weight).second) {
      fail(ErrorCode::parse, "duplicate mass entry for " + frame.mask_to_string(set));
    }
    total += weight;
  }
  if (std::abs(total - 1.0) > kDataTolerance) {
    fail(ErrorCode::normalization,
         "mass weights sum to " + std::to_string(total) + ", expected 1 within 1e-9");
  }
  return MassFunction(frame, weights);
}

std::optional<RandomVariable> parse_rv(const Frame& frame, const json& document) {
  const auto it = document.find("rv");
  if (it == document.end()) return std::nullopt;
  if (!it->is_object()) fail(ErrorCode::parse, "\"rv\" must map labels to numbers");
  std::map<std::string, double> by_label;
  for (const auto& [label, value] : it->items()) {
    by_label.emplace(label, require_number(value, "rv value"));
  }
  return RandomVariable(frame, by_label);
}

json mask_to_json(const Frame& frame, SubsetMask set) {
  return json(frame.mask_labels(set));
}

}  // namespace

ParsedSpec parse_capacity_spec(const std::string& text) {
  const json document = parse_json(text);
  const Frame frame = parse_frame(document);
  MassFunction mass = parse_mass_entries(frame, require_field(document, "mass"));
  return ParsedSpec{std::move(mass), parse_rv(frame, document)};
}

ParsedTableSpec parse_capacity_table_spec(const std::string& text) {
  const json document = parse_json(text);
  const Frame frame = parse_frame(document);
  const json& entries = require_field(document, "capacity");
  if (!entries.is_array()) {
    fail(ErrorCode::parse, "\"capacity\" must be an array of {subset, value} entries");
  }
  std::vector<double> table(frame.subset_count(), 0.0);
  std::vector<bool> seen(frame.subset_count(), false);
  for (const auto& entry : entries) {
    if (!entry.is_object()) fail(ErrorCode::parse, "capacity entries must be objects");
    const SubsetMask set = parse_subset(frame, require_field(entry, "subset"));
    if (seen[set]) {
      fail(ErrorCode::parse, "duplicate capacity entry for " + frame.mask_to_string(set));
    }
    seen[set] = true;
    table[set] = require_number(require_field(entry, "value"), "capacity value");
  }
  for (SubsetMask set = 1; set <= frame.full_mask(); ++set) {
    if (!seen[set]) {
      fail(ErrorCode::parse, "capacity table is missing " + frame.mask_to_string(set));
    }
  }
  return ParsedTableSpec{Capacity(frame, std::move(table)), parse_rv(frame, document)};
}

std::string capacity_spec_to_json(const MassFunction& mass, const RandomVariable* rv) {
  json document;
  document["frame"] = mass.frame().labels();
  json entries = json::array();
  for (const auto& [set, weight] : mass.weights()) {
    entries.push_back({{"subset", mask_to_json(mass.frame(), set)}, {"weight", weight}});
  }
  document["mass"] = std::move(entries);
  if (rv != nullptr) {
    json values;
    for (std::size_t i = 0; i < rv->frame().size(); ++i) {
      values[rv->frame().label(i)] = rv->value(i);
    }
    document["rv"] = std::move(values);
  }
  return document.dump(2) + "\n";
}

namespace {

struct SideSpec {
  Frame frame;
  std::optional<MassFunction> mass;
  RandomVariable rv;
};

SideSpec parse_side(const json& side_json, const char* name) {
  if (!side_json.is_object()) {
    fail(ErrorCode::parse, std::string("\"") + name + "\" must be an object");
  }
  Frame frame = parse_frame(side_json);
  std::optional<MassFunction> mass;
  if (side_json.contains("mass")) {
    mass = parse_mass_entries(frame, side_json.at("mass"));
  }
  std::optional<RandomVariable> rv = parse_rv(frame, side_json);
  if (!rv) {
    fail(ErrorCode::parse, std::string("\"") + name + "\" needs an \"rv\" entry");
  }
  return SideSpec{std::move(frame), std::move(mass), std::move(*rv)};
}

}  // namespace

ParsedJointSpec parse_joint_spec(const std::string& text) {
  const json document = parse_json(text);
  const SideSpec left = parse_side(require_field(document, "left"), "left");
  const SideSpec right =
      document.contains("right") ? parse_side(document.at("right"), "right") : left;

  ProductLayout layout = product_layout(left.frame, right.frame);
  std::optional<MassFunction> joint;
  if (document.contains("joint")) {
    joint = parse_mass_entries(layout.product, document.at("joint"));
  } else {
    if (!left.mass || !right.mass) {
      fail(ErrorCode::parse,
           "either a \"joint\" mass or both sides' \"mass\" entries are required");
    }
    joint = product_mass(*left.mass, *right.mass);
  }

  RandomVariable first = lift_first(layout, left.rv);
  RandomVariable second = lift_second(layout, right.rv);
  return ParsedJointSpec{std::move(layout), std::move(*joint), std::move(first),
                         std::move(second)};
}

std::string monotonicity_report_to_json(const MonotonicityReport& report, const Frame& frame) {
  json document;
  document["passed"] = report.passed;
  json counterexamples = json::array();
  for (const auto& ce : report.counterexamples) {
    json sets = json::array();
    for (const SubsetMask set : ce.sets) sets.push_back(mask_to_json(frame, set));
    counterexamples.push_back({{"sets", std::move(sets)}, {"lhs", ce.lhs}, {"rhs", ce.rhs}});
  }
  document["counterexamples"] = std::move(counterexamples);
  return document.dump(2) + "\n";
}

MonotonicityReport monotonicity_report_from_json(const std::string& text, const Frame& frame) {
  const json document = parse_json(text);
  MonotonicityReport report;
  report.passed = require_field(document, "passed").get<bool>();
  for (const auto& ce_json : require_field(document, "counterexamples")) {
    Counterexample ce;
    for (const auto& set_json : require_field(ce_json, "sets")) {
      ce.sets.push_back(parse_subset(frame, set_json));
    }
    ce.lhs = require_number(require_field(ce_json, "lhs"), "lhs");
    ce.rhs = require_number(require_field(ce_json, "rhs"), "rhs");
    report.counterexamples.push_back(std::move(ce));
  }
  return report;
}

std::string independence_to_json(const IndependenceReport& pairwise,
                                 const DistributionReport& identical) {
  json document;
  json pairwise_json;
  pairwise_json["passed"] = pairwise.passed;
  json violations = json::array();
  for (const auto& v : pairwise.violations) {
    violations.push_back({{"first_event", v.first_event},
                          {"second_event", v.second_event},
                          {"joint_value", v.joint_value},
                          {"product_value", v.product_value}});
  }
  pairwise_json["violations"] = std::move(violations);
  document["pairwise"] = std::move(pairwise_json);

  json identical_json;
  identical_json["passed"] = identical.passed;
  json mismatches = json::array();
  for (const auto& v : identical.violations) {
    mismatches.push_back({{"event", v.event},
                          {"first_value", v.first_value},
                          {"second_value", v.second_value}});
  }
  identical_json["violations"] = std::move(mismatches);
  document["identical"] = std::move(identical_json);
  return document.dump(2) + "\n";
}

std::pair<IndependenceReport, DistributionReport> independence_from_json(
    const std::string& text) {
  const json document = parse_json(text);
  IndependenceReport pairwise;
  const json& pairwise_json = require_field(document, "pairwise");
  pairwise.passed = require_field(pairwise_json, "passed").get<bool>();
  for (const auto& v : require_field(pairwise_json, "violations")) {
    IndependenceViolation violation;
    violation.first_event = v.at("first_event").get<std::vector<double>>();
    violation.second_event = v.at("second_event").get<std::vector<double>>();
    violation.joint_value = require_number(v.at("joint_value"), "joint_value");
    violation.product_value = require_number(v.at("product_value"), "product_value");
    pairwise.violations.push_back(std::move(violation));
  }

  DistributionReport identical;
  const json& identical_json = require_field(document, "identical");
  identical.passed = require_field(identical_json, "passed").get<bool>();
  for (const auto& v : require_field(identical_json, "violations")) {
    DistributionViolation violation;
    violation.event = v.at("event").get<std::vector<double>>();
    violation.first_value = require_number(v.at("first_value"), "first_value");
    violation.second_value = require_number(v.at("second_value"), "second_value");
    identical.violations.push_back(std::move(violation));
  }
  return {std::move(pairwise), std::move(identical)};
}

std::string slln_summary_to_json(const SllnReport& report) {
  json document;
  document["target"] = {{"lo", report.target.lo()}, {"hi", report.target.hi()}};
  document["tolerance_lo"] = report.tolerance_lo;
  document["tolerance_hi"] = report.tolerance_hi;
  document["tail_fraction"] = report.tail_fraction;
  document["horizon"] = report.horizon;
  document["trace_stride"] = report.trace_stride;
  document["seed"] = report.seed;
  document["passed"] = report.passed;

  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"replication", f.replication},
                        {"reason", f.reason},
                        {"value", f.value},
                        {"bound", f.bound}});
  }
  document["failures"] = std::move(failures);

  json replications = json::array();
  for (const auto& rep : report.replications) {
    replications.push_back({{"replication", rep.replication},
                            {"final_min_avg", rep.final_min_avg},
                            {"final_max_avg", rep.final_max_avg},
                            {"tail_low", rep.tail_low},
                            {"tail_high", rep.tail_high},
                            {"dist_lo", std::abs(rep.final_min_avg - report.target.lo())},
                            {"dist_hi", std::abs(rep.final_max_avg - report.target.hi())}});
  }
  document["replications"] = std::move(replications);
  return document.dump(2) + "\n";
}

SllnReport slln_summary_from_json(const std::string& text) {
  const json document = parse_json(text);
  SllnReport report;
  const json& target = require_field(document, "target");
  report.target = Interval(require_number(require_field(target, "lo"), "target.lo"),
                           require_number(require_field(target, "hi"), "target.hi"));
  report.tolerance_lo = require_number(require_field(document, "tolerance_lo"), "tolerance_lo");
  report.tolerance_hi = require_number(require_field(document, "tolerance_hi"), "tolerance_hi");
  report.tail_fraction = require_number(require_field(document, "tail_fraction"), "tail_fraction");
  report.horizon = require_field(document, "horizon").get<std::uint64_t>();
  report.trace_stride = require_field(document, "trace_stride").get<std::uint64_t>();
  report.seed = require_field(document, "seed").get<std::uint64_t>();
  report.passed = require_field(document, "passed").get<bool>();
  for (const auto& f : require_field(document, "failures")) {
    GateFailure failure;
    failure.replication = f.at("replication").get<std::uint32_t>();
    failure.reason = f.at("reason").get<std::string>();
    failure.value = require_number(f.at("value"), "failure value");
    failure.bound = require_number(f.at("bound"), "failure bound");
    report.failures.push_back(std::move(failure));
  }
  for (const auto& r : require_field(document, "replications")) {
    ReplicationSummary rep;
    rep.replication = r.at("replication").get<std::uint32_t>();
    rep.final_min_avg = require_number(r.at("final_min_avg"), "final_min_avg");
    rep.final_max_avg = require_number(r.at("final_max_avg"), "final_max_avg");
    rep.tail_low = require_number(r.at("tail_low"), "tail_low");
    rep.tail_high = require_number(r.at("tail_high"), "tail_high");
    report.replications.push_back(std::move(rep));
  }
  return report;
}

namespace {

std::string format_row(std::uint64_t step, double min_avg, double max_avg, double dist_lo,
                       double dist_hi) {
  char buffer[192];
  std::snprintf(buffer, sizeof(buffer), "%" PRIu64 ",%.17g,%.17g,%.17g,%.17g\n", step, min_avg,
                max_avg, dist_lo, dist_hi);
  return buffer;
}

}  // namespace

std::string trace_to_csv(const ReplicationSummary& replication, const Interval& target) {
  std::string out = "n,min_avg,max_avg,dist_lo,dist_hi\n";
  for (const auto& point : replication.trace) {
    out += format_row(point.step, point.min_avg, point.max_avg,
                      std::abs(point.min_avg - target.lo()),
                      std::abs(point.max_avg - target.hi()));
  }
  return out;
}

std::vector<TraceRow> trace_from_csv(const std::string& text) {
  std::istringstream stream(text);
  std::string line;
  if (!std::getline(stream, line) || line != "n,min_avg,max_avg,dist_lo,dist_hi") {
    fail(ErrorCode::parse, "trace CSV is missing the expected header");
  }
  std::vector<TraceRow> rows;
  while (std::getline(stream, line)) {
    if (line.empty()) continue;
    TraceRow row;
    char* cursor = line.data();
    char* end = nullptr;
    row.step = std::strtoull(cursor, &end, 10);
    double* fields[] = {&row.min_avg, &row.max_avg, &row.dist_lo, &row.dist_hi};
    for (double* field : fields) {
      if (*end != ',') fail(ErrorCode::parse, "malformed trace CSV row: " + line);
      cursor = end + 1;
      *field = std::strtod(cursor, &end);
    }
    if (*end != '\0') fail(ErrorCode::parse, "malformed trace CSV row: " + line);
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::filesystem::path> emit_slln_results(const SllnReport& report,
                                                     const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    fail(ErrorCode::io, "cannot create output directory " + out_dir.string() + ": " +
                            ec.message());
  }
  std::vector<std::filesystem::path> written;
  const std::filesystem::path summary_path = out_dir / "summary.json";
  write_text_file(summary_path, slln_summary_to_json(report));
  written.push_back(summary_path);
  for (const auto& rep : report.replications) {
    char name[32];
    std::snprintf(name, sizeof(name), "trace_r%03u.csv", rep.replication);
    const std::filesystem::path trace_path = out_dir / name;
    write_text_file(trace_path, trace_to_csv(rep, report.target));
    written.push_back(trace_path);
  }
  return written;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) fail(ErrorCode::io, "error while reading " + path.string());
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::io, "cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) fail(ErrorCode::io, "error while writing " + path.string());
}

}  // namespace tmcap::io
