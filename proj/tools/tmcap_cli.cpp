// tmcap command line tool: validation, Choquet integration, correspondence
// inspection, limit-law simulation and independence verification for totally
// monotone capacities described by JSON spec documents.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tmcap/capacity.hpp"
#include "tmcap/choquet.hpp"
#include "tmcap/representation.hpp"
#include "tmcap/slln.hpp"
#include "tmcap/spec_io.hpp"

namespace {

using namespace tmcap;

std::string num(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return buffer;
}

struct CapacityInput {
  Frame frame;
  std::optional<MassFunction> mass;  // present unless a raw table was given
  Capacity capacity;
  std::optional<RandomVariable> rv;
};

// Mass-function-first ingestion; raw tables are accepted behind
// --capacity-table and converted back through Moebius inversion when a
// command needs focal elements.
CapacityInput load_capacity(const std::string& spec_path, bool capacity_table) {
  const std::string text = io::read_text_file(spec_path);
  if (capacity_table) {
    io::ParsedTableSpec parsed = io::parse_capacity_table_spec(text);
    Frame frame = parsed.capacity.frame();
    return CapacityInput{std::move(frame), std::nullopt, std::move(parsed.capacity),
                         std::move(parsed.rv)};
  }
  io::ParsedSpec parsed = io::parse_capacity_spec(text);
  Frame frame = parsed.mass.frame();
  Capacity capacity = capacity_from_mass(parsed.mass);
  return CapacityInput{std::move(frame), std::move(parsed.mass), std::move(capacity),
                       std::move(parsed.rv)};
}

MassFunction require_mass(CapacityInput& input) {
  if (input.mass) return *input.mass;
  // Raw table route: Moebius inversion plus nonnegativity check.
  return mobius_from_capacity(input.capacity).to_mass_function(kDataTolerance);
}

RandomVariable require_rv(const CapacityInput& input, const char* command) {
  if (!input.rv) {
    fail(ErrorCode::parse,
         std::string("the capacity document needs an \"rv\" entry for `") + command + "`");
  }
  return *input.rv;
}

void print_counterexamples(const Frame& frame, const MonotonicityReport& report) {
  for (const auto& ce : report.counterexamples) {
    std::string sets;
    for (const auto& mask : ce.sets) {
      if (!sets.empty()) sets += ", ";
      sets += frame.mask_to_string(mask);
    }
    std::cout << "  collection " << sets << ": lhs " << num(ce.lhs) << " < rhs "
              << num(ce.rhs) << "\n";
  }
}

void maybe_write(const std::optional<std::string>& out_dir, const std::string& file_name,
                 const std::string& content) {
  if (!out_dir) return;
  std::error_code ec;
  std::filesystem::create_directories(*out_dir, ec);
  if (ec) fail(ErrorCode::io, "cannot create output directory " + *out_dir);
  io::write_text_file(std::filesystem::path(*out_dir) / file_name, content);
}

int run_validate(const std::string& spec_path, bool capacity_table, int n_max,
                 std::uint64_t budget, const std::optional<std::string>& out_dir) {
  CapacityInput input = load_capacity(spec_path, capacity_table);
  std::cout << "capacity on frame " << input.frame.mask_to_string(input.frame.full_mask())
            << " (" << input.frame.subset_count() << " subsets)\n";

  const MonotonicityReport axioms = check_axioms(input.capacity);
  std::cout << "(c.1)+(c.2) axioms: " << (axioms.passed ? "pass" : "FAIL") << "\n";
  print_counterexamples(input.frame, axioms);

  bool all_passed = axioms.passed;
  std::string c5_json = "null";
  if (axioms.passed) {
    TotalMonotonicityOptions options;
    options.collection_budget = budget;
    const MonotonicityReport c5 = check_total_monotonicity(input.capacity, n_max, options);
    std::cout << "(c.5) total monotonicity (n_max=" << n_max << "): "
              << (c5.passed ? "pass" : "FAIL") << "\n";
    print_counterexamples(input.frame, c5);
    all_passed = all_passed && c5.passed;
    c5_json = io::monotonicity_report_to_json(c5, input.frame);
  } else {
    std::cout << "(c.5) total monotonicity: skipped ((c.1) failed)\n";
  }

  if (out_dir) {
    std::string document = "{\n\"axioms\": " + io::monotonicity_report_to_json(axioms, input.frame) +
                           ",\n\"total_monotonicity\": " + c5_json + "\n}\n";
    maybe_write(out_dir, "validate.json", document);
  }
  return all_passed ? 0 : 1;
}

int run_choquet(const std::string& spec_path, bool capacity_table,
                const std::optional<std::string>& out_dir) {
  CapacityInput input = load_capacity(spec_path, capacity_table);
  const RandomVariable rv = require_rv(input, "choquet");

  const MonotonicityReport axioms = check_axioms(input.capacity);
  const double lower = choquet_integral(rv, input.capacity);
  const double upper = upper_choquet_integral(rv, input.capacity);
  const double dual_route = choquet_integral(rv, dual_capacity(input.capacity));
  const bool dual_agrees = std::abs(upper - dual_route) <= kInternalTolerance;
  const bool ordered = lower <= upper + kInternalTolerance;

  std::cout << "lower " << num(lower) << "\n";
  std::cout << "upper " << num(upper) << "\n";
  std::cout << "interval [" << num(lower) << ", " << num(upper) << "]\n";
  std::cout << "axioms: " << (axioms.passed ? "pass" : "FAIL") << "\n";
  std::cout << "dual-route agreement: " << (dual_agrees ? "pass" : "FAIL") << "\n";

  if (out_dir) {
    std::string document = "{\n  \"lower\": " + num(lower) + ",\n  \"upper\": " + num(upper) +
                           ",\n  \"axioms_passed\": " + (axioms.passed ? "true" : "false") +
                           ",\n  \"dual_route_agrees\": " + (dual_agrees ? "true" : "false") +
                           "\n}\n";
    maybe_write(out_dir, "choquet.json", document);
  }
  return (axioms.passed && dual_agrees && ordered) ? 0 : 1;
}

int run_represent(const std::string& spec_path, bool capacity_table,
                  const std::optional<std::string>& out_dir) {
  CapacityInput input = load_capacity(spec_path, capacity_table);
  const MassFunction mass = require_mass(input);
  const FrameCorrespondence correspondence = correspondence_from_mass(mass);

  std::cout << "cells:\n";
  for (const auto& cell : correspondence.cells()) {
    std::cout << "  " << num(cell.weight) << " " << input.frame.mask_to_string(cell.focal)
              << "\n";
  }
  const bool round_trip = lower_distribution(correspondence) == capacity_from_mass(mass);
  std::cout << "round-trip lower distribution matches capacity: " << (round_trip ? "yes" : "NO")
            << "\n";

  if (out_dir) {
    std::string cells = "[";
    bool first = true;
    for (const auto& cell : correspondence.cells()) {
      if (!first) cells += ",";
      first = false;
      cells += "\n  {\"weight\": " + num(cell.weight) + ", \"focal\": \"" +
               input.frame.mask_to_string(cell.focal) + "\"}";
    }
    cells += "\n]";
    maybe_write(out_dir, "represent.json",
                "{\n\"cells\": " + cells + ",\n\"round_trip\": " +
                    (round_trip ? "true" : "false") + "\n}\n");
  }
  return round_trip ? 0 : 1;
}

struct SimulateFlags {
  std::string spec_path;
  bool capacity_table = false;
  std::uint64_t horizon = 10'000;
  std::uint32_t replications = 20;
  std::uint64_t seed = 1;
  double tail_fraction = 0.1;
  std::optional<double> tolerance;
  std::uint64_t trace_stride = 0;
  std::uint64_t exact_n = 16;
  std::string out_dir;
};

int run_simulate(const SimulateFlags& flags) {
  CapacityInput input = load_capacity(flags.spec_path, flags.capacity_table);
  ExperimentConfig config{require_mass(input), require_rv(input, "simulate"),
                          flags.horizon,       flags.replications,
                          flags.seed,          flags.tail_fraction,
                          flags.tolerance,     flags.trace_stride};
  const SllnReport report = run_slln_experiment(config);

  std::cout << "target [" << num(report.target.lo()) << ", " << num(report.target.hi())
            << "]\n";
  std::cout << "tolerance lo " << num(report.tolerance_lo) << " hi "
            << num(report.tolerance_hi) << "\n";
  if (report.replications.size() <= 20) {
    for (const auto& rep : report.replications) {
      std::cout << "replication " << rep.replication << ": final ["
                << num(rep.final_min_avg) << ", " << num(rep.final_max_avg) << "] tail ["
                << num(rep.tail_low) << ", " << num(rep.tail_high) << "]\n";
    }
  }
  for (const auto& failure : report.failures) {
    std::cout << "gate failure: replication " << failure.replication << ": "
              << failure.reason << " (value " << num(failure.value) << ", bound "
              << num(failure.bound) << ")\n";
  }
  std::cout << "gate: " << (report.passed ? "PASS" : "FAIL") << "\n";

  // Desk-scale cross-check: materialize the literal Minkowski average and
  // compare its hull with the tracked interval.
  if (flags.horizon <= flags.exact_n) {
    for (const auto& rep : report.replications) {
      const auto focals =
          sample_focal_sequence(config.mass, flags.horizon, flags.seed, rep.replication);
      const RealCompactSet exact = empirical_average_set_exact(config.rv, focals);
      const bool hull_matches = hull_interval(exact) ==
                                Interval(rep.final_min_avg, rep.final_max_avg);
      std::cout << "exact average, replication " << rep.replication << ": " << exact.size()
                << " points, d_H(set, target) = "
                << num(hausdorff_distance(exact, report.target))
                << ", hull matches trace: " << (hull_matches ? "yes" : "NO") << "\n";
    }
  }

  const auto written = io::emit_slln_results(report, flags.out_dir);
  std::cout << "wrote " << written.size() << " files under " << flags.out_dir << "\n";
  return report.passed ? 0 : 1;
}

int run_verify_independence(const std::string& spec_path,
                            const std::optional<std::string>& out_dir) {
  const io::ParsedJointSpec parsed = io::parse_joint_spec(io::read_text_file(spec_path));
  const IndependenceReport pairwise =
      verify_pairwise_independence(parsed.joint, parsed.first, parsed.second);
  const DistributionReport identical =
      verify_identical_distribution(parsed.joint, parsed.first, parsed.second);

  std::cout << "pairwise independence: " << (pairwise.passed ? "pass" : "FAIL") << " ("
            << pairwise.violations.size() << " violations)\n";
  for (const auto& v : pairwise.violations) {
    std::cout << "  G1 {";
    for (std::size_t i = 0; i < v.first_event.size(); ++i) {
      std::cout << (i ? "," : "") << num(v.first_event[i]);
    }
    std::cout << "} G2 {";
    for (std::size_t i = 0; i < v.second_event.size(); ++i) {
      std::cout << (i ? "," : "") << num(v.second_event[i]);
    }
    std::cout << "}: joint " << num(v.joint_value) << " != product " << num(v.product_value)
              << "\n";
  }
  std::cout << "identical distribution: " << (identical.passed ? "pass" : "FAIL") << " ("
            << identical.violations.size() << " violations)\n";
  for (const auto& v : identical.violations) {
    std::cout << "  G {";
    for (std::size_t i = 0; i < v.event.size(); ++i) {
      std::cout << (i ? "," : "") << num(v.event[i]);
    }
    std::cout << "}: " << num(v.first_value) << " != " << num(v.second_value) << "\n";
  }

  maybe_write(out_dir, "verify_independence.json", io::independence_to_json(pairwise, identical));
  return (pairwise.passed && identical.passed) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"totally monotone capacities: validation, Choquet integration and limit-law simulation"};
  app.require_subcommand(1);

  std::string spec_path;
  bool capacity_table = false;
  std::optional<std::string> out_dir;

  auto* validate = app.add_subcommand("validate", "check capacity axioms and total monotonicity");
  int n_max = 3;
  std::uint64_t budget = kDefaultCollectionBudget;
  validate->add_option("--spec", spec_path, "spec document (JSON)")->required();
  validate->add_flag("--capacity-table", capacity_table, "spec carries a raw capacity table");
  validate->add_option("--nmax", n_max, "largest (c.5) collection size to enumerate");
  validate->add_option("--budget", budget, "collection evaluation budget");
  validate->add_option("--out", out_dir, "directory for machine-readable reports");

  auto* choquet = app.add_subcommand("choquet", "lower and upper Choquet integrals");
  choquet->add_option("--spec", spec_path, "spec document (JSON)")->required();
  choquet->add_flag("--capacity-table", capacity_table, "spec carries a raw capacity table");
  choquet->add_option("--out", out_dir, "directory for machine-readable reports");

  auto* represent = app.add_subcommand("represent", "focal cells of the representing correspondence");
  represent->add_option("--spec", spec_path, "spec document (JSON)")->required();
  represent->add_flag("--capacity-table", capacity_table, "spec carries a raw capacity table");
  represent->add_option("--out", out_dir, "directory for machine-readable reports");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo verification of the capacity limit law");
  SimulateFlags sim;
  simulate->add_option("--spec", sim.spec_path, "spec document (JSON)")->required();
  simulate->add_flag("--capacity-table", sim.capacity_table, "spec carries a raw capacity table");
  simulate->add_option("--n", sim.horizon, "steps per replication");
  simulate->add_option("--replications", sim.replications, "number of replications");
  simulate->add_option("--seed", sim.seed, "base RNG seed");
  simulate->add_option("--tolerance", sim.tolerance, "gate tolerance (default 4*sd/sqrt(n))");
  simulate->add_option("--tail-fraction", sim.tail_fraction, "tail window fraction");
  simulate->add_option("--trace-stride", sim.trace_stride, "trace every k-th step (0 = auto)");
  simulate->add_option("--exact-n", sim.exact_n, "materialize the exact Minkowski average up to this horizon");
  simulate->add_option("--out", sim.out_dir, "output directory for summary and traces")->required();

  auto* verify = app.add_subcommand("verify-independence",
                                    "exhaustive pairwise independence and identical distribution check");
  verify->add_option("--spec", spec_path, "joint spec document (JSON)")->required();
  verify->add_option("--out", out_dir, "directory for machine-readable reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // E_USAGE
  }

  try {
    if (validate->parsed()) {
      return run_validate(spec_path, capacity_table, n_max, budget, out_dir);
    }
    if (choquet->parsed()) {
      return run_choquet(spec_path, capacity_table, out_dir);
    }
    if (represent->parsed()) {
      return run_represent(spec_path, capacity_table, out_dir);
    }
    if (simulate->parsed()) {
      return run_simulate(sim);
    }
    if (verify->parsed()) {
      return run_verify_independence(spec_path, out_dir);
    }
  } catch (const tmcap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::usage ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
