// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. Each criterion pins its tolerances and instance counts in code and
// enforces its runtime bound.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tmcap/capacity.hpp"
#include "tmcap/choquet.hpp"
#include "tmcap/representation.hpp"
#include "tmcap/slln.hpp"
#include "tmcap/spec_io.hpp"

using namespace tmcap;
namespace gen = tmcap::testgen;

namespace {

const Frame kCoin({"H", "T"});

MassFunction coin_mass() { return MassFunction(kCoin, {{0b01, 0.4}, {0b11, 0.6}}); }

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& message) {
    if (!condition) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << message;
    }
  }
};

// 1. Moebius round-trip on 100 random mass functions, K in 1..4, 1e-12.
bool criterion_mobius_round_trip(Check& check) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const Frame frame = gen::make_frame(1 + trial % 4);
    const MassFunction mass = gen::random_mass(rng, frame, 10);
    const SignedMass mobius = mobius_from_capacity(capacity_from_mass(mass));
    for (SubsetMask set = 1; set <= frame.full_mask(); ++set) {
      const double diff = std::abs(mobius.weight(set) - mass.weight(set));
      check.expect(diff <= 1e-12, "weight drift " + std::to_string(diff));
    }
  }
  return check.ok;
}

// 2. (c.5): mass-generated capacities pass exhaustively; the witness fails
// with the recorded counterexample 1 < 1.2; fast and exhaustive paths agree.
bool criterion_total_monotonicity(Check& check) {
  std::mt19937_64 rng(102);
  TotalMonotonicityOptions exhaustive;
  exhaustive.force_exhaustive = true;

  for (int trial = 0; trial < 60; ++trial) {
    const Frame frame = gen::make_frame(1 + trial % 3);
    const Capacity nu = capacity_from_mass(gen::random_mass(rng, frame, 7));
    check.expect(check_total_monotonicity(nu, 3, exhaustive).passed,
                 "mass-generated capacity failed exhaustive (c.5)");
    check.expect(check_total_monotonicity(nu, 3).passed,
                 "mass-generated capacity failed the fast path");
  }

  const Capacity witness(kCoin, {0.0, 0.6, 0.6, 1.0});
  const MonotonicityReport report = check_total_monotonicity(witness, 2, exhaustive);
  check.expect(!report.passed, "witness capacity passed (c.5)");
  if (!report.counterexamples.empty()) {
    const Counterexample& ce = report.counterexamples.front();
    check.expect(ce.sets == std::vector<SubsetMask>{0b01, 0b10}, "witness collection mismatch");
    check.expect(std::abs(ce.lhs - 1.0) <= 1e-12 && std::abs(ce.rhs - 1.2) <= 1e-12,
                 "witness values are not 1 < 1.2");
  } else {
    check.expect(false, "witness produced no counterexample");
  }

  // Agreement between the two paths on mixed inputs.
  for (int trial = 0; trial < 40; ++trial) {
    const Frame frame = gen::make_frame(2 + trial % 2);
    const Capacity nu = trial % 2 == 0
                            ? capacity_from_mass(gen::random_mass(rng, frame, 7))
                            : gen::random_monotone_capacity(rng, frame);
    const bool fast = mobius_from_capacity(nu).min_weight() >= -kInternalTolerance;
    const bool slow = check_total_monotonicity(nu, 3, exhaustive).passed;
    check.expect(fast == slow, "fast and exhaustive (c.5) verdicts disagree");
  }
  return check.ok;
}

// 3. Choquet algebra identities on 1000 random instances, K <= 4.
bool criterion_choquet_algebra(Check& check) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 1000; ++trial) {
    const Frame frame = gen::make_frame(1 + trial % 4);
    const Capacity nu = capacity_from_mass(gen::random_mass(rng, frame, 10));
    const RandomVariable x = gen::random_rv(rng, frame, -4.0, 4.0);
    const double c = gen::uniform(rng, 0.0, 3.0);
    const double base = choquet_integral(x, nu);

    std::vector<double> scaled = x.values();
    for (double& v : scaled) v *= c;
    check.expect(
        std::abs(choquet_integral(RandomVariable(frame, scaled), nu) - c * base) <= 1e-12,
        "positive homogeneity drift");

    const double shift = gen::uniform(rng, -5.0, 5.0);
    std::vector<double> shifted = x.values();
    for (double& v : shifted) v += shift;
    check.expect(std::abs(choquet_integral(RandomVariable(frame, shifted), nu) -
                          (base + shift)) <= 1e-12,
                 "translation invariance drift");

    std::vector<double> dominating = x.values();
    for (double& v : dominating) v += gen::uniform(rng, 0.0, 2.0);
    check.expect(choquet_integral(RandomVariable(frame, dominating), nu) >= base - 1e-12,
                 "monotonicity violated");

    check.expect(base <= upper_choquet_integral(x, nu) + 1e-12, "lower > upper");
  }
  return check.ok;
}

// 4. Additivity characterization.
bool criterion_additivity(Check& check) {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 50; ++trial) {
    const Frame frame = gen::make_frame(1 + trial % 4);
    const Capacity nu = capacity_from_mass(gen::random_additive_mass(rng, frame));
    for (int x_trial = 0; x_trial < 20; ++x_trial) {
      const RandomVariable x = gen::random_rv(rng, frame, -4.0, 4.0);
      check.expect(std::abs(upper_choquet_integral(x, nu) - choquet_integral(x, nu)) <= 1e-12,
                   "additive capacity with lower != upper");
    }
  }
  for (int trial = 0; trial < 50; ++trial) {
    const Frame frame = gen::make_frame(2 + trial % 3);
    const Capacity nu = capacity_from_mass(gen::random_mass(rng, frame, 10, true));
    double best_gap = 0.0;
    for (SubsetMask set = 1; set < frame.full_mask(); ++set) {
      std::vector<double> indicator(frame.size(), 0.0);
      for (std::size_t i = 0; i < frame.size(); ++i) {
        if (set & (SubsetMask{1} << i)) indicator[i] = 1.0;
      }
      const RandomVariable x(frame, indicator);
      best_gap = std::max(best_gap, upper_choquet_integral(x, nu) - choquet_integral(x, nu));
    }
    check.expect(best_gap > 1e-9, "no indicator gap on a non-additive capacity");
  }
  return check.ok;
}

// 5. Aumann / Choquet equivalence plus the exact selection oracle.
bool criterion_aumann_equivalence(Check& check) {
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < 200; ++trial) {
    const Frame frame = gen::make_frame(1 + trial % 4);
    const MassFunction mass = gen::random_mass(rng, frame, 6);
    const RandomVariable x = gen::random_rv(rng, frame, -4.0, 4.0);
    const RealCorrespondence composed = compose_rv(x, correspondence_from_mass(mass));
    const Interval via_sets = aumann_integral(composed);
    const Interval via_choquet = integral_interval(x, capacity_from_mass(mass));
    check.expect(std::abs(via_sets.lo() - via_choquet.lo()) <= 1e-12 &&
                     std::abs(via_sets.hi() - via_choquet.hi()) <= 1e-12,
                 "Aumann and Choquet intervals disagree");
    check.expect(selection_integral_oracle(composed) == via_sets,
                 "selection oracle is not bit-identical to the Aumann integral");
  }
  return check.ok;
}

// 6. Exact independence and identical distribution of product joints, over
// every coordinate variable with values in {0, 1, 2}.
bool criterion_independence(Check& check) {
  std::mt19937_64 rng(106);
  const std::array<double, 3> palette = {0.0, 1.0, 2.0};

  const auto all_rvs = [&](const Frame& frame) {
    std::vector<RandomVariable> out;
    const std::size_t count =
        static_cast<std::size_t>(std::pow(3.0, static_cast<double>(frame.size())));
    for (std::size_t code = 0; code < count; ++code) {
      std::vector<double> values(frame.size());
      std::size_t rest = code;
      for (std::size_t i = 0; i < frame.size(); ++i) {
        values[i] = palette[rest % 3];
        rest /= 3;
      }
      out.emplace_back(frame, values);
    }
    return out;
  };

  std::vector<std::pair<MassFunction, MassFunction>> factor_pairs;
  factor_pairs.emplace_back(coin_mass(), coin_mass());
  factor_pairs.emplace_back(MassFunction::vacuous(kCoin), MassFunction::vacuous(kCoin));
  for (int trial = 0; trial < 8; ++trial) {
    const Frame left_frame = gen::make_frame(1 + trial % 3);
    const Frame right_frame = gen::make_frame(1 + (trial / 2) % 3);
    factor_pairs.emplace_back(gen::random_mass(rng, left_frame, 5),
                              gen::random_mass(rng, right_frame, 5));
  }

  for (const auto& [left, right] : factor_pairs) {
    const ProductLayout layout = product_layout(left.frame(), right.frame());
    const MassFunction joint = product_mass(left, right);
    const auto left_rvs = all_rvs(left.frame());
    const auto right_rvs = all_rvs(right.frame());
    for (const RandomVariable& a : left_rvs) {
      const RandomVariable lifted_a = lift_first(layout, a);
      for (const RandomVariable& b : right_rvs) {
        const IndependenceReport report =
            verify_pairwise_independence(joint, lifted_a, lift_second(layout, b));
        check.expect(report.passed, "product joint shows an independence violation");
        if (!check.ok) return false;
      }
    }
  }

  // Identical distribution holds for self-products with matching variables.
  for (int trial = 0; trial < 6; ++trial) {
    const Frame frame = gen::make_frame(1 + trial % 3);
    const MassFunction mass = gen::random_mass(rng, frame, 5);
    const ProductLayout layout = product_layout(frame, frame);
    const MassFunction joint = product_mass(mass, mass);
    for (const RandomVariable& a : all_rvs(frame)) {
      const DistributionReport report = verify_identical_distribution(
          joint, lift_first(layout, a), lift_second(layout, a));
      check.expect(report.passed, "self-product coordinates are not identically distributed");
      if (!check.ok) return false;
    }
  }

  // The diagonal joint must fail with the known violation at G1 = G2 = {1}.
  const ProductLayout layout = product_layout(kCoin, kCoin);
  const MassFunction diagonal(layout.product, {{layout.rectangle(0b01, 0b01), 0.5},
                                               {layout.rectangle(0b10, 0b10), 0.5}});
  const RandomVariable indicator(kCoin, std::vector<double>{1.0, 0.0});
  const IndependenceReport diag = verify_pairwise_independence(
      diagonal, lift_first(layout, indicator), lift_second(layout, indicator));
  check.expect(!diag.passed, "diagonal joint passed pairwise independence");
  bool found = false;
  for (const auto& v : diag.violations) {
    found = found || (v.first_event == std::vector<double>{1.0} &&
                      v.second_event == std::vector<double>{1.0} && v.joint_value == 0.5 &&
                      std::abs(v.product_value - 0.25) <= 1e-12);
  }
  check.expect(found, "diagonal joint violation 0.5 != 0.25 not recorded");
  return check.ok;
}

// 7. The limit law at desk scale: three configs, n = 1e5, R = 100.
bool criterion_limit_law(Check& check, SllnReport& coin_report_out) {
  // Coin capacity: target [0.4, 1].
  ExperimentConfig coin_config{coin_mass(),
                               RandomVariable(kCoin, std::vector<double>{1.0, 0.0}),
                               100000,
                               100,
                               20050533,
                               0.1,
                               0.01};
  const SllnReport coin_report = run_slln_experiment(coin_config);
  coin_report_out = coin_report;
  check.expect(coin_report.passed, "coin config failed the gate");
  for (const auto& rep : coin_report.replications) {
    check.expect(rep.tail_low >= 0.4 - 0.01, "coin tail min-avg below 0.39");
    check.expect(rep.final_max_avg == 1.0, "coin final max-avg is not exactly 1");
    check.expect(rep.tail_high == 1.0, "coin tail max-avg is not exactly 1");
  }

  // Three-outcome capacity: target [2.0, 2.7].
  const Frame abc = gen::make_frame(3);
  ExperimentConfig abc_config{
      MassFunction(abc, {{0b001, 0.5}, {0b110, 0.3}, {0b111, 0.2}}),
      RandomVariable(abc, std::vector<double>{3.0, 1.0, 2.0}),
      100000,
      100,
      20050533,
      0.1,
      0.02};
  const SllnReport abc_report = run_slln_experiment(abc_config);
  check.expect(abc_report.passed, "three-outcome config failed the gate");
  check.expect(std::abs(abc_report.target.lo() - 2.0) <= 1e-12 &&
                   std::abs(abc_report.target.hi() - 2.7) <= 1e-12,
               "three-outcome target is not [2.0, 2.7]");
  for (const auto& rep : abc_report.replications) {
    check.expect(std::abs(rep.final_min_avg - 2.0) <= 0.02, "min-avg missed 2.0 by over 0.02");
    check.expect(std::abs(rep.final_max_avg - 2.7) <= 0.02, "max-avg missed 2.7 by over 0.02");
  }

  // Additive (Kolmogorov) case: the interval collapses to 0.4.
  ExperimentConfig additive_config{
      MassFunction(kCoin, {{0b01, 0.4}, {0b10, 0.6}}),
      RandomVariable(kCoin, std::vector<double>{1.0, 0.0}),
      100000,
      100,
      20050533,
      0.1,
      0.01};
  const SllnReport additive_report = run_slln_experiment(additive_config);
  check.expect(additive_report.passed, "additive config failed the gate");
  check.expect(additive_report.target.lo() == additive_report.target.hi(),
               "additive target interval is not degenerate");
  for (const auto& rep : additive_report.replications) {
    check.expect(std::abs(rep.final_min_avg - 0.4) <= 0.01 &&
                     std::abs(rep.final_max_avg - 0.4) <= 0.01,
                 "additive finals missed 0.4 by over 0.01");
  }
  return check.ok;
}

// 8. Convexification bound for Minkowski averages.
bool criterion_convexification(Check& check) {
  std::mt19937_64 rng(108);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 11;
    double diameter = 0.0;
    RealCompactSet sum = RealCompactSet::from_points({0.0});
    for (std::size_t j = 0; j < n; ++j) {
      const RealCompactSet k = gen::random_set(rng, 3, -3.0, 3.0);
      diameter = std::max(diameter, k.max() - k.min());
      sum = minkowski_sum(sum, k);
    }
    const RealCompactSet average = scale_set(sum, 1.0 / static_cast<double>(n));
    check.expect(hausdorff_distance(average, hull_interval(average)) <=
                     diameter / static_cast<double>(n) + 1e-12,
                 "average strayed further from its hull than diameter/n");
  }
  return check.ok;
}

// 9. Same-seed reruns emit byte-identical files.
bool criterion_determinism(Check& check, const SllnReport& coin_report) {
  ExperimentConfig config{coin_mass(), RandomVariable(kCoin, std::vector<double>{1.0, 0.0}),
                          100000, 100, 20050533, 0.1, 0.01};
  const SllnReport rerun = run_slln_experiment(config);
  check.expect(rerun == coin_report, "re-run report differs in memory");

  const auto base = std::filesystem::temp_directory_path() / "tmcap_acceptance";
  std::filesystem::remove_all(base);
  const auto first = io::emit_slln_results(coin_report, base / "a");
  const auto second = io::emit_slln_results(rerun, base / "b");
  check.expect(first.size() == second.size(), "different file counts");
  for (std::size_t i = 0; i < first.size() && check.ok; ++i) {
    check.expect(io::read_text_file(first[i]) == io::read_text_file(second[i]),
                 "byte difference in " + first[i].filename().string());
  }
  std::filesystem::remove_all(base);
  return check.ok;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double time_limit_seconds;
    std::function<bool(Check&)> run;
  };

  SllnReport coin_report;  // shared between criteria 7 and 9

  const std::vector<Criterion> criteria = {
      {1, "Moebius round-trip within 1e-12 (100 random masses, K <= 4)", 1.0,
       criterion_mobius_round_trip},
      {2, "total monotonicity (c.5): exhaustive vs fast path, witness 1 < 1.2", 10.0,
       criterion_total_monotonicity},
      {3, "Choquet algebra identities within 1e-12 (1000 instances)", 30.0,
       criterion_choquet_algebra},
      {4, "additivity characterization (degenerate vs indicator gap)", 30.0,
       criterion_additivity},
      {5, "Aumann = Choquet interval within 1e-12, selection oracle exact", 5.0,
       criterion_aumann_equivalence},
      {6, "exact pairwise independence and identical distribution of products", 30.0,
       criterion_independence},
      {7, "limit law at n = 1e5, R = 100 (three configurations)", 60.0,
       [&](Check& check) { return criterion_limit_law(check, coin_report); }},
      {8, "Minkowski convexification bound d_H <= diameter/n", 30.0,
       criterion_convexification},
      {9, "byte-identical outputs on same-seed reruns", 60.0,
       [&](Check& check) { return criterion_determinism(check, coin_report); }},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > criterion.time_limit_seconds) {
      ok = false;
      check.expect(false, "runtime " + std::to_string(elapsed) + "s over the " +
                              std::to_string(criterion.time_limit_seconds) + "s limit");
    }
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", criterion.id,
                criterion.name, elapsed, ok ? "" : " -- ",
                ok ? "" : check.detail.str().c_str());
    if (!ok) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
