#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "afc/affine.hpp"

namespace afc {

struct CheckResult {
  std::string description;
  bool pass = false;
  std::string details;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double elapsed_seconds = 0.0;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  uint64_t seed = 7;
  int kmax = 5;             // n = 2 table range
  int random_count = 10000; // random windows per shape for length checks
  int pair_bound = 0;       // entrywise bound on c; 0 means 2m per shape
  std::vector<RectShape> shapes;  // empty means {(2,2), (3,3), (2,2,2)}
};

std::vector<RectShape> default_shapes();

// Single checks, reused by the CLI suites and the acceptance runner.
CheckResult check_worked_example_triple();                       // (2,2,2) pair, both triple paths
CheckResult check_worked_example_relpos();                       // rotated (2,2,2) pair
CheckResult check_appendix_figures();                            // frozen class diagrams
CheckResult check_fbox_class_equality(const RectShape& shape);   // box vs Knuth class
CheckResult check_n2_fixtures(int kmax);
CheckResult check_cross_path(const RectShape& shape, int bound);
CheckResult check_bijectivity(const RectShape& shape, int bound);
CheckResult check_lusztig_surjectivity(const RectShape& shape, int bound);

// Property families (exact):
CheckResult check_length_formulas(const RectShape& shape, int count, uint64_t seed);
CheckResult check_weight_antisymmetry(const RectShape& shape);
CheckResult check_descent_compatibility(const RectShape& shape);
CheckResult check_charge_equidistribution();   // rectangles with n <= 8
CheckResult check_box_gap_bound(const RectShape& shape);
CheckResult check_length_additivity(const RectShape& shape, uint64_t seed);
CheckResult check_constant_weight_on_box(const RectShape& shape);
CheckResult check_knuth_edge_transport(const RectShape& shape);

// Named suites: lengths, tabloids, fbox, knuth, ambc, components, lusztig,
// n2, all.
VerificationReport run_suite(const std::string& name, const VerifyOptions& options);
std::vector<std::string> suite_names();

}  // namespace afc
