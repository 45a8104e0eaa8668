#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hcross::harness {

struct CriterionResult {
  std::string id;     // "AC1" ...
  std::string title;
  bool pass = false;
  std::string detail;  // measured values behind the verdict
};

struct SelfCheckRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Exact kernel profile assertions (coefficients, peaks, partition of unity).
std::vector<SelfCheckRow> kernel_selfcheck();

CriterionResult check_exact_identities(std::uint64_t seed);    // AC1
CriterionResult check_q_cardinality();                          // AC2
CriterionResult check_theta_cardinality();                      // AC3
CriterionResult check_tail_sums();                              // AC4
CriterionResult check_nikolskii(std::uint64_t seed);            // AC5
CriterionResult check_norm_equivalence(std::uint64_t seed);     // AC6
CriterionResult check_theorem_31(std::uint64_t seed);           // AC7
CriterionResult check_theorem_32_witness();                     // AC8
CriterionResult check_theorem_33_witness();                     // AC9

/// Runs AC1-AC9 in order. Per-criterion wall times go to `timing` (pass
/// stderr), never into the results, so reports stay reproducible.
std::vector<CriterionResult> run_verification(std::uint64_t seed, std::ostream* timing);

/// "AC1 PASS title: detail"
std::string format_result(const CriterionResult& r);

}  // namespace hcross::harness
