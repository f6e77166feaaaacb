#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multidom/model.hpp"
#include "multidom/oracle.hpp"

namespace multidom {

// One cross-validated instance: a spec/variant pair with the values
// produced by every available engine. `agree` is true when the reduced
// oracle, the naive oracle (if run), the witness weight, and the
// witness validity flag all confirm the closed-form value.
struct SweepRow {
  PartitionSpec spec;
  SpecStats spec_stats;
  Variant variant = Variant::Signed;
  std::string case_label;
  std::int64_t formula_value = 0;
  std::int64_t oracle_value = 0;
  std::optional<std::int64_t> naive_value;  // absent when out of budget
  std::int64_t witness_weight = 0;
  bool witness_valid = false;
  bool agree = false;
};

struct SweepOptions {
  std::int64_t max_n = 10;
  int max_k = 4;
  std::vector<Variant> variants = {Variant::Signed, Variant::SignedTotal, Variant::Minus};
  SearchBudget budget;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  std::int64_t mismatch_count = 0;
  // Fire count per classify() label, pre-seeded with 0 for every label
  // of every requested variant so unreached branches are visible.
  std::map<std::string, std::int64_t> case_counts;
};

// All non-decreasing part-size vectors with 2 <= k <= max_k and
// sum <= max_n, ordered by total size, then part count, then
// lexicographically. This order is the contract for report files.
std::vector<PartitionSpec> enumerate_specs(std::int64_t max_n, int max_k);

// Evaluates one spec/variant pair with every engine; the naive oracle
// runs exactly when the graph order fits the naive budget.
SweepRow evaluate_row(const PartitionSpec& spec, Variant variant, const SearchBudget& budget);

SweepReport run_sweep(const SweepOptions& options);

}  // namespace multidom
