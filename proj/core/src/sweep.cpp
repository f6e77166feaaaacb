#include "multidom/sweep.hpp"

#include "multidom/formulas.hpp"
#include "multidom/witness.hpp"

namespace multidom {

namespace {

void emit_non_decreasing(std::int64_t remaining, int parts_left, std::int64_t min_size,
                         std::vector<std::int64_t>& prefix, std::vector<PartitionSpec>& out) {
  if (parts_left == 1) {
    if (remaining >= min_size) {
      prefix.push_back(remaining);
      out.push_back(PartitionSpec{prefix});
      prefix.pop_back();
    }
    return;
  }
  for (std::int64_t size = min_size; size * parts_left <= remaining; ++size) {
    prefix.push_back(size);
    emit_non_decreasing(remaining - size, parts_left - 1, size, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<PartitionSpec> enumerate_specs(std::int64_t max_n, int max_k) {
  std::vector<PartitionSpec> out;
  std::vector<std::int64_t> prefix;
  for (std::int64_t n = 2; n <= max_n; ++n) {
    for (int k = 2; k <= max_k && k <= n; ++k) {
      emit_non_decreasing(n, k, 1, prefix, out);
    }
  }
  return out;
}

SweepRow evaluate_row(const PartitionSpec& spec, Variant variant, const SearchBudget& budget) {
  SweepRow row;
  row.spec = spec;
  row.spec_stats = stats(spec);
  row.variant = variant;
  row.case_label = classify(spec, variant);
  row.formula_value = domination_number(spec, variant);
  row.oracle_value = multidom::oracle_value(spec, variant, budget);

  ValidityReport report;
  if (variant == Variant::Minus) {
    const MinusAssignment w = minus_witness(spec);
    report = verify(spec, w, variant);
  } else {
    const SignedAssignment w =
        variant == Variant::Signed ? signed_witness(spec) : signed_total_witness(spec);
    report = verify(spec, w, variant);
  }
  row.witness_weight = report.weight;
  row.witness_valid = report.valid;

  if (naive_in_budget(row.spec_stats.n, variant, budget)) {
    row.naive_value = naive_oracle(build_graph(spec), variant, budget);
  }

  row.agree = row.oracle_value == row.formula_value && row.witness_valid &&
              row.witness_weight == row.formula_value &&
              (!row.naive_value || *row.naive_value == row.formula_value);
  return row;
}

SweepReport run_sweep(const SweepOptions& options) {
  SweepReport report;
  for (Variant variant : options.variants) {
    for (const std::string& label : case_labels(variant)) {
      report.case_counts.emplace(label, 0);
    }
  }
  const std::vector<PartitionSpec> specs = enumerate_specs(options.max_n, options.max_k);
  for (const PartitionSpec& spec : specs) {
    for (Variant variant : options.variants) {
      SweepRow row = evaluate_row(spec, variant, options.budget);
      report.case_counts[row.case_label] += 1;
      if (!row.agree) ++report.mismatch_count;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace multidom
