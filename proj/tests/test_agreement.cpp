// Extended-range agreement checks between the closed forms, the
// witnesses, and the reduced exhaustive search. These go well past the
// ranges the naive per-vertex search can reach; the reduced search
// stays exact there because validity only depends on part sums.

#include <doctest.h>

#include "multidom/formulas.hpp"
#include "multidom/oracle.hpp"
#include "multidom/sweep.hpp"
#include "multidom/witness.hpp"

using namespace multidom;

namespace {

void check_all_engines(const PartitionSpec& spec) {
  CAPTURE(spec.sizes);
  {
    const std::int64_t formula = signed_domination_number(spec);
    CHECK(oracle_signed(spec).value == formula);
    const ValidityReport r = verify(spec, signed_witness(spec), Variant::Signed);
    CHECK(r.valid);
    CHECK(r.weight == formula);
  }
  {
    const std::int64_t formula = signed_total_domination_number(spec);
    CHECK(oracle_signed_total(spec).value == formula);
    const ValidityReport r = verify(spec, signed_total_witness(spec), Variant::SignedTotal);
    CHECK(r.valid);
    CHECK(r.weight == formula);
  }
  {
    const std::int64_t formula = minus_domination_number(spec);
    CHECK(oracle_minus(spec).value == formula);
    const ValidityReport r = verify(spec, minus_witness(spec), Variant::Minus);
    CHECK(r.valid);
    CHECK(r.weight == formula);
  }
}

}  // namespace

TEST_CASE("every bipartite spec up to n = 40 agrees across engines") {
  for (std::int64_t a = 1; a <= 20; ++a) {
    for (std::int64_t b = a; a + b <= 40; ++b) {
      check_all_engines({{a, b}});
    }
  }
}

TEST_CASE("every tripartite spec up to n = 24 agrees across engines") {
  for (std::int64_t a = 1; a <= 8; ++a) {
    for (std::int64_t b = a; b <= 12; ++b) {
      for (std::int64_t c = b; a + b + c <= 24; ++c) {
        check_all_engines({{a, b, c}});
      }
    }
  }
}

TEST_CASE("wide sweep up to n = 16, k = 7 agrees across engines") {
  SearchBudget budget;
  budget.max_naive_labelings = 1;  // focus on formula/oracle/witness
  for (const PartitionSpec& spec : enumerate_specs(16, 7)) {
    for (Variant v : {Variant::Signed, Variant::SignedTotal, Variant::Minus}) {
      const SweepRow row = evaluate_row(spec, v, budget);
      CAPTURE(spec.sizes);
      CAPTURE(row.case_label);
      CHECK(row.agree);
      CHECK_FALSE(row.naive_value.has_value());
    }
  }
}

TEST_CASE("complete graphs: published special cases up to K_20") {
  for (std::int64_t n = 2; n <= 20; ++n) {
    const PartitionSpec spec{std::vector<std::int64_t>(n, 1)};
    CHECK(signed_domination_number(spec) == (n % 2 == 1 ? 1 : 2));
    CHECK(signed_total_domination_number(spec) == (n % 2 == 1 ? 3 : 2));
    CHECK(minus_domination_number(spec) == 1);
  }
}
