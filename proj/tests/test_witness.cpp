#include <algorithm>

#include <doctest.h>

#include "multidom/formulas.hpp"
#include "multidom/oracle.hpp"
#include "multidom/sweep.hpp"
#include "multidom/witness.hpp"

using namespace multidom;

TEST_CASE("signed witnesses realize the optimal values") {
  SUBCASE("odd part of size 3: all of it +1") {
    const SignedAssignment w = signed_witness({{3, 4}});
    CHECK(w.plus_counts == std::vector<std::int64_t>{3, 2});
    CHECK(weight({{3, 4}}, w) == 3);
  }
  SUBCASE("t=1, k=3, large parts: part sums (1,2,2)") {
    const PartitionSpec spec{{5, 4, 4}};
    const SignedAssignment w = signed_witness(spec);
    CHECK(part_sums(spec, w) == std::vector<std::int64_t>{1, 2, 2});
    CHECK(weight(spec, w) == 5);
  }
  SUBCASE("many singletons: sums (1,1,1,-2)") {
    const PartitionSpec spec{{1, 1, 1, 2}};
    const SignedAssignment w = signed_witness(spec);
    CHECK(part_sums(spec, w) == std::vector<std::int64_t>{1, 1, 1, -2});
    CHECK(weight(spec, w) == 1);
  }
  SUBCASE("two large odd parts: sums (3,3)") {
    const PartitionSpec spec{{5, 5}};
    const SignedAssignment w = signed_witness(spec);
    CHECK(part_sums(spec, w) == std::vector<std::int64_t>{3, 3});
    CHECK(weight(spec, w) == 6);
    CHECK(verify(spec, w, Variant::Signed).valid);
    CHECK(oracle_signed(spec).value == 6);
  }
}

TEST_CASE("signed total witnesses") {
  const PartitionSpec a{{2, 2}};
  CHECK(part_sums(a, signed_total_witness(a)) == std::vector<std::int64_t>{2, 2});
  const PartitionSpec b{{3, 3}};
  CHECK(part_sums(b, signed_total_witness(b)) == std::vector<std::int64_t>{1, 1});
  const PartitionSpec c{{3, 5, 7}};
  CHECK(part_sums(c, signed_total_witness(c)) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(weight(c, signed_total_witness(c)) == 3);
}

TEST_CASE("minus witnesses") {
  const MinusAssignment w = minus_witness({{1, 5}});
  CHECK(w.counts[0].plus == 1);
  CHECK(w.counts[1].zero == 5);
  CHECK(weight({{1, 5}}, w) == 1);
  CHECK(weight({{2, 2}}, minus_witness({{2, 2}})) == 2);
  CHECK(weight({{3, 3, 4}}, minus_witness({{3, 3, 4}})) == 2);
}

TEST_CASE("verify against the definitions") {
  SUBCASE("valid signed assignment on the 4-cycle") {
    const ValidityReport r = verify({{2, 2}}, SignedAssignment{{2, 1}}, Variant::Signed);
    CHECK(r.valid);
    CHECK(r.weight == 2);
  }
  SUBCASE("all +1 is always valid") {
    const ValidityReport r = verify({{3, 4}}, SignedAssignment{{3, 4}}, Variant::Signed);
    CHECK(r.valid);
    CHECK(r.weight == 7);
  }
  SUBCASE("all -1 fails with negative neighborhood sums") {
    const ValidityReport r = verify({{2, 2}}, SignedAssignment{{0, 0}}, Variant::Signed);
    CHECK_FALSE(r.valid);
    CHECK(r.weight == -4);
    CHECK(r.min_neighborhood_sum == std::vector<std::int64_t>{-3, -3});
    CHECK(r.tightest_part == 0);
    CHECK(r.tightest_value == -1);
  }
}

TEST_CASE("verify rejects bad shapes and k=1") {
  CHECK_THROWS_AS(verify({{2, 2}}, SignedAssignment{{1}}, Variant::Signed), SpecError);
  CHECK_THROWS_AS(verify({{2, 2}}, SignedAssignment{{3, 0}}, Variant::Signed), SpecError);
  CHECK_THROWS_AS(verify({{4}}, SignedAssignment{{4}}, Variant::Signed), SpecError);
  // A minus-valued assignment cannot be checked against a signed variant...
  const MinusAssignment m{{{1, 1, 0}, {0, 2, 0}}};
  CHECK_THROWS_AS(verify({{2, 2}}, m, Variant::Signed), SpecError);
  CHECK_THROWS_AS(verify({{2, 2}}, m, Variant::SignedTotal), SpecError);
  // ...but a signed assignment is a legitimate minus function.
  CHECK(verify({{2, 2}}, SignedAssignment{{2, 2}}, Variant::Minus).valid);
}

TEST_CASE("every witness certifies its formula value across the sweep") {
  for (const PartitionSpec& spec : enumerate_specs(12, 5)) {
    CAPTURE(spec.sizes);
    {
      const SignedAssignment w = signed_witness(spec);
      const ValidityReport r = verify(spec, w, Variant::Signed);
      CHECK(r.valid);
      CHECK(r.weight == signed_domination_number(spec));
    }
    {
      const SignedAssignment w = signed_total_witness(spec);
      const ValidityReport r = verify(spec, w, Variant::SignedTotal);
      CHECK(r.valid);
      CHECK(r.weight == signed_total_domination_number(spec));
    }
    {
      const MinusAssignment w = minus_witness(spec);
      const ValidityReport r = verify(spec, w, Variant::Minus);
      CHECK(r.valid);
      CHECK(r.weight == minus_domination_number(spec));
    }
  }
}

TEST_CASE("witness construction respects arbitrary part order") {
  for (const PartitionSpec& base : enumerate_specs(9, 4)) {
    PartitionSpec spec = base;
    do {
      const ValidityReport s = verify(spec, signed_witness(spec), Variant::Signed);
      CHECK(s.valid);
      CHECK(s.weight == signed_domination_number(spec));
      const ValidityReport st = verify(spec, signed_total_witness(spec), Variant::SignedTotal);
      CHECK(st.valid);
      CHECK(st.weight == signed_total_domination_number(spec));
      const ValidityReport m = verify(spec, minus_witness(spec), Variant::Minus);
      CHECK(m.valid);
      CHECK(m.weight == minus_domination_number(spec));
    } while (std::next_permutation(spec.sizes.begin(), spec.sizes.end()));
  }
}

TEST_CASE("all-(+1) is valid for every variant when k >= 2") {
  for (const PartitionSpec& spec : enumerate_specs(10, 4)) {
    SignedAssignment all_plus{spec.sizes};
    CHECK(verify(spec, all_plus, Variant::Signed).valid);
    CHECK(verify(spec, all_plus, Variant::SignedTotal).valid);
    CHECK(verify(spec, all_plus, Variant::Minus).valid);
  }
}

namespace {

// Walks every signed assignment of the spec.
template <typename Fn>
void for_each_signed(const PartitionSpec& spec, const Fn& fn) {
  std::vector<std::int64_t> p(spec.sizes.size(), 0);
  while (true) {
    fn(SignedAssignment{p});
    std::size_t pos = 0;
    while (pos < p.size() && p[pos] == spec.sizes[pos]) p[pos++] = 0;
    if (pos == p.size()) break;
    ++p[pos];
  }
}

// Walks every minus assignment of the spec.
template <typename Fn>
void for_each_minus(const PartitionSpec& spec, const Fn& fn) {
  const int k = static_cast<int>(spec.sizes.size());
  MinusAssignment a;
  a.counts.resize(k);
  const auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      fn(a);
      return;
    }
    for (std::int64_t plus = 0; plus <= spec.sizes[i]; ++plus) {
      for (std::int64_t zero = 0; plus + zero <= spec.sizes[i]; ++zero) {
        a.counts[i] = {plus, zero, spec.sizes[i] - plus - zero};
        self(self, i + 1);
      }
    }
  };
  rec(rec, 0);
}

}  // namespace

TEST_CASE("part-sum verify agrees with the per-vertex check, exhaustively") {
  for (const PartitionSpec& spec : enumerate_specs(6, 3)) {
    const ExplicitGraph g = build_graph(spec);
    for_each_signed(spec, [&](const SignedAssignment& a) {
      const std::vector<int> values = expand(spec, a);
      CHECK(verify(spec, a, Variant::Signed).valid == naive_valid(g, values, Variant::Signed));
      CHECK(verify(spec, a, Variant::SignedTotal).valid ==
            naive_valid(g, values, Variant::SignedTotal));
      CHECK(verify(spec, a, Variant::Minus).valid == naive_valid(g, values, Variant::Minus));
    });
    for_each_minus(spec, [&](const MinusAssignment& a) {
      CHECK(verify(spec, a, Variant::Minus).valid ==
            naive_valid(g, expand(spec, a), Variant::Minus));
    });
  }
}
