#pragma once

#include <cstdint>
#include <vector>

#include "multidom/model.hpp"

namespace multidom {

// Outcome of checking an assignment against a domination condition.
// The check works entirely on part sums: with S the total weight and
// s_i the sum of part i, a part-i vertex of value x has closed
// neighborhood sum x + S - s_i and open neighborhood sum S - s_i, so
// it suffices to check each value actually present in each part.
struct ValidityReport {
  bool valid = false;
  std::int64_t weight = 0;
  // Minimum neighborhood sum over the vertices of each part.
  std::vector<std::int64_t> min_neighborhood_sum;
  // Vertex class attaining the overall minimum, for debugging failed
  // candidates: part index (0-based) and the vertex value there.
  int tightest_part = -1;
  int tightest_value = 0;
};

// Optimal certificates: each witness is a valid dominating function of
// the requested kind whose weight equals the corresponding closed-form
// domination number. Construction follows the branch that fired, with
// ties between parts eligible for the same role broken toward the
// lowest original index. All three require k >= 2.
SignedAssignment signed_witness(const PartitionSpec& spec);
SignedAssignment signed_total_witness(const PartitionSpec& spec);
MinusAssignment minus_witness(const PartitionSpec& spec);

// Checks an arbitrary assignment against the variant's definition.
// A SignedAssignment may be verified under any variant (a {-1,+1}
// function is also a {-1,0,+1} function); a MinusAssignment only under
// Variant::Minus. Throws SpecError on shape mismatch or k < 2.
ValidityReport verify(const PartitionSpec& spec, const SignedAssignment& a, Variant variant);
ValidityReport verify(const PartitionSpec& spec, const MinusAssignment& a, Variant variant);

}  // namespace multidom
