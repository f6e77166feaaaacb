#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multidom/model.hpp"

namespace multidom {

// Closed-form evaluation of the three domination numbers of
// K_{n_1,...,n_k}. Each number is decided by a short case tree over
// (t, k, |I_1|, |I_2|, part sizes), where t is the number of odd-size
// parts, I_1 the parts of size 1, and I_2 the even parts of size 2.
// Cases are tested top to bottom; "otherwise" means no earlier case
// fired. All operations require k >= 2 and throw SpecError below that.

// Branches of the signed-domination case tree. The odd-t and even-t
// subtrees are disjoint (selected by the parity of t).
enum class SignedCase {
  // t odd:
  OddManySingletons,  // t >= 3 and |I_1| >= (2k-t+1)/2           -> 1
  OddStarCenter,      // t = 1, k = 2, odd part of size 1         -> 1 + n_even
  OddFive,            // t = 1 and (k = 2, n_odd >= 5, n_even >= 4)
                      //        or (k >= 3, n_odd != 3, all even parts >= 4)
                      //                                          -> 5
  OddDefaultThree,    // otherwise                                -> 3
  // t even:
  EvenBipartiteMinOne,     // t = k = 2, min size 1               -> n_1 + n_2
  EvenBipartiteMinFive,    // t = k = 2, min size >= 5            -> 6
  EvenSingletonsAndPairs,  // |I_1| + |I_2| >= t/2 + 1            -> 2
  EvenDefaultFour,         // otherwise                           -> 4
};

// Which branch fires for the spec (first match wins).
SignedCase signed_case(const PartitionSpec& spec, const SpecStats& st);

std::int64_t signed_domination_number(const PartitionSpec& spec);

// 3 if t is odd, 4 if t = 0, 2 otherwise.
std::int64_t signed_total_domination_number(const PartitionSpec& spec);

// 1 if some part has size 1, 2 otherwise.
std::int64_t minus_domination_number(const PartitionSpec& spec);

std::int64_t domination_number(const PartitionSpec& spec, Variant variant);

// Stable identifier of exactly the branch that fired, for
// branch-coverage reporting (e.g. "signed/odd_t/t1_k2_n1_eq_1").
std::string classify(const PartitionSpec& spec, Variant variant);

// Every label classify() can produce for the variant, in case order.
std::vector<std::string> case_labels(Variant variant);

}  // namespace multidom
