#pragma once

#include <cstdint>
#include <span>

#include "multidom/model.hpp"

namespace multidom {

// Explicit search budgets; exceeding one raises BudgetError rather
// than stalling. The reduced search space has one state per choice of
// part sums (product of n_i + 1 for the signed variants, 2*n_i + 1 for
// minus); the naive search enumerates 2^n or 3^n vertex labelings.
// The defaults admit naive runs up to n = 16 for the signed variants
// and n = 10 for minus.
struct SearchBudget {
  std::uint64_t max_states = 10'000'000;
  std::uint64_t max_naive_labelings = 65'536;
};

struct SignedSearchResult {
  std::int64_t value = 0;
  SignedAssignment argmin;  // lexicographically smallest minimizer
};

struct MinusSearchResult {
  std::int64_t value = 0;
  MinusAssignment argmin;
};

// Exact minimum weight by exhaustive search over part sums. Within a
// part only the set of values present matters for validity (every
// vertex of part i sees the same complement sum S - s_i), so the
// search ranges over s_i in {-n_i, -n_i+2, ..., n_i} (signed) or
// {-n_i, ..., n_i} (minus) instead of per-vertex labels. Minus argmins
// are materialized with zeros in preference to +1/-1 pairs.
SignedSearchResult oracle_signed(const PartitionSpec& spec, const SearchBudget& budget = {});
SignedSearchResult oracle_signed_total(const PartitionSpec& spec, const SearchBudget& budget = {});
MinusSearchResult oracle_minus(const PartitionSpec& spec, const SearchBudget& budget = {});

// Value-only dispatch over the three searches.
std::int64_t oracle_value(const PartitionSpec& spec, Variant variant,
                          const SearchBudget& budget = {});

// True when naive_oracle may run on a graph of the given order.
bool naive_in_budget(std::int64_t vertex_count, Variant variant, const SearchBudget& budget);

// Direct per-vertex check of one labeling against the variant's
// definition, straight off adjacency lists. Independent of the
// part-sum machinery above; used to cross-validate it.
bool naive_valid(const ExplicitGraph& g, std::span<const int> values, Variant variant);

// Exact minimum weight by enumerating all 2^n (signed) or 3^n (minus)
// labelings. Signed-total requires a graph without isolated vertices.
std::int64_t naive_oracle(const ExplicitGraph& g, Variant variant,
                          const SearchBudget& budget = {});

}  // namespace multidom
