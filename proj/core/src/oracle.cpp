#include "multidom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <vector>

namespace multidom {

namespace {

void require_multipartite(const SpecStats& st) {
  if (st.k < 2) {
    throw SpecError("operation requires at least two parts (k >= 2)");
  }
}

void check_state_budget(const PartitionSpec& spec, bool minus, const SearchBudget& budget) {
  std::uint64_t states = 1;
  for (std::int64_t n : spec.sizes) {
    const std::uint64_t choices = minus ? 2 * n + 1 : n + 1;
    if (states > budget.max_states / choices) {
      throw BudgetError("reduced search space exceeds --budget-states");
    }
    states *= choices;
  }
}

// Depth-first odometer over part sums, most negative first, so leaves
// are visited in lexicographically increasing plus-count order and the
// first optimum found is the lexicographically smallest one. A subtree
// is cut when even finishing with every remaining part at its most
// negative sum cannot strictly beat the incumbent.
class PartSumSearch {
 public:
  PartSumSearch(const PartitionSpec& spec, bool minus) : sizes_(spec.sizes), minus_(minus) {
    const int k = static_cast<int>(sizes_.size());
    cur_.resize(k);
    suffix_low_.assign(k + 1, 0);
    for (int i = k - 1; i >= 0; --i) suffix_low_[i] = suffix_low_[i + 1] - sizes_[i];
  }

  template <typename Feasible>
  std::vector<std::int64_t> run(const Feasible& feasible, std::int64_t* value) {
    best_ = std::numeric_limits<std::int64_t>::max();
    found_ = false;
    dfs(0, 0, feasible);
    if (!found_) {
      // Cannot happen for k >= 2: the all-+1 labeling is always valid.
      throw std::logic_error("part-sum search found no feasible assignment");
    }
    *value = best_;
    return best_sums_;
  }

 private:
  template <typename Feasible>
  void dfs(int depth, std::int64_t partial, const Feasible& feasible) {
    if (found_ && partial + suffix_low_[depth] >= best_) return;
    if (depth == static_cast<int>(sizes_.size())) {
      if ((!found_ || partial < best_) && feasible(cur_, partial)) {
        best_ = partial;
        best_sums_ = cur_;
        found_ = true;
      }
      return;
    }
    const std::int64_t n = sizes_[depth];
    const int step = minus_ ? 1 : 2;
    for (std::int64_t s = -n; s <= n; s += step) {
      cur_[depth] = s;
      dfs(depth + 1, partial + s, feasible);
    }
  }

  const std::vector<std::int64_t>& sizes_;
  bool minus_;
  std::vector<std::int64_t> cur_;
  std::vector<std::int64_t> suffix_low_;
  std::vector<std::int64_t> best_sums_;
  std::int64_t best_ = 0;
  bool found_ = false;
};

SignedAssignment signed_from_sums(const PartitionSpec& spec, const std::vector<std::int64_t>& sums) {
  SignedAssignment a;
  a.plus_counts.resize(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i) a.plus_counts[i] = (spec.sizes[i] + sums[i]) / 2;
  return a;
}

}  // namespace

SignedSearchResult oracle_signed(const PartitionSpec& spec, const SearchBudget& budget) {
  const SpecStats st = stats(spec);
  require_multipartite(st);
  check_state_budget(spec, /*minus=*/false, budget);

  const auto& sizes = spec.sizes;
  const auto feasible = [&](const std::vector<std::int64_t>& sums, std::int64_t total) {
    for (std::size_t i = 0; i < sums.size(); ++i) {
      // -1 present in part i: (-1) + S - s_i >= 1; +1 present: S >= s_i.
      if (sums[i] < sizes[i] && total - sums[i] < 2) return false;
      if (sums[i] > -sizes[i] && total < sums[i]) return false;
    }
    return true;
  };

  PartSumSearch search(spec, /*minus=*/false);
  SignedSearchResult result;
  const std::vector<std::int64_t> sums = search.run(feasible, &result.value);
  result.argmin = signed_from_sums(spec, sums);
  return result;
}

SignedSearchResult oracle_signed_total(const PartitionSpec& spec, const SearchBudget& budget) {
  const SpecStats st = stats(spec);
  require_multipartite(st);
  check_state_budget(spec, /*minus=*/false, budget);

  const auto feasible = [&](const std::vector<std::int64_t>& sums, std::int64_t total) {
    // Every part-i vertex has open neighborhood sum S - s_i, whatever
    // its own value.
    for (std::int64_t s : sums) {
      if (total - s < 1) return false;
    }
    return true;
  };

  PartSumSearch search(spec, /*minus=*/false);
  SignedSearchResult result;
  const std::vector<std::int64_t> sums = search.run(feasible, &result.value);
  result.argmin = signed_from_sums(spec, sums);
  return result;
}

MinusSearchResult oracle_minus(const PartitionSpec& spec, const SearchBudget& budget) {
  const SpecStats st = stats(spec);
  require_multipartite(st);
  check_state_budget(spec, /*minus=*/true, budget);

  const auto& sizes = spec.sizes;
  const auto feasible = [&](const std::vector<std::int64_t>& sums, std::int64_t total) {
    for (std::size_t i = 0; i < sums.size(); ++i) {
      // Least vertex value a part with sum s_i must contain: +1 when
      // the whole part is +1, -1 when the sum is negative, 0 between.
      const std::int64_t least = sums[i] == sizes[i] ? 1 : sums[i] >= 0 ? 0 : -1;
      if (least + total - sums[i] < 1) return false;
    }
    return true;
  };

  PartSumSearch search(spec, /*minus=*/true);
  MinusSearchResult result;
  const std::vector<std::int64_t> sums = search.run(feasible, &result.value);
  result.argmin.counts.resize(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i) {
    const std::int64_t n = spec.sizes[i];
    const std::int64_t s = sums[i];
    result.argmin.counts[i] = s >= 0 ? MinusAssignment::PartCounts{s, n - s, 0}
                                     : MinusAssignment::PartCounts{0, n + s, -s};
  }
  return result;
}

std::int64_t oracle_value(const PartitionSpec& spec, Variant variant, const SearchBudget& budget) {
  switch (variant) {
    case Variant::Signed:
      return oracle_signed(spec, budget).value;
    case Variant::SignedTotal:
      return oracle_signed_total(spec, budget).value;
    case Variant::Minus:
      return oracle_minus(spec, budget).value;
  }
  throw std::logic_error("unreachable");
}

bool naive_in_budget(std::int64_t vertex_count, Variant variant, const SearchBudget& budget) {
  const std::uint64_t base = variant == Variant::Minus ? 3 : 2;
  std::uint64_t labelings = 1;
  for (std::int64_t i = 0; i < vertex_count; ++i) {
    if (labelings > budget.max_naive_labelings / base) return false;
    labelings *= base;
  }
  return labelings <= budget.max_naive_labelings;
}

bool naive_valid(const ExplicitGraph& g, std::span<const int> values, Variant variant) {
  if (static_cast<std::int64_t>(values.size()) != g.vertex_count) {
    throw SpecError("value vector length does not match the graph order");
  }
  for (int x : values) {
    if (x < -1 || x > 1 || (variant != Variant::Minus && x == 0)) {
      throw SpecError("vertex value outside the variant's range");
    }
  }
  const bool closed = variant != Variant::SignedTotal;
  for (std::int64_t v = 0; v < g.vertex_count; ++v) {
    std::int64_t sum = closed ? values[v] : 0;
    for (std::int32_t u : g.adjacency[v]) sum += values[u];
    if (sum < 1) return false;
  }
  return true;
}

namespace {

// Enumerates +/-1 labelings as bitmasks (bit set means +1); the
// neighborhood sum of v is 2*popcount(mask & nbhd_v) - |nbhd_v|.
std::int64_t naive_signed_search(const ExplicitGraph& g, bool closed) {
  const int n = static_cast<int>(g.vertex_count);
  std::vector<std::uint64_t> nbhd(n, 0);
  std::vector<int> nbhd_size(n);
  for (int v = 0; v < n; ++v) {
    std::uint64_t m = closed ? (std::uint64_t{1} << v) : 0;
    for (std::int32_t u : g.adjacency[v]) m |= std::uint64_t{1} << u;
    nbhd[v] = m;
    nbhd_size[v] = std::popcount(m);
  }
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      ok = 2 * std::popcount(mask & nbhd[v]) - nbhd_size[v] >= 1;
    }
    if (ok) best = std::min(best, 2 * std::int64_t{std::popcount(mask)} - n);
  }
  return best;
}

std::int64_t naive_minus_search(const ExplicitGraph& g) {
  const int n = static_cast<int>(g.vertex_count);
  std::vector<int> values(n, -1);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  while (true) {
    bool ok = true;
    std::int64_t total = 0;
    for (int v = 0; v < n; ++v) total += values[v];
    for (int v = 0; v < n && ok; ++v) {
      std::int64_t sum = values[v];
      for (std::int32_t u : g.adjacency[v]) sum += values[u];
      ok = sum >= 1;
    }
    if (ok) best = std::min(best, total);
    int pos = 0;
    while (pos < n && values[pos] == 1) values[pos++] = -1;
    if (pos == n) break;
    ++values[pos];
  }
  return best;
}

}  // namespace

std::int64_t naive_oracle(const ExplicitGraph& g, Variant variant, const SearchBudget& budget) {
  if (!naive_in_budget(g.vertex_count, variant, budget)) {
    throw BudgetError("naive search space exceeds --budget-naive");
  }
  if (variant == Variant::SignedTotal) {
    for (const auto& nbrs : g.adjacency) {
      if (nbrs.empty()) {
        throw SpecError("signed total domination is undefined on graphs with isolated vertices");
      }
    }
  }
  if (variant == Variant::Minus) return naive_minus_search(g);
  return naive_signed_search(g, variant == Variant::Signed);
}

}  // namespace multidom
