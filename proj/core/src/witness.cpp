#include "multidom/witness.hpp"

#include <algorithm>

#include "multidom/formulas.hpp"

namespace multidom {

namespace {

void require_multipartite(const SpecStats& st) {
  if (st.k < 2) {
    throw SpecError("operation requires at least two parts (k >= 2)");
  }
}

// Converts target part sums into +1 counts; the recipes below only
// produce sums with the right parity and range.
SignedAssignment from_part_sums(const PartitionSpec& spec, const std::vector<std::int64_t>& sums) {
  SignedAssignment a;
  a.plus_counts.resize(spec.sizes.size());
  for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
    const std::int64_t n = spec.sizes[i];
    const std::int64_t s = sums[i];
    if (s < -n || s > n || (s + n) % 2 != 0) {
      throw std::logic_error("witness recipe produced an unrealizable part sum");
    }
    a.plus_counts[i] = (n + s) / 2;
  }
  return a;
}

// First `count` indices from `pool` whose part size matches `size`.
std::vector<int> pick_by_size(const PartitionSpec& spec, const std::vector<int>& pool,
                              std::int64_t size, int count) {
  std::vector<int> out;
  for (int i : pool) {
    if (static_cast<int>(out.size()) == count) break;
    if (spec.sizes[i] == size) out.push_back(i);
  }
  if (static_cast<int>(out.size()) != count) {
    throw std::logic_error("witness recipe ran out of parts of the required size");
  }
  return out;
}

}  // namespace

SignedAssignment signed_witness(const PartitionSpec& spec) {
  const SpecStats st = stats(spec);
  require_multipartite(st);
  std::vector<std::int64_t> sums(st.k, 0);

  switch (signed_case(spec, st)) {
    case SignedCase::OddManySingletons: {
      // (2k-t+1)/2 singleton parts at +1, remaining odd parts at -1,
      // even parts at -2; total 1.
      const int m = (2 * st.k - st.t + 1) / 2;
      const std::vector<int> ones = pick_by_size(spec, st.odd_indices, 1, m);
      for (int i : st.odd_indices) sums[i] = -1;
      for (int i : ones) sums[i] = +1;
      for (int i : st.even_indices) sums[i] = -2;
      break;
    }
    case SignedCase::OddStarCenter:
    case SignedCase::EvenBipartiteMinOne: {
      // Value n_1 + n_2: everything +1.
      for (int i = 0; i < st.k; ++i) sums[i] = spec.sizes[i];
      break;
    }
    case SignedCase::OddFive: {
      const int odd = st.odd_indices.front();
      if (st.k == 2) {
        sums[odd] = 3;
        sums[st.even_indices.front()] = 2;
      } else {
        // Part sums (1,2,2,0,...) over odd-first labeling.
        sums[odd] = 1;
        sums[st.even_indices[0]] = 2;
        sums[st.even_indices[1]] = 2;
      }
      break;
    }
    case SignedCase::OddDefaultThree: {
      if (st.t >= 3) {
        // (t+3)/2 odd parts at +1, the rest at -1, even parts at 0.
        const int h = (st.t + 3) / 2;
        for (int j = 0; j < st.t; ++j) sums[st.odd_indices[j]] = j < h ? +1 : -1;
      } else {
        // t = 1. The remaining weight-3 shapes, by why the 5-branch
        // did not fire: odd part of size 3 -> (3,0,...); otherwise an
        // even part of size 2 exists -> odd at 1, that part all +1.
        const int odd = st.odd_indices.front();
        const std::int64_t n_odd = spec.sizes[odd];
        if (n_odd == 3) {
          sums[odd] = 3;
        } else {
          sums[odd] = 1;
          sums[pick_by_size(spec, st.even_indices, 2, 1).front()] = 2;
        }
      }
      break;
    }
    case SignedCase::EvenBipartiteMinFive: {
      sums[0] = 3;
      sums[1] = 3;
      break;
    }
    case SignedCase::EvenSingletonsAndPairs: {
      // i1' singleton parts at +1 and i2' size-2 even parts at +2 with
      // i1' + i2' = t/2 + 1 and i1' maximal; remaining odd parts at -1.
      const int need = st.t / 2 + 1;
      const int i1p = std::min(st.i1, need);
      const int i2p = need - i1p;
      for (int i : st.odd_indices) sums[i] = -1;
      for (int i : pick_by_size(spec, st.odd_indices, 1, i1p)) sums[i] = +1;
      for (int i : pick_by_size(spec, st.even_indices, 2, i2p)) sums[i] = +2;
      break;
    }
    case SignedCase::EvenDefaultFour: {
      if (st.t == 0) {
        sums[st.even_indices[0]] = 2;
        sums[st.even_indices[1]] = 2;
      } else if (st.t == 2 && st.k == 2) {
        // Here min{n_1,n_2} = 3: the minimum part all +1, the other at +1.
        const int small = spec.sizes[0] <= spec.sizes[1] ? 0 : 1;
        sums[small] = 3;
        sums[1 - small] = 1;
      } else if (st.t == 2) {
        // k >= 3: both odd parts at +1, one even part at +2.
        sums[st.odd_indices[0]] = 1;
        sums[st.odd_indices[1]] = 1;
        sums[st.even_indices.front()] = 2;
      } else {
        // t >= 4: (t+4)/2 odd parts at +1, the rest at -1.
        const int h = (st.t + 4) / 2;
        for (int j = 0; j < st.t; ++j) sums[st.odd_indices[j]] = j < h ? +1 : -1;
      }
      break;
    }
  }
  return from_part_sums(spec, sums);
}

SignedAssignment signed_total_witness(const PartitionSpec& spec) {
  const SpecStats st = stats(spec);
  require_multipartite(st);
  std::vector<std::int64_t> sums(st.k, 0);

  if (st.t % 2 == 1) {
    if (st.t == 1) {
      // Part sums (1,2,0,...): the odd part, then one even part.
      sums[st.odd_indices.front()] = 1;
      sums[st.even_indices.front()] = 2;
    } else {
      // (t-3)/2 odd parts at -1, the remaining (t+3)/2 at +1.
      const int drop = (st.t - 3) / 2;
      for (int j = 0; j < st.t; ++j) sums[st.odd_indices[j]] = j < drop ? -1 : +1;
    }
  } else if (st.t == 0) {
    sums[st.even_indices[0]] = 2;
    sums[st.even_indices[1]] = 2;
  } else {
    // t even, t >= 2: (t-2)/2 odd parts at -1, the rest at +1.
    const int drop = (st.t - 2) / 2;
    for (int j = 0; j < st.t; ++j) sums[st.odd_indices[j]] = j < drop ? -1 : +1;
  }
  return from_part_sums(spec, sums);
}

MinusAssignment minus_witness(const PartitionSpec& spec) {
  const SpecStats st = stats(spec);
  require_multipartite(st);
  MinusAssignment a;
  a.counts.resize(st.k);
  for (int i = 0; i < st.k; ++i) a.counts[i] = {0, spec.sizes[i], 0};

  auto put_plus = [&](int i) {
    a.counts[i].plus = 1;
    a.counts[i].zero = spec.sizes[i] - 1;
  };
  if (st.i1 > 0) {
    // The singleton vertex alone carries +1; weight 1.
    put_plus(pick_by_size(spec, st.odd_indices, 1, 1).front());
  } else {
    // One +1 vertex in each of the first two parts; weight 2.
    put_plus(0);
    put_plus(1);
  }
  return a;
}

namespace {

// Shared part-sum checker. `present` holds the distinct vertex values
// occurring in each part, in ascending order.
ValidityReport check_part_sums(const std::vector<std::int64_t>& sums,
                               const std::vector<std::vector<int>>& present, Variant variant) {
  ValidityReport report;
  std::int64_t total = 0;
  for (std::int64_t s : sums) total += s;
  report.weight = total;
  report.min_neighborhood_sum.resize(sums.size());

  bool first = true;
  std::int64_t global_min = 0;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    std::int64_t part_min = 0;
    bool part_first = true;
    for (int x : present[i]) {
      const std::int64_t nb =
          variant == Variant::SignedTotal ? total - sums[i] : x + total - sums[i];
      if (part_first || nb < part_min) {
        part_min = nb;
        part_first = false;
      }
      if (first || nb < global_min) {
        global_min = nb;
        report.tightest_part = static_cast<int>(i);
        report.tightest_value = x;
        first = false;
      }
    }
    report.min_neighborhood_sum[i] = part_min;
  }
  report.valid = global_min >= 1;
  return report;
}

}  // namespace

ValidityReport verify(const PartitionSpec& spec, const SignedAssignment& a, Variant variant) {
  const SpecStats st = stats(spec);
  require_multipartite(st);
  const std::vector<std::int64_t> sums = part_sums(spec, a);
  std::vector<std::vector<int>> present(st.k);
  for (int i = 0; i < st.k; ++i) {
    if (a.plus_counts[i] < spec.sizes[i]) present[i].push_back(-1);
    if (a.plus_counts[i] > 0) present[i].push_back(+1);
  }
  return check_part_sums(sums, present, variant);
}

ValidityReport verify(const PartitionSpec& spec, const MinusAssignment& a, Variant variant) {
  const SpecStats st = stats(spec);
  require_multipartite(st);
  if (variant != Variant::Minus) {
    throw SpecError("an assignment with zero values cannot be verified against a signed variant");
  }
  const std::vector<std::int64_t> sums = part_sums(spec, a);
  std::vector<std::vector<int>> present(st.k);
  for (int i = 0; i < st.k; ++i) {
    if (a.counts[i].minus > 0) present[i].push_back(-1);
    if (a.counts[i].zero > 0) present[i].push_back(0);
    if (a.counts[i].plus > 0) present[i].push_back(+1);
  }
  return check_part_sums(sums, present, variant);
}

}  // namespace multidom
