#include "multidom/model.hpp"

#include <algorithm>
#include <limits>

namespace multidom {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Signed:
      return "signed";
    case Variant::SignedTotal:
      return "signed-total";
    case Variant::Minus:
      return "minus";
  }
  return "?";
}

bool parse_variant(const std::string& token, Variant& out) {
  if (token == "signed") {
    out = Variant::Signed;
  } else if (token == "signed-total") {
    out = Variant::SignedTotal;
  } else if (token == "minus") {
    out = Variant::Minus;
  } else {
    return false;
  }
  return true;
}

void validate(const PartitionSpec& spec) {
  if (spec.sizes.empty()) {
    throw SpecError("partition spec must have at least one part");
  }
  std::int64_t n = 0;
  for (std::int64_t size : spec.sizes) {
    if (size < 1) {
      throw SpecError("every part size must be a positive integer");
    }
    if (size > std::numeric_limits<std::int64_t>::max() - n) {
      throw SpecError("total vertex count overflows");
    }
    n += size;
  }
}

SpecStats stats(const PartitionSpec& spec) {
  validate(spec);
  SpecStats st;
  st.k = static_cast<int>(spec.sizes.size());
  st.min_size = spec.sizes.front();
  for (int i = 0; i < st.k; ++i) {
    const std::int64_t size = spec.sizes[i];
    st.n += size;
    st.min_size = std::min(st.min_size, size);
    if (size % 2 == 1) {
      st.odd_indices.push_back(i);
      if (size == 1) ++st.i1;
    } else {
      st.even_indices.push_back(i);
      if (size == 2) ++st.i2;
    }
  }
  st.t = static_cast<int>(st.odd_indices.size());
  return st;
}

ExplicitGraph build_graph(const PartitionSpec& spec) {
  const SpecStats st = stats(spec);
  if (st.n > std::numeric_limits<std::int32_t>::max()) {
    throw SpecError("graph too large to materialize explicitly");
  }
  const int n = static_cast<int>(st.n);

  ExplicitGraph g;
  g.vertex_count = n;
  g.part_of.resize(n);
  int v = 0;
  for (int i = 0; i < st.k; ++i) {
    for (std::int64_t j = 0; j < spec.sizes[i]; ++j) {
      g.part_of[v++] = i;
    }
  }
  g.adjacency.resize(n);
  for (int u = 0; u < n; ++u) {
    g.adjacency[u].reserve(n - spec.sizes[g.part_of[u]]);
    for (int w = 0; w < n; ++w) {
      if (g.part_of[u] != g.part_of[w]) g.adjacency[u].push_back(w);
    }
  }
  return g;
}

void validate_assignment(const PartitionSpec& spec, const SignedAssignment& a) {
  validate(spec);
  if (a.plus_counts.size() != spec.sizes.size()) {
    throw SpecError("assignment has a different number of parts than the spec");
  }
  for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
    if (a.plus_counts[i] < 0 || a.plus_counts[i] > spec.sizes[i]) {
      throw SpecError("plus count out of range for part " + std::to_string(i + 1));
    }
  }
}

void validate_assignment(const PartitionSpec& spec, const MinusAssignment& a) {
  validate(spec);
  if (a.counts.size() != spec.sizes.size()) {
    throw SpecError("assignment has a different number of parts than the spec");
  }
  for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
    const auto& c = a.counts[i];
    if (c.plus < 0 || c.zero < 0 || c.minus < 0 || c.plus + c.zero + c.minus != spec.sizes[i]) {
      throw SpecError("counts do not sum to the part size for part " + std::to_string(i + 1));
    }
  }
}

std::vector<std::int64_t> part_sums(const PartitionSpec& spec, const SignedAssignment& a) {
  validate_assignment(spec, a);
  std::vector<std::int64_t> sums(spec.sizes.size());
  for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
    sums[i] = 2 * a.plus_counts[i] - spec.sizes[i];
  }
  return sums;
}

std::vector<std::int64_t> part_sums(const PartitionSpec& spec, const MinusAssignment& a) {
  validate_assignment(spec, a);
  std::vector<std::int64_t> sums(spec.sizes.size());
  for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
    sums[i] = a.counts[i].plus - a.counts[i].minus;
  }
  return sums;
}

std::vector<int> expand(const PartitionSpec& spec, const SignedAssignment& a) {
  validate_assignment(spec, a);
  std::vector<int> values;
  for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
    values.insert(values.end(), a.plus_counts[i], +1);
    values.insert(values.end(), spec.sizes[i] - a.plus_counts[i], -1);
  }
  return values;
}

std::vector<int> expand(const PartitionSpec& spec, const MinusAssignment& a) {
  validate_assignment(spec, a);
  std::vector<int> values;
  for (const auto& c : a.counts) {
    values.insert(values.end(), c.plus, +1);
    values.insert(values.end(), c.zero, 0);
    values.insert(values.end(), c.minus, -1);
  }
  return values;
}

std::int64_t weight(const PartitionSpec& spec, const SignedAssignment& a) {
  std::int64_t total = 0;
  for (std::int64_t s : part_sums(spec, a)) total += s;
  return total;
}

std::int64_t weight(const PartitionSpec& spec, const MinusAssignment& a) {
  std::int64_t total = 0;
  for (std::int64_t s : part_sums(spec, a)) total += s;
  return total;
}

}  // namespace multidom
