#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace multidom {

// The three domination variants handled by this library:
//   Signed      f : V -> {-1,+1},   f(N[v]) >= 1 for every vertex
//   SignedTotal f : V -> {-1,+1},   f(N(v)) >= 1 for every vertex
//   Minus       f : V -> {-1,0,+1}, f(N[v]) >= 1 for every vertex
enum class Variant { Signed, SignedTotal, Minus };

// CLI-facing token: "signed", "signed-total", "minus".
const char* variant_name(Variant v);
bool parse_variant(const std::string& token, Variant& out);

// Malformed spec or assignment, or an operation applied outside its
// supported family (e.g. a single-part spec where k >= 2 is required).
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive search would exceed the configured state budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Part sizes (n_1,...,n_k) of the complete multipartite graph
// K_{n_1,...,n_k}, kept in user-supplied order. Part i holds n_i
// pairwise non-adjacent vertices; vertices in distinct parts are
// always adjacent.
struct PartitionSpec {
  std::vector<std::int64_t> sizes;
};

// Quantities derived from a spec. Index lists refer to positions in
// the original `sizes` vector and preserve its order; nothing here is
// ever reordered.
struct SpecStats {
  std::int64_t n = 0;        // total vertex count
  int k = 0;                 // number of parts
  int t = 0;                 // number of odd-size parts
  int i1 = 0;                // number of parts of size 1
  int i2 = 0;                // number of even parts of size 2
  std::vector<int> odd_indices;   // positions of odd-size parts
  std::vector<int> even_indices;  // positions of even-size parts
  std::int64_t min_size = 0;
};

// f : V -> {-1,+1} compressed to one +1 count per part. Part i holds
// plus_counts[i] vertices valued +1 and n_i - plus_counts[i] valued -1,
// so the part sum is s_i = 2*plus_counts[i] - n_i. Every validity
// condition factors through the part sums, which is why this is the
// canonical representation; per-vertex vectors exist only at the
// verification boundary (see expand()).
struct SignedAssignment {
  std::vector<std::int64_t> plus_counts;
};

// f : V -> {-1,0,+1} compressed to (#+1, #0, #-1) per part.
struct MinusAssignment {
  struct PartCounts {
    std::int64_t plus = 0;
    std::int64_t zero = 0;
    std::int64_t minus = 0;
  };
  std::vector<PartCounts> counts;
};

// Adjacency-list graph used by the naive oracle and the per-vertex
// verification cross-checks. Symmetric and irreflexive by construction.
struct ExplicitGraph {
  std::int64_t vertex_count = 0;
  std::vector<std::vector<std::int32_t>> adjacency;  // sorted neighbor lists
  std::vector<std::int32_t> part_of;  // part index per vertex (when built from a spec)
};

// Throws SpecError unless every size is >= 1, k >= 1, and the total
// vertex count fits in 64 bits.
void validate(const PartitionSpec& spec);

// Derived statistics; accepts any valid spec including k = 1.
SpecStats stats(const PartitionSpec& spec);

// Materializes K_{n_1,...,n_k}. Vertices are numbered part by part in
// input order; a part-i vertex has degree n - n_i.
ExplicitGraph build_graph(const PartitionSpec& spec);

// Throws SpecError unless the assignment matches the spec's length and
// per-part count bounds.
void validate_assignment(const PartitionSpec& spec, const SignedAssignment& a);
void validate_assignment(const PartitionSpec& spec, const MinusAssignment& a);

// Part sums s_i of the assignment (s_i = 2p_i - n_i, resp. a_i - c_i).
std::vector<std::int64_t> part_sums(const PartitionSpec& spec, const SignedAssignment& a);
std::vector<std::int64_t> part_sums(const PartitionSpec& spec, const MinusAssignment& a);

// Per-vertex value vector of length n. Within each part the +1 vertices
// occupy the lowest vertex indices, then 0 (minus only), then -1; the
// fixed order keeps golden outputs stable.
std::vector<int> expand(const PartitionSpec& spec, const SignedAssignment& a);
std::vector<int> expand(const PartitionSpec& spec, const MinusAssignment& a);

// w(f): sum of the assignment over all vertices.
std::int64_t weight(const PartitionSpec& spec, const SignedAssignment& a);
std::int64_t weight(const PartitionSpec& spec, const MinusAssignment& a);

}  // namespace multidom
