#include "multidom/formulas.hpp"

#include <algorithm>

namespace multidom {

namespace {

void require_multipartite(const SpecStats& st) {
  if (st.k < 2) {
    throw SpecError("operation requires at least two parts (k >= 2)");
  }
}

const char* signed_case_label(SignedCase c) {
  switch (c) {
    case SignedCase::OddManySingletons:
      return "signed/odd_t/t_ge3_i1_ge_half";
    case SignedCase::OddStarCenter:
      return "signed/odd_t/t1_k2_n1_eq_1";
    case SignedCase::OddFive:
      return "signed/odd_t/t1_large_parts";
    case SignedCase::OddDefaultThree:
      return "signed/odd_t/otherwise";
    case SignedCase::EvenBipartiteMinOne:
      return "signed/even_t/t2_k2_min1";
    case SignedCase::EvenBipartiteMinFive:
      return "signed/even_t/t2_k2_min_ge5";
    case SignedCase::EvenSingletonsAndPairs:
      return "signed/even_t/i1_i2_ge_half_t_plus1";
    case SignedCase::EvenDefaultFour:
      return "signed/even_t/otherwise";
  }
  return "?";
}

}  // namespace

SignedCase signed_case(const PartitionSpec& spec, const SpecStats& st) {
  require_multipartite(st);
  if (st.t % 2 == 1) {
    // 2k - t + 1 is even here, so the threshold (2k-t+1)/2 is exact.
    if (st.t >= 3 && 2 * st.i1 >= 2 * st.k - st.t + 1) {
      return SignedCase::OddManySingletons;
    }
    if (st.t == 1) {
      const std::int64_t n_odd = spec.sizes[st.odd_indices.front()];
      if (st.k == 2) {
        const std::int64_t n_even = spec.sizes[st.even_indices.front()];
        if (n_odd == 1) return SignedCase::OddStarCenter;
        if (n_odd >= 5 && n_even >= 4) return SignedCase::OddFive;
      } else if (n_odd != 3) {
        const bool all_even_ge4 = std::all_of(
            st.even_indices.begin(), st.even_indices.end(),
            [&](int i) { return spec.sizes[i] >= 4; });
        if (all_even_ge4) return SignedCase::OddFive;
      }
    }
    return SignedCase::OddDefaultThree;
  }
  if (st.t == 2 && st.k == 2) {
    if (st.min_size == 1) return SignedCase::EvenBipartiteMinOne;
    if (st.min_size >= 5) return SignedCase::EvenBipartiteMinFive;
  }
  if (st.i1 + st.i2 >= st.t / 2 + 1) {
    return SignedCase::EvenSingletonsAndPairs;
  }
  return SignedCase::EvenDefaultFour;
}

std::int64_t signed_domination_number(const PartitionSpec& spec) {
  const SpecStats st = stats(spec);
  switch (signed_case(spec, st)) {
    case SignedCase::OddManySingletons:
      return 1;
    case SignedCase::OddStarCenter:
      return 1 + spec.sizes[st.even_indices.front()];
    case SignedCase::OddFive:
      return 5;
    case SignedCase::OddDefaultThree:
      return 3;
    case SignedCase::EvenBipartiteMinOne:
      return st.n;  // n_1 + n_2
    case SignedCase::EvenBipartiteMinFive:
      return 6;
    case SignedCase::EvenSingletonsAndPairs:
      return 2;
    case SignedCase::EvenDefaultFour:
      return 4;
  }
  throw std::logic_error("unreachable");
}

std::int64_t signed_total_domination_number(const PartitionSpec& spec) {
  const SpecStats st = stats(spec);
  require_multipartite(st);
  if (st.t % 2 == 1) return 3;
  if (st.t == 0) return 4;
  return 2;
}

std::int64_t minus_domination_number(const PartitionSpec& spec) {
  const SpecStats st = stats(spec);
  require_multipartite(st);
  return st.i1 > 0 ? 1 : 2;
}

std::int64_t domination_number(const PartitionSpec& spec, Variant variant) {
  switch (variant) {
    case Variant::Signed:
      return signed_domination_number(spec);
    case Variant::SignedTotal:
      return signed_total_domination_number(spec);
    case Variant::Minus:
      return minus_domination_number(spec);
  }
  throw std::logic_error("unreachable");
}

std::string classify(const PartitionSpec& spec, Variant variant) {
  const SpecStats st = stats(spec);
  require_multipartite(st);
  switch (variant) {
    case Variant::Signed:
      return signed_case_label(signed_case(spec, st));
    case Variant::SignedTotal:
      if (st.t % 2 == 1) return "signed-total/t_odd";
      if (st.t == 0) return "signed-total/t_zero";
      return "signed-total/t_even_positive";
    case Variant::Minus:
      return st.i1 > 0 ? "minus/has_size1_part" : "minus/all_parts_ge2";
  }
  throw std::logic_error("unreachable");
}

std::vector<std::string> case_labels(Variant variant) {
  switch (variant) {
    case Variant::Signed:
      return {
          "signed/odd_t/t_ge3_i1_ge_half",
          "signed/odd_t/t1_k2_n1_eq_1",
          "signed/odd_t/t1_large_parts",
          "signed/odd_t/otherwise",
          "signed/even_t/t2_k2_min1",
          "signed/even_t/t2_k2_min_ge5",
          "signed/even_t/i1_i2_ge_half_t_plus1",
          "signed/even_t/otherwise",
      };
    case Variant::SignedTotal:
      return {"signed-total/t_odd", "signed-total/t_zero", "signed-total/t_even_positive"};
    case Variant::Minus:
      return {"minus/has_size1_part", "minus/all_parts_ge2"};
  }
  throw std::logic_error("unreachable");
}

}  // namespace multidom
