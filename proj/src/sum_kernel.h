#pragma once

// Internal helpers shared by the enumeration-based modules. Kernels are
// templated on the accumulator type: std::int64_t when every partial
// discrepancy fits, BigInt otherwise.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "isingnpp/bigint.h"
#include "isingnpp/instance.h"

namespace isingnpp::internal {

// True when 2 * total < 2^62, so every |2 * subset_sum - total| fits in int64.
inline bool fits_int64(const Instance& inst) { return bit_length(inst.total()) <= 60; }

template <class Sum>
std::vector<Sum> convert_weights(const Instance& inst) {
  std::vector<Sum> out;
  out.reserve(inst.n());
  for (const auto& w : inst.weights()) {
    if constexpr (std::is_same_v<Sum, BigInt>) {
      out.push_back(w);
    } else {
      out.push_back(w.template convert_to<Sum>());
    }
  }
  return out;
}

template <class Sum>
Sum abs_value(const Sum& x) {
  return x < 0 ? Sum(-x) : x;
}

template <class Sum>
BigInt to_big(const Sum& x) {
  return BigInt(x);
}

// Visits the configurations with spin 0 up whose remaining spins encode
// rest in [begin, end), in ascending order, as visit(mask, d) where
// mask = 1 | rest << 1 and d is the signed discrepancy. Each step updates d
// from the previous one: incrementing `rest` sets one bit and clears the
// trailing ones below it, so the update is amortized O(1).
template <class Sum, class Visit>
void for_each_canonical(std::span<const Sum> w, const Sum& total, std::uint64_t begin,
                        std::uint64_t end, Visit&& visit) {
  if (begin >= end) return;
  const std::size_t rest_bits = w.size() - 1;
  Sum up = w[0];
  for (std::size_t k = 0; k < rest_bits; ++k) {
    if ((begin >> k) & 1u) up += w[k + 1];
  }
  Sum d = up + up - total;
  visit((begin << 1) | 1u, d);
  for (std::uint64_t rest = begin + 1; rest < end; ++rest) {
    const std::uint64_t cleared = (rest - 1) & ~rest;
    const unsigned set_bit = static_cast<unsigned>(__builtin_ctzll(rest));
    for (std::uint64_t bits = cleared; bits != 0; bits &= bits - 1) {
      const unsigned k = static_cast<unsigned>(__builtin_ctzll(bits));
      d -= w[k + 1] + w[k + 1];
    }
    d += w[set_bit + 1] + w[set_bit + 1];
    visit((rest << 1) | 1u, d);
  }
}

}  // namespace isingnpp::internal

namespace isingnpp::internal {

template <class Sum>
struct SubsetSum {
  Sum sum;
  std::uint64_t mask;  // bit k set: item k of the list's item range is in the subset
};

// All 2^k subset sums of w, ascending, built by k merge-doublings so no sort
// is needed. Ties keep the order of the smaller mask first.
template <class Sum>
std::vector<SubsetSum<Sum>> sorted_subset_sums(std::span<const Sum> w) {
  std::vector<SubsetSum<Sum>> sums{{Sum(0), 0}};
  sums.reserve(std::size_t{1} << w.size());
  std::vector<SubsetSum<Sum>> shifted, merged;
  for (std::size_t k = 0; k < w.size(); ++k) {
    shifted.clear();
    shifted.reserve(sums.size());
    for (const auto& s : sums) shifted.push_back({s.sum + w[k], s.mask | (std::uint64_t{1} << k)});
    merged.clear();
    merged.reserve(2 * sums.size());
    std::merge(sums.begin(), sums.end(), shifted.begin(), shifted.end(), std::back_inserter(merged),
               [](const auto& a, const auto& b) { return a.sum < b.sum; });
    sums.swap(merged);
  }
  return sums;
}

template <class Sum>
struct ScanOutcome {
  Sum best;
  std::uint64_t left_mask = 0;
  std::uint64_t right_mask = 0;
  std::uint64_t steps = 0;
};

// Minimizes |2 (l + r) - total| over pairs drawn from an ascending left
// stream and a descending right stream. Each stream exposes
// bool next(Sum&, std::uint64_t& mask). Stops early at `floor`.
template <class Sum, class Left, class Right>
ScanOutcome<Sum> coordinated_scan(Left& left, Right& right, const Sum& total, unsigned floor) {
  ScanOutcome<Sum> out{total + 1};
  Sum l, r;
  std::uint64_t lm = 0, rm = 0;
  if (!left.next(l, lm) || !right.next(r, rm)) return out;
  while (true) {
    ++out.steps;
    const Sum v = (l + r) * 2 - total;
    const Sum a = abs_value(v);
    if (a < out.best) {
      out.best = a;
      out.left_mask = lm;
      out.right_mask = rm;
      if (out.best <= floor) break;
    }
    if (v < 0) {
      if (!left.next(l, lm)) break;
    } else {
      if (!right.next(r, rm)) break;
    }
  }
  return out;
}

}  // namespace isingnpp::internal
