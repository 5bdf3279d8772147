#pragma once

// Enumeration of all finite-index submodules of Z_p^r up to an index cap.
//
// Order: total index exponent, then diagonal profile (ν_1..ν_r)
// lexicographically, then the above-diagonal entries in row-major order with
// the last entry varying fastest.

#include "zeta/hnf_lattice.hpp"
#include "zeta/padic.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace zeta {

/// Number of submodules of Z_p^r of index exactly p^k, for k = 0..K.  This is
/// the complete homogeneous symmetric polynomial h_k(1, p, ..., p^{r-1}),
/// computed by the recurrence for adding one variable at a time.
inline std::vector<mpz_class> sublattice_counts(int r, int K, std::int64_t p) {
  std::vector<mpz_class> h(static_cast<std::size_t>(K) + 1, 0);
  h[0] = 1;
  mpz_class x = 1;
  for (int i = 0; i < r; ++i) {
    // multiply by 1/(1 - x T)
    for (int k = 1; k <= K; ++k) h[k] += x * h[k - 1];
    x *= p;
  }
  return h;
}

inline mpz_class predicted_sublattice_count(int r, int K, std::int64_t p) {
  mpz_class total = 0;
  for (const auto& c : sublattice_counts(r, K, p)) total += c;
  return total;
}

/// All ν ∈ N_0^r with Σν = k, lexicographically.
inline std::vector<std::vector<int>> diagonal_profiles_of_total(int r, int k) {
  std::vector<std::vector<int>> out;
  if (r == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  std::vector<int> nu(r, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == r - 1) {
      nu[pos] = left;
      out.push_back(nu);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      nu[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, k);
  return out;
}

/// All profiles with Σν ≤ K in enumeration order.
inline std::vector<std::vector<int>> diagonal_profiles(int r, int K) {
  std::vector<std::vector<int>> out;
  for (int k = 0; k <= K; ++k) {
    auto part = diagonal_profiles_of_total(r, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Visits every lattice with the given diagonal profile.  The visitor sees a
/// reference to a single lattice object that is mutated between calls.
template <LatticeInt Int = std::int64_t, class Visitor>
void for_each_sublattice_with_profile(std::int64_t p, const std::vector<int>& nu, Visitor&& visit) {
  const int r = static_cast<int>(nu.size());
  HnfLattice<Int> lat = HnfLattice<Int>::from_diagonal(p, nu);
  struct Slot {
    int i, j;
    Int bound;
  };
  std::vector<Slot> slots;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (nu[j] > 0) slots.push_back({i, j, lat.at(j, j)});
  if (slots.empty()) {
    visit(static_cast<const HnfLattice<Int>&>(lat));
    return;
  }
  // The last slot runs in a tight inner loop; the others carry like an odometer.
  const std::size_t last = slots.size() - 1;
  Int& cell = lat.offdiag_ref(slots[last].i, slots[last].j);
  const Int last_bound = slots[last].bound;
  std::vector<Int> value(last, Int(0));
  while (true) {
    for (Int x = 0; x < last_bound; x += 1) {
      cell = x;
      visit(static_cast<const HnfLattice<Int>&>(lat));
    }
    cell = 0;
    std::size_t pos = last;
    while (true) {
      if (pos == 0) return;
      --pos;
      value[pos] += 1;
      if (value[pos] < slots[pos].bound) {
        lat.set_offdiag(slots[pos].i, slots[pos].j, value[pos]);
        break;
      }
      value[pos] = 0;
      lat.set_offdiag(slots[pos].i, slots[pos].j, value[pos]);
    }
  }
}

/// Visits every submodule of Z_p^r with index exponent ≤ K exactly once.
/// Refuses (ResourceLimitError) when the predicted count exceeds ctx.limit.
template <LatticeInt Int = std::int64_t, class Visitor>
void for_each_sublattice(int r, int K, const PAdicContext& ctx, Visitor&& visit) {
  if (r < 0 || K < 0) throw std::invalid_argument("for_each_sublattice: negative rank or cap");
  ctx.guard("enumerate_sublattices", predicted_sublattice_count(r, K, ctx.p));
  for (const auto& nu : diagonal_profiles(r, K)) for_each_sublattice_with_profile<Int>(ctx.p, nu, visit);
}

template <LatticeInt Int = std::int64_t>
std::vector<HnfLattice<Int>> enumerate_sublattices(int r, int K, const PAdicContext& ctx) {
  std::vector<HnfLattice<Int>> out;
  for_each_sublattice<Int>(r, K, ctx, [&](const HnfLattice<Int>& lat) { out.push_back(lat); });
  return out;
}

}  // namespace zeta
