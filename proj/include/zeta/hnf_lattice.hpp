#pragma once

// Finite-index Z_p-submodules of Z_p^r in canonical Hermite normal form.
//
// A lattice is stored by its generator matrix: row i is
//   (0, ..., 0, p^{ν_i}, c_{i,i+1}, ..., c_{i,r-1})
// with every above-diagonal entry in column j reduced to [0, p^{ν_j}).
// This form is unique, so equality of values is equality of submodules.

#include "zeta/integer.hpp"
#include "zeta/padic.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zeta {

template <LatticeInt Int = std::int64_t>
class HnfLattice {
 public:
  HnfLattice() = default;

  /// The whole module Z_p^r.
  static HnfLattice full(int rank) { return from_diagonal(2, std::vector<int>(rank, 0)); }

  /// diag(p^{ν_1}, ..., p^{ν_r}) with zero off-diagonal part.
  static HnfLattice from_diagonal(std::int64_t p, std::vector<int> nu) {
    HnfLattice lat;
    lat.rank_ = static_cast<int>(nu.size());
    lat.entries_.assign(nu.size() * nu.size(), Int(0));
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (nu[i] < 0) throw std::invalid_argument("negative diagonal exponent");
      lat.entries_[i * nu.size() + i] = integer::pow<Int>(p, nu[i]);
    }
    lat.index_ = std::accumulate(nu.begin(), nu.end(), 0);
    lat.nu_ = std::move(nu);
    return lat;
  }

  /// Builds from an explicit generator matrix that must already be in
  /// canonical form (validated).
  static HnfLattice from_canonical_rows(std::int64_t p, const std::vector<std::vector<Int>>& rows) {
    const int r = static_cast<int>(rows.size());
    std::vector<int> nu(r);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != r) throw std::invalid_argument("generator matrix is not square");
      if (rows[i][i] <= 0) throw std::invalid_argument("diagonal entry must be a positive power of p");
      nu[i] = integer::valuation<Int>(rows[i][i], p);
      if (rows[i][i] != integer::pow<Int>(p, nu[i]))
        throw std::invalid_argument("diagonal entry must be a power of p");
    }
    HnfLattice lat = from_diagonal(p, nu);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        const Int& x = rows[i][j];
        if (j < i && !integer::is_zero(x)) throw std::invalid_argument("generator matrix is not upper triangular");
        if (j > i) {
          if (x < 0 || x >= lat.at(j, j))
            throw std::invalid_argument("above-diagonal entry not reduced modulo its column's diagonal");
          lat.entries_[static_cast<std::size_t>(i) * r + j] = x;
        }
      }
    return lat;
  }

  int rank() const { return rank_; }
  const std::vector<int>& diag_exponents() const { return nu_; }
  const Int& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * rank_ + j]; }
  std::span<const Int> row(int i) const {
    return {entries_.data() + static_cast<std::size_t>(i) * rank_, static_cast<std::size_t>(rank_)};
  }
  std::vector<std::vector<Int>> rows() const {
    std::vector<std::vector<Int>> out;
    for (int i = 0; i < rank_; ++i) out.emplace_back(row(i).begin(), row(i).end());
    return out;
  }

  /// log_p of the index [Z_p^r : lattice].
  int index_exp() const { return index_; }

  /// Used by the enumerator; j > i and 0 <= value < p^{ν_j} is the caller's job.
  Int& offdiag_ref(int i, int j) { return entries_[static_cast<std::size_t>(i) * rank_ + j]; }
  void set_offdiag(int i, int j, const Int& value) { entries_[static_cast<std::size_t>(i) * rank_ + j] = value; }

  friend bool operator==(const HnfLattice&, const HnfLattice&) = default;
  friend std::ostream& operator<<(std::ostream& os, const HnfLattice& lat) {
    os << '[';
    for (int i = 0; i < lat.rank_; ++i) {
      os << (i ? " (" : "(");
      for (int j = 0; j < lat.rank_; ++j) os << (j ? "," : "") << lat.at(i, j);
      os << ')';
    }
    return os << ']';
  }

  friend auto operator<=>(const HnfLattice& a, const HnfLattice& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    if (auto c = a.nu_ <=> b.nu_; c != 0) return c;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      if (a.entries_[i] < b.entries_[i]) return std::strong_ordering::less;
      if (b.entries_[i] < a.entries_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

 private:
  int rank_ = 0;
  int index_ = 0;
  std::vector<int> nu_;
  std::vector<Int> entries_;
};

template <LatticeInt Int>
int index_exp(const HnfLattice<Int>& lat) {
  return lat.index_exp();
}

/// Membership by forward elimination: the leading coordinate of the running
/// remainder must be divisible by the pivot p^{ν_j}, the quotient being the
/// (integral) coefficient of row j.  `work` is clobbered.
template <LatticeInt Int>
bool contains_vector_inplace(const HnfLattice<Int>& lat, std::span<Int> work) {
  const int r = lat.rank();
  for (int j = 0; j < r; ++j) {
    if (integer::is_zero(work[j])) continue;
    const Int& pivot = lat.at(j, j);
    if (!integer::divides(pivot, work[j])) return false;
    const Int a = integer::exact_div(work[j], pivot);
    for (int k = j + 1; k < r; ++k) {
      const Int& c = lat.at(j, k);
      if (!integer::is_zero(c)) work[k] = integer::sub(work[k], integer::mul(a, c));
    }
  }
  return true;
}

template <LatticeInt Int>
bool contains_vector(const HnfLattice<Int>& lat, std::span<const Int> vec) {
  if (static_cast<int>(vec.size()) != lat.rank()) throw std::invalid_argument("contains_vector: length mismatch");
  std::vector<Int> work(vec.begin(), vec.end());
  return contains_vector_inplace<Int>(lat, work);
}

template <LatticeInt Int>
bool contains_vector(const HnfLattice<Int>& lat, const std::vector<Int>& vec) {
  return contains_vector<Int>(lat, std::span<const Int>(vec));
}

/// inner ⊆ outer.
template <LatticeInt Int>
bool contains_lattice(const HnfLattice<Int>& outer, const HnfLattice<Int>& inner) {
  if (outer.rank() != inner.rank()) throw std::invalid_argument("contains_lattice: rank mismatch");
  for (int i = 0; i < inner.rank(); ++i)
    if (!contains_vector<Int>(outer, inner.row(i))) return false;
  return true;
}

namespace detail {

// Integer (Z) row echelon form by Euclidean row operations; returns the r
// pivot rows (upper triangular, nonzero diagonal).
template <LatticeInt Int>
std::vector<std::vector<Int>> integer_echelon(std::vector<std::vector<Int>> rows, int r) {
  auto abs_less = [](const Int& a, const Int& b) {
    if constexpr (std::is_same_v<Int, std::int64_t>) {
      return (a < 0 ? -a : a) < (b < 0 ? -b : b);
    } else {
      return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
    }
  };
  std::size_t top = 0;
  for (int j = 0; j < r; ++j) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t k = top; k < rows.size(); ++k)
        if (!integer::is_zero(rows[k][j]) && (best == rows.size() || abs_less(rows[k][j], rows[best][j])))
          best = k;
      if (best == rows.size())
        throw RankDeficientError("generators span a submodule of infinite index (no pivot in column " +
                                 std::to_string(j) + ")");
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t k = top + 1; k < rows.size(); ++k) {
        if (integer::is_zero(rows[k][j])) continue;
        Int q;
        if constexpr (std::is_same_v<Int, std::int64_t>) {
          q = rows[k][j] / rows[top][j];
        } else {
          mpz_tdiv_q(q.get_mpz_t(), rows[k][j].get_mpz_t(), rows[top][j].get_mpz_t());
        }
        for (int c = j; c < r; ++c) rows[k][c] = integer::sub(rows[k][c], integer::mul(q, rows[top][c]));
        if (!integer::is_zero(rows[k][j])) done = false;
      }
      if (done) break;
    }
    ++top;
  }
  rows.resize(static_cast<std::size_t>(r));
  return rows;
}

}  // namespace detail

/// Canonical HNF of the Z_p-span of arbitrary integer generators.
///
/// The Z-echelon form fixes the index p^E (E = Σ v_p of its diagonal), and
/// p^E Z_p^r lies inside the span, so the rest runs modulo p^E: scale each
/// row by the inverse of the unit part of its pivot, then reduce columns.
template <LatticeInt Int>
HnfLattice<Int> hnf_reduce(const std::vector<std::vector<Int>>& generators, int r, const PAdicContext& ctx) {
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != r) throw std::invalid_argument("hnf_reduce: generator length mismatch");
  if (r == 0) return HnfLattice<Int>::full(0);
  auto tri = detail::integer_echelon<Int>(generators, r);

  std::vector<int> nu(r);
  int total = 0;
  for (int i = 0; i < r; ++i) {
    nu[i] = integer::valuation<Int>(tri[i][i], ctx.p);
    total += nu[i];
  }
  const Int modulus = integer::pow<Int>(ctx.p, total);
  std::vector<Int> pivot(r);
  for (int i = 0; i < r; ++i) pivot[i] = integer::pow<Int>(ctx.p, nu[i]);

  if (total > 0) {
    for (int i = 0; i < r; ++i) {
      const Int unit = integer::floor_mod<Int>(integer::exact_div(tri[i][i], pivot[i]), modulus);
      const Int inv = integer::inverse_mod<Int>(unit, modulus);
      for (int c = i + 1; c < r; ++c)
        tri[i][c] = integer::mul_mod<Int>(integer::floor_mod<Int>(tri[i][c], modulus), inv, modulus);
    }
  }
  for (int i = 0; i < r; ++i) tri[i][i] = pivot[i];
  for (int j = 1; j < r; ++j) {
    for (int i = 0; i < j; ++i) {
      const Int x = tri[i][j];
      const Int reduced = integer::floor_mod<Int>(x, pivot[j]);
      if (x == reduced) continue;
      // Entries right of the diagonal are only meaningful modulo p^E.
      const Int q = integer::exact_div(integer::sub(x, reduced), pivot[j]);
      tri[i][j] = reduced;
      for (int c = j + 1; c < r; ++c)
        tri[i][c] = integer::floor_mod<Int>(
            integer::sub(tri[i][c], integer::mul_mod<Int>(integer::floor_mod<Int>(q, modulus), tri[j][c], modulus)),
            modulus);
    }
  }
  return HnfLattice<Int>::from_canonical_rows(ctx.p, tri);
}

template <LatticeInt Int>
HnfLattice<Int> hnf_reduce(const std::vector<std::vector<Int>>& generators, const PAdicContext& ctx) {
  if (generators.empty()) throw RankDeficientError("hnf_reduce: no generators");
  return hnf_reduce<Int>(generators, static_cast<int>(generators.front().size()), ctx);
}

template <LatticeInt Int>
HnfLattice<Int> sum_lattices(const HnfLattice<Int>& a, const HnfLattice<Int>& b, const PAdicContext& ctx) {
  if (a.rank() != b.rank()) throw std::invalid_argument("sum_lattices: rank mismatch");
  auto rows = a.rows();
  auto more = b.rows();
  rows.insert(rows.end(), more.begin(), more.end());
  return hnf_reduce<Int>(rows, a.rank(), ctx);
}

/// Σ_i φ_i(π_i(lat)) for coordinates grouped as m consecutive blocks of n.
template <LatticeInt Int>
HnfLattice<Int> project_and_sum(const HnfLattice<Int>& lat, int m, int n, const PAdicContext& ctx) {
  if (m < 1 || n < 0 || lat.rank() != m * n) throw std::invalid_argument("project_and_sum: rank is not m*n");
  std::vector<std::vector<Int>> gens;
  gens.reserve(static_cast<std::size_t>(m) * lat.rank());
  for (int i = 0; i < lat.rank(); ++i) {
    auto row = lat.row(i);
    for (int block = 0; block < m; ++block) {
      std::vector<Int> g(row.begin() + block * n, row.begin() + (block + 1) * n);
      if (std::any_of(g.begin(), g.end(), [](const Int& x) { return !integer::is_zero(x); }))
        gens.push_back(std::move(g));
    }
  }
  return hnf_reduce<Int>(gens, n, ctx);
}

}  // namespace zeta
