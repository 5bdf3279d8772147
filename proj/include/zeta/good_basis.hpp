#pragma once

// Good bases of a finite-index submodule M ≤ Z_p^r with respect to the flag
// U_i = <e_i, ..., e_r>: bases (c_1..c_r) with <c_i..c_r> = M ∩ U_i.
// good_basis_measure is the closed form for the Haar measure of the set of
// upper-triangular matrices whose rows form one; good_basis_count_mod is an
// exhaustive count that checks it.

#include "zeta/hnf_lattice.hpp"
#include "zeta/padic.hpp"

#include <cstdint>
#include <vector>

namespace zeta {

/// (1 - 1/q)^r q^{-Σ_i i λ_i}, q = p, i counted from 1.
inline mpq_class good_basis_measure(const std::vector<int>& lambda, std::int64_t p) {
  mpq_class unit_part(p - 1, p);
  unit_part.canonicalize();
  mpq_class out = 1;
  long weight = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) throw std::invalid_argument("good_basis_measure: negative profile entry");
    out *= unit_part;
    weight += static_cast<long>(i + 1) * lambda[i];
  }
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(weight));
  out /= denom;
  return out;
}

/// Smallest e with p^e Z_p^r ⊆ lat (the exponent of the quotient).
template <LatticeInt Int>
int quotient_exponent(const HnfLattice<Int>& lat, std::int64_t p) {
  const int r = lat.rank();
  for (int e = 0;; ++e) {
    const Int scale = integer::pow<Int>(p, e);
    bool all = true;
    for (int j = 0; j < r && all; ++j) {
      std::vector<Int> v(r, Int(0));
      v[j] = scale;
      all = contains_vector<Int>(lat, v);
    }
    if (all) return e;
  }
}

/// Least precision N at which membership of an upper-triangular matrix in the
/// good-basis set depends only on its entries mod p^N: every diagonal
/// valuation must be visible (N > max ν) and p^N Z_p^r must lie inside the
/// lattice (N ≥ quotient exponent).
template <LatticeInt Int>
int good_basis_min_precision(const HnfLattice<Int>& lat, std::int64_t p) {
  int max_nu = 0;
  for (int v : lat.diag_exponents()) max_nu = std::max(max_nu, v);
  return std::max(max_nu + 1, quotient_exponent(lat, p));
}

/// Counts upper-triangular r×r matrices over Z/p^N whose rows (lifted to
/// [0, p^N)) form a good basis of lat.  Divided by p^{N r(r+1)/2} this is the
/// Haar measure of the good-basis set.
///
/// Rows are chosen bottom-up.  The condition on row i only sees the rows
/// below it through their span, which is forced to be M ∩ U_{i+1} once they
/// pass; the number of valid row-i choices is therefore evaluated against
/// the first valid lower block and multiplied through.
template <LatticeInt Int>
mpz_class good_basis_count_mod(const HnfLattice<Int>& lat, int N, const PAdicContext& ctx) {
  const int r = lat.rank();
  const std::int64_t p = ctx.p;
  if (N < good_basis_min_precision(lat, p))
    throw std::invalid_argument("good_basis_count_mod: precision " + std::to_string(N) + " below minimum " +
                                std::to_string(good_basis_min_precision(lat, p)));
  {
    mpz_class work = 0;
    mpz_class pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(N));
    for (int i = 0; i < r; ++i) {
      mpz_class t;
      mpz_pow_ui(t.get_mpz_t(), pn.get_mpz_t(), static_cast<unsigned long>(r - i));
      work += t;
    }
    ctx.guard("good_basis_count_mod", work);
  }
  const Int modulus = integer::pow<Int>(p, N);

  // Target index exponents of M ∩ U_i inside U_i.
  std::vector<int> tail_index(r + 1, 0);
  for (int i = r - 1; i >= 0; --i) tail_index[i] = tail_index[i + 1] + lat.diag_exponents()[i];

  std::vector<std::vector<Int>> basis(r, std::vector<Int>(r, Int(0)));
  // <basis_i..basis_{r-1}> = M ∩ U_i, checked verbatim: every row lies in M
  // (rows are supported on U_i by shape) and the index in U_i matches.
  auto spans_flag_piece = [&](int i) {
    int index = 0;
    for (int j = i; j < r; ++j) {
      if (integer::is_zero(basis[j][j])) return false;
      index += integer::valuation<Int>(basis[j][j], p);
      if (!contains_vector<Int>(lat, basis[j])) return false;
    }
    return index == tail_index[i];
  };

  mpz_class total = 1;
  for (int i = r - 1; i >= 0; --i) {
    const int width = r - i;
    std::vector<Int> digits(width, Int(0));
    mpz_class valid = 0;
    std::vector<Int> first_valid;
    while (true) {
      for (int t = 0; t < width; ++t) basis[i][i + t] = digits[t];
      if (spans_flag_piece(i)) {
        ++valid;
        if (first_valid.empty()) first_valid = digits;
      }
      int pos = width - 1;
      while (pos >= 0) {
        digits[pos] += 1;
        if (digits[pos] < modulus) break;
        digits[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    if (valid == 0) return 0;
    total *= valid;
    for (int t = 0; t < width; ++t) basis[i][i + t] = first_valid[t];
  }
  return total;
}

}  // namespace zeta
