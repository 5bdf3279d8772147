#pragma once

// Integer helpers shared by the lattice code.  Everything is written against
// two integer models: std::int64_t with overflow-checked arithmetic (the
// enumeration fast path) and GMP's mpz_class (arbitrary precision).

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace zeta {

template <class T>
concept LatticeInt = std::same_as<T, std::int64_t> || std::same_as<T, mpz_class>;

namespace integer {

[[noreturn]] inline void overflow(const char* what) {
  throw std::overflow_error(std::string("int64 overflow in ") + what);
}

template <LatticeInt Int>
inline Int add(const Int& a, const Int& b) {
  if constexpr (std::is_same_v<Int, std::int64_t>) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) overflow("add");
    return r;
  } else {
    return a + b;
  }
}

template <LatticeInt Int>
inline Int sub(const Int& a, const Int& b) {
  if constexpr (std::is_same_v<Int, std::int64_t>) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
    return r;
  } else {
    return a - b;
  }
}

template <LatticeInt Int>
inline Int mul(const Int& a, const Int& b) {
  if constexpr (std::is_same_v<Int, std::int64_t>) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
    return r;
  } else {
    return a * b;
  }
}

template <LatticeInt Int>
inline bool is_zero(const Int& a) {
  if constexpr (std::is_same_v<Int, std::int64_t>) {
    return a == 0;
  } else {
    return sgn(a) == 0;
  }
}

// Least non-negative residue; m > 0.
template <LatticeInt Int>
inline Int floor_mod(const Int& a, const Int& m) {
  if constexpr (std::is_same_v<Int, std::int64_t>) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
  } else {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
  }
}

// Exact quotient; caller guarantees m | a.
template <LatticeInt Int>
inline Int exact_div(const Int& a, const Int& m) {
  if constexpr (std::is_same_v<Int, std::int64_t>) {
    return a / m;
  } else {
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
  }
}

template <LatticeInt Int>
inline bool divides(const Int& m, const Int& a) {
  if constexpr (std::is_same_v<Int, std::int64_t>) {
    return a % m == 0;
  } else {
    return mpz_divisible_p(a.get_mpz_t(), m.get_mpz_t()) != 0;
  }
}

template <LatticeInt Int>
inline Int pow(std::int64_t base, int exp) {
  Int r = 1;
  const Int b = base;
  for (int i = 0; i < exp; ++i) r = mul<Int>(r, b);
  return r;
}

/// p-adic valuation of a non-zero integer.
template <LatticeInt Int>
inline int valuation(Int a, std::int64_t p) {
  if (is_zero(a)) throw std::domain_error("valuation of zero");
  const Int pp = p;
  int v = 0;
  while (divides(pp, a)) {
    a = exact_div(a, pp);
    ++v;
  }
  return v;
}

/// (a * b) mod m as a least non-negative residue; a, b already reduced.
template <LatticeInt Int>
inline Int mul_mod(const Int& a, const Int& b, const Int& m) {
  if constexpr (std::is_same_v<Int, std::int64_t>) {
    const __int128 r = static_cast<__int128>(a) * b % m;
    return static_cast<std::int64_t>(r < 0 ? r + m : r);
  } else {
    return floor_mod<Int>(a * b, m);
  }
}

/// Inverse of a modulo m (gcd(a, m) = 1), as a least non-negative residue.
template <LatticeInt Int>
inline Int inverse_mod(const Int& a, const Int& m) {
  if constexpr (std::is_same_v<Int, std::int64_t>) {
    std::int64_t old_r = floor_mod<Int>(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
      std::int64_t q = old_r / r;
      std::int64_t t = old_r - q * r;
      old_r = r;
      r = t;
      t = old_s - q * s;
      old_s = s;
      s = t;
    }
    if (old_r != 1) throw std::domain_error("inverse_mod: not a unit");
    return floor_mod<Int>(old_s, m);
  } else {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
      throw std::domain_error("inverse_mod: not a unit");
    return floor_mod<Int>(r, m);
  }
}

template <LatticeInt Int>
inline Int from_int64(std::int64_t x) {
  return Int(static_cast<long>(x));
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace integer
}  // namespace zeta
