#pragma once

#include "zeta/integer.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zeta {

inline constexpr std::uint64_t kDefaultResourceLimit = 10'000'000;

/// An enumeration would exceed the configured size limit.  Carries the
/// predicted size so callers can report it.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, mpz_class predicted, std::uint64_t limit)
      : std::runtime_error(what + ": predicted size " + predicted.get_str() + " exceeds limit " +
                           std::to_string(limit)),
        predicted_(std::move(predicted)),
        limit_(limit) {}

  const mpz_class& predicted() const { return predicted_; }
  std::uint64_t limit() const { return limit_; }

 private:
  mpz_class predicted_;
  std::uint64_t limit_;
};

/// Generators do not span a finite-index submodule.
class RankDeficientError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Working data for Z_p: the prime (q = p), per-variable exponent caps and
/// the enumeration budget.
struct PAdicContext {
  std::int64_t p = 2;
  std::vector<int> caps;
  std::uint64_t limit = kDefaultResourceLimit;
  bool parallel = false;

  PAdicContext() = default;
  explicit PAdicContext(std::int64_t prime, std::vector<int> caps_ = {}, std::uint64_t limit_ = kDefaultResourceLimit)
      : p(prime), caps(std::move(caps_)), limit(limit_) {
    if (!integer::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    for (int k : caps)
      if (k < 0) throw std::invalid_argument("negative exponent cap");
    if (limit == 0) throw std::invalid_argument("resource limit must be at least 1");
  }

  std::int64_t q() const { return p; }

  /// Cap for variable v; a single cap applies to every variable.
  int cap(std::size_t v) const {
    if (caps.empty()) throw std::invalid_argument("no exponent caps configured");
    return caps.size() == 1 ? caps[0] : caps.at(v);
  }

  void guard(const char* what, const mpz_class& predicted) const {
    if (predicted > mpz_class(static_cast<unsigned long>(limit))) throw ResourceLimitError(what, predicted, limit);
  }
};

}  // namespace zeta
