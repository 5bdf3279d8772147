#pragma once

// Truncated multivariate Dirichlet series in the variables X_v = p^{-s_v}.
// A series is a finite map from exponent tuples (k_v) with 0 <= k_v <= K_v to
// exact rationals.  Tuples are ordered graded-lexicographically everywhere.

#include "zeta/padic.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zeta {

using Exponent = std::vector<int>;

/// Total degree first, then lexicographic.
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
  }
};

class CapMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DirichletPoly {
 public:
  using Terms = std::map<Exponent, mpq_class, GradedLex>;

  DirichletPoly() = default;
  DirichletPoly(std::vector<std::string> variables, std::vector<int> caps)
      : vars_(std::move(variables)), caps_(std::move(caps)) {
    if (vars_.size() != caps_.size()) throw std::invalid_argument("DirichletPoly: one cap per variable required");
    for (int k : caps_)
      if (k < 0) throw std::invalid_argument("DirichletPoly: negative cap");
  }

  static DirichletPoly one(std::vector<std::string> variables, std::vector<int> caps) {
    DirichletPoly out(std::move(variables), std::move(caps));
    out.set(Exponent(out.num_vars(), 0), 1);
    return out;
  }

  static DirichletPoly monomial(std::vector<std::string> variables, std::vector<int> caps, const Exponent& k,
                                const mpq_class& c = 1) {
    DirichletPoly out(std::move(variables), std::move(caps));
    if (out.within_caps(k)) out.set(k, c);
    return out;
  }

  std::size_t num_vars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<int>& caps() const { return caps_; }
  const Terms& terms() const { return terms_; }

  bool within_caps(const Exponent& k) const {
    if (k.size() != caps_.size()) return false;
    for (std::size_t v = 0; v < k.size(); ++v)
      if (k[v] < 0 || k[v] > caps_[v]) return false;
    return true;
  }

  mpq_class coeff(const Exponent& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? mpq_class(0) : it->second;
  }

  void set(const Exponent& k, const mpq_class& value) {
    if (!within_caps(k)) throw std::out_of_range("DirichletPoly::set: exponent outside caps");
    if (sgn(value) == 0) {
      terms_.erase(k);
    } else {
      mpq_class& slot = terms_[k];
      slot = value;
      slot.canonicalize();
    }
  }

  void add(const Exponent& k, const mpq_class& value) {
    if (!within_caps(k)) throw std::out_of_range("DirichletPoly::add: exponent outside caps");
    if (sgn(value) == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, value);
    if (inserted) {
      it->second.canonicalize();
    } else {
      it->second += value;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  /// Every exponent tuple within the caps, graded-lex.
  std::vector<Exponent> all_exponents() const {
    std::vector<Exponent> out;
    Exponent k(caps_.size(), 0);
    while (true) {
      out.push_back(k);
      std::size_t v = caps_.size();
      bool carried_out = true;
      while (v > 0) {
        --v;
        if (k[v] < caps_[v]) {
          ++k[v];
          carried_out = false;
          break;
        }
        k[v] = 0;
      }
      if (carried_out) break;
    }
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
  }

  /// Drops terms beyond new (smaller or equal) caps.
  DirichletPoly restrict(std::vector<int> new_caps) const {
    if (new_caps.size() != caps_.size()) throw CapMismatchError("restrict: wrong number of caps");
    for (std::size_t v = 0; v < caps_.size(); ++v)
      if (new_caps[v] > caps_[v]) throw CapMismatchError("restrict: cannot raise a cap");
    DirichletPoly out(vars_, std::move(new_caps));
    for (const auto& [k, c] : terms_)
      if (out.within_caps(k)) out.terms_.emplace(k, c);
    return out;
  }

  bool has_nonnegative_integer_coeffs() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
      return sgn(t.second) >= 0 && t.second.get_den() == 1;
    });
  }

  friend bool operator==(const DirichletPoly& a, const DirichletPoly& b) {
    return a.vars_ == b.vars_ && a.caps_ == b.caps_ && a.terms_ == b.terms_;
  }

 private:
  std::vector<std::string> vars_;
  std::vector<int> caps_;
  Terms terms_;
};

inline void require_same_shape(const DirichletPoly& a, const DirichletPoly& b, const char* op) {
  if (a.variables() != b.variables() || a.caps() != b.caps())
    throw CapMismatchError(std::string(op) + ": operands have different variables or caps");
}

inline DirichletPoly operator+(const DirichletPoly& a, const DirichletPoly& b) {
  require_same_shape(a, b, "add");
  DirichletPoly out = a;
  for (const auto& [k, c] : b.terms()) out.add(k, c);
  return out;
}

inline DirichletPoly mul(const DirichletPoly& a, const DirichletPoly& b) {
  require_same_shape(a, b, "mul");
  DirichletPoly out(a.variables(), a.caps());
  Exponent k(a.num_vars());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      for (std::size_t v = 0; v < k.size(); ++v) k[v] = ka[v] + kb[v];
      if (out.within_caps(k)) out.add(k, ca * cb);
    }
  return out;
}

/// The unique c with mul(b, c) = a within caps; b needs a non-zero constant term.
inline DirichletPoly div(const DirichletPoly& a, const DirichletPoly& b) {
  require_same_shape(a, b, "div");
  const Exponent zero(a.num_vars(), 0);
  const mpq_class b0 = b.coeff(zero);
  if (sgn(b0) == 0) throw std::domain_error("div: divisor has non-unit constant term");
  DirichletPoly out(a.variables(), a.caps());
  Exponent rest(a.num_vars());
  for (const auto& k : a.all_exponents()) {
    mpq_class acc = a.coeff(k);
    for (const auto& [j, bj] : b.terms()) {
      if (j == zero) continue;
      bool fits = true;
      for (std::size_t v = 0; v < k.size() && fits; ++v) {
        rest[v] = k[v] - j[v];
        fits = rest[v] >= 0;
      }
      if (!fits) continue;
      acc -= bj * out.coeff(rest);
    }
    out.set(k, acc / b0);
  }
  return out;
}

/// s_v -> m s_v for the selected variables (all when `which` is empty).
inline DirichletPoly scale_exponents(const DirichletPoly& a, int m, const std::vector<std::size_t>& which = {}) {
  if (m < 1) throw std::invalid_argument("scale_exponents: factor must be positive");
  std::vector<bool> selected(a.num_vars(), which.empty());
  for (auto v : which) selected.at(v) = true;
  DirichletPoly out(a.variables(), a.caps());
  for (const auto& [k, c] : a.terms()) {
    Exponent moved = k;
    for (std::size_t v = 0; v < k.size(); ++v)
      if (selected[v]) moved[v] *= m;
    if (out.within_caps(moved)) out.add(moved, c);
  }
  return out;
}

/// Σ_k x^k X_var^k truncated at the cap of `var`, i.e. (1 - x X_var)^{-1}.
inline DirichletPoly geometric_series(const std::vector<std::string>& variables, const std::vector<int>& caps,
                                      std::size_t var, const mpq_class& x, int step = 1) {
  DirichletPoly out(variables, caps);
  Exponent k(variables.size(), 0);
  mpq_class term = 1;
  for (int e = 0; e <= caps.at(var); e += step) {
    k[var] = e;
    out.set(k, term);
    term *= x;
  }
  return out;
}

/// ζ_{A^n}(s_var) = Π_{i=0}^{n-1} (1 - q^{i} X_var)^{-1}.
inline DirichletPoly abelian_zeta(int n, std::size_t var, std::int64_t p, const std::vector<std::string>& variables,
                                  const std::vector<int>& caps) {
  if (n < 0) throw std::invalid_argument("abelian_zeta: negative rank");
  DirichletPoly out = DirichletPoly::one(variables, caps);
  mpz_class qi = 1;
  for (int i = 0; i < n; ++i) {
    out = mul(out, geometric_series(variables, caps, var, mpq_class(qi)));
    qi *= p;
  }
  return out;
}

inline DirichletPoly abelian_zeta(int n, std::int64_t p, int cap, const std::string& var = "v0") {
  return abelian_zeta(n, 0, p, {var}, {cap});
}

/// ζ_{A^{2m}}(s) / (1 - q^{2m} X^{2m+1}).
inline DirichletPoly heisenberg_amalgam_zeta(int m, std::int64_t p, int cap, const std::string& var = "v0") {
  if (m < 1) throw std::invalid_argument("heisenberg_amalgam_zeta: m must be positive");
  const std::vector<std::string> vars{var};
  const std::vector<int> caps{cap};
  mpz_class q2m;
  mpz_ui_pow_ui(q2m.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(2 * m));
  return mul(abelian_zeta(2 * m, 0, p, vars, caps), geometric_series(vars, caps, 0, mpq_class(q2m), 2 * m + 1));
}

/// First graded-lex tuple where a and b differ.
inline std::optional<Exponent> first_mismatch(const DirichletPoly& a, const DirichletPoly& b) {
  require_same_shape(a, b, "compare");
  for (const auto& k : a.all_exponents())
    if (a.coeff(k) != b.coeff(k)) return k;
  return std::nullopt;
}

inline std::string format_rational(const mpq_class& x) {
  return x.get_den() == 1 ? x.get_num().get_str() : x.get_str();
}

/// One row per tuple within caps: "k_1 ... k_r<TAB>coefficient".
inline std::string render_tsv(const DirichletPoly& a) {
  std::ostringstream out;
  for (std::size_t v = 0; v < a.num_vars(); ++v) out << (v ? " " : "") << "k_" << a.variables()[v];
  out << "\tcoefficient\n";
  for (const auto& k : a.all_exponents()) {
    for (std::size_t v = 0; v < k.size(); ++v) out << (v ? " " : "") << k[v];
    out << '\t' << format_rational(a.coeff(k)) << '\n';
  }
  return out.str();
}

}  // namespace zeta
