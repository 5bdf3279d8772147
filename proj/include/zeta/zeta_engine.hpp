#pragma once

// Truncated zeta functions of admissible representations and the identities
// relating them:
//
//  * zeta_direct      every family of full-rank lattices Λ_v closed under the
//                     edge maps (brute force, no structure used);
//  * zeta_pairsum     pairs (H_v, M_v) with H ≤ L_1, M ≤ L_2 and f(H) ≤ M,
//                     weighted by [L_{v,2} : M_v]^{n(v,1)} for the choices of
//                     the off-diagonal HNF block;
//  * rewrite_rhs      the amalgamated-power zeta function expressed through the
//                     original representation, an abelian prefactor and an
//                     m-dependent weight;
//  * sum_lattice_*    both sides of the sum-of-projections count.

#include "zeta/core_model.hpp"
#include "zeta/dirichlet.hpp"
#include "zeta/good_basis.hpp"
#include "zeta/hnf_lattice.hpp"
#include "zeta/padic.hpp"
#include "zeta/sublattices.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace zeta {

using Lattice = HnfLattice<std::int64_t>;

struct Mismatch {
  std::string where;  // which comparison, empty for a single one
  Exponent at;
  mpq_class lhs;
  mpq_class rhs;
};

struct VerificationReport {
  std::string check;
  bool passed = true;
  std::optional<Mismatch> mismatch;
  std::map<std::string, std::uint64_t> counts;
  double elapsed_ms = 0;
  std::size_t comparisons = 0;
};

/// Per-vertex cap and the variable names of a representation's series.
inline std::vector<int> rep_caps(const AdmissibleRep& rep, const PAdicContext& ctx) {
  std::vector<int> caps;
  for (std::size_t v = 0; v < rep.vertex_count(); ++v) caps.push_back(ctx.cap(v));
  return caps;
}

inline DirichletPoly empty_series(const AdmissibleRep& rep, const PAdicContext& ctx) {
  return DirichletPoly(rep.quiver().vertices(), rep_caps(rep, ctx));
}

namespace detail {

inline mpz_class power(std::int64_t p, long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return out;
}

/// Number of (H, M)-tuples, indexed by (kH_0, kM_0, kH_1, kM_1, ...) with
/// h_scale * kH_v + kM_v <= K_v, such that f(H) ≤ M.
class PairHistogram {
 public:
  explicit PairHistogram(std::vector<int> caps) : caps_(std::move(caps)) {
    std::size_t size = 1;
    for (int k : caps_) size *= static_cast<std::size_t>(k + 1) * (k + 1);
    counts_.assign(size, 0);
  }

  std::uint64_t& at(const std::vector<int>& key) { return counts_[offset(key)]; }
  std::uint64_t at(const std::vector<int>& key) const { return counts_[offset(key)]; }

  void merge(const PairHistogram& other) {
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  }

  /// Visits every key with a non-zero count.
  template <class F>
  void for_each(F&& f) const {
    std::vector<int> key(2 * caps_.size(), 0);
    for (std::size_t idx = 0; idx < counts_.size(); ++idx) {
      if (counts_[idx] == 0) continue;
      std::size_t rest = idx;
      for (std::size_t i = key.size(); i > 0; --i) {
        const auto base = static_cast<std::size_t>(caps_[(i - 1) / 2] + 1);
        key[i - 1] = static_cast<int>(rest % base);
        rest /= base;
      }
      f(key, counts_[idx]);
    }
  }

 private:
  std::size_t offset(const std::vector<int>& key) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < key.size(); ++i) idx = idx * static_cast<std::size_t>(caps_[i / 2] + 1) + key[i];
    return idx;
  }

  std::vector<int> caps_;
  std::vector<std::uint64_t> counts_;
};

struct PairStats {
  std::uint64_t h_families = 0;
  std::uint64_t m_checks = 0;
};

inline mpz_class predicted_pairs(const AdmissibleRep& rep, const PAdicContext& ctx, int h_scale) {
  mpz_class total = 1;
  for (std::size_t v = 0; v < rep.vertex_count(); ++v) {
    const int K = ctx.cap(v);
    const auto h = sublattice_counts(rep.rank(v).n1, K / h_scale, ctx.p);
    const auto m = sublattice_counts(rep.rank(v).n2, K, ctx.p);
    mpz_class here = 0;
    for (int kh = 0; kh * h_scale <= K; ++kh) {
      mpz_class ms = 0;
      for (int km = 0; km + h_scale * kh <= K; ++km) ms += m[km];
      here += h[kh] * ms;
    }
    total *= here;
  }
  return total;
}

/// Enumerates H-families (streaming, vertex by vertex) and, for each, counts
/// the admissible M_v from a precomputed list per vertex.
inline PairHistogram count_pairs(const AdmissibleRep& rep, const PAdicContext& ctx, int h_scale,
                                 PairStats* stats = nullptr) {
  const std::size_t nv = rep.vertex_count();
  const auto caps = rep_caps(rep, ctx);
  ctx.guard("pair enumeration", predicted_pairs(rep, ctx, h_scale));

  std::vector<std::vector<Lattice>> m_lists(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    PAdicContext unlimited = ctx;
    unlimited.limit = std::numeric_limits<std::uint64_t>::max();
    m_lists[v] = enumerate_sublattices(rep.rank(v).n2, caps[v], unlimited);
  }
  std::vector<std::vector<std::size_t>> incoming(nv);
  const auto& edges = rep.quiver().edges();
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (!rep.edge_maps()[e].is_zero()) incoming[edges[e].head].push_back(e);

  auto work = [&](const std::vector<std::vector<int>>& first_profiles, PairHistogram& hist, PairStats& local) {
    std::vector<const Lattice*> chosen(nv, nullptr);
    std::vector<std::vector<std::int64_t>> images;
    std::vector<std::vector<std::uint64_t>> valid(nv);
    std::vector<int> key(2 * nv, 0);

    auto collect = [&]() {
      ++local.h_families;
      for (std::size_t v = 0; v < nv; ++v) {
        const int n2 = rep.rank(v).n2;
        images.clear();
        for (std::size_t e : incoming[v]) {
          const auto& a = rep.edge_maps()[e];
          const Lattice& h = *chosen[edges[e].tail];
          for (int i = 0; i < h.rank(); ++i) {
            std::vector<std::int64_t> img(static_cast<std::size_t>(n2), 0);
            bool nonzero = false;
            auto row = h.row(i);
            for (int k = 0; k < n2; ++k) {
              std::int64_t acc = 0;
              for (int l = i; l < h.rank(); ++l)
                if (row[l] != 0 && a(l, k) != 0) acc = integer::add(acc, integer::mul(row[l], a(l, k)));
              img[k] = acc;
              nonzero = nonzero || acc != 0;
            }
            if (nonzero) images.push_back(std::move(img));
          }
        }
        const int budget = caps[v] - h_scale * chosen[v]->index_exp();
        valid[v].assign(static_cast<std::size_t>(budget) + 1, 0);
        std::vector<std::int64_t> scratch(static_cast<std::size_t>(n2));
        for (const auto& mlat : m_lists[v]) {
          const int km = mlat.index_exp();
          if (km > budget) break;  // list is sorted by index exponent
          ++local.m_checks;
          bool ok = true;
          for (const auto& img : images) {
            scratch.assign(img.begin(), img.end());
            if (!contains_vector_inplace<std::int64_t>(mlat, scratch)) {
              ok = false;
              break;
            }
          }
          if (ok) ++valid[v][km];
        }
      }
      // Outer product over vertices of the per-vertex M counts.
      std::function<void(std::size_t, std::uint64_t)> spread = [&](std::size_t v, std::uint64_t weight) {
        if (v == nv) {
          hist.at(key) += weight;
          return;
        }
        key[2 * v] = chosen[v]->index_exp();
        for (std::size_t km = 0; km < valid[v].size(); ++km) {
          if (valid[v][km] == 0) continue;
          key[2 * v + 1] = static_cast<int>(km);
          spread(v + 1, weight * valid[v][km]);
        }
      };
      spread(0, 1);
    };

    std::function<void(std::size_t)> choose = [&](std::size_t v) {
      if (v == nv) {
        collect();
        return;
      }
      auto visit = [&](const Lattice& h) {
        chosen[v] = &h;
        choose(v + 1);
      };
      if (v == 0) {
        for (const auto& nu : first_profiles) for_each_sublattice_with_profile(ctx.p, nu, visit);
      } else {
        for (const auto& nu : diagonal_profiles(rep.rank(v).n1, caps[v] / h_scale))
          for_each_sublattice_with_profile(ctx.p, nu, visit);
      }
    };
    choose(0);
  };

  PairHistogram hist(caps);
  PairStats total;
  if (nv == 0) {
    ++total.h_families;
    hist.at({}) += 1;
  } else {
    const auto profiles = diagonal_profiles(rep.rank(0).n1, caps[0] / h_scale);
    const unsigned threads = ctx.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
    if (threads <= 1 || profiles.size() < 2) {
      work(profiles, hist, total);
    } else {
      // Round-robin partition of the first vertex's diagonal profiles.
      std::vector<std::future<std::pair<PairHistogram, PairStats>>> parts;
      for (unsigned t = 0; t < threads && t < profiles.size(); ++t) {
        std::vector<std::vector<int>> mine;
        for (std::size_t i = t; i < profiles.size(); i += threads) mine.push_back(profiles[i]);
        parts.push_back(std::async(std::launch::async, [&, mine = std::move(mine)] {
          PairHistogram h(caps);
          PairStats s;
          work(mine, h, s);
          return std::make_pair(std::move(h), s);
        }));
      }
      for (auto& f : parts) {
        auto [h, s] = f.get();
        hist.merge(h);
        total.h_families += s.h_families;
        total.m_checks += s.m_checks;
      }
    }
  }
  if (stats) {
    stats->h_families += total.h_families;
    stats->m_checks += total.m_checks;
  }
  return hist;
}

/// Inner (H, M)-sum with H-exponent scaled by m and weight
/// ∏_v p^{weight_factor · n(v,1) · kM_v}.
inline DirichletPoly weighted_pair_sum(const AdmissibleRep& rep, int m, int weight_factor, const PAdicContext& ctx,
                                       PairStats* stats = nullptr) {
  auto hist = count_pairs(rep, ctx, m, stats);
  DirichletPoly out = empty_series(rep, ctx);
  const std::size_t nv = rep.vertex_count();
  Exponent k(nv);
  hist.for_each([&](const std::vector<int>& key, std::uint64_t count) {
    long weight = 0;
    for (std::size_t v = 0; v < nv; ++v) {
      k[v] = m * key[2 * v] + key[2 * v + 1];
      weight += static_cast<long>(weight_factor) * rep.rank(v).n1 * key[2 * v + 1];
    }
    out.add(k, mpq_class(mpz_class(static_cast<unsigned long>(count)) * power(ctx.p, weight)));
  });
  return out;
}

/// ∏_v ζ_{A^{m n(v,1)}}(s_v) / ζ_{A^{n(v,1)}}(m s_v).
inline DirichletPoly amalgam_prefactor(const AdmissibleRep& rep, int m, const PAdicContext& ctx) {
  const auto& vars = rep.quiver().vertices();
  const auto caps = rep_caps(rep, ctx);
  DirichletPoly out = DirichletPoly::one(vars, caps);
  for (std::size_t v = 0; v < rep.vertex_count(); ++v) {
    const int n1 = rep.rank(v).n1;
    auto numerator = abelian_zeta(m * n1, v, ctx.p, vars, caps);
    auto denominator = scale_exponents(abelian_zeta(n1, v, ctx.p, vars, caps), m, {v});
    out = mul(out, div(numerator, denominator));
  }
  return out;
}

/// Right-hand side of the amalgam identity with an arbitrary weight factor;
/// the true identity uses weight_factor = m.
inline DirichletPoly rewrite_rhs_weighted(const AdmissibleRep& rep, int m, int weight_factor, const PAdicContext& ctx,
                                          PairStats* stats = nullptr) {
  if (m < 1) throw std::invalid_argument("rewrite_rhs: m must be positive");
  return mul(amalgam_prefactor(rep, m, ctx), weighted_pair_sum(rep, m, weight_factor, ctx, stats));
}

inline void record(VerificationReport& report, const std::string& where, const DirichletPoly& lhs,
                   const DirichletPoly& rhs) {
  ++report.comparisons;
  if (!report.passed) return;
  if (auto k = first_mismatch(lhs, rhs)) {
    report.passed = false;
    report.mismatch = Mismatch{where, *k, lhs.coeff(*k), rhs.coeff(*k)};
  }
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

/// Σ over pairs (H, M) with f(H) ≤ M of ∏_v p^{n(v,1) kM_v} X_v^{kH_v + kM_v}.
inline DirichletPoly zeta_pairsum(const AdmissibleRep& rep, const PAdicContext& ctx) {
  return detail::weighted_pair_sum(rep, 1, 1, ctx);
}

/// Brute force: every family of full-rank lattices Λ_v ≤ L_v closed under
/// all edge maps, counted at (index_exp Λ_v)_v.
inline DirichletPoly zeta_direct(const AdmissibleRep& rep, const PAdicContext& ctx) {
  const std::size_t nv = rep.vertex_count();
  const auto caps = rep_caps(rep, ctx);
  mpz_class predicted = 1;
  for (std::size_t v = 0; v < nv; ++v)
    predicted *= predicted_sublattice_count(rep.rank(v).n1 + rep.rank(v).n2, caps[v], ctx.p);
  ctx.guard("zeta_direct", predicted);

  std::vector<std::vector<Lattice>> lists(nv);
  for (std::size_t v = 0; v < nv; ++v)
    lists[v] = enumerate_sublattices(rep.rank(v).n1 + rep.rank(v).n2, caps[v], ctx);

  // Edges are checked once both endpoints are fixed.
  const auto& edges = rep.quiver().edges();
  std::vector<std::vector<std::size_t>> ready(nv);
  for (std::size_t e = 0; e < edges.size(); ++e) ready[std::max(edges[e].tail, edges[e].head)].push_back(e);

  std::vector<const Lattice*> chosen(nv, nullptr);
  auto closed_under = [&](std::size_t e) {
    const auto& a = rep.edge_maps()[e];
    const Lattice& src = *chosen[edges[e].tail];
    const Lattice& dst = *chosen[edges[e].head];
    const int n1t = rep.rank(edges[e].tail).n1;
    const int n1h = rep.rank(edges[e].head).n1;
    const int n2h = rep.rank(edges[e].head).n2;
    std::vector<std::int64_t> image(static_cast<std::size_t>(n1h + n2h));
    for (int i = 0; i < src.rank(); ++i) {
      // (x_1 | x_2) -> (0 | x_1 a^e)
      auto row = src.row(i);
      std::fill(image.begin(), image.end(), 0);
      for (int k = 0; k < n2h; ++k) {
        std::int64_t acc = 0;
        for (int l = 0; l < n1t; ++l) acc = integer::add(acc, integer::mul(row[l], a(l, k)));
        image[n1h + k] = acc;
      }
      if (!contains_vector_inplace<std::int64_t>(dst, image)) return false;
    }
    return true;
  };

  DirichletPoly out(rep.quiver().vertices(), caps);
  std::vector<std::uint64_t> tally;
  std::size_t tally_size = 1;
  for (int k : caps) tally_size *= static_cast<std::size_t>(k + 1);
  tally.assign(tally_size, 0);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t v, std::size_t offset) {
    if (v == nv) {
      ++tally[offset];
      return;
    }
    for (const auto& lat : lists[v]) {
      chosen[v] = &lat;
      bool ok = true;
      for (std::size_t e : ready[v])
        if (!closed_under(e)) {
          ok = false;
          break;
        }
      if (ok) choose(v + 1, offset * static_cast<std::size_t>(caps[v] + 1) + lat.index_exp());
    }
  };
  choose(0, 0);
  for (const auto& k : out.all_exponents()) {
    std::size_t offset = 0;
    for (std::size_t v = 0; v < nv; ++v) offset = offset * static_cast<std::size_t>(caps[v] + 1) + k[v];
    if (tally[offset]) out.set(k, mpq_class(mpz_class(static_cast<unsigned long>(tally[offset]))));
  }
  return out;
}

/// Amalgamated-power zeta function computed from the original representation.
inline DirichletPoly rewrite_rhs(const AdmissibleRep& rep, int m, const PAdicContext& ctx) {
  return detail::rewrite_rhs_weighted(rep, m, m, ctx);
}

/// Brute-force Σ_{Λ ∈ S_H} [Ω : Λ]^{-s} over lattices Λ ≤ A^{mn}.
inline DirichletPoly sum_lattice_lhs(int m, int n, const Lattice& H, const PAdicContext& ctx, int cap) {
  if (H.rank() != n) throw std::invalid_argument("sum_lattice_lhs: H has the wrong rank");
  if (H.index_exp() > cap) throw std::invalid_argument("sum_lattice_lhs: index of H exceeds the cap");
  DirichletPoly out({"v0"}, {cap});
  for_each_sublattice(m * n, cap, ctx, [&](const Lattice& lambda) {
    if (project_and_sum(lambda, m, n, ctx) == H) out.add({lambda.index_exp()}, 1);
  });
  return out;
}

/// ζ_{A^{mn}}(s) / ζ_{A^n}(ms) · [A^n : H]^{-ms}.
inline DirichletPoly sum_lattice_rhs(int m, int n, const Lattice& H, const PAdicContext& ctx, int cap) {
  if (m < 1) throw std::invalid_argument("sum_lattice_rhs: m must be positive");
  if (m * H.index_exp() > cap) throw std::invalid_argument("sum_lattice_rhs: m * index exponent of H exceeds the cap");
  auto ratio = div(abelian_zeta(m * n, ctx.p, cap), scale_exponents(abelian_zeta(n, ctx.p, cap), m));
  return mul(ratio, DirichletPoly::monomial({"v0"}, {cap}, {m * H.index_exp()}));
}

/// Both sides of the sum-of-projections count for every H with m·index ≤ cap,
/// plus the partition Σ_H (left side) = ζ_{A^{mn}}.  The lattices of A^{mn}
/// are enumerated once and bucketed by their projection sum.
inline VerificationReport verify_sum_lattice(int m, int n, const PAdicContext& ctx, int cap) {
  detail::Stopwatch clock;
  VerificationReport report;
  report.check = "sum-lattice";
  std::map<Lattice, DirichletPoly> buckets;
  std::uint64_t enumerated = 0;
  for_each_sublattice(m * n, cap, ctx, [&](const Lattice& lambda) {
    ++enumerated;
    auto h = project_and_sum(lambda, m, n, ctx);
    auto it = buckets.try_emplace(std::move(h), std::vector<std::string>{"v0"}, std::vector<int>{cap}).first;
    it->second.add({lambda.index_exp()}, 1);
  });
  report.counts["lattices"] = enumerated;

  DirichletPoly partition({"v0"}, {cap});
  for (const auto& [h, series] : buckets) partition = partition + series;

  std::uint64_t targets = 0;
  for_each_sublattice(n, cap / m, ctx, [&](const Lattice& h) {
    ++targets;
    auto it = buckets.find(h);
    DirichletPoly lhs = it == buckets.end() ? DirichletPoly({"v0"}, {cap}) : it->second;
    std::string where = "H with diagonal exponents (";
    for (std::size_t i = 0; i < h.diag_exponents().size(); ++i)
      where += (i ? "," : "") + std::to_string(h.diag_exponents()[i]);
    where += ")";
    detail::record(report, where, lhs, sum_lattice_rhs(m, n, h, ctx, cap));
  });
  report.counts["targets"] = targets;
  // Every bucket must be one of the targets (m·index(H) ≤ cap).
  std::uint64_t stray = 0;
  for (const auto& [h, series] : buckets)
    if (m * h.index_exp() > cap) ++stray;
  report.counts["stray_buckets"] = stray;
  if (stray && report.passed) {
    report.passed = false;
    report.mismatch = Mismatch{"projection sum with m*index above cap", {0}, mpq_class(0),
                               mpq_class(mpz_class(static_cast<unsigned long>(stray)))};
  }
  detail::record(report, "partition identity", partition, abelian_zeta(m * n, ctx.p, cap));
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

/// zeta_pairsum(amalgamated representation) against rewrite_rhs.
inline VerificationReport verify_amalgam(const AdmissibleRep& rep, int m, const PAdicContext& ctx) {
  detail::Stopwatch clock;
  VerificationReport report;
  report.check = "amalgam";
  detail::PairStats lhs_stats, rhs_stats;
  auto lhs = detail::weighted_pair_sum(amalgamate_rep(rep, m), 1, 1, ctx, &lhs_stats);
  auto rhs = detail::rewrite_rhs_weighted(rep, m, m, ctx, &rhs_stats);
  detail::record(report, "", lhs, rhs);
  report.counts["lhs_h_families"] = lhs_stats.h_families;
  report.counts["lhs_m_checks"] = lhs_stats.m_checks;
  report.counts["rhs_h_families"] = rhs_stats.h_families;
  report.counts["rhs_m_checks"] = rhs_stats.m_checks;
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

/// zeta_direct against zeta_pairsum.
inline VerificationReport verify_pairsum(const AdmissibleRep& rep, const PAdicContext& ctx) {
  detail::Stopwatch clock;
  VerificationReport report;
  report.check = "pairsum";
  detail::PairStats stats;
  auto direct = zeta_direct(rep, ctx);
  auto pairs = detail::weighted_pair_sum(rep, 1, 1, ctx, &stats);
  detail::record(report, "", direct, pairs);
  report.counts["h_families"] = stats.h_families;
  report.counts["m_checks"] = stats.m_checks;
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

/// Exhaustive good-basis counts against the closed-form measure, for every
/// lattice of rank 1..max_rank whose diagonal exponents are all ≤ max_nu, at
/// the least sound precision N0 and at N0 + 1.
inline VerificationReport verify_measure(int max_rank, int max_nu, const PAdicContext& ctx) {
  detail::Stopwatch clock;
  VerificationReport report;
  report.check = "measure";
  std::uint64_t lattices = 0;
  for (int r = 1; r <= max_rank; ++r) {
    for (const auto& nu : diagonal_profiles(r, r * max_nu)) {
      if (*std::max_element(nu.begin(), nu.end()) > max_nu) continue;
      for_each_sublattice_with_profile(ctx.p, nu, [&](const Lattice& lat) {
        ++lattices;
        const int n0 = good_basis_min_precision(lat, ctx.p);
        for (int N = n0; N <= n0 + 1; ++N) {
          const mpz_class count = good_basis_count_mod(lat, N, ctx);
          mpq_class ratio(count, detail::power(ctx.p, static_cast<long>(N) * r * (r + 1) / 2));
          ratio.canonicalize();
          const mpq_class expected = good_basis_measure(lat.diag_exponents(), ctx.p);
          ++report.comparisons;
          if (report.passed && ratio != expected) {
            report.passed = false;
            std::string where = "rank " + std::to_string(r) + ", N=" + std::to_string(N) + ", rows";
            for (const auto& row : lat.rows()) {
              where += " (";
              for (std::size_t j = 0; j < row.size(); ++j) where += (j ? "," : "") + std::to_string(row[j]);
              where += ")";
            }
            report.mismatch = Mismatch{where, lat.diag_exponents(), ratio, expected};
          }
        }
      });
    }
  }
  report.counts["lattices"] = lattices;
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace zeta
