#pragma once

// Quivers, admissible representations and class-two nilpotent algebras, plus
// the constructions relating them (algebra -> one-vertex representation,
// amalgamated powers of both).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zeta {

/// Malformed model input (bad vertex reference, matrix shape mismatch, ...).
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major integer matrix.  Zero rows or zero columns are allowed.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw ModelError("IntMatrix: data size does not match shape");
  }
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ModelError("IntMatrix: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const std::vector<std::int64_t>& data() const { return data_; }
  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

struct QuiverEdge {
  std::string id;
  std::size_t tail = 0;
  std::size_t head = 0;
  friend bool operator==(const QuiverEdge&, const QuiverEdge&) = default;
};

/// Finite directed multigraph; loops and parallel edges allowed.  Vertices
/// and edges keep insertion order.
class Quiver {
 public:
  std::size_t add_vertex(std::string id) {
    if (find_vertex(id)) throw ModelError("duplicate vertex id '" + id + "'");
    vertices_.push_back(std::move(id));
    return vertices_.size() - 1;
  }

  std::size_t add_edge(std::string id, std::size_t tail, std::size_t head) {
    if (tail >= vertices_.size() || head >= vertices_.size())
      throw ModelError("edge '" + id + "' references an unknown vertex");
    edges_.push_back({std::move(id), tail, head});
    return edges_.size() - 1;
  }

  std::size_t add_edge(std::string id, const std::string& tail, const std::string& head) {
    auto t = find_vertex(tail);
    auto h = find_vertex(head);
    if (!t || !h) throw ModelError("edge '" + id + "' references an unknown vertex");
    return add_edge(std::move(id), *t, *h);
  }

  std::optional<std::size_t> find_vertex(const std::string& id) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<QuiverEdge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<QuiverEdge> edges_;
};

/// Ranks of the two summands L_{v,1} (maps out) and L_{v,2} (maps in).
struct RankPair {
  int n1 = 0;
  int n2 = 0;
  friend bool operator==(const RankPair&, const RankPair&) = default;
};

/// Admissible representation over Z (read p-adically).  The edge map of e
/// sends basis vector i of L_{t(e),1} to row i of its matrix, expressed in
/// the basis of L_{h(e),2}; it kills L_{t(e),2}.
class AdmissibleRep {
 public:
  AdmissibleRep() = default;
  AdmissibleRep(Quiver quiver, std::vector<RankPair> ranks, std::vector<IntMatrix> edge_maps)
      : quiver_(std::move(quiver)), ranks_(std::move(ranks)), edge_maps_(std::move(edge_maps)) {
    if (ranks_.size() != quiver_.vertex_count())
      throw ModelError("rank list length does not match vertex count");
    for (const auto& r : ranks_)
      if (r.n1 < 0 || r.n2 < 0) throw ModelError("negative rank");
    if (edge_maps_.size() != quiver_.edge_count())
      throw ModelError("edge matrix count does not match edge count");
    for (std::size_t e = 0; e < edge_maps_.size(); ++e) {
      const auto& edge = quiver_.edges()[e];
      const auto& a = edge_maps_[e];
      if (a.rows() != static_cast<std::size_t>(ranks_[edge.tail].n1) ||
          a.cols() != static_cast<std::size_t>(ranks_[edge.head].n2))
        throw ModelError("edge " + std::to_string(e) + " ('" + edge.id + "'): matrix shape " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " expected " +
                         std::to_string(ranks_[edge.tail].n1) + "x" +
                         std::to_string(ranks_[edge.head].n2));
    }
  }

  const Quiver& quiver() const { return quiver_; }
  const std::vector<RankPair>& ranks() const { return ranks_; }
  const RankPair& rank(std::size_t v) const { return ranks_[v]; }
  const std::vector<IntMatrix>& edge_maps() const { return edge_maps_; }
  std::size_t vertex_count() const { return quiver_.vertex_count(); }

  /// Rank vector (n(v,1), n(v,2)) in vertex order.
  std::vector<RankPair> rank_vector() const { return ranks_; }

  friend bool operator==(const AdmissibleRep&, const AdmissibleRep&) = default;

 private:
  Quiver quiver_;
  std::vector<RankPair> ranks_;
  std::vector<IntMatrix> edge_maps_;
};

/// Class-two algebra on generators b_1..b_n and central β_1..β_d with
/// [b_i, b_j] = Σ_k c(i,j,k) β_k.  Indices are 0-based in the API.
///
/// The central ideal used for amalgamation is always span(β).  A larger
/// central ideal J is modelled by enlarging d and leaving the extra
/// structure constants at zero.
class NilpotentAlgebra {
 public:
  NilpotentAlgebra() = default;
  NilpotentAlgebra(int n, int d) : n_(n), d_(d) {
    if (n < 0 || d < 0) throw ModelError("negative algebra rank");
    c_.assign(static_cast<std::size_t>(n) * n * d, 0);
  }
  NilpotentAlgebra(int n, int d, std::vector<std::int64_t> structure) : n_(n), d_(d), c_(std::move(structure)) {
    if (n < 0 || d < 0) throw ModelError("negative algebra rank");
    if (c_.size() != static_cast<std::size_t>(n) * n * d)
      throw ModelError("structure array must have n*n*d entries");
  }

  int n() const { return n_; }
  int d() const { return d_; }
  std::int64_t operator()(int i, int j, int k) const { return c_[index(i, j, k)]; }
  std::int64_t& operator()(int i, int j, int k) { return c_[index(i, j, k)]; }
  const std::vector<std::int64_t>& structure() const { return c_; }

  friend bool operator==(const NilpotentAlgebra&, const NilpotentAlgebra&) = default;

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * d_ + k;
  }

  int n_ = 0;
  int d_ = 0;
  std::vector<std::int64_t> c_;
};

inline NilpotentAlgebra heisenberg_algebra() {
  NilpotentAlgebra h(2, 1);
  h(0, 1, 0) = 1;
  h(1, 0, 0) = -1;
  return h;
}

/// Antisymmetry check; Jacobi holds automatically in class two.
inline bool validate_lie(const NilpotentAlgebra& alg) {
  for (int i = 0; i < alg.n(); ++i)
    for (int j = 0; j < alg.n(); ++j)
      for (int k = 0; k < alg.d(); ++k)
        if (alg(i, j, k) != -alg(j, i, k)) return false;
  return true;
}

/// One vertex "v0", ranks (n, d), loops left_1..left_n then right_1..right_n.
inline AdmissibleRep algebra_to_rep(const NilpotentAlgebra& alg) {
  const auto n = static_cast<std::size_t>(alg.n());
  const auto d = static_cast<std::size_t>(alg.d());
  Quiver q;
  q.add_vertex("v0");
  std::vector<IntMatrix> maps;
  for (std::size_t i = 0; i < n; ++i) {
    q.add_edge("left_" + std::to_string(i + 1), 0, 0);
    IntMatrix a(n, d);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < d; ++k) a(j, k) = alg(int(i), int(j), int(k));
    maps.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < n; ++i) {
    q.add_edge("right_" + std::to_string(i + 1), 0, 0);
    IntMatrix a(n, d);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < d; ++k) a(j, k) = alg(int(j), int(i), int(k));
    maps.push_back(std::move(a));
  }
  return AdmissibleRep(std::move(q), {RankPair{alg.n(), alg.d()}}, std::move(maps));
}

/// Amalgamated m-th power: L_{v,1} becomes m copies, L_{v,2} is shared.
/// Edge (e, i) acts as e on copy i; edges are ordered (edge, copy).
inline AdmissibleRep amalgamate_rep(const AdmissibleRep& rep, int m) {
  if (m < 1) throw ModelError("amalgamation power must be positive");
  Quiver q;
  for (const auto& v : rep.quiver().vertices()) q.add_vertex(v);
  std::vector<RankPair> ranks;
  for (const auto& r : rep.ranks()) ranks.push_back({m * r.n1, r.n2});
  std::vector<IntMatrix> maps;
  const auto& edges = rep.quiver().edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& a = rep.edge_maps()[e];
    for (int copy = 0; copy < m; ++copy) {
      std::string id = m == 1 ? edges[e].id : edges[e].id + ":" + std::to_string(copy + 1);
      q.add_edge(std::move(id), edges[e].tail, edges[e].head);
      IntMatrix block(a.rows() * static_cast<std::size_t>(m), a.cols());
      const std::size_t offset = a.rows() * static_cast<std::size_t>(copy);
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) block(offset + i, j) = a(i, j);
      maps.push_back(std::move(block));
    }
  }
  return AdmissibleRep(std::move(q), std::move(ranks), std::move(maps));
}

/// L^{*m} over J = span(β): generator (r, i) has index r*n + i.
inline NilpotentAlgebra amalgamate_algebra(const NilpotentAlgebra& alg, int m) {
  if (m < 1) throw ModelError("amalgamation power must be positive");
  const int n = alg.n();
  NilpotentAlgebra out(m * n, alg.d());
  for (int r = 0; r < m; ++r)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < alg.d(); ++k) out(r * n + i, r * n + j, k) = alg(i, j, k);
  return out;
}

}  // namespace zeta
