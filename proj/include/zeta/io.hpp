#pragma once

// JSON documents for representations and algebras, and JSON renderings of
// series and verification reports.
//
//   {"type":"algebra","n":2,"d":1,
//    "brackets":[{"i":1,"j":2,"coeffs":[1]},{"i":2,"j":1,"coeffs":[-1]}]}
//   {"type":"rep","vertices":[{"id":"v","n1":1,"n2":1}],
//    "edges":[{"id":"e1","tail":"v","head":"v","matrix":[[1]]}]}
//
// Bracket indices are 1-based; unlisted pairs are zero.  An optional
// "lie": true on an algebra demands antisymmetric structure constants.
// Matrices are row-major, n1(tail) rows of n2(head) integers.

#include "zeta/core_model.hpp"
#include "zeta/dirichlet.hpp"
#include "zeta/zeta_engine.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

namespace zeta {

using Json = nlohmann::ordered_json;

/// Input document does not match the schema; the message starts with a
/// JSON-pointer-style path.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using ModelDocument = std::variant<AdmissibleRep, NilpotentAlgebra>;

namespace detail {

[[noreturn]] inline void schema_fail(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

inline const Json& member(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) schema_fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path + "/" + key, "missing");
  return *it;
}

inline std::int64_t as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

inline int as_rank(const Json& j, const std::string& path) {
  const auto x = as_int(j, path);
  if (x < 0 || x > 64) schema_fail(path, "rank must be in [0, 64]");
  return static_cast<int>(x);
}

inline std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) schema_fail(path, "expected a string");
  return j.get<std::string>();
}

inline const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected an array");
  return j;
}

inline NilpotentAlgebra parse_algebra(const Json& doc) {
  const int n = as_rank(member(doc, "", "n"), "/n");
  const int d = as_rank(member(doc, "", "d"), "/d");
  NilpotentAlgebra alg(n, d);
  if (doc.contains("brackets")) {
    const auto& brackets = as_array(doc["brackets"], "/brackets");
    for (std::size_t b = 0; b < brackets.size(); ++b) {
      const std::string path = "/brackets/" + std::to_string(b);
      const auto i = as_int(member(brackets[b], path, "i"), path + "/i");
      const auto j = as_int(member(brackets[b], path, "j"), path + "/j");
      if (i < 1 || i > n) schema_fail(path + "/i", "generator index out of range 1.." + std::to_string(n));
      if (j < 1 || j > n) schema_fail(path + "/j", "generator index out of range 1.." + std::to_string(n));
      const auto& coeffs = as_array(member(brackets[b], path, "coeffs"), path + "/coeffs");
      if (coeffs.size() != static_cast<std::size_t>(d))
        schema_fail(path + "/coeffs", "expected " + std::to_string(d) + " coefficients");
      for (int k = 0; k < d; ++k)
        alg(int(i - 1), int(j - 1), k) = as_int(coeffs[k], path + "/coeffs/" + std::to_string(k));
    }
  }
  if (doc.contains("lie")) {
    if (!doc["lie"].is_boolean()) schema_fail("/lie", "expected a boolean");
    if (doc["lie"].get<bool>() && !validate_lie(alg)) schema_fail("/lie", "structure constants are not antisymmetric");
  }
  return alg;
}

inline AdmissibleRep parse_rep(const Json& doc) {
  Quiver quiver;
  std::vector<RankPair> ranks;
  const auto& vertices = as_array(member(doc, "", "vertices"), "/vertices");
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const std::string path = "/vertices/" + std::to_string(v);
    auto id = as_string(member(vertices[v], path, "id"), path + "/id");
    if (quiver.find_vertex(id)) schema_fail(path + "/id", "duplicate vertex id '" + id + "'");
    quiver.add_vertex(id);
    ranks.push_back({as_rank(member(vertices[v], path, "n1"), path + "/n1"),
                     as_rank(member(vertices[v], path, "n2"), path + "/n2")});
  }
  std::vector<IntMatrix> maps;
  const Json empty = Json::array();
  const auto& edges = doc.contains("edges") ? as_array(doc["edges"], "/edges") : empty;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string path = "/edges/" + std::to_string(e);
    const auto tail = as_string(member(edges[e], path, "tail"), path + "/tail");
    const auto head = as_string(member(edges[e], path, "head"), path + "/head");
    auto t = quiver.find_vertex(tail);
    auto h = quiver.find_vertex(head);
    if (!t) schema_fail(path + "/tail", "unknown vertex '" + tail + "'");
    if (!h) schema_fail(path + "/head", "unknown vertex '" + head + "'");
    std::string id = edges[e].contains("id") ? as_string(edges[e]["id"], path + "/id") : "e" + std::to_string(e + 1);
    const auto rows = static_cast<std::size_t>(ranks[*t].n1);
    const auto cols = static_cast<std::size_t>(ranks[*h].n2);
    const auto& matrix = as_array(member(edges[e], path, "matrix"), path + "/matrix");
    auto shape_error = [&] {
      schema_fail(path + "/matrix", "edge " + std::to_string(e) + " ('" + id + "') needs a " + std::to_string(rows) +
                                        "x" + std::to_string(cols) + " matrix (n1 of tail by n2 of head)");
    };
    if (matrix.size() != rows) shape_error();
    IntMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      const auto& row = as_array(matrix[i], path + "/matrix/" + std::to_string(i));
      if (row.size() != cols) shape_error();
      for (std::size_t j = 0; j < cols; ++j)
        a(i, j) = as_int(row[j], path + "/matrix/" + std::to_string(i) + "/" + std::to_string(j));
    }
    quiver.add_edge(std::move(id), *t, *h);
    maps.push_back(std::move(a));
  }
  return AdmissibleRep(std::move(quiver), std::move(ranks), std::move(maps));
}

}  // namespace detail

inline ModelDocument parse_document(const Json& doc) {
  const auto type = detail::as_string(detail::member(doc, "", "type"), "/type");
  if (type == "algebra") return detail::parse_algebra(doc);
  if (type == "rep") return detail::parse_rep(doc);
  detail::schema_fail("/type", "expected \"algebra\" or \"rep\", got \"" + type + "\"");
}

inline ModelDocument parse_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  return parse_document(doc);
}

inline ModelDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

/// Algebras are converted with algebra_to_rep.
inline AdmissibleRep as_rep(const ModelDocument& doc) {
  if (const auto* alg = std::get_if<NilpotentAlgebra>(&doc)) return algebra_to_rep(*alg);
  return std::get<AdmissibleRep>(doc);
}

inline Json to_json(const NilpotentAlgebra& alg) {
  Json brackets = Json::array();
  for (int i = 0; i < alg.n(); ++i)
    for (int j = 0; j < alg.n(); ++j) {
      Json coeffs = Json::array();
      bool nonzero = false;
      for (int k = 0; k < alg.d(); ++k) {
        coeffs.push_back(alg(i, j, k));
        nonzero = nonzero || alg(i, j, k) != 0;
      }
      if (nonzero) brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", coeffs}});
    }
  return {{"type", "algebra"}, {"n", alg.n()}, {"d", alg.d()}, {"brackets", brackets}};
}

inline Json to_json(const AdmissibleRep& rep) {
  Json vertices = Json::array();
  const auto& q = rep.quiver();
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    vertices.push_back({{"id", q.vertices()[v]}, {"n1", rep.rank(v).n1}, {"n2", rep.rank(v).n2}});
  Json edges = Json::array();
  for (std::size_t e = 0; e < q.edge_count(); ++e) {
    const auto& a = rep.edge_maps()[e];
    Json matrix = Json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
      matrix.push_back(row);
    }
    edges.push_back({{"id", q.edges()[e].id},
                     {"tail", q.vertices()[q.edges()[e].tail]},
                     {"head", q.vertices()[q.edges()[e].head]},
                     {"matrix", matrix}});
  }
  return {{"type", "rep"}, {"vertices", vertices}, {"edges", edges}};
}

inline Json to_json(const ModelDocument& doc) {
  return std::visit([](const auto& x) { return to_json(x); }, doc);
}

/// [{"k":[...],"value":"..."}] for every tuple within the caps.
inline Json coefficients_json(const DirichletPoly& series) {
  Json out = Json::array();
  for (const auto& k : series.all_exponents())
    out.push_back({{"k", k}, {"value", format_rational(series.coeff(k))}});
  return out;
}

inline Json mismatch_json(const Mismatch& m) {
  Json out = {{"at", m.at}, {"lhs", format_rational(m.lhs)}, {"rhs", format_rational(m.rhs)}};
  if (!m.where.empty()) out["where"] = m.where;
  return out;
}

}  // namespace zeta
