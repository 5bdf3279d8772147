#pragma once

// Small representations used across the engine tests and the acceptance run.

#include "zeta/core_model.hpp"

#include <string>
#include <vector>

namespace zeta::corpus {

struct Entry {
  std::string name;
  AdmissibleRep rep;
};

inline NilpotentAlgebra non_lie() {
  NilpotentAlgebra alg(1, 1);
  alg(0, 0, 0) = 5;
  return alg;
}

inline AdmissibleRep two_vertex() {
  Quiver q;
  q.add_vertex("v");
  q.add_vertex("w");
  q.add_edge("a", "v", "w");
  return AdmissibleRep(q, {{1, 0}, {0, 1}}, {IntMatrix{{2}}});
}

inline AdmissibleRep rank_two_centre() {
  Quiver q;
  q.add_vertex("v");
  q.add_edge("a", "v", "v");
  return AdmissibleRep(q, {{1, 2}}, {IntMatrix{{1, 3}}});
}

inline std::vector<Entry> standard() {
  return {
      {"abelian n=1", algebra_to_rep(NilpotentAlgebra(1, 0))},
      {"abelian n=2", algebra_to_rep(NilpotentAlgebra(2, 0))},
      {"heisenberg", algebra_to_rep(heisenberg_algebra())},
      {"non-lie n=1 d=1", algebra_to_rep(non_lie())},
      {"two-vertex edge 2", two_vertex()},
      {"n2=2 loop", rank_two_centre()},
  };
}

/// Representations with a single generator overall (Σ n1 = 1).
inline bool single_generator(const AdmissibleRep& rep) {
  int total = 0;
  for (const auto& r : rep.ranks()) total += r.n1;
  return total <= 1;
}

}  // namespace zeta::corpus
