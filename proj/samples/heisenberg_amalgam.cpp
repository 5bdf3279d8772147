// Ideal zeta function of the amalgamated square of the Heisenberg algebra
// over Z_2, three ways: directly on the amalgam, through the rewritten form on
// the original algebra, and from the closed form.

#include "zeta/zeta.hpp"

#include <iostream>

int main() {
  const auto rep = zeta::algebra_to_rep(zeta::heisenberg_algebra());
  const int m = 2;
  const zeta::PAdicContext ctx(2, {5});

  const auto amalgam = zeta::zeta_pairsum(zeta::amalgamate_rep(rep, m), ctx);
  const auto rewritten = zeta::rewrite_rhs(rep, m, ctx);
  const auto closed = zeta::heisenberg_amalgam_zeta(m, ctx.p, ctx.cap(0));

  std::cout << zeta::render_tsv(amalgam);
  std::cout << "rewritten form agrees: " << (amalgam == rewritten ? "yes" : "no") << "\n";
  std::cout << "closed form agrees:    " << (amalgam == closed ? "yes" : "no") << "\n";
  return amalgam == rewritten && amalgam == closed ? 0 : 1;
}
