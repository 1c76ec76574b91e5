// Solves a few quintics through the icosahedral pipeline and checks each
// against the Aberth root-finder.
#include <cstdio>

#include "icosolve/icosolve.hpp"

using namespace icosolve;

static void show(const char* label, const std::array<Complex, 5>& roots, double oracle) {
  std::printf("%s\n", label);
  for (Complex z : roots) std::printf("  % .12f %+.12fi\n", z.real(), z.imag());
  std::printf("  oracle distance %.2e\n", oracle);
}

int main() {
  // y^5 + 5i y^2 - 12 y + (1 - i)
  const PrincipalQuintic pq{{0.0, 1.0}, {-2.4, 0.0}, {1.0, -1.0}};
  SolveResult r = solve_principal(pq);
  attach_oracle(r, pq);
  std::printf("J = %.9f%+.9fi, Y = %.9f%+.9fi, branch (%d, %+d)\n", r.J.real(), r.J.imag(), r.Y.real(),
              r.Y.imag(), r.branch.r_index, r.branch.sqrt3rf_sign);
  show("principal quintic", r.roots, *r.oracle_max_distance);

  // x^5 - x + 1, the classic example that is not solvable by radicals
  const GeneralQuintic g{0.0, 0.0, 0.0, -1.0, 1.0};
  const GeneralSolveResult gr = solve_general(g);
  show("x^5 - x + 1", gr.roots, match_root_sets(gr.roots, aberth_roots(g.coefficients()).values));

  // a general quintic with every coefficient present
  const GeneralQuintic h{{1.0, 1.0}, 2.0, {-3.0, 0.5}, {0.0, 1.0}, {4.0, -2.0}};
  const GeneralSolveResult hr = solve_general(h);
  const double d = match_root_sets(hr.roots, aberth_roots(h.coefficients()).values);
  show("x^5 + (1+i)x^4 + 2x^3 + (-3+0.5i)x^2 + ix + (4-2i)", hr.roots, d);
  return d < 1e-6 ? 0 : 1;
}
