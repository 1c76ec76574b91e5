#ifndef ICOSOLVE_SOLVER_HPP
#define ICOSOLVE_SOLVER_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "heymann.hpp"
#include "hypergeo.hpp"
#include "invariants.hpp"
#include "numeric.hpp"
#include "oracle.hpp"
#include "reduction.hpp"

namespace icosolve {

/// One of the four sign/root combinations the closed-form solution leaves
/// open: which root of the central quadratic, and the sign of sqrt(3 r f(Y)).
struct BranchChoice {
  int r_index = 0;
  int sqrt3rf_sign = 1;

  friend bool operator==(const BranchChoice&, const BranchChoice&) = default;
};

/// Enumeration order; the first choice that passes the residual gate wins.
inline constexpr std::array<BranchChoice, 4> branch_order{
    BranchChoice{0, 1}, BranchChoice{0, -1}, BranchChoice{1, 1}, BranchChoice{1, -1}};

/// What happened to one branch during the search.
struct BranchAttempt {
  BranchChoice branch;
  std::optional<Complex> r, J, Y;
  std::optional<double> max_residual;  // scaled; absent when the branch errored
  std::optional<ErrorKind> error_kind;
  std::string error_message;
  bool passed = false;
};

struct SolveResult {
  std::array<Complex, 5> roots{};      // sorted by (real, imag)
  std::array<double, 5> residuals{};   // |P(y)| / max(1, |alpha|, |beta|, |gamma|), same order
  Complex Y, J;
  ResolventData resolvent;
  BranchChoice branch;
  std::optional<double> oracle_max_distance;

  // diagnostics
  std::array<Complex, 5> roots_by_nu{};  // y_nu in the order of t_nu
  Complex f_of_Y;
  std::array<Complex, 5> t_nu{};
  double loop_closure_error = 0.0;  // relative defect of J_of((Y, 1)) against J
  std::optional<double> alternate_branch_distance;  // vs. other passing branches
  std::vector<BranchAttempt> attempts;
};

/// Raised when no branch produces certified roots. Carries the full search
/// log. kind() is BranchSelectionFailed, or NearSingularJ when every branch
/// stopped at a branch point of the covering.
class SolveFailure : public Error {
 public:
  SolveFailure(ErrorKind kind, const std::string& message, std::vector<BranchAttempt> attempts)
      : Error(kind, message), attempts_(std::move(attempts)) {}

  const std::vector<BranchAttempt>& attempts() const noexcept { return attempts_; }

 private:
  std::vector<BranchAttempt> attempts_;
};

/// y_nu = -(6 s f + 2 t_nu sqrt(3 r f)) / (t_nu^2 - 3 f), f and t_nu at (Y, 1),
/// sqrt(3 r f) = sign * principal root.
inline std::array<Complex, 5> roots_from_Y(Complex Y, Complex r, Complex s, int sign,
                                           const Tolerances& tol = {}) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
  const Complex f = form_f({Y, 1.0});
  const Complex root = double(sign) * principal_sqrt(3.0 * r * f);
  std::array<Complex, 5> ys{};
  for (int nu = 0; nu < 5; ++nu) {
    const Complex t = form_t_nu(Y, nu);
    const Complex den = t * t - 3.0 * f;
    if (std::abs(den) <= tol.degeneracy_tol)
      throw Error(ErrorKind::DenominatorCollapse, "t_nu^2 = 3f at nu = " + std::to_string(nu));
    ys[nu] = -(6.0 * s * f + 2.0 * t * root) / den;
  }
  return ys;
}

inline std::array<Complex, 5> sorted_roots(std::array<Complex, 5> roots) {
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

inline double scaled_residual(const PrincipalQuintic& pq, Complex y) {
  return std::abs(pq(y)) / pq.scale();
}

/// Solves y^5 + 5 alpha y^2 + 5 beta y + gamma = 0 through the icosahedral
/// parameter, enumerating the four branch choices and certifying each by
/// residual.
inline SolveResult solve_principal(const PrincipalQuintic& pq, const Tolerances& tol = {}) {
  tol.validate();
  require_finite(pq.alpha, "alpha");
  require_finite(pq.beta, "beta");
  require_finite(pq.gamma, "gamma");
  if (std::abs(pq.gamma) <= tol.degeneracy_tol)
    throw Error(ErrorKind::DegenerateCoefficients, "gamma vanishes: y = 0 is a root");
  if (std::abs(pq.beta) <= tol.degeneracy_tol)
    throw Error(ErrorKind::DegenerateCoefficients, "beta vanishes: J degenerates to 0");
  if (std::abs(reduced_discriminant(pq)) <= tol.degeneracy_tol * reduced_discriminant_magnitude(pq))
    throw Error(ErrorKind::DegenerateCoefficients, "discriminant vanishes: repeated roots");

  const std::vector<Complex> rs = resolvent_r(pq.alpha, pq.beta, pq.gamma, tol);
  const double scale = pq.scale();

  struct Candidate {
    std::size_t attempt;
    ResolventData chain;
    Complex Y;
    std::array<Complex, 5> ys;
  };
  std::vector<BranchAttempt> attempts;
  std::vector<Candidate> passing;

  for (std::size_t ri = 0; ri < rs.size(); ++ri) {
    std::optional<ResolventData> chain;
    std::optional<Complex> Y;
    std::optional<Error> chain_error;
    try {
      chain = resolvent_chain(pq, rs[ri], tol);
      Y = Y_of_J(chain->J, tol);
    } catch (const Error& e) {
      chain_error = e;
    }
    for (int sign : {1, -1}) {
      BranchAttempt at;
      at.branch = {int(ri), sign};
      at.r = rs[ri];
      if (chain) at.J = chain->J;
      at.Y = Y;
      if (chain_error) {
        at.error_kind = chain_error->kind();
        at.error_message = chain_error->what();
        attempts.push_back(at);
        continue;
      }
      try {
        auto ys = roots_from_Y(*Y, chain->r, chain->s, sign, tol);
        double worst = 0.0;
        for (Complex y : ys) worst = std::max(worst, scaled_residual(pq, y));
        if (!std::isfinite(worst)) throw Error(ErrorKind::NonFinite, "non-finite residual");
        at.max_residual = worst;
        at.passed = worst < tol.residual_tol;
        if (at.passed) passing.push_back({attempts.size(), *chain, *Y, ys});
      } catch (const Error& e) {
        at.error_kind = e.kind();
        at.error_message = e.what();
      }
      attempts.push_back(at);
    }
  }

  if (passing.empty()) {
    const bool all_singular = std::all_of(attempts.begin(), attempts.end(), [](const BranchAttempt& a) {
      return a.error_kind == ErrorKind::NearSingularJ;
    });
    if (all_singular)
      throw SolveFailure(ErrorKind::NearSingularJ, "every branch has J at a branch point of the covering",
                         std::move(attempts));
    throw SolveFailure(ErrorKind::BranchSelectionFailed, "no branch choice passes the residual gate",
                       std::move(attempts));
  }

  const Candidate& best = passing.front();
  SolveResult out;
  out.branch = attempts[best.attempt].branch;
  out.resolvent = best.chain;
  out.J = best.chain.J;
  out.Y = best.Y;
  out.roots_by_nu = best.ys;
  out.roots = sorted_roots(best.ys);
  for (std::size_t i = 0; i < 5; ++i) out.residuals[i] = scaled_residual(pq, out.roots[i]);
  out.f_of_Y = form_f({best.Y, 1.0});
  out.t_nu = form_t_all(best.Y);
  try {
    out.loop_closure_error = relative_error(J_of({best.Y, 1.0}, tol), out.J);
  } catch (const Error&) {
    out.loop_closure_error = std::numeric_limits<double>::infinity();
  }
  for (std::size_t k = 1; k < passing.size(); ++k) {
    double d = match_root_sets(best.ys, passing[k].ys) / scale;
    out.alternate_branch_distance = std::max(out.alternate_branch_distance.value_or(0.0), d);
  }
  out.attempts = std::move(attempts);
  return out;
}

/// Oracle cross-check: fills oracle_max_distance from Aberth roots.
inline void attach_oracle(SolveResult& result, const PrincipalQuintic& pq) {
  const RootSet ref = aberth_roots(pq.coefficients());
  result.oracle_max_distance = match_root_sets(result.roots, ref.values);
}

struct GeneralSolveResult {
  std::array<Complex, 5> roots{};     // roots of the general quintic, sorted
  std::array<double, 5> residuals{};  // |g(x)| / max(1, |c_i|)
  DepressedQuintic depressed;
  PrincipalQuintic principal;
  TschirnhausRecord record;
  SolveResult principal_solution;
  bool retried_other_delta = false;
};

/// depress -> principalize -> solve_principal -> lift_roots. If the first
/// choice of delta fails anywhere downstream, the other root of the a-quadratic
/// (a different principal quintic with the same lifted roots) is tried once.
inline GeneralSolveResult solve_general(const GeneralQuintic& g, const Tolerances& tol = {}) {
  tol.validate();
  for (Complex c : g.coefficients()) require_finite(c, "general coefficient");
  const Depressed dep = depress(g);

  for (int delta_branch : {1, -1}) {
    try {
      Principalized pr = principalize(dep.quintic, tol, delta_branch);
      pr.record.shift = dep.shift;
      GeneralSolveResult out;
      out.principal_solution = solve_principal(pr.quintic, tol);
      const auto xs = lift_roots(pr.record, out.principal_solution.roots, dep.quintic, tol);
      out.roots = sorted_roots(xs);
      for (std::size_t i = 0; i < 5; ++i) out.residuals[i] = std::abs(g(out.roots[i])) / g.scale();
      out.depressed = dep.quintic;
      out.principal = pr.quintic;
      out.record = pr.record;
      out.retried_other_delta = delta_branch == -1;
      return out;
    } catch (const Error& e) {
      const bool retryable = e.kind() != ErrorKind::InvalidArgument && e.kind() != ErrorKind::NonFinite;
      const bool same_map = std::abs(dep.quintic.p) <= tol.degeneracy_tol;
      if (delta_branch == -1 || !retryable || same_map) throw;
    }
  }
  throw Error(ErrorKind::BranchSelectionFailed, "unreachable");
}

}  // namespace icosolve

#endif  // ICOSOLVE_SOLVER_HPP
