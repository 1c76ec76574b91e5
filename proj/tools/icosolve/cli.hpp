#ifndef ICOSOLVE_TOOLS_CLI_HPP
#define ICOSOLVE_TOOLS_CLI_HPP

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "icosolve/icosolve.hpp"

namespace icosolve::cli {

using nlohmann::json;

inline constexpr const char* schema_version = "icosolve/1";
inline constexpr const char* residual_tol_env = "ICOSOLVE_RESIDUAL_TOL";

enum class ExitCode : int { ok = 0, math_failure = 1, usage = 2 };

// --- JSON -----------------------------------------------------------------

/// Canonical serialization: keys sorted (nlohmann::json keeps objects in a
/// std::map), no whitespace, floats as %.17g. Parsing the output and
/// dumping it again reproduces the same bytes.
inline void dump_canonical(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        dump_canonical(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_canonical(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        break;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out += buf;
      break;
    }
    default:
      out += j.dump();
  }
}

inline std::string dump_canonical(const json& j) {
  std::string out;
  dump_canonical(j, out);
  return out;
}

inline json to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

template <typename Range>
json complex_array(const Range& zs) {
  json a = json::array();
  for (Complex z : zs) a.push_back(to_json(z));
  return a;
}

inline json to_json(const BranchAttempt& at) {
  json j{{"r_index", at.branch.r_index},
         {"sqrt3rf_sign", at.branch.sqrt3rf_sign},
         {"passed", at.passed},
         {"max_residual", at.max_residual ? json(*at.max_residual) : json(nullptr)},
         {"error_kind", at.error_kind ? json(std::string(to_string(*at.error_kind))) : json(nullptr)},
         {"error", at.error_message}};
  j["r"] = at.r ? to_json(*at.r) : json(nullptr);
  j["J"] = at.J ? to_json(*at.J) : json(nullptr);
  j["Y"] = at.Y ? to_json(*at.Y) : json(nullptr);
  return j;
}

inline json attempts_json(const std::vector<BranchAttempt>& attempts) {
  json a = json::array();
  for (const auto& at : attempts) a.push_back(to_json(at));
  return a;
}

inline json tolerances_json(const Tolerances& t) {
  return {{"series_tol", t.series_tol},
          {"residual_tol", t.residual_tol},
          {"degeneracy_tol", t.degeneracy_tol},
          {"max_series_terms", t.max_series_terms}};
}

inline json solve_json(const SolveResult& r, bool intermediates) {
  json j{{"roots", complex_array(r.roots)},
         {"residuals", r.residuals},
         {"Y", to_json(r.Y)},
         {"J", to_json(r.J)},
         {"branch", {{"r_index", r.branch.r_index}, {"sqrt3rf_sign", r.branch.sqrt3rf_sign}}}};
  if (r.oracle_max_distance) j["oracle_max_distance"] = *r.oracle_max_distance;
  if (intermediates) {
    const auto& d = r.resolvent;
    j["intermediates"] = {{"r", to_json(d.r)},
                          {"s", to_json(d.s)},
                          {"p", to_json(d.p)},
                          {"q", to_json(d.q)},
                          {"h1", to_json(d.h1)},
                          {"h2", to_json(d.h2)},
                          {"J", to_json(d.J)},
                          {"Y", to_json(r.Y)},
                          {"f", to_json(r.f_of_Y)},
                          {"t", complex_array(r.t_nu)},
                          {"roots_by_nu", complex_array(r.roots_by_nu)},
                          {"loop_closure_error", r.loop_closure_error},
                          {"alternate_branch_distance",
                           r.alternate_branch_distance ? json(*r.alternate_branch_distance) : json(nullptr)},
                          {"attempts", attempts_json(r.attempts)}};
  }
  return j;
}

inline json error_json(const std::string& command, const Error& e) {
  json err{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (auto* sf = dynamic_cast<const SolveFailure*>(&e)) err["attempts"] = attempts_json(sf->attempts());
  return {{"schema", schema_version}, {"command", command}, {"status", "error"}, {"error", err}};
}

// --- text output ----------------------------------------------------------

inline std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

inline std::string fmt(Complex z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real(), z.imag());
  return buf;
}

inline void solve_text(std::ostream& out, const SolveResult& r, bool intermediates) {
  if (intermediates) {
    const auto& d = r.resolvent;
    out << "r  = " << fmt(d.r) << "\ns  = " << fmt(d.s) << "\np  = " << fmt(d.p) << "\nq  = " << fmt(d.q)
        << "\nh1 = " << fmt(d.h1) << "\nh2 = " << fmt(d.h2) << "\nJ  = " << fmt(d.J) << "\nY  = " << fmt(r.Y)
        << "\nf  = " << fmt(r.f_of_Y) << '\n';
    for (int nu = 0; nu < 5; ++nu) out << "t" << nu << " = " << fmt(r.t_nu[nu]) << '\n';
    for (int nu = 0; nu < 5; ++nu) out << "y" << nu << " = " << fmt(r.roots_by_nu[nu]) << '\n';
    out << "branch attempts:\n";
    for (const auto& at : r.attempts) {
      out << "  r_index=" << at.branch.r_index << " sign=" << std::showpos << at.branch.sqrt3rf_sign
          << std::noshowpos << "  ";
      if (at.max_residual) out << "max residual " << fmt(*at.max_residual) << (at.passed ? "  pass" : "  fail");
      else out << to_string(*at.error_kind) << ": " << at.error_message;
      out << '\n';
    }
  } else {
    out << "J = " << fmt(r.J) << "\nY = " << fmt(r.Y) << '\n';
  }
  out << "branch: r_index=" << r.branch.r_index << " sqrt3rf_sign=" << r.branch.sqrt3rf_sign << '\n';
  for (std::size_t i = 0; i < 5; ++i)
    out << "root " << i << ": " << fmt(r.roots[i]) << "   residual " << fmt(r.residuals[i]) << '\n';
  if (r.oracle_max_distance) out << "oracle max distance: " << fmt(*r.oracle_max_distance) << '\n';
}

inline void error_text(std::ostream& err, const Error& e) {
  err << "error: " << e.what() << '\n';
  if (auto* sf = dynamic_cast<const SolveFailure*>(&e)) {
    for (const auto& at : sf->attempts()) {
      err << "  r_index=" << at.branch.r_index << " sign=" << at.branch.sqrt3rf_sign << ": ";
      if (at.max_residual) err << "max residual " << fmt(*at.max_residual);
      else err << to_string(*at.error_kind) << ": " << at.error_message;
      err << '\n';
    }
  }
}

// --- sweeps -----------------------------------------------------------------

struct SweepReport {
  std::string name;
  int points = 0;
  int passed = 0;
  double worst = 0.0;
  double threshold = 0.0;

  bool ok() const { return passed == points; }
  void record(double value) {
    ++points;
    if (value < threshold) ++passed;
    if (!(value <= worst)) worst = value;  // NaN propagates as the worst case
  }
};

inline std::vector<SweepReport> run_sweeps(std::uint64_t seed, int points, const Tolerances& tol) {
  std::vector<SweepReport> out;

  {
    Sampler rng(seed);
    SweepReport r{"syzygy", 0, 0, 0.0, 1e-10};
    for (int k = 0; k < points; ++k) r.record(syzygy_residual({rng.in_disk(2.0), 1.0}));
    out.push_back(r);
  }
  {
    Sampler rng(seed + 1);
    SweepReport r{"j_invariance", 0, 0, 0.0, 1e-10};
    const Complex eps = unity_root5(1);
    while (r.points < points) {
      const FormPoint pt{rng.in_disk(2.0), 1.0};
      if (std::abs(form_f(pt)) < 1e-3) continue;
      const Complex J = J_of(pt, tol);
      r.record(std::max(relative_error(J_of({eps * pt.z, pt.w}, tol), J), relative_error(J_of({-pt.w, pt.z}, tol), J)));
    }
    out.push_back(r);
  }
  {
    // the sheet of the algebraic transformations that passes through x = 0:
    // the real segment up to the pole of phi1 and a small disk around 0
    Sampler rng(seed + 2);
    SweepReport r{"transformation_identities", 0, 0, 0.0, 1e-8};
    for (int k = 0; k < points; ++k) {
      const Complex x = k % 2 ? rng.in_disk(4e-4) : Complex(rng.uniform(0.0, 0.004));
      auto [r1, r2] = identity_residuals(x, tol);
      r.record(std::max(r1, r2));
    }
    out.push_back(r);
  }
  {
    Sampler rng(seed + 3);
    SweepReport r{"contiguity", 0, 0, 0.0, 1e-10};
    for (int k = 0; k < points; ++k) {
      Complex z = rng.in_disk(0.99);
      z = {z.real(), std::abs(z.imag())};
      const HypParams& p = k % 2 ? numerator_params : denominator_params;
      const Complex t1 = p.c * (1.0 - z) * gauss_2f1(p, z, tol);
      const Complex t2 = -p.c * gauss_2f1({p.a - 1.0, p.b, p.c}, z, tol);
      const Complex t3 = (p.c - p.b) * z * gauss_2f1({p.a, p.b, p.c + 1.0}, z, tol);
      r.record(std::abs(t1 + t2 + t3) / (std::abs(t1) + std::abs(t2) + std::abs(t3)));
    }
    out.push_back(r);
  }
  {
    Sampler rng(seed + 4);
    SweepReport r{"loop_closure", 0, 0, 0.0, 1e-8};
    for (int k = 0; k < points; ++k) {
      const Complex J = rng.log_annulus(1.5, 50.0);
      r.record(relative_error(J_of({Y_of_J(J, tol), 1.0}, tol), J));
    }
    out.push_back(r);
  }
  return out;
}

// --- worked example ---------------------------------------------------------

struct ExampleRow {
  std::string name;
  Complex computed, published;
};

inline const PrincipalQuintic worked_example{{0.0, 1.0}, {-2.4, 0.0}, {1.0, -1.0}};
inline constexpr double example_tolerance = 1e-4;

inline std::vector<ExampleRow> example_rows(const SolveResult& r) {
  std::vector<ExampleRow> rows{
      {"r", r.resolvent.r, {-0.140712, -1.06363}}, {"s", r.resolvent.s, {0.816914, -0.0478157}},
      {"p", r.resolvent.p, {0.749812, -0.413396}}, {"q", r.resolvent.q, {0.0671022, 0.365581}},
      {"J", r.J, {-0.324158, -2.04659}},           {"Y", r.Y, {0.178352, 0.0718131}},
      {"f", r.f_of_Y, {-0.178721, -0.0713975}},
  };
  const std::array<Complex, 5> t{Complex{0.509555, -0.278001}, Complex{-0.761539, 0.997924},
                                 Complex{0.372515, -1.14707}, Complex{0.240993, 1.27692},
                                 Complex{-0.361523, -0.849771}};
  const std::array<Complex, 5> y{Complex{0.0895118, -0.0828539}, Complex{-0.0120031, 2.20094},
                                 Complex{-0.0430531, -1.43083}, Complex{-1.90456, -0.333135},
                                 Complex{1.87011, -0.354121}};
  for (int nu = 0; nu < 5; ++nu) rows.push_back({"t" + std::to_string(nu), r.t_nu[nu], t[nu]});
  for (int nu = 0; nu < 5; ++nu) rows.push_back({"y" + std::to_string(nu), r.roots_by_nu[nu], y[nu]});
  return rows;
}

// --- commands -----------------------------------------------------------------

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string format = "json";
  Tolerances tol;
};

inline void emit(Context& ctx, const json& j) { ctx.out << dump_canonical(j) << '\n'; }

inline ExitCode report_error(Context& ctx, const std::string& command, const Error& e) {
  if (ctx.format == "json") emit(ctx, error_json(command, e));
  else error_text(ctx.err, e);
  return ExitCode::math_failure;
}

inline json envelope(const std::string& command) {
  return {{"schema", schema_version}, {"command", command}, {"status", "ok"}};
}

inline ExitCode cmd_solve(Context& ctx, Complex alpha, Complex beta, Complex gamma, bool intermediates,
                          bool oracle_check) {
  const PrincipalQuintic pq{alpha, beta, gamma};
  try {
    SolveResult r = solve_principal(pq, ctx.tol);
    if (oracle_check) attach_oracle(r, pq);
    if (ctx.format == "json") {
      json j = envelope("solve");
      j["input"] = {{"alpha", to_json(alpha)}, {"beta", to_json(beta)}, {"gamma", to_json(gamma)}};
      j["tolerances"] = tolerances_json(ctx.tol);
      j["result"] = solve_json(r, intermediates);
      emit(ctx, j);
    } else {
      solve_text(ctx.out, r, intermediates);
    }
    return ExitCode::ok;
  } catch (const Error& e) {
    return report_error(ctx, "solve", e);
  }
}

inline ExitCode cmd_solve_general(Context& ctx, const GeneralQuintic& g, bool intermediates, bool oracle_check) {
  try {
    GeneralSolveResult r = solve_general(g, ctx.tol);
    std::optional<double> oracle;
    if (oracle_check) oracle = match_root_sets(r.roots, aberth_roots(g.coefficients()).values);
    if (ctx.format == "json") {
      json j = envelope("solve-general");
      j["input"] = {{"c4", to_json(g.c4)}, {"c3", to_json(g.c3)}, {"c2", to_json(g.c2)},
                    {"c1", to_json(g.c1)}, {"c0", to_json(g.c0)}};
      j["tolerances"] = tolerances_json(ctx.tol);
      json res{{"roots", complex_array(r.roots)},
               {"residuals", r.residuals},
               {"principal",
                {{"alpha", to_json(r.principal.alpha)},
                 {"beta", to_json(r.principal.beta)},
                 {"gamma", to_json(r.principal.gamma)}}},
               {"tschirnhaus",
                {{"shift", to_json(r.record.shift)},
                 {"a", to_json(r.record.a)},
                 {"b", to_json(r.record.b)},
                 {"delta", to_json(r.record.delta)},
                 {"delta_branch", r.record.delta_branch},
                 {"identity_map", r.record.identity_map}}},
               {"retried_other_delta", r.retried_other_delta}};
      if (oracle) res["oracle_max_distance"] = *oracle;
      if (intermediates) res["principal_solution"] = solve_json(r.principal_solution, true);
      j["result"] = res;
      emit(ctx, j);
    } else {
      ctx.out << "principal form: alpha = " << fmt(r.principal.alpha) << ", beta = " << fmt(r.principal.beta)
              << ", gamma = " << fmt(r.principal.gamma) << '\n';
      if (intermediates) solve_text(ctx.out, r.principal_solution, true);
      for (std::size_t i = 0; i < 5; ++i)
        ctx.out << "root " << i << ": " << fmt(r.roots[i]) << "   residual " << fmt(r.residuals[i]) << '\n';
      if (oracle) ctx.out << "oracle max distance: " << fmt(*oracle) << '\n';
    }
    return ExitCode::ok;
  } catch (const Error& e) {
    return report_error(ctx, "solve-general", e);
  }
}

inline ExitCode cmd_check_invariants(Context& ctx, std::uint64_t seed, int points) {
  std::vector<SweepReport> reports;
  try {
    reports = run_sweeps(seed, points, ctx.tol);
  } catch (const Error& e) {
    return report_error(ctx, "check-invariants", e);
  }
  bool all = true;
  for (const auto& r : reports) all = all && r.ok();
  if (ctx.format == "json") {
    json j = envelope("check-invariants");
    j["seed"] = seed;
    j["points"] = points;
    json suites = json::array();
    for (const auto& r : reports)
      suites.push_back({{"name", r.name},
                        {"points", r.points},
                        {"passed", r.passed},
                        {"failed", r.points - r.passed},
                        {"worst", r.worst},
                        {"threshold", r.threshold},
                        {"ok", r.ok()}});
    j["suites"] = suites;
    j["all_passed"] = all;
    if (!all) j["status"] = "fail";
    emit(ctx, j);
  } else {
    for (const auto& r : reports)
      ctx.out << std::left << std::setw(28) << r.name << r.passed << "/" << r.points << "  worst " << fmt(r.worst)
              << "  (threshold " << fmt(r.threshold) << ")" << (r.ok() ? "" : "  FAIL") << '\n';
    ctx.out << (all ? "all sweeps passed" : "some sweeps failed") << '\n';
  }
  return all ? ExitCode::ok : ExitCode::math_failure;
}

inline ExitCode cmd_eval_2f1(Context& ctx, const HypParams& p, Complex z) {
  try {
    const Strategy s = select_strategy(p, z);
    const Complex v = gauss_2f1(p, z, s, ctx.tol);
    if (ctx.format == "json") {
      json j = envelope("eval-2f1");
      j["input"] = {{"a", to_json(p.a)}, {"b", to_json(p.b)}, {"c", to_json(p.c)}, {"z", to_json(z)}};
      j["result"] = {{"value", to_json(v)}, {"strategy", std::string(to_string(s))}};
      emit(ctx, j);
    } else {
      ctx.out << "2F1 = " << fmt(v) << "   (" << to_string(s) << ")\n";
    }
    return ExitCode::ok;
  } catch (const Error& e) {
    return report_error(ctx, "eval-2f1", e);
  }
}

inline ExitCode cmd_example(Context& ctx) {
  SolveResult r;
  try {
    r = solve_principal(worked_example, ctx.tol);
  } catch (const Error& e) {
    return report_error(ctx, "example", e);
  }
  const auto rows = example_rows(r);
  bool all = true;
  for (const auto& row : rows) all = all && std::abs(row.computed - row.published) <= example_tolerance;
  if (ctx.format == "json") {
    json j = envelope("example");
    j["input"] = {{"alpha", to_json(worked_example.alpha)},
                  {"beta", to_json(worked_example.beta)},
                  {"gamma", to_json(worked_example.gamma)}};
    j["tolerance"] = example_tolerance;
    json arr = json::array();
    for (const auto& row : rows) {
      const double d = std::abs(row.computed - row.published);
      arr.push_back({{"name", row.name},
                     {"computed", to_json(row.computed)},
                     {"published", to_json(row.published)},
                     {"abs_error", d},
                     {"match", d <= example_tolerance}});
    }
    j["rows"] = arr;
    j["all_match"] = all;
    j["result"] = solve_json(r, false);
    if (!all) j["status"] = "fail";
    emit(ctx, j);
  } else {
    ctx.out << std::left << std::setw(5) << "name" << std::setw(34) << "computed" << std::setw(28) << "published"
            << "abs error\n";
    for (const auto& row : rows) {
      const double d = std::abs(row.computed - row.published);
      ctx.out << std::setw(5) << row.name << std::setw(34) << fmt(row.computed) << std::setw(28)
              << fmt(row.published) << fmt(d) << (d <= example_tolerance ? "" : "  MISMATCH") << '\n';
    }
    ctx.out << (all ? "all published values reproduced" : "mismatch against published values") << '\n';
  }
  return all ? ExitCode::ok : ExitCode::math_failure;
}

// --- dispatch -------------------------------------------------------------------

using EnvLookup = std::function<const char*(const char*)>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Complex literal(const std::string& flag, const std::string& text) {
  try {
    return parse_complex(text);
  } catch (const ParseError& e) {
    throw UsageError("--" + flag + ": " + e.what());
  }
}

/// Runs the tool on argv-style arguments (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const EnvLookup& getenv = [](const char* name) { return std::getenv(name); }) {
  CLI::App app{"Roots of quintic equations through the icosahedron", "icosolve"};
  app.require_subcommand(1);

  Context ctx{out, err, "json", {}};
  std::optional<double> tol_flag;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--tol", tol_flag, "Residual acceptance threshold (overrides " + std::string(residual_tol_env) + ")");
  };

  std::string alpha, beta, gamma;
  bool intermediates = false, oracle_check = false;
  auto* solve = app.add_subcommand("solve", "Solve y^5 + 5 alpha y^2 + 5 beta y + gamma = 0");
  solve->add_option("--alpha", alpha)->required();
  solve->add_option("--beta", beta)->required();
  solve->add_option("--gamma", gamma)->required();
  solve->add_flag("--intermediates", intermediates, "Include the resolvent chain and branch log");
  solve->add_flag("--oracle-check", oracle_check, "Compare against the Aberth root-finder");
  add_common(solve);

  std::string c4, c3, c2, c1, c0;
  auto* general = app.add_subcommand("solve-general", "Solve x^5 + c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0 = 0");
  general->add_option("--c4", c4)->required();
  general->add_option("--c3", c3)->required();
  general->add_option("--c2", c2)->required();
  general->add_option("--c1", c1)->required();
  general->add_option("--c0", c0)->required();
  general->add_flag("--intermediates", intermediates);
  general->add_flag("--oracle-check", oracle_check);
  add_common(general);

  std::uint64_t seed = 42;
  int points = 1000;
  auto* check = app.add_subcommand("check-invariants", "Randomized identity sweeps");
  check->add_option("--seed", seed, "Sweep seed")->capture_default_str();
  check->add_option("--points", points, "Points per sweep")->check(CLI::Range(1, 1000000))->capture_default_str();
  add_common(check);

  std::string ha, hb, hc, hz;
  auto* f21 = app.add_subcommand("eval-2f1", "Evaluate the Gauss function 2F1(a, b; c; z)");
  f21->add_option("--a", ha)->required();
  f21->add_option("--b", hb)->required();
  f21->add_option("--cc", hc, "Parameter c")->required();
  f21->add_option("--z", hz)->required();
  add_common(f21);

  auto* example = app.add_subcommand("example", "Reproduce the worked example y^5 + 5i y^2 - 12y + (1-i)");
  add_common(example);

  std::vector<std::string> argv_store{"icosolve"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return int(ExitCode::usage);
  }

  try {
    if (const char* env = getenv(residual_tol_env); env && *env) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end == env || *end != '\0') throw UsageError(std::string(residual_tol_env) + " is not a number");
      ctx.tol.residual_tol = v;
    }
    if (tol_flag) ctx.tol.residual_tol = *tol_flag;
    if (!(ctx.tol.residual_tol > 0.0) || !std::isfinite(ctx.tol.residual_tol))
      throw UsageError("residual tolerance must be a positive number");

    if (solve->parsed()) {
      const Complex a = literal("alpha", alpha), b = literal("beta", beta), g = literal("gamma", gamma);
      if (a == Complex{} && b == Complex{} && g == Complex{})
        throw UsageError("the zero quintic y^5 = 0 has nothing to solve");
      return int(cmd_solve(ctx, a, b, g, intermediates, oracle_check));
    }
    if (general->parsed()) {
      const GeneralQuintic g{literal("c4", c4), literal("c3", c3), literal("c2", c2), literal("c1", c1),
                             literal("c0", c0)};
      if (g.c4 == Complex{} && g.c3 == Complex{} && g.c2 == Complex{} && g.c1 == Complex{} && g.c0 == Complex{})
        throw UsageError("the zero quintic x^5 = 0 has nothing to solve");
      return int(cmd_solve_general(ctx, g, intermediates, oracle_check));
    }
    if (check->parsed()) return int(cmd_check_invariants(ctx, seed, points));
    if (f21->parsed()) {
      const HypParams p{literal("a", ha), literal("b", hb), literal("cc", hc)};
      try {
        p.validate();
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      return int(cmd_eval_2f1(ctx, p, literal("z", hz)));
    }
    return int(cmd_example(ctx));
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return int(ExitCode::usage);
  }
}

}  // namespace icosolve::cli

#endif  // ICOSOLVE_TOOLS_CLI_HPP
