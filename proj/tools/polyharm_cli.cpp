// polyharm: enumeration, fitting, generating-function and continuum checks.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error, 3 internal error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "polyharm/acceptance.hpp"
#include "polyharm/counts.hpp"
#include "polyharm/expr_parser.hpp"
#include "polyharm/fit.hpp"
#include "polyharm/genfun.hpp"
#include "polyharm/heat_kernel.hpp"
#include "polyharm/kernel.hpp"
#include "polyharm/laplace.hpp"
#include "polyharm/monte_carlo.hpp"
#include "polyharm/operators.hpp"
#include "polyharm/wedge.hpp"

using namespace polyharm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct ModelArgs {
  std::string model = "simple";
  std::string config;

  StepModel resolve() const { return config.empty() ? StepModel::builtin(model) : StepModel::load(config); }
  bool builtin() const { return config.empty(); }
};

void add_model_flags(CLI::App* cmd, ModelArgs& m) {
  cmd->add_option("--model", m.model, "built-in model: simple, diagonal, tandem")
      ->check(CLI::IsMember({"simple", "diagonal", "tandem"}));
  cmd->add_option("--config", m.config, "model JSON file (overrides --model)")->check(CLI::ExistingFile);
}

Json header(const std::string& command) { return {{"schema", "1"}, {"command", command}}; }

void emit(const Json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw DomainError("cannot write '" + out + "'");
  f << text;
}

Json exact_and_float(const Rational& q) { return {{"exact", to_string(q)}, {"value", to_double(q)}}; }

// ---- enumerate

struct EnumerateArgs {
  ModelArgs model;
  int n = 10;
  std::string out;
  bool zeros = false;
};

int cmd_enumerate(const EnumerateArgs& a) {
  const StepModel m = a.model.resolve();
  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) throw DomainError("cannot write '" + a.out + "'");
  }
  std::ostream& os = a.out.empty() ? std::cout : file;
  os << "n,i,j,count\n";
  long rows = 0;
  count_dp_stream(m, a.n, [&](const CountTable& t) {
    for (int i = 0; i <= t.n(); ++i)
      for (int j = 0; j <= t.n(); ++j) {
        const BigInt& c = t.at(i, j);
        if (c == 0 && !a.zeros) continue;
        os << t.n() << ',' << i << ',' << j << ',' << to_string(c) << '\n';
        ++rows;
      }
  });
  if (!a.out.empty()) {
    Json j = header("enumerate");
    j["model"] = m.name();
    j["n"] = a.n;
    j["rows"] = rows;
    j["out"] = a.out;
    emit(j, "");
  }
  return kExitOk;
}

// ---- polyorder

struct PolyorderArgs {
  ModelArgs model;
  std::string poly;
  std::optional<int> cap;
};

int cmd_polyorder(const PolyorderArgs& a) {
  const StepModel m = a.model.resolve();
  const Poly2 f = parse_poly2(a.poly);
  const std::optional<int> order = polyharmonic_order(m, f, a.cap);
  Json j = header("polyorder");
  j["model"] = m.name();
  j["poly"] = to_string(f, "i", "j");
  j["cap"] = a.cap.value_or(default_order_cap(f));
  j["order"] = order ? Json(*order) : Json(nullptr);
  emit(j, "");
  return kExitOk;
}

// ---- fit

struct FitArgs {
  ModelArgs model;
  std::vector<int> target{0, 0};
  int terms = 4;
  long nmax = 2000;
  std::string out;
  int alpha0 = 3;
  std::string scale = "1";
};

int cmd_fit(const FitArgs& a) {
  if (a.target.size() != 2) throw DomainError("--target expects i,j");
  const int i = a.target[0], j = a.target[1];
  ExpansionFit fit;
  ExpansionSpec spec;
  if (a.model.builtin()) {
    spec = expansion_spec(a.model.model);
    fit = fit_builtin(a.model.model, i, j, a.terms, a.nmax);
  } else {
    // Counts from the dynamic program; the shape is supplied on the command line.
    const StepModel m = a.model.resolve();
    spec.model = m.name();
    spec.gamma = m.gamma();
    spec.alpha0 = a.alpha0;
    spec.scale = parse_rational(a.scale);
    spec.prefactor = 1.0;
    spec.prefactor_label = "1";
    if (i < 0 || j < 0) throw DomainError("target must lie in the quadrant");
    std::vector<Rational> series(static_cast<std::size_t>(a.nmax) + 1);
    count_dp_stream(m, static_cast<int>(a.nmax), [&](const CountTable& t) {
      series[static_cast<std::size_t>(t.n())] = Rational(t.at(i, j));
    });
    auto admissible = [&](long n) { return n >= 0 && n <= a.nmax && series[static_cast<std::size_t>(n)] != 0; };
    auto count = [&](long n) { return series[static_cast<std::size_t>(n)]; };
    const std::vector<long> nodes = default_nodes(admissible, a.terms, a.nmax);
    const std::vector<long> nodes2 = default_nodes(admissible, a.terms, nodes.front() - 1);
    fit = fit_expansion(spec, i, j, count, nodes, nodes2, admissible);
  }
  Json jo = header("fit");
  jo["model"] = fit.model;
  jo["target"] = {i, j};
  jo["terms"] = a.terms;
  jo["nmax"] = a.nmax;
  jo["gamma"] = to_string(spec.gamma);
  jo["alpha0"] = spec.alpha0;
  jo["scale"] = to_string(spec.scale);
  jo["prefactor"] = {{"label", spec.prefactor_label}, {"value", spec.prefactor}};
  jo["nodes"] = fit.nodes;
  Json coeffs = Json::array();
  for (std::size_t p = 0; p < fit.exact.size(); ++p) {
    Json c = {{"p", p}, {"exact_with_prefactor", to_string(fit.exact[p])}, {"value", fit.values[p]}};
    if (a.model.builtin() && p <= 1) {
      const Rational v = expansion_term(a.model.model, static_cast<int>(p))(Rational(i), Rational(j));
      c["closed_form"] = exact_and_float(v);
      c["rel_err"] = std::fabs(fit.values[p] - to_double(v)) / std::fabs(to_double(v));
    }
    if (p < fit.drift.size()) c["window_drift"] = fit.drift[p];
    coeffs.push_back(std::move(c));
  }
  jo["coefficients"] = coeffs;
  jo["second_window"] = {{"nodes", fit.nodes2}, {"values", fit.values2}};
  emit(jo, a.out);
  return kExitOk;
}

// ---- genfun verify

struct GenfunArgs {
  std::string model = "simple";
  std::string suite = "all";
  int order = 15;
  std::string out;
};

struct Suite {
  Json checks = Json::array();
  Json first_failure = nullptr;
  void add(const std::string& name, bool ok, Json extra = Json::object()) {
    Json c = {{"check", name}, {"pass", ok}};
    for (auto& [k, v] : extra.items()) c[k] = v;
    if (!ok && first_failure.is_null()) first_failure = name;
    checks.push_back(std::move(c));
  }
  // Runs fn, recording a thrown library error as a failed check.
  template <class F>
  void guarded(const std::string& name, F&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      add(name, false, {{"error", e.what()}});
    }
  }
};

void kernel_suite(const StepModel& m, Suite& s) {
  const KernelData kd = kernel_data(m);
  const Branches br = branches_x(kd);
  s.add("K(X+, y) = 0", kernel_at(kd, br.plus).is_zero(), {{"K", to_string(kd.kernel)}, {"X+", to_string(br.plus)}});
  s.add("K(X-, y) = 0", kernel_at(kd, br.minus).is_zero(), {{"X-", to_string(br.minus)}});
  if (m.name() == "diagonal") return;
  const OmegaCheck oc = verify_omega_invariance(m);
  s.add("omega(X+) = omega(X-)", oc.invariant, {{"omega", to_string(omega(m), "x")}});
  if (m.name() == "simple") {
    s.add("omega(X+(y)) = -omega(y)", oc.negates.value_or(false));
    const RatFun1 xh = x_plus_h_at_x_plus(m, parse_poly1("t/4"));
    s.add("X+ H(X+, y) = -y/(1-y)^4 with P = t/4", xh == RatFun1(-Poly1::variable(), (Poly1(1) - Poly1::variable()).pow(4)),
          {{"value", to_string(xh)}});
  } else {
    s.add("decoupling identity with F = -x^3/(1-x)^6",
          verify_decoupling_tandem(tandem_decoupling_function()));
  }
}

void harmonic_suite(const StepModel& m, int order, Suite& s) {
  const bool simple = m.name() == "simple";
  const Poly1 p = parse_poly1(simple ? "t/4" : "t/3");
  const Poly2 ref = expansion_term(m.name(), 0);
  s.guarded("harmonic generating function", [&] {
    const GFRat h = harmonic_gf(m, p);
    const GridFunction g = gf_extract_coeffs(h, order, order);
    const Proportionality pr = fit_proportional(g, GridFunction::tabulate(order, order, ref));
    s.add("harmonic_gf coefficients proportional to v0", pr.holds(),
          {{"P", to_string(p)}, {"v0", to_string(ref, "i", "j")}, {"constant", pr.constant ? to_string(*pr.constant) : "none"}});
    s.add("harmonic coefficients satisfy L h = 0", check_harmonic_grid(m, g, order - 1, order - 1).harmonic());
  });
}

void biharmonic_suite(const StepModel& m, int order, Suite& s) {
  struct Case {
    std::string p, q, ref;
  };
  const std::vector<Case> cases =
      m.name() == "simple"
          ? std::vector<Case>{{"t", "0", "(i+1)*j*(j+1)*(j+2)"},
                              {"t", "-2*t^2-5*t/2", "(i+1)*(j+1)*(2*i^2+2*j^2+4*i+4*j+15)"}}
          : std::vector<Case>{{"t", "0", "(j+1)*(i+1)*(i+j+2)*(2*i^3+3*i^2*j+14*i^2+5*i*j+24*i-3*i*j^2-2*j^3-4*j^2+6*j)"},
                              {"-8*t/9", "-8*t^2/3+76*t/27", "(i+1)*(j+1)*(i+j+2)*(3*i^2+3*j^2+3*i*j+9*i+9*j+38)"}};
  for (const auto& c : cases) {
    const std::string label = "P=" + c.p + " Q=" + c.q;
    s.guarded(label, [&] {
      const Poly1 p = parse_poly1(c.p), q = parse_poly1(c.q);
      const GFRat v = m.name() == "simple" ? biharmonic_gf_simple(p, q) : biharmonic_gf_tandem(p, q);
      const GridFunction g = gf_extract_coeffs(v, order + 2, order + 2);
      const GridFunction lg = apply_L_grid(m, g);
      s.add(label + ": L^2 g = 0", apply_L_grid(m, lg) == GridFunction(order, order));
      const Proportionality lp = fit_proportional(lg, gf_extract_coeffs(harmonic_gf(m, p), order + 1, order + 1));
      s.add(label + ": L g proportional to the harmonic array", lp.holds(),
            {{"constant", lp.constant ? to_string(*lp.constant) : "none"}});
      const Poly2 ref = parse_poly2(c.ref);
      const Proportionality rp = fit_proportional(g, GridFunction::tabulate(order + 2, order + 2, ref));
      Json extra = {{"reference", c.ref}, {"constant", rp.constant ? to_string(*rp.constant) : "none"}};
      if (!rp.holds()) extra["first_mismatch"] = {rp.bad_i, rp.bad_j};
      s.add(label + ": g proportional to the reference polynomial", rp.holds(), extra);
    });
  }
}

int cmd_genfun_verify(const GenfunArgs& a) {
  const StepModel m = StepModel::builtin(a.model);
  if (a.order < 2) throw DomainError("--order must be at least 2");
  Suite s;
  const bool all = a.suite == "all";
  if (all || a.suite == "kernel") kernel_suite(m, s);
  if (m.name() != "diagonal") {
    if (all || a.suite == "harmonic") harmonic_suite(m, a.order, s);
    if (all || a.suite == "biharmonic") biharmonic_suite(m, a.order, s);
  } else if (a.suite == "harmonic" || a.suite == "biharmonic") {
    throw DomainError("the diagonal model has no rational invariant; only the kernel suite applies");
  }
  Json j = header("genfun verify");
  j["model"] = a.model;
  j["suite"] = a.suite;
  j["order"] = a.order;
  j["pass"] = s.first_failure.is_null();
  j["first_failure"] = s.first_failure;
  j["checks"] = s.checks;
  emit(j, a.out);
  return s.first_failure.is_null() ? kExitOk : kExitCheckFailed;
}

// ---- continuum

PolarPoint polar(const std::vector<double>& v, const char* flag) {
  if (v.size() != 2) throw DomainError(std::string(flag) + " expects r,theta");
  return {v[0], v[1]};
}

struct HeatArgs {
  double xi = 1.5707963267948966;
  std::vector<double> from{1, 0.7853981633974483}, to{1, 0.7853981633974483};
  double t = 1;
  double eps = 1e-12;
  std::optional<double> cutoff;
  std::string out;
};

int cmd_heatkernel(const HeatArgs& a) {
  const Wedge w(a.xi);
  const PolarPoint x = polar(a.from, "--from"), y = polar(a.to, "--to");
  HeatKernelParams hp;
  hp.eps = a.eps;
  Json j = header("continuum heatkernel");
  j["xi"] = a.xi;
  j["from"] = {x.r, x.theta};
  j["to"] = {y.r, y.theta};
  j["t"] = a.t;
  j["eps"] = a.eps;
  const double value = heat_kernel(w, x, y, a.t, hp);
  j["value"] = value;
  if (a.cutoff) {
    const double e = heat_kernel_expansion(w, x, y, a.t, *a.cutoff);
    j["expansion"] = {{"cutoff", *a.cutoff}, {"value", e}, {"difference", value - e}};
  }
  emit(j, a.out);
  return kExitOk;
}

struct LaplaceArgs {
  double s11 = 1, s12 = 0, s22 = 1;
  int pdeg = 2;
  double tol = 1e-10;
  double mu1 = 1;
  std::string out;
};

int cmd_laplace_verify(const LaplaceArgs& a) {
  if (a.pdeg < 1 || a.pdeg > 12) throw DomainError("--pdeg must lie in [1, 12]");
  const CovMatrix cov(a.s11, a.s12, a.s22);
  // P = t + t^2/2 + ... + t^d/d, Q = t^{d+1} - t: generic enough to touch every coefficient.
  Poly1 p, q = Poly1::monomial(Rational(1), a.pdeg + 1) - Poly1::variable();
  for (int k = 1; k <= a.pdeg; ++k) p += Poly1::monomial(Rational(1, k), k);
  const std::vector<Complex> xs = {0.5, 1.0, 2.0, Complex(1.0, 0.3), Complex(0.7, -0.2)};
  const FunctionalResiduals r = verify_functional_eqs(cov, p, q, xs);
  const double mu2 = mu2_from_mu1(cov, a.mu1);
  const double d1 = degree1_residual(cov, a.mu1, mu2, xs);
  const BmRoots roots = bm_roots(cov);
  const bool ok = r.h_equation < a.tol && r.v_equation < a.tol && r.boundary < a.tol && d1 < a.tol;
  Json j = header("continuum laplace-verify");
  j["covariance"] = {a.s11, a.s12, a.s22};
  j["theta"] = roots.theta;
  j["P"] = to_string(p);
  j["Q"] = to_string(q);
  j["tolerance"] = a.tol;
  j["residuals"] = {{"h_equation", r.h_equation}, {"v_equation", r.v_equation}, {"boundary", r.boundary}};
  j["degree1"] = {{"mu1", a.mu1}, {"mu2", mu2}, {"residual", d1}};
  j["pass"] = ok;
  emit(j, a.out);
  return ok ? kExitOk : kExitCheckFailed;
}

struct SurvivalArgs {
  double xi = 1.5707963267948966;
  std::vector<double> from{1.4142135623730951, 0.7853981633974483};
  double t = 1;
  McOptions mc;
  std::string out;
};

int cmd_survival(const SurvivalArgs& a) {
  const Wedge w(a.xi);
  const PolarPoint x = polar(a.from, "--from");
  const McResult r = mc_survival(w, x, a.t, a.mc);
  const double q = survival_quadrature(w, x, a.t);
  const bool ok = std::fabs(r.estimate - q) <= 3 * r.std_error;
  Json j = header("continuum survival");
  j["xi"] = a.xi;
  j["from"] = {x.r, x.theta};
  j["t"] = a.t;
  j["paths"] = r.paths;
  j["steps"] = r.steps;
  j["seed"] = a.mc.seed;
  j["estimate"] = r.estimate;
  j["std_error"] = r.std_error;
  j["quadrature"] = q;
  j["pass"] = ok;
  emit(j, a.out);
  return ok ? kExitOk : kExitCheckFailed;
}

// ---- report-all

struct ReportArgs {
  AcceptanceOptions opts;
  std::string out;
};

int cmd_report_all(const ReportArgs& a) {
  const std::vector<CriterionResult> results = run_acceptance(a.opts);
  const Json j = acceptance_to_json(results);
  emit(j, a.out);
  for (const auto& r : results)
    std::cerr << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << "  " << r.title << "\n";
  return j["pass"].get<bool>() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polyharmonic functions for quarter-plane walks and cones"};
  app.require_subcommand(1);
  int status = kExitOk;

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "count excursions by dynamic programming, CSV rows n,i,j,count");
  add_model_flags(en, ea.model);
  en->add_option("--n", ea.n, "maximal length")->check(CLI::Range(0, 2000));
  en->add_option("--out", ea.out, "CSV output file (default stdout)");
  en->add_flag("--zeros", ea.zeros, "also emit zero counts");
  en->callback([&] { status = cmd_enumerate(ea); });

  PolyorderArgs pa;
  auto* po = app.add_subcommand("polyorder", "smallest p with L^p f = 0");
  add_model_flags(po, pa.model);
  po->add_option("--poly", pa.poly, "polynomial in i and j")->required();
  po->add_option("--cap", pa.cap, "largest order tried");
  po->callback([&] { status = cmd_polyorder(pa); });

  FitArgs fa;
  auto* fi = app.add_subcommand("fit", "fit the asymptotic expansion of q(i,j;n)");
  add_model_flags(fi, fa.model);
  fi->add_option("--target", fa.target, "i,j")->delimiter(',')->expected(2);
  fi->add_option("--terms", fa.terms, "number of fitted terms")->check(CLI::Range(1, 20));
  fi->add_option("--nmax", fa.nmax, "largest node")->check(CLI::PositiveNumber);
  fi->add_option("--alpha0", fa.alpha0, "leading exponent (config models only)");
  fi->add_option("--scale", fa.scale, "expansion variable N = n/scale (config models only)");
  fi->add_option("--out", fa.out, "JSON output file (default stdout)");
  fi->callback([&] { status = cmd_fit(fa); });

  GenfunArgs ga;
  auto* gf = app.add_subcommand("genfun", "generating-function constructions");
  gf->require_subcommand(1);
  auto* gv = gf->add_subcommand("verify", "verify kernel-method identities and coefficient arrays");
  gv->add_option("--model", ga.model)->check(CLI::IsMember({"simple", "diagonal", "tandem"}));
  gv->add_option("--suite", ga.suite)->check(CLI::IsMember({"all", "kernel", "harmonic", "biharmonic"}));
  gv->add_option("--order", ga.order, "coefficient box [0, order]^2")->check(CLI::Range(2, 60));
  gv->add_option("--out", ga.out);
  gv->callback([&] { status = cmd_genfun_verify(ga); });

  auto* co = app.add_subcommand("continuum", "Brownian motion in cones");
  co->require_subcommand(1);
  HeatArgs ha;
  auto* hk = co->add_subcommand("heatkernel", "heat kernel of the killed Brownian motion");
  hk->add_option("--xi", ha.xi, "opening angle")->check(CLI::Range(1e-6, 2 * 3.141592653589793));
  hk->add_option("--from", ha.from, "r,theta")->delimiter(',')->expected(2);
  hk->add_option("--to", ha.to, "r,theta")->delimiter(',')->expected(2);
  hk->add_option("--t", ha.t)->check(CLI::PositiveNumber);
  hk->add_option("--eps", ha.eps, "series truncation tolerance")->check(CLI::PositiveNumber);
  hk->add_option("--cutoff", ha.cutoff, "also evaluate the small-exponent expansion up to this exponent");
  hk->add_option("--out", ha.out);
  hk->callback([&] { status = cmd_heatkernel(ha); });

  LaplaceArgs la;
  auto* lv = co->add_subcommand("laplace-verify", "functional-equation residuals of the Laplace transforms");
  lv->add_option("--s11", la.s11);
  lv->add_option("--s12", la.s12);
  lv->add_option("--s22", la.s22);
  lv->add_option("--pdeg", la.pdeg, "degree of P");
  lv->add_option("--tol", la.tol)->check(CLI::PositiveNumber);
  lv->add_option("--mu1", la.mu1, "free scale of the degree-1 example");
  lv->add_option("--out", la.out);
  lv->callback([&] { status = cmd_laplace_verify(la); });

  SurvivalArgs sa;
  auto* sv = co->add_subcommand("survival", "Monte Carlo survival probability against quadrature");
  sv->add_option("--xi", sa.xi)->check(CLI::Range(1e-6, 3.141592653589793));
  sv->add_option("--from", sa.from, "r,theta")->delimiter(',')->expected(2);
  sv->add_option("--t", sa.t)->check(CLI::PositiveNumber);
  sv->add_option("--paths", sa.mc.paths)->check(CLI::Range(2L, 100000000L));
  sv->add_option("--dt", sa.mc.dt)->check(CLI::PositiveNumber);
  sv->add_option("--seed", sa.mc.seed);
  sv->add_option("--threads", sa.mc.threads);
  sv->add_option("--out", sa.out);
  sv->callback([&] { status = cmd_survival(sa); });

  ReportArgs ra;
  auto* rp = app.add_subcommand("report-all", "run every acceptance check, JSON summary");
  rp->add_option("--paths", ra.opts.mc_paths, "Monte Carlo paths")->check(CLI::Range(2L, 100000000L));
  rp->add_option("--seed", ra.opts.seed);
  rp->add_option("--only", ra.opts.only, "criteria to run")->delimiter(',')->check(CLI::Range(1, 8));
  rp->add_option("--out", ra.out);
  rp->callback([&] { status = cmd_report_all(ra); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return status;
}
