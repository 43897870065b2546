// Command-line front end: seeded verification suites, dynamics runs and
// object inspection. Exit codes: 0 all checks pass, 1 check failure or
// runtime abort, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cmr/frobenius.hpp"
#include "cmr/verify.hpp"

namespace {

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

cmr::Potential make_potential(const std::string& name, double a) {
  if (name == "rational") return cmr::Potential::rational();
  if (name == "hyperbolic") return cmr::Potential::hyperbolic(a);
  if (name == "trigonometric") return cmr::Potential::trigonometric(a);
  throw CLI::ValidationError("--potential", "unknown potential '" + name + "'");
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CMR_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "warning: ignoring malformed CMR_SEED\n";
    }
  }
  return 1;
}

void write_out(const nlohmann::ordered_json& j, const std::string& path) {
  if (path.empty()) return;
  std::ofstream f(path);
  f << j.dump(2) << "\n";
}

int run_verify_cmd(int n, const std::string& potential, double a, const std::string& case_,
                   double omega, const std::string& qmode, int samples, std::uint64_t seed,
                   double tol_analytic, double tol_fd, bool exact, const std::string& out) {
  cmr::VerifyOptions o;
  o.n = n;
  o.pot = make_potential(potential, a);
  if (case_ == "I") o.cmode = cmr::CMode::CaseI;
  else if (case_ == "II") o.cmode = cmr::CMode::CaseII;
  else if (case_ == "general") o.cmode = cmr::CMode::GeneralC;
  else throw CLI::ValidationError("--case", "expected I, II or general");
  if (qmode == "zero") o.qmode = cmr::QMode::Zero;
  else if (qmode == "sln") o.qmode = cmr::QMode::SlnProjection;
  else throw CLI::ValidationError("--q-mode", "expected zero or sln");
  o.omega = omega;
  o.samples = samples;
  o.seed = seed;
  o.tol.analytic = tol_analytic;
  o.tol.fd = tol_fd;
  o.exact = exact;

  auto rep = cmr::run_verify(o);
  for (const auto& c : rep.checks) {
    if (c.skipped) {
      std::cout << "  [skip] " << c.name << " (" << c.note << ")\n";
    } else {
      std::cout << (c.pass ? "  [pass] " : "  [FAIL] ") << c.name << "  residual=" << c.residual
                << (c.exact ? " (exact)" : "") << (c.note.empty() ? "" : "  " + c.note) << "\n";
    }
  }
  std::cout << (rep.overall_pass() ? "PASS" : "FAIL") << "\n";
  write_out(cmr::to_json(rep), out);
  return rep.overall_pass() ? 0 : 1;
}

int run_simulate_cmd(int n, const std::string& potential, double a, const std::string& qs,
                     const std::string& ps, std::uint64_t seed, double dt, int steps,
                     const std::string& out) {
  cmr::Potential pot = make_potential(potential, a);
  cmr::PhasePoint x0;
  if (!qs.empty() || !ps.empty()) {
    auto q = parse_list(qs);
    auto p = parse_list(ps);
    if (p.empty()) p.assign(q.size(), 0.0);
    x0 = cmr::PhasePoint(q, p);
  } else {
    cmr::Rng rng(seed);
    x0 = cmr::random_regular_point(n, pot, rng);
  }
  cmr::SimulateOptions o{pot, x0, dt, steps};
  auto rep = cmr::run_simulate(o);
  std::cout << "energy drift (rel):  " << rep.energy_drift_rel << "\n"
            << "momentum drift:      " << rep.momentum_drift << "\n"
            << "spectral drift:      " << rep.spectral_drift << "\n"
            << "eigenvalue drift:    " << rep.eigen_drift << "\n"
            << (rep.pass() ? "PASS" : "FAIL") << "\n";
  write_out(cmr::to_json(rep), out);
  return rep.pass() ? 0 : 1;
}

int run_show_cmd(const std::string& object, int n, const std::string& qs) {
  if (object == "constR") {
    auto s = cmr::constant_R_index_set(n);
    std::cout << "S (" << s.size() << " quadruples):\n";
    for (const auto& [a, b, c, d] : s)
      std::cout << "  (" << a << "," << b << "," << c << "," << d << ")  e_" << a << b
                << " (x) e_" << c << d << " - e_" << c << d << " (x) e_" << a << b << "\n";
    return 0;
  }
  if (object == "phi") {
    if (qs.empty()) throw CLI::ValidationError("--q", "phi requires coordinates");
    auto q = parse_list(qs);
    auto phi = cmr::build_phi(q);
    std::cout << "phi(q):\n";
    for (int i = 0; i < phi.dim(); ++i) {
      std::cout << "  ";
      for (int j = 0; j < phi.dim(); ++j) std::cout << phi(i, j) << "  ";
      std::cout << "\n";
    }
    std::cout << "det phi            = " << cmr::det(phi) << "\n";
    std::cout << "Vandermonde product = " << cmr::vandermonde_det(q) << "\n";
    return 0;
  }
  if (object == "frobenius") {
    auto fc = cmr::frobenius_inverse_check(n);
    std::cout << "dim F_n = " << fc.M.dim() << "\n";
    auto print = [](const char* name, const cmr::QMat& m) {
      std::cout << name << ":\n";
      for (int i = 0; i < m.dim(); ++i) {
        std::cout << "  ";
        for (int j = 0; j < m.dim(); ++j) std::cout << m(i, j).str() << "  ";
        std::cout << "\n";
      }
    };
    print("M", fc.M);
    print("G = Lambda([T_a,T_b])", fc.G);
    std::cout << "invertible: " << (fc.invertible ? "yes" : "NO") << "\n";
    if (fc.invertible)
      std::cout << "kappa = " << fc.kappa.str() << "  (M^-1 = kappa G, residual "
                << fc.residual.str() << ")\n";
    return fc.invertible ? 0 : 1;
  }
  throw CLI::ValidationError("object", "expected constR, phi or frobenius");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suite for the degenerate Calogero-Moser classical r-matrices"};
  app.require_subcommand(1);

  int n = 3;
  std::string potential = "rational";
  double a = 1.0;
  std::string case_ = "I";
  std::string qmode = "zero";
  double omega = 0.0;
  int samples = 20;
  std::uint64_t seed = default_seed();
  double tol_analytic = 1e-9, tol_fd = 1e-6;
  bool exact = true;
  std::string out;

  auto* verify = app.add_subcommand("verify", "run the seeded residual suite");
  verify->add_option("--n", n, "particle count")->check(CLI::Range(2, 10));
  verify->add_option("--potential", potential, "rational|hyperbolic|trigonometric");
  verify->add_option("--a", a, "coupling for hyperbolic/trigonometric");
  verify->add_option("--case", case_, "I|II|general");
  verify->add_option("--q-mode", qmode, "zero|sln");
  verify->add_option("--omega", omega, "gauge constant Omega");
  verify->add_option("--samples", samples, "random phase points")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "RNG seed (flag wins over CMR_SEED)");
  verify->add_option("--tol-analytic", tol_analytic, "tolerance for analytic identities");
  verify->add_option("--tol-fd", tol_fd, "tolerance for finite-difference identities");
  verify->add_flag("--exact,!--no-exact", exact, "run integer/rational-mode checks");
  verify->add_option("--out", out, "write structured report to file");

  std::string qs, ps;
  double dt = 1e-3;
  int steps = 10000;
  auto* simulate = app.add_subcommand("simulate", "integrate the flow and report drifts");
  simulate->add_option("--n", n, "particle count (for seeded initial data)")
      ->check(CLI::Range(1, 10));
  simulate->add_option("--potential", potential, "rational|hyperbolic|trigonometric");
  simulate->add_option("--a", a, "coupling");
  simulate->add_option("--q", qs, "comma-separated coordinates");
  simulate->add_option("--p", ps, "comma-separated momenta");
  simulate->add_option("--seed", seed, "RNG seed for initial data");
  simulate->add_option("--dt", dt, "time step")->check(CLI::PositiveNumber);
  simulate->add_option("--steps", steps, "step count")->check(CLI::PositiveNumber);
  simulate->add_option("--out", out, "write structured report to file");

  std::string object;
  auto* show = app.add_subcommand("show", "print constR, phi or frobenius data");
  show->add_option("object", object, "constR|phi|frobenius")->required();
  show->add_option("--n", n, "dimension")->check(CLI::Range(1, 12));
  show->add_option("--q", qs, "coordinates for phi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed())
      return run_verify_cmd(n, potential, a, case_, omega, qmode, samples, seed, tol_analytic,
                            tol_fd, exact, out);
    if (simulate->parsed())
      return run_simulate_cmd(n, potential, a, qs, ps, seed, dt, steps, out);
    if (show->parsed()) return run_show_cmd(object, n, qs);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "aborted: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
