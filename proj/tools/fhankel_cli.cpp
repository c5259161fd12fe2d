#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>
#include <vector>

#include "fhankel/asymptotics.hpp"
#include "fhankel/contour.hpp"
#include "fhankel/duality.hpp"
#include "fhankel/errors.hpp"
#include "fhankel/hankel_oracle.hpp"
#include "fhankel/mc.hpp"
#include "fhankel/report.hpp"
#include "fhankel/selfcheck.hpp"

namespace {

using namespace fhankel;

struct Options {
  std::string weight = "hermite";
  double alpha = 0.0;
  long N = 1;
  std::string n_list;
  std::string q_list;
  std::string mu_list;
  long bits = 256;
  std::uint64_t seed = 12345;
  long samples = 100000;
  std::string out;
  std::string format = "text";
  bool log10 = false;
};

long default_bits_from_env() {
  if (const char* env = std::getenv("FHANKEL_PRECISION_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 64) return v;
    std::cerr << "warning: ignoring invalid FHANKEL_PRECISION_BITS='" << env << "'\n";
  }
  return 256;
}

void add_common(CLI::App* cmd, Options& o, bool with_mc = false) {
  cmd->add_option("--weight", o.weight, "ensemble weight")
      ->check(CLI::IsMember({"hermite", "laguerre"}));
  cmd->add_option("--alpha", o.alpha, "Laguerre exponent (> -1)");
  cmd->add_option("--N", o.N, "matrix dimension / weight scale");
  cmd->add_option("--q", o.q_list, "comma-separated singularity strengths");
  cmd->add_option("--mu", o.mu_list, "comma-separated singularity locations");
  cmd->add_option("--precision-bits", o.bits, "working precision in bits")->check(CLI::Range(64l, 1l << 20));
  cmd->add_option("--out", o.out, "write CSV to this path");
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "text"}));
  cmd->add_flag("--log10", o.log10, "report base-10 logs instead of natural logs");
  if (with_mc) {
    cmd->add_option("--seed", o.seed, "RNG seed");
    cmd->add_option("--samples", o.samples, "Monte Carlo sample count");
  }
}

WeightSpec make_weight(const Options& o) {
  WeightKind kind = o.weight == "hermite" ? WeightKind::Hermite : WeightKind::Laguerre;
  return WeightSpec(kind, o.N, Real(o.alpha));
}

SymbolSpec make_spec(const Options& o) {
  auto qd = split_list(o.q_list, ',');
  auto mud = split_list(o.mu_list, ',');
  if (qd.empty()) throw std::invalid_argument("--q is required");
  if (qd.size() != mud.size()) throw std::invalid_argument("--q and --mu must have the same length");
  std::vector<Real> q(qd.begin(), qd.end()), mu(mud.begin(), mud.end());
  return SymbolSpec(make_weight(o), std::move(q), std::move(mu));
}

Real display_log(const Options& o, const Real& nat_log) {
  return o.log10 ? nat_log / log(Real(10)) : nat_log;
}

void print_log_and_value(const Options& o, const char* label, const LogSigned& v) {
  int digits = csv_significant_digits(o.bits);
  const char* log_label = o.log10 ? "log10" : "log";
  std::cout << log_label << ' ' << label << " = " << display_log(o, v.log_mag()).to_string(digits)
            << '\n'
            << label << " = " << v.value().to_string(digits) << '\n';
}

int cmd_point_value(const Options& o, const std::string& which) {
  PrecisionContext ctx(o.bits);
  auto guard = ctx.install();
  SymbolSpec spec = make_spec(o);
  if (which == "exact") {
    print_log_and_value(o, "calH", calH_oracle(spec, ctx));
  } else if (which == "duality") {
    print_log_and_value(o, "calH", calH_duality(spec, ctx));
  } else {
    FFResult ff = ff_log(spec, ctx);
    print_log_and_value(o, "calH_ff", ff.log_value);
    int digits = csv_significant_digits(o.bits);
    std::cout << "  N-exponent        = " << ff.n_exponent.to_string(digits) << '\n'
              << "  omega factor      = " << display_log(o, ff.omega_factor).to_string(digits) << '\n'
              << "  Barnes-G factor   = " << display_log(o, ff.g_factor).to_string(digits) << '\n'
              << "  Vandermonde factor= " << display_log(o, ff.vandermonde_factor).to_string(digits)
              << '\n'
              << "  rho factor        = " << display_log(o, ff.rho_factor).to_string(digits) << '\n';
  }
  return 0;
}

int cmd_converge(const Options& o) {
  PrecisionContext ctx(o.bits);
  auto n_values_d = split_list(o.n_list, ',');
  if (n_values_d.empty()) throw std::invalid_argument("--N-list is required for converge");
  std::vector<long> n_values;
  for (double d : n_values_d) {
    long n = static_cast<long>(d);
    if (n < 1 || static_cast<double>(n) != d) throw std::invalid_argument("--N-list entries must be positive integers");
    n_values.push_back(n);
  }
  std::sort(n_values.begin(), n_values.end());

  auto qd = split_list(o.q_list, ',');
  auto mud = split_list(o.mu_list, ',');
  if (qd.empty() || qd.size() != mud.size())
    throw std::invalid_argument("--q and --mu must be nonempty and of equal length");

  std::vector<ConvergenceRecord> rows(n_values.size());
  std::vector<std::thread> pool;
  unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(n_values.size()));
  if (workers < 1) workers = 1;
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (;;) {
      size_t idx = next.fetch_add(1);
      if (idx >= n_values.size()) return;
      Options local = o;
      local.N = n_values[idx];
      SymbolSpec spec = make_spec(local);
      auto guard = ctx.install();
      LogSigned exact = calH_duality(spec, ctx);
      LogSigned ff = ff_log(spec, ctx).log_value;
      ConvergenceRecord r;
      r.weight_kind = local.weight;
      r.alpha = local.alpha;
      r.m = spec.m();
      r.q = qd;
      r.mu = mud;
      r.N = local.N;
      r.precision_bits = local.bits;
      r.log_calH_exact = exact.log_mag();
      r.log_calH_ff = ff.log_mag();
      r.rel_error = abs(expm1(exact.log_mag() - ff.log_mag()));
      rows[idx] = r;
    }
  };
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();

  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw std::invalid_argument("cannot open --out path '" + o.out + "'");
    write_convergence_csv(f, rows);
    std::cout << "wrote " << rows.size() << " records to " << o.out << '\n';
  } else if (o.format == "csv") {
    write_convergence_csv(std::cout, rows);
  } else {
    std::cout << "N, log calH (exact), log calH (asymptotic), rel error\n";
    for (const auto& r : rows) {
      Real le = display_log(o, r.log_calH_exact), lf = display_log(o, r.log_calH_ff);
      std::cout << r.N << ", " << le.to_string(24) << ", " << lf.to_string(24) << ", "
                << r.rel_error.to_string(6) << '\n';
    }
  }
  return 0;
}

int cmd_contour_check(const Options& o) {
  PrecisionContext ctx(o.bits);
  auto guard = ctx.install();
  SymbolSpec spec = make_spec(o);
  ContourSpec contour = default_contour(spec, ctx);
  auto iq = I_quadrature(spec, contour, ctx);
  LogSigned via_contour = prop1_assemble(spec, iq, ctx);
  LogSigned exact = calH_duality(spec, ctx);
  Real rel = abs(expm1(via_contour.log_mag() - exact.log_mag()));
  std::cout << "contour nodes per dimension: " << iq.nodes_used << '\n'
            << "imaginary residual (relative): " << iq.im_over_abs << '\n'
            << "duality vs contour relative difference: " << rel.to_string(6) << '\n';
  Real pi_err = contour_pi_check(spec.weight, 1, spec.mu.at(0), contour, ctx);
  std::cout << "polynomial contour representation error: " << pi_err.to_string(6) << '\n';
  bool ok = rel < Real(1e-8) && iq.im_over_abs < 1e-8 && pi_err < Real(1e-10);
  std::cout << (ok ? "contour-check PASS\n" : "contour-check FAIL\n");
  if (!ok) throw QuadratureError("contour-check tolerances exceeded");
  return 0;
}

int cmd_mc(const Options& o) {
  PrecisionContext ctx(o.bits);
  auto guard = ctx.install();
  SymbolSpec spec = make_spec(o);
  McResult r = mc_expectation(spec, o.samples, o.seed);
  std::cout << "samples = " << r.samples << ", seed = " << o.seed << '\n'
            << "mean    = " << r.mean << '\n'
            << "stderr  = " << r.stderr_of_mean << '\n';
  if (spec.q_is_natural()) {
    double ref = exp(lim_F_log(spec, ctx).log_mag()).to_double();
    double z = r.stderr_of_mean > 0 ? (r.mean - ref) / r.stderr_of_mean : 0.0;
    std::cout << "exact   = " << ref << '\n' << "z-score = " << z << '\n';
  }
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw std::invalid_argument("cannot open --out path '" + o.out + "'");
    f << "weight_kind,alpha,m,q,mu,N,precision_bits,samples,seed,mean,stderr\n"
      << o.weight << ',' << format_double(o.alpha) << ',' << spec.m() << ','
      << join_semicolon(split_list(o.q_list, ',')) << ','
      << join_semicolon(split_list(o.mu_list, ',')) << ',' << o.N << ',' << o.bits << ','
      << r.samples << ',' << o.seed << ',' << format_double(r.mean) << ','
      << format_double(r.stderr_of_mean) << '\n';
  }
  return 0;
}

int cmd_density_matrix(const Options& o) {
  PrecisionContext ctx(o.bits);
  auto guard = ctx.install();
  auto mud = split_list(o.mu_list, ',');
  if (mud.size() != 2) throw std::invalid_argument("density-matrix needs --mu x,y with two entries");
  LogSigned v = boson_rho1_leading(o.N, Real(mud[0]), Real(mud[1]), ctx);
  print_log_and_value(o, "rho1", v);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hankel-determinant ratios for Fisher-Hartwig symbols over Hermite and Laguerre weights"};
  app.require_subcommand(1);

  Options o;
  o.bits = default_bits_from_env();

  auto* exact = app.add_subcommand("exact", "finite-N value via the moment-determinant oracle");
  add_common(exact, o);
  auto* duality = app.add_subcommand("duality", "finite-N value via the confluent determinant");
  add_common(duality, o);
  auto* ff = app.add_subcommand("ff", "leading-order asymptotic value");
  add_common(ff, o);
  auto* converge = app.add_subcommand("converge", "exact-vs-asymptotic study over an N grid");
  add_common(converge, o);
  converge->add_option("--N-list", o.n_list, "comma-separated N values");
  auto* contour = app.add_subcommand("contour-check", "dual contour integral consistency check");
  add_common(contour, o);
  auto* mc = app.add_subcommand("mc", "Monte Carlo cross-check (Hermite)");
  add_common(mc, o, true);
  auto* density = app.add_subcommand("density-matrix", "leading-order boson one-body density matrix");
  add_common(density, o);
  auto* selfcheck = app.add_subcommand("selfcheck", "run the full invariant suite");
  selfcheck->add_option("--precision-bits", o.bits, "working precision in bits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (exact->parsed()) return cmd_point_value(o, "exact");
    if (duality->parsed()) return cmd_point_value(o, "duality");
    if (ff->parsed()) return cmd_point_value(o, "ff");
    if (converge->parsed()) return cmd_converge(o);
    if (contour->parsed()) return cmd_contour_check(o);
    if (mc->parsed()) return cmd_mc(o);
    if (density->parsed()) return cmd_density_matrix(o);
    if (selfcheck->parsed()) return fhankel::run_selfcheck(std::cout, o.bits) ? 0 : 1;
  } catch (const fhankel::ConditioningError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 1;
  } catch (const fhankel::QuadratureError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "argument error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "argument error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
