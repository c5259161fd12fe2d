#include "fhankel/selfcheck.hpp"

#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "fhankel/asymptotics.hpp"
#include "fhankel/contour.hpp"
#include "fhankel/duality.hpp"
#include "fhankel/gamma.hpp"
#include "fhankel/hankel_oracle.hpp"
#include "fhankel/linalg.hpp"
#include "fhankel/mc.hpp"
#include "fhankel/orthopoly.hpp"

namespace fhankel {

namespace {

using Check = std::pair<std::string, std::function<bool()>>;

Real log_diff(const LogSigned& a, const LogSigned& b) {
  return abs(a.log_mag() - b.log_mag());
}

std::vector<Real> random_interior_mu(WeightKind kind, long m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Real> mu;
  while (static_cast<long>(mu.size()) < m) {
    double lo = kind == WeightKind::Hermite ? -0.85 : 0.1;
    double hi = 0.85;
    double v = lo + (hi - lo) * unif(rng);
    bool ok = true;
    for (const auto& prev : mu)
      if (abs(prev - Real(v)) < Real(0.05)) ok = false;
    if (ok) mu.emplace_back(v);
  }
  return mu;
}

}  // namespace

bool run_selfcheck(std::ostream& os, long precision_bits) {
  PrecisionContext ctx(precision_bits);
  auto guard = ctx.install();
  std::mt19937_64 rng(20240901u);

  std::vector<Check> checks;

  checks.emplace_back("barnes G recurrence G(z+1) = Gamma(z) G(z)", [&] {
    Real tol = ldexp(Real(1), -ctx.bits / 2);
    for (double zd : {0.5, 1.5, 2.5, 7.3}) {
      Real z(zd);
      Real lhs = barnes_g_log(z + 1, ctx).log_mag();
      Real rhs = log_gamma(z, ctx) + barnes_g_log(z, ctx).log_mag();
      if (abs(lhs - rhs) > tol) return false;
    }
    return true;
  });

  checks.emplace_back("barnes G at integers equals sum of log factorials", [&] {
    Real acc(0);
    for (long n = 3; n <= 24; ++n) {
      acc += log_factorial(n - 2);
      if (abs(barnes_g_log(Real(n + 1), ctx).log_mag() - acc) > ldexp(Real(1), -ctx.bits + 16))
        return false;
    }
    return true;
  });

  checks.emplace_back("orthopoly derivative stream vs finite differences", [&] {
    for (auto kind : {WeightKind::Hermite, WeightKind::Laguerre}) {
      WeightSpec w(kind, 3, Real(0.5));
      Real mu(kind == WeightKind::Hermite ? 0.3 : 0.4);
      Real h = ldexp(Real(1), -40);
      for (long deg : {5L, 20L}) {
        auto s = orthopoly_eval_derivs(w, deg, mu, 4, ctx);
        auto sp = orthopoly_eval_derivs(w, deg, mu + h, 4, ctx);
        auto sm = orthopoly_eval_derivs(w, deg, mu - h, 4, ctx);
        for (long k = 0; k + 1 <= 4; ++k) {
          Real fd = (sp.values[static_cast<size_t>(k)] - sm.values[static_cast<size_t>(k)]) / (2 * h);
          Real ref = s.values[static_cast<size_t>(k + 1)];
          if (abs(fd - ref) > Real(1e-10) * max(Real(1), abs(ref))) return false;
        }
      }
    }
    return true;
  });

  checks.emplace_back("moment determinant equals product of norms", [&] {
    for (auto kind : {WeightKind::Hermite, WeightKind::Laguerre}) {
      WeightSpec w(kind, 2, Real(1.5));
      MomentTable base = base_moments(w, 12, ctx);
      for (long big_m = 1; big_m <= 6; ++big_m) {
        LogSigned det = hankel_det_log(base, big_m, ctx);
        Real acc(0);
        for (long k = 0; k < big_m; ++k) acc += opnorm_h_log(w, k).log_mag();
        if (det.sign() != 1) return false;
        if (abs(det.log_mag() - acc) > ldexp(max(Real(1), abs(acc)), -ctx.bits / 2)) return false;
      }
    }
    return true;
  });

  checks.emplace_back("saddle identity Im z+ = (pi/2) rho(mu)", [&] {
    for (int rep = 0; rep < 20; ++rep) {
      for (auto kind : {WeightKind::Hermite, WeightKind::Laguerre}) {
        WeightSpec w(kind, 5, Real(0));
        Real mu = random_interior_mu(kind, 1, rng)[0];
        SaddleData sd = saddle_data(w, mu);
        Real gap = abs(sd.z_plus.im - const_pi() / 2 * rho(w, mu));
        if (gap > Real(1e-30)) return false;
        if (sd.a.sign() <= 0) return false;
      }
    }
    return true;
  });

  checks.emplace_back("Selberg ratio vs moment determinant route", [&] {
    for (auto kind : {WeightKind::Hermite, WeightKind::Laguerre}) {
      for (long n = 1; n <= 6; ++n) {
        for (long p = 0; p <= 3; ++p) {
          WeightSpec w(kind, n, Real(0.5));
          SymbolSpec empty(w, {}, {});
          LogSigned hn = h_multiple_integral_log(n, empty, ctx);
          LogSigned hnp = h_multiple_integral_log(n + p, empty, ctx);
          LogSigned ratio = selberg_ratio_log(w, n, p);
          if (log_diff(ratio, hn / hnp) > ldexp(max(Real(1), abs(ratio.log_mag())), -ctx.bits / 2))
            return false;
        }
      }
    }
    return true;
  });

  checks.emplace_back("Selberg partition scaling law in a", [&] {
    for (long p = 1; p <= 4; ++p) {
      Real a(2.37);
      Real lhs = z_selberg_log(p, a).log_mag() - z_selberg_log(p, Real(1)).log_mag();
      Real rhs = -Real(p) * Real(p) / 2 * log(a);
      if (abs(lhs - rhs) > ldexp(max(Real(1), abs(rhs)), -ctx.bits + 16)) return false;
    }
    return true;
  });

  checks.emplace_back("duality equals oracle on the small grid", [&] {
    std::vector<std::vector<Real>> qs = {{Real(1)}, {Real(2)}, {Real(1), Real(1)}};
    for (auto kind : {WeightKind::Hermite, WeightKind::Laguerre}) {
      for (long n : {2L, 5L}) {
        WeightSpec w(kind, n, Real(1.5));
        for (const auto& q : qs) {
          auto mu = random_interior_mu(kind, static_cast<long>(q.size()), rng);
          SymbolSpec spec(w, q, mu);
          LogSigned a = calH_oracle(spec, ctx);
          LogSigned b = calH_duality(spec, ctx);
          if (a.sign() != 1 || b.sign() != 1) return false;
          if (log_diff(a, b) > Real(1e-30)) return false;
        }
      }
    }
    return true;
  });

  checks.emplace_back("Hermite parity and permutation symmetry of the oracle", [&] {
    WeightSpec w(WeightKind::Hermite, 3);
    SymbolSpec spec(w, {Real(1), Real(2)}, {Real(0.3), Real(-0.5)});
    SymbolSpec negated(w, {Real(1), Real(2)}, {Real(-0.3), Real(0.5)});
    SymbolSpec permuted(w, {Real(2), Real(1)}, {Real(-0.5), Real(0.3)});
    LogSigned a = calH_oracle(spec, ctx);
    if (log_diff(a, calH_oracle(negated, ctx)) > ldexp(max(Real(1), abs(a.log_mag())), -ctx.bits / 2))
      return false;
    if (log_diff(a, calH_oracle(permuted, ctx)) > ldexp(max(Real(1), abs(a.log_mag())), -ctx.bits / 2))
      return false;
    return true;
  });

  checks.emplace_back("universality identity residual", [&] {
    std::vector<std::vector<Real>> qs = {{Real(1)}, {Real(2)}, {Real(2), Real(1)}};
    for (auto kind : {WeightKind::Hermite, WeightKind::Laguerre}) {
      for (const auto& q : qs) {
        WeightSpec w(kind, 7, Real(1.5));
        auto mu = random_interior_mu(kind, static_cast<long>(q.size()), rng);
        SymbolSpec spec(w, q, mu);
        if (universality_residual(spec, ctx) > Real(1e-25)) return false;
      }
    }
    return true;
  });

  checks.emplace_back("FF equals the I0-route assembly for natural q", [&] {
    for (auto kind : {WeightKind::Hermite, WeightKind::Laguerre}) {
      for (int rep = 0; rep < 5; ++rep) {
        WeightSpec w(kind, 11, Real(0.5));
        auto mu = random_interior_mu(kind, 1, rng);
        SymbolSpec spec(w, {Real(1)}, mu);
        FFResult ff = ff_log(spec, ctx);
        LogSigned alt = calH_via_I0_log(spec, ctx);
        if (log_diff(ff.log_value, alt) > ldexp(max(Real(1), abs(alt.log_mag())), -ctx.bits / 2))
          return false;
      }
    }
    return true;
  });

  checks.emplace_back("FF N-exponent is exactly sum(q^2 - q)", [&] {
    WeightSpec w1(WeightKind::Hermite, 100), w2(WeightKind::Hermite, 300);
    std::vector<Real> q = {Real(0.5), Real(2)}, mu = {Real(0.2), Real(-0.4)};
    FFResult f1 = ff_log(SymbolSpec(w1, q, mu), ctx);
    FFResult f2 = ff_log(SymbolSpec(w2, q, mu), ctx);
    Real lhs = f2.log_value.log_mag() - f1.log_value.log_mag();
    // omega factors are N-dependent too; compare after removing them
    lhs -= f2.omega_factor - f1.omega_factor;
    Real rhs = f1.n_exponent * (log(Real(300)) - log(Real(100)));
    return abs(lhs - rhs) <= ldexp(max(Real(1), abs(rhs)), -ctx.bits / 2);
  });

  checks.emplace_back("FF convergence law on the reference symbol", [&] {
    WeightSpec base(WeightKind::Hermite, 1);
    Real prev_err(0);
    bool first = true;
    for (long n : {50L, 100L, 200L}) {
      SymbolSpec spec(base.with_N(n), {Real(1)}, {Real(0)});
      LogSigned exact = calH_duality(spec, ctx);
      LogSigned ff = ff_log(spec, ctx).log_value;
      Real err = abs(expm1(exact.log_mag() - ff.log_mag()));
      if (!first) {
        Real ratio = err / prev_err;
        if (ratio < Real(0.3) || ratio > Real(0.7)) return false;
      }
      prev_err = err;
      first = false;
    }
    return true;
  });

  checks.emplace_back("contour closure of the duality formula (Hermite)", [&] {
    WeightSpec w(WeightKind::Hermite, 20);
    SymbolSpec spec(w, {Real(1)}, {Real(0.4)});
    auto contour = default_contour(spec, ctx);
    auto iq = I_quadrature(spec, contour, ctx);
    if (iq.im_over_abs > 1e-8) return false;
    LogSigned via_contour = prop1_assemble(spec, iq, ctx);
    LogSigned exact = calH_duality(spec, ctx);
    return abs(expm1(via_contour.log_mag() - exact.log_mag())) < Real(1e-8);
  });

  checks.emplace_back("contour polynomial representation (both weights)", [&] {
    WeightSpec wh(WeightKind::Hermite, 3);
    SymbolSpec sh(wh, {Real(1)}, {Real(0.2)});
    if (contour_pi_check(wh, 1, Real(0.2), default_contour(sh, ctx), ctx) > Real(1e-10))
      return false;
    WeightSpec wl(WeightKind::Laguerre, 3, Real(0));
    SymbolSpec sl(wl, {Real(1)}, {Real(0.5)});
    if (contour_pi_check(wl, 2, Real(0.5), default_contour(sl, ctx), ctx) > Real(1e-10))
      return false;
    return true;
  });

  checks.emplace_back("MC agreement with the confluent determinant", [&] {
    for (long n : {10L, 50L}) {
      WeightSpec w(WeightKind::Hermite, n);
      SymbolSpec spec(w, {Real(1)}, {Real(0.3)});
      McResult mc = mc_expectation(spec, 20000, 777u);
      double ref = exp(lim_F_log(spec, ctx).log_mag()).to_double();
      if (std::abs(mc.mean - ref) > 3 * mc.stderr_of_mean) return false;
    }
    return true;
  });

  checks.emplace_back("MC determinism in the seed", [&] {
    auto a = sample_gue_spectrum(12, 42u);
    auto b = sample_gue_spectrum(12, 42u);
    return a == b;
  });

  bool all_ok = true;
  for (auto& [name, fn] : checks) {
    bool ok = false;
    std::string note;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    os << (ok ? "[PASS] " : "[FAIL] ") << name << note << '\n';
    all_ok = all_ok && ok;
  }
  return all_ok;
}

}  // namespace fhankel
