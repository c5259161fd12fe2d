#include "fhankel/contour.hpp"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

#include "fhankel/duality.hpp"
#include "fhankel/errors.hpp"
#include "fhankel/gamma.hpp"
#include "fhankel/orthopoly.hpp"
#include "fhankel/quadrature.hpp"

namespace fhankel {

namespace {

constexpr int kMaxVars = 4;
constexpr int kMaxNodesGl = 8192;
constexpr int kMaxNodesCircle = 65536;
// internal stability gate, stricter than the 1e-8 acceptance gates
const double kStabilityTol = 1e-10;

int delta_of(WeightKind kind) { return kind == WeightKind::Hermite ? 1 : -1; }

// g_{q_i}(z): 1 for Hermite, i (z+2)^alpha / z^{2 q_i} for Laguerre.
Cplx g_factor(const WeightSpec& w, long two_q, const Cplx& z) {
  if (w.kind == WeightKind::Hermite) return Cplx(Real(1));
  Cplx v = Cplx::i() / pow(z, two_q);
  if (!w.alpha.is_zero()) v *= pow(z + Cplx(Real(2)), w.alpha);
  return v;
}

// Laurent polynomial in up to kMaxVars variables with integer coefficients.
struct LaurentPoly {
  std::map<std::array<int, kMaxVars>, long long> terms;

  static LaurentPoly one() {
    LaurentPoly p;
    p.terms[{0, 0, 0, 0}] = 1;
    return p;
  }

  // multiply by (ca z_va^ea + cb z_vb^eb)
  void mul_binomial(int va, int ea, long long ca, int vb, int eb, long long cb) {
    std::map<std::array<int, kMaxVars>, long long> out;
    for (const auto& [e, c] : terms) {
      auto e1 = e;
      e1[static_cast<size_t>(va)] += ea;
      out[e1] += c * ca;
      auto e2 = e;
      e2[static_cast<size_t>(vb)] += eb;
      out[e2] += c * cb;
    }
    for (auto it = out.begin(); it != out.end();)
      it = it->second == 0 ? out.erase(it) : std::next(it);
    terms = std::move(out);
  }
};

// Block structure: variable l belongs to the singularity block(l).
struct BlockLayout {
  std::vector<long> block_of;   // size 2|q|
  std::vector<long> two_q;      // per block
  long nvars = 0;
};

BlockLayout layout_of(const SymbolSpec& spec) {
  BlockLayout lay;
  for (long i = 0; i < spec.m(); ++i) {
    long tq = 2 * spec.q[static_cast<size_t>(i)].to_long();
    lay.two_q.push_back(tq);
    for (long l = 0; l < tq; ++l) lay.block_of.push_back(i);
    lay.nvars += tq;
  }
  return lay;
}

// Delta^2 within each block and the cross-block (z^delta - z^delta)
// factors, fully expanded.
LaurentPoly coupling_poly(const BlockLayout& lay, int delta) {
  LaurentPoly p = LaurentPoly::one();
  long start = 0;
  std::vector<long> starts;
  for (size_t i = 0; i < lay.two_q.size(); ++i) {
    starts.push_back(start);
    for (long a = start; a < start + lay.two_q[i]; ++a)
      for (long b = a + 1; b < start + lay.two_q[i]; ++b)
        for (int rep = 0; rep < 2; ++rep)
          p.mul_binomial(static_cast<int>(b), 1, 1, static_cast<int>(a), 1, -1);
    start += lay.two_q[i];
  }
  for (size_t j = 0; j < lay.two_q.size(); ++j)
    for (size_t k = j + 1; k < lay.two_q.size(); ++k)
      for (long a = starts[j]; a < starts[j] + lay.two_q[j]; ++a)
        for (long b = starts[k]; b < starts[k] + lay.two_q[k]; ++b)
          p.mul_binomial(static_cast<int>(b), delta, 1, static_cast<int>(a), delta, -1);
  return p;
}

// One-dimensional contour moments M_i(p) = int e^{-N S(z, mu_i)}
// g_{q_i}(z) z^p dz for all p in [p_lo, p_hi].
std::map<long, Cplx> block_moments(const SymbolSpec& spec, long block, const ContourSpec& contour,
                                   int nodes, long p_lo, long p_hi) {
  const WeightSpec& w = spec.weight;
  const Real& mu = spec.mu[static_cast<size_t>(block)];
  const long two_q = 2 * spec.q[static_cast<size_t>(block)].to_long();
  const Real n_scale(w.N);

  std::map<long, Cplx> moments;
  for (long p = p_lo; p <= p_hi; ++p) moments[p] = Cplx();

  auto accumulate = [&](const Cplx& z, const Cplx& dz_weight) {
    Cplx base = dz_weight * exp(Cplx(-n_scale) * action_S(w, z, mu)) * g_factor(w, two_q, z);
    Cplx zp = pow(z, p_lo);
    for (long p = p_lo; p <= p_hi; ++p) {
      moments[p] += base * zp;
      zp *= z;
    }
  };

  if (contour.kind == ContourSpec::Kind::ImaginaryAxis) {
    auto rule = gauss_legendre(nodes);
    for (int k = 0; k < nodes; ++k) {
      Real t = contour.extent * rule->nodes[static_cast<size_t>(k)];
      Cplx z(Real(0), t);
      Cplx dz(Real(0), contour.extent * rule->weights[static_cast<size_t>(k)]);
      accumulate(z, dz);
    }
  } else {
    Real two_pi = 2 * const_pi();
    Real step = two_pi / Real(nodes);
    for (int k = 0; k < nodes; ++k) {
      Real phi = step * Real(k);
      Cplx z(contour.extent * cos(phi), contour.extent * sin(phi));
      // dz = i z dphi
      Cplx dz = Cplx::i() * z * Cplx(step);
      accumulate(z, dz);
    }
  }
  return moments;
}

Cplx assemble_I(const SymbolSpec& spec, const ContourSpec& contour, int nodes) {
  BlockLayout lay = layout_of(spec);
  LaurentPoly poly = coupling_poly(lay, delta_of(spec.weight.kind));

  // exponent ranges needed per block
  std::vector<long> p_lo(lay.two_q.size(), 0), p_hi(lay.two_q.size(), 0);
  for (const auto& [e, c] : poly.terms) {
    for (long l = 0; l < lay.nvars; ++l) {
      long b = lay.block_of[static_cast<size_t>(l)];
      p_lo[static_cast<size_t>(b)] = std::min(p_lo[static_cast<size_t>(b)], (long)e[static_cast<size_t>(l)]);
      p_hi[static_cast<size_t>(b)] = std::max(p_hi[static_cast<size_t>(b)], (long)e[static_cast<size_t>(l)]);
    }
  }
  std::vector<std::map<long, Cplx>> moments;
  for (size_t b = 0; b < lay.two_q.size(); ++b)
    moments.push_back(block_moments(spec, static_cast<long>(b), contour, nodes, p_lo[b], p_hi[b]));

  Cplx total;
  for (const auto& [e, c] : poly.terms) {
    Cplx term{Real(static_cast<long>(c))};
    for (long l = 0; l < lay.nvars; ++l)
      term *= moments[static_cast<size_t>(lay.block_of[static_cast<size_t>(l)])]
                  .at(e[static_cast<size_t>(l)]);
    total += term;
  }
  return total;
}

}  // namespace

ContourSpec default_contour(const SymbolSpec& spec, const PrecisionContext& ctx) {
  ContourSpec c;
  if (spec.weight.kind == WeightKind::Hermite) {
    c.kind = ContourSpec::Kind::ImaginaryAxis;
    // truncate where the integrand has decayed below 2^-(bits+16) relative
    // to the saddle scale exp(-N/2)
    double budget = (static_cast<double>(ctx.bits) + 16) * 0.6931471805599453;
    double n = static_cast<double>(spec.weight.N);
    double t = 2.0;
    while (n * (t * t / 2 - std::log(t) - 0.5) < budget) t *= 1.25;
    c.extent = Real(t);
    c.nodes = 128;
  } else {
    c.kind = ContourSpec::Kind::Circle;
    c.extent = Real(1);
    c.nodes = 256;
  }
  return c;
}

Cplx dual_integrand(const SymbolSpec& spec, const std::vector<Cplx>& z) {
  BlockLayout lay = layout_of(spec);
  if (static_cast<long>(z.size()) != lay.nvars)
    throw std::invalid_argument("dual_integrand: expected 2|q| points");
  const WeightSpec& w = spec.weight;
  int delta = delta_of(w.kind);

  Cplx v(Real(1));
  long l = 0;
  std::vector<long> starts;
  for (size_t i = 0; i < lay.two_q.size(); ++i) {
    starts.push_back(l);
    const Real& mu = spec.mu[i];
    for (long a = 0; a < lay.two_q[i]; ++a, ++l) {
      const Cplx& zl = z[static_cast<size_t>(l)];
      v *= exp(Cplx(Real(-w.N)) * action_S(w, zl, mu)) * g_factor(w, lay.two_q[i], zl);
    }
    long s = starts[i];
    for (long a = s; a < s + lay.two_q[i]; ++a)
      for (long b = a + 1; b < s + lay.two_q[i]; ++b) {
        Cplx d = z[static_cast<size_t>(b)] - z[static_cast<size_t>(a)];
        v *= d * d;
      }
  }
  for (size_t j = 0; j < lay.two_q.size(); ++j)
    for (size_t k = j + 1; k < lay.two_q.size(); ++k)
      for (long a = starts[j]; a < starts[j] + lay.two_q[j]; ++a)
        for (long b = starts[k]; b < starts[k] + lay.two_q[k]; ++b)
          v *= pow(z[static_cast<size_t>(b)], static_cast<long>(delta)) -
               pow(z[static_cast<size_t>(a)], static_cast<long>(delta));
  return v;
}

IQuadResult I_quadrature(const SymbolSpec& spec, const ContourSpec& contour,
                         const PrecisionContext& ctx) {
  if (!spec.q_is_natural()) throw std::domain_error("I_quadrature: requires natural q");
  if (spec.big_k() > kMaxVars)
    throw std::domain_error("I_quadrature: 2|q| > 4 exceeds the tensor-quadrature bound");
  if (spec.big_k() == 0) return {LogSigned::one(), 0.0, 0};
  ScopedPrecision guard(ctx.bits + 64);

  const int cap =
      contour.kind == ContourSpec::Kind::ImaginaryAxis ? kMaxNodesGl : kMaxNodesCircle;
  int nodes = std::max(contour.nodes, 16);
  Cplx prev = assemble_I(spec, contour, nodes);
  while (nodes * 2 <= cap) {
    nodes *= 2;
    Cplx cur = assemble_I(spec, contour, nodes);
    Real scale = abs(cur);
    if (scale.is_zero())
      throw QuadratureError("I_quadrature: integral evaluated to zero");
    Real change = abs(cur - prev) / scale;
    if (change < Real(kStabilityTol)) {
      IQuadResult r;
      r.value = LogSigned::from_value(cur.re);
      r.im_over_abs = (abs(cur.im) / scale).to_double();
      r.nodes_used = nodes;
      return r;
    }
    prev = cur;
  }
  throw QuadratureError("I_quadrature: node doubling did not stabilize below tolerance");
}

LogSigned prop1_assemble(const SymbolSpec& spec, const IQuadResult& i_value,
                         const PrecisionContext& ctx) {
  if (!spec.q_is_natural()) throw std::domain_error("prop1_assemble: requires natural q");
  auto guard = ctx.install();
  if (spec.big_k() == 0) return LogSigned::one();

  LogSigned acc = h_prefactor_log(spec, ctx);
  for (long i = 0; i < spec.m(); ++i) {
    const Real& qi = spec.q[static_cast<size_t>(i)];
    acc /= LogSigned::from_log(1, barnes_g_log_raw(2 * qi + 1) + lngamma(2 * qi + 1));
    acc *= zeta_log(spec.weight, spec.mu[static_cast<size_t>(i)]).pow(2 * qi);
  }
  for (long j = 0; j < spec.m(); ++j)
    for (long k = j + 1; k < spec.m(); ++k) {
      Real diff = abs(spec.mu[static_cast<size_t>(k)] - spec.mu[static_cast<size_t>(j)]);
      Real e = Real(-4) * spec.q[static_cast<size_t>(j)] * spec.q[static_cast<size_t>(k)];
      acc *= LogSigned::from_log(1, e * log(diff));
    }
  acc *= i_value.value;
  if (acc.sign() != 1)
    throw QuadratureError("prop1_assemble: contour value has the wrong sign");
  return acc;
}

Real contour_pi_check(const WeightSpec& w, long j, const Real& mu, const ContourSpec& contour,
                      const PrecisionContext& ctx) {
  if (j < 1) throw std::invalid_argument("contour_pi_check: j >= 1");
  ScopedPrecision guard(ctx.bits + 64);
  const long deg = w.N + j - 1;
  const Real n_scale(w.N);

  auto integral_at = [&](int nodes) {
    Cplx acc;
    if (contour.kind == ContourSpec::Kind::ImaginaryAxis) {
      auto rule = gauss_legendre(nodes);
      for (int k = 0; k < nodes; ++k) {
        Real t = contour.extent * rule->nodes[static_cast<size_t>(k)];
        Cplx z(Real(0), t);
        Cplx dz(Real(0), contour.extent * rule->weights[static_cast<size_t>(k)]);
        // e^{-2 N z mu + N z^2 / 2} z^{N+j-1}
        Cplx f = exp(Cplx(Real(-2 * w.N) * mu) * z + Cplx(n_scale / 2) * (z * z)) * pow(z, deg);
        acc += dz * f;
      }
    } else {
      Real two_pi = 2 * const_pi();
      Real step = two_pi / Real(nodes);
      for (int k = 0; k < nodes; ++k) {
        Real phi = step * Real(k);
        Cplx z(contour.extent * cos(phi), contour.extent * sin(phi));
        Cplx dz = Cplx::i() * z * Cplx(step);
        // e^{-2 N z mu} (z+2)^{N+alpha} z^{-(N+1)} (1/z + 1/2)^{j-1}
        Cplx zp2 = z + Cplx(Real(2));
        Cplx f = exp(Cplx(Real(-2 * w.N) * mu) * z) * pow(zp2, w.N);
        if (!w.alpha.is_zero()) f *= pow(zp2, w.alpha);
        f *= pow(z, -(w.N + 1));
        f *= pow(Cplx(Real(1)) / z + Cplx(Real(0.5)), j - 1);
        acc += dz * f;
      }
    }
    return acc;
  };

  const int cap =
      contour.kind == ContourSpec::Kind::ImaginaryAxis ? kMaxNodesGl : kMaxNodesCircle;
  int nodes = std::max(contour.nodes, 16);
  Cplx prev = integral_at(nodes);
  Cplx integral;
  while (true) {
    if (nodes * 2 > cap)
      throw QuadratureError("contour_pi_check: node doubling did not stabilize");
    nodes *= 2;
    integral = integral_at(nodes);
    if (abs(integral - prev) < Real(kStabilityTol) * abs(integral)) break;
    prev = integral;
  }

  Cplx value;
  if (w.kind == WeightKind::Hermite) {
    // c_j = sqrt(2N/pi) / (i 2^{N+j}), plus the zeta prefactor e^{2 N mu^2}
    Real mag = sqrt(Real(2 * w.N) / const_pi()) * exp(Real(2 * w.N) * mu * mu - Real(w.N + j) * const_log2());
    value = Cplx(Real(0), -mag) * integral;
  } else {
    // c_j = (-1)^{N+j-1} (N+j-1)! N^{-(N+j-1)} / (2^{2N+j+alpha} pi i)
    Real lnmag = lngamma(Real(w.N + j)) - Real(w.N + j - 1) * log(n_scale) -
                 (Real(2 * w.N + j) + w.alpha) * const_log2() - log(const_pi());
    int s = ((w.N + j - 1) % 2 == 0) ? 1 : -1;
    value = Cplx(Real(0), Real(-s) * exp(lnmag)) * integral;
  }

  DerivStream ref = orthopoly_eval_derivs(w, deg, mu, 0, PrecisionContext(ctx.bits + 64));
  Real reference = ref.values[0];
  return (abs(Cplx(reference) - value) / abs(reference)) + Real(0);
}

}  // namespace fhankel
