#include "fhankel/mc.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <thread>

namespace fhankel {

namespace {

// splitmix64: cheap, well-distributed per-sample substream derivation.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::vector<double> sample_gue_spectrum(long N, std::uint64_t seed) {
  if (N < 1) throw std::invalid_argument("sample_gue_spectrum: N >= 1");
  std::mt19937_64 rng(seed);
  const double sd_diag = 1.0 / std::sqrt(4.0 * static_cast<double>(N));
  const double sd_off = 1.0 / std::sqrt(8.0 * static_cast<double>(N));
  std::normal_distribution<double> normal;

  Eigen::MatrixXcd x(N, N);
  for (long i = 0; i < N; ++i) {
    x(i, i) = std::complex<double>(sd_diag * normal(rng), 0.0);
    for (long j = i + 1; j < N; ++j) {
      std::complex<double> v(sd_off * normal(rng), sd_off * normal(rng));
      x(i, j) = v;
      x(j, i) = std::conj(v);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(x, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + N);
}

McResult mc_expectation(const SymbolSpec& spec, long samples, std::uint64_t seed, int threads) {
  if (samples < 1) throw std::invalid_argument("mc_expectation: need samples >= 1");
  if (spec.weight.kind != WeightKind::Hermite)
    throw std::domain_error("mc_expectation: Hermite weight only");
  const long m = spec.m();
  std::vector<double> two_q(static_cast<size_t>(m)), mu(static_cast<size_t>(m));
  for (long i = 0; i < m; ++i) {
    Real tq = 2 * spec.q[static_cast<size_t>(i)];
    if (!tq.is_integer() || tq.sign() < 0)
      throw std::domain_error("mc_expectation: 2q must be a nonnegative integer");
    two_q[static_cast<size_t>(i)] = tq.to_double();
    mu[static_cast<size_t>(i)] = spec.mu[static_cast<size_t>(i)].to_double();
  }

  std::vector<double> logs(static_cast<size_t>(samples));
  auto worker = [&](long lo, long hi) {
    for (long s = lo; s < hi; ++s) {
      auto lambda = sample_gue_spectrum(spec.weight.N, splitmix64(seed + static_cast<std::uint64_t>(s)));
      double t = 0;
      for (long i = 0; i < m; ++i) {
        double acc = 0;
        for (double l : lambda) acc += std::log(std::abs(mu[static_cast<size_t>(i)] - l));
        t += two_q[static_cast<size_t>(i)] * acc;
      }
      logs[static_cast<size_t>(s)] = t;
    }
  };

  int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (nthreads < 1) nthreads = 1;
  if (nthreads == 1 || samples < 64) {
    worker(0, samples);
  } else {
    std::vector<std::thread> pool;
    long chunk = (samples + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      long lo = t * chunk, hi = std::min(samples, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  double center = logs[0];
  for (double t : logs) center = std::max(center, t);
  double sum = 0, sum2 = 0;
  for (double t : logs) {
    double e = std::exp(t - center);
    sum += e;
    sum2 += e * e;
  }
  double n = static_cast<double>(samples);
  double mean_c = sum / n;
  double var_c = std::max(0.0, sum2 / n - mean_c * mean_c);
  McResult r;
  r.samples = samples;
  r.mean = std::exp(center) * mean_c;
  r.stderr_of_mean = samples > 1 ? std::exp(center) * std::sqrt(var_c / (n - 1)) : 0.0;
  return r;
}

}  // namespace fhankel
