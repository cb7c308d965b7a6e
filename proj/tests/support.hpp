#pragma once

// Independent reference computations used as test oracles. Everything here is
// deliberately naive: direct sums, no FFT, no library helpers.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "hdlab/circle_fn.hpp"

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846;

/// Random trigonometric polynomial coefficients c_{-N..N}.
inline std::vector<cplx> random_coeffs(std::mt19937_64& rng, int N) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> c(2 * N + 1);
  for (auto& z : c) z = {g(rng), g(rng)};
  return c;
}

inline std::vector<cplx> sample_poly(const std::vector<cplx>& c, std::size_t M) {
  const int N = static_cast<int>(c.size() / 2);
  std::vector<cplx> out(M);
  for (std::size_t k = 0; k < M; ++k) {
    const double t = 2.0 * pi * static_cast<double>(k) / static_cast<double>(M);
    cplx s = 0.0;
    for (int n = -N; n <= N; ++n) s += c[n + N] * std::polar(1.0, n * t);
    out[k] = s;
  }
  return out;
}

inline std::vector<cplx> naive_dft(const std::vector<cplx>& g, int N) {
  const std::size_t M = g.size();
  std::vector<cplx> c(2 * N + 1);
  for (int n = -N; n <= N; ++n) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < M; ++k)
      s += g[k] * std::polar(1.0, -2.0 * pi * n * static_cast<double>(k) / static_cast<double>(M));
    c[n + N] = s / static_cast<double>(M);
  }
  return c;
}

inline double coeff_dirichlet(const std::vector<cplx>& c) {
  const int N = static_cast<int>(c.size() / 2);
  double s = 0.0;
  for (int n = -N; n <= N; ++n) s += std::abs(n) * std::norm(c[n + N]);
  return s;
}

inline double coeff_l2(const std::vector<cplx>& c) {
  double s = 0.0;
  for (const auto& z : c) s += std::norm(z);
  return s;
}

inline double chord(double a, double b) { return 2.0 * std::abs(std::sin(0.5 * (a - b))); }

/// Plain O(M²) Douglas sum with a caller-supplied diagonal.
inline double douglas_direct(const std::vector<cplx>& g, const std::vector<double>& diag) {
  const std::size_t M = g.size();
  long double s = 0.0;
  for (std::size_t j = 0; j < M; ++j)
    for (std::size_t k = 0; k < M; ++k) {
      if (j == k) {
        s += diag[j];
        continue;
      }
      const double c = chord(2 * pi * j / M, 2 * pi * k / M);
      s += std::norm(g[j] - g[k]) / (c * c);
    }
  return static_cast<double>(s / (static_cast<long double>(M) * M));
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace oracle
