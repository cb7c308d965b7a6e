#include "hdlab/norms.hpp"

#include <cmath>

#include "hdlab/common.hpp"

namespace hdlab {

double l2_norm_sq(const FourierSeries& s) {
  const auto c = s.coefficients();
  return pairwise_generate(0, c.size(), [&](std::size_t i) { return std::norm(c[i]); });
}

double dirichlet_energy_spectral(const FourierSeries& s) {
  const auto c = s.coefficients();
  const int N = s.bandwidth();
  return pairwise_generate(0, c.size(), [&](std::size_t i) {
    return std::abs(static_cast<double>(static_cast<int>(i) - N)) * std::norm(c[i]);
  });
}

double dirichlet_norm_sq_alpha(const FourierSeries& s, double alpha) {
  require(alpha >= 0.0 && alpha < 1.0, "α ∈ [0, 1)");
  const auto c = s.coefficients();
  const int N = s.bandwidth();
  if (alpha == 0.0) return l2_norm_sq(s) + dirichlet_energy_spectral(s);
  return pairwise_generate(0, c.size(), [&](std::size_t i) {
    const double n = std::abs(static_cast<double>(static_cast<int>(i) - N));
    return std::pow(1.0 + n, 1.0 - alpha) * std::norm(c[i]);
  });
}

NormReport spectral_norm_report(const FourierSeries& s) {
  NormReport r;
  r.l2_sq = l2_norm_sq(s);
  r.dirichlet_energy = dirichlet_energy_spectral(s);
  r.total_sq = r.l2_sq + r.dirichlet_energy;
  r.method = NormMethod::spectral;
  r.size = static_cast<std::size_t>(s.bandwidth());
  return r;
}

NormReport quadrature_norm_report(const GridFunction& g) {
  const auto v = g.samples();
  NormReport r;
  r.l2_sq = pairwise_generate(0, v.size(), [&](std::size_t k) { return std::norm(v[k]); }) /
            static_cast<double>(v.size());
  r.dirichlet_energy = douglas_energy(g);
  r.total_sq = r.l2_sq + r.dirichlet_energy;
  r.method = NormMethod::quadrature;
  r.size = g.size();
  return r;
}

std::vector<double> inverse_chord_sq_table(std::size_t M) {
  std::vector<double> table(M, 0.0);
  for (std::size_t d = 1; d < M; ++d) {
    const double s = 2.0 * std::sin(kPi * static_cast<double>(d) / static_cast<double>(M));
    table[d] = 1.0 / (s * s);
  }
  return table;
}

namespace {

// (1/M) Σ_k |g_j - g_k|² / |ζ_j - ζ_k|², diagonal replaced by diag_j.
double douglas_row(std::span<const cplx> g, const std::vector<double>& kernel, std::size_t j, double diag_j) {
  const std::size_t M = g.size();
  const double row = pairwise_generate(0, M, [&](std::size_t k) {
    if (k == j) return diag_j;
    const std::size_t d = k > j ? k - j : j - k;
    return std::norm(g[j] - g[k]) * kernel[d];
  });
  return row / static_cast<double>(M);
}

}  // namespace

std::vector<double> local_dirichlet_all(const GridFunction& g) {
  const std::size_t M = g.size();
  const auto kernel = inverse_chord_sq_table(M);
  const GridFunction dg = spectral_derivative(g);
  std::vector<double> local(M);
  parallel_rows(M, [&](std::size_t j) { local[j] = douglas_row(g.samples(), kernel, j, std::norm(dg[j])); });
  return local;
}

double douglas_energy(const GridFunction& g) {
  const auto local = local_dirichlet_all(g);
  return pairwise_mean(local);
}

double local_dirichlet(const GridFunction& g, std::size_t j) {
  require(j < g.size(), "grid index j < M");
  const auto kernel = inverse_chord_sq_table(g.size());
  const GridFunction dg = spectral_derivative(g);
  return douglas_row(g.samples(), kernel, j, std::norm(dg[j]));
}

namespace {

double fractional_double_integral(std::span<const cplx> g, double exponent) {
  const std::size_t M = g.size();
  const auto kernel = inverse_chord_sq_table(M);
  std::vector<double> rows(M);
  parallel_rows(M, [&](std::size_t j) {
    rows[j] = pairwise_generate(0, M, [&](std::size_t k) {
      if (k == j) return 0.0;
      const std::size_t d = k > j ? k - j : j - k;
      return std::pow(std::abs(g[j] - g[k]), exponent) * kernel[d];
    });
  });
  const double h = kTwoPi / static_cast<double>(M);
  return pairwise_sum(rows) * h * h;
}

}  // namespace

FractionalEnergyResult fractional_douglas_integral(const GridFunction& g, double eta) {
  require(eta > 0.0 && eta < 1.0, "η ∈ (0, 1)");
  require(g.size() >= 8, "M ≥ 8");
  const double exponent = 2.0 - 2.0 * eta;
  std::vector<cplx> coarse(g.size() / 2);
  for (std::size_t k = 0; k < coarse.size(); ++k) coarse[k] = g[2 * k];
  FractionalEnergyResult r;
  r.value = fractional_double_integral(g.samples(), exponent);
  r.coarse_value = fractional_double_integral(coarse, exponent);
  r.diverging = std::abs(r.value - r.coarse_value) > 0.1 * std::abs(r.value);
  return r;
}

double crs_local_dirichlet(const GridFunction& w, std::size_t j) {
  const std::size_t M = w.size();
  require(j < M, "grid index j < M");
  require(w.is_real(), "modulus samples are real");
  const auto x = w.real_part();
  for (double v : x) require(v > 0.0, "modulus samples are positive");
  const auto kernel = inverse_chord_sq_table(M);
  const double dw = spectral_derivative(w)[j].real();
  const double xj = x[j];
  const double row = pairwise_generate(0, M, [&](std::size_t k) {
    if (k == j) return 2.0 * dw * dw;
    const std::size_t d = k > j ? k - j : j - k;
    const double y = x[k];
    // x² - y² - 2y² log(x/y) ≥ 0; clamp rounding noise near x = y.
    const double numer = xj * xj - y * y + 2.0 * y * y * std::log1p((y - xj) / xj);
    return std::max(numer, 0.0) * kernel[d];
  });
  return row / static_cast<double>(M);
}

}  // namespace hdlab
