#include "hdlab/outer.hpp"

#include <algorithm>
#include <cmath>

#include "fft.hpp"
#include "hdlab/common.hpp"

namespace hdlab {

std::vector<double> EpsilonSchedule::default_decades() { return {1e-1, 1e-2, 1e-3, 1e-4}; }

void validate_eps_ladder(const std::vector<double>& values) {
  require(!values.empty(), "ε schedule is nonempty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(std::isfinite(values[i]) && values[i] > 0.0, "ε > 0");
    if (i > 0) require(values[i] < values[i - 1], "ε strictly decreasing");
  }
}

void validate_thm3_exponents(double beta, double eta, double gamma) {
  require(beta > 0.5, "β > 1/2");
  require(beta <= 1.0, "β ≤ 1");
  require(eta > 0.0, "η > 0");
  require(eta < (2.0 * beta - 1.0) / (2.0 * beta), "η < (2β−1)/(2β)");
  require(gamma > 0.0, "γ > 0");
  require(gamma < 2.0 * beta * eta, "γ < 2βη");
  require(gamma < 2.0 * beta, "γ < 2β");
}

namespace {

void require_real(const GridFunction& u) {
  double scale = 0.0;
  for (const auto& z : u.samples()) scale = std::max(scale, std::abs(z));
  require(u.is_real(1e-14 * std::max(scale, 1.0)), "input is real");
}

}  // namespace

GridFunction conjugate(const GridFunction& u) {
  require_real(u);
  const std::size_t M = u.size();
  std::vector<cplx> re(M);
  for (std::size_t k = 0; k < M; ++k) re[k] = u[k].real();
  auto spectrum = detail::dft_forward(re);
  const std::size_t half = M / 2;
  const double scale = 1.0 / static_cast<double>(M);
  spectrum[0] = 0.0;
  spectrum[half] = 0.0;
  for (std::size_t m = 1; m < half; ++m) spectrum[m] *= cplx(0.0, -scale);
  for (std::size_t m = half + 1; m < M; ++m) spectrum[m] *= cplx(0.0, scale);
  const auto back = detail::dft_inverse(spectrum);
  std::vector<cplx> out(M);
  for (std::size_t k = 0; k < M; ++k) out[k] = back[k].real();
  return GridFunction(std::move(out));
}

OuterFunction outer_from_log_modulus(const GridFunction& log_modulus) {
  require_real(log_modulus);
  const std::size_t M = log_modulus.size();
  const auto u = log_modulus.real_part();
  const GridFunction ut = conjugate(log_modulus);
  std::vector<cplx> boundary(M);
  for (std::size_t k = 0; k < M; ++k) boundary[k] = std::exp(cplx(u[k], ut[k].real()));
  const double mean_u = pairwise_mean(u);
  return OuterFunction{GridFunction(std::move(boundary)), GridFunction::from_real(u), cplx(std::exp(mean_u), 0.0),
                       std::nullopt};
}

namespace {

// log-modulus -M - scale·L with M = -scale·mean(L), so its mean is 0.
CertificateOuter normalized_certificate(const std::vector<double>& log_floor, double scale) {
  for (double v : log_floor) require(std::isfinite(v), "log-modulus is finite");
  const double m_eps = -scale * pairwise_mean(log_floor);
  std::vector<double> logw(log_floor.size());
  for (std::size_t k = 0; k < logw.size(); ++k) logw[k] = -m_eps - scale * log_floor[k];
  OuterFunction p = outer_from_log_modulus(GridFunction::from_real(std::move(logw)));
  p.m_eps = m_eps;
  return CertificateOuter{std::move(p), m_eps};
}

std::vector<double> nonnegative_real(const GridFunction& abs_f) {
  require(abs_f.is_real(), "|f| samples are real");
  auto v = abs_f.real_part();
  for (double x : v) require(x >= 0.0, "|f| ≥ 0");
  return v;
}

}  // namespace

CertificateOuter p_eps_thm2(const GridFunction& abs_f, double eps) {
  require(eps > 0.0, "ε > 0");
  auto v = nonnegative_real(abs_f);
  for (double& x : v) x = std::log(x + eps);
  return normalized_certificate(v, 1.0);
}

CertificateOuter p_eps_thm3(const std::vector<double>& dist, double gamma, double eps) {
  require(gamma > 0.0, "γ > 0");
  require(eps > 0.0, "ε > 0");
  std::vector<double> v(dist.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = std::log(std::pow(dist[k], gamma) + eps);
  return normalized_certificate(v, 0.5);
}

CertificateOuter p_eps_thm3(const CircleSet& E, double gamma, double eps, std::size_t M) {
  require(!E.empty(), "E is nonempty");
  require(gamma > 0.0, "γ > 0");
  require(eps > 0.0, "ε > 0");
  return p_eps_thm3(sample_distance(E, M), gamma, eps);
}

OuterFunction f_eps_modulus_thm2(const GridFunction& abs_f, double eps) {
  require(eps > 0.0, "ε > 0");
  auto v = nonnegative_real(abs_f);
  for (double& x : v) x = std::log(x + eps);
  return outer_from_log_modulus(GridFunction::from_real(std::move(v)));
}

OuterFunction f_eps_modulus_thm3(const CircleSet& E, double gamma, double eps, std::size_t M) {
  require(!E.empty(), "E is nonempty");
  require(gamma > 0.0, "γ > 0");
  require(eps > 0.0, "ε > 0");
  auto d = sample_distance(E, M);
  for (double& x : d) x = std::log(std::pow(x, gamma) + eps);
  return outer_from_log_modulus(GridFunction::from_real(std::move(d)));
}

}  // namespace hdlab
