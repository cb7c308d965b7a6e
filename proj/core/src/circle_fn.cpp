#include "hdlab/circle_fn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fft.hpp"
#include "hdlab/common.hpp"

namespace hdlab {

GridFunction::GridFunction(std::vector<cplx> samples) : samples_(std::move(samples)) {
  require(samples_.size() >= 4, "M ≥ 4");
  require(is_power_of_two(samples_.size()), "M is a power of two");
  for (const auto& z : samples_) {
    require(std::isfinite(z.real()) && std::isfinite(z.imag()), "samples are finite");
  }
}

GridFunction GridFunction::sample(std::size_t M, const std::function<cplx(double)>& fn) {
  std::vector<cplx> v(M);
  for (std::size_t k = 0; k < M; ++k) v[k] = fn(kTwoPi * static_cast<double>(k) / static_cast<double>(M));
  return GridFunction(std::move(v));
}

GridFunction GridFunction::from_real(std::vector<double> values) {
  std::vector<cplx> v(values.begin(), values.end());
  return GridFunction(std::move(v));
}

GridFunction GridFunction::constant(std::size_t M, cplx value) {
  return GridFunction(std::vector<cplx>(M, value));
}

double GridFunction::angle(std::size_t k) const {
  return kTwoPi * static_cast<double>(k) / static_cast<double>(samples_.size());
}

double GridFunction::spacing() const { return kTwoPi / static_cast<double>(samples_.size()); }

bool GridFunction::is_real(double tol) const {
  return std::all_of(samples_.begin(), samples_.end(),
                     [tol](const cplx& z) { return std::abs(z.imag()) <= tol; });
}

std::vector<double> GridFunction::real_part() const {
  std::vector<double> out(samples_.size());
  std::transform(samples_.begin(), samples_.end(), out.begin(), [](const cplx& z) { return z.real(); });
  return out;
}

std::vector<double> GridFunction::modulus() const {
  std::vector<double> out(samples_.size());
  std::transform(samples_.begin(), samples_.end(), out.begin(), [](const cplx& z) { return std::abs(z); });
  return out;
}

FourierSeries::FourierSeries(int N, std::vector<cplx> coeffs, bool truncated)
    : N_(N), coeffs_(std::move(coeffs)), truncated_(truncated) {
  require(N_ >= 0, "N ≥ 0");
  require(coeffs_.size() == static_cast<std::size_t>(2 * N_ + 1), "coefficient count is 2N + 1");
}

FourierSeries FourierSeries::zero(int N) {
  return FourierSeries(N, std::vector<cplx>(static_cast<std::size_t>(2 * N + 1)));
}

FourierSeries FourierSeries::monomial(int n, cplx value) {
  FourierSeries s = zero(std::abs(n));
  s.at(n) = value;
  return s;
}

cplx FourierSeries::operator()(int n) const {
  if (n < -N_ || n > N_) return {};
  return coeffs_[static_cast<std::size_t>(n + N_)];
}

cplx& FourierSeries::at(int n) {
  require(n >= -N_ && n <= N_, "|n| ≤ N");
  return coeffs_[static_cast<std::size_t>(n + N_)];
}

FourierSeries analyze(const GridFunction& g, int N) {
  const std::size_t M = g.size();
  require(N >= 0 && static_cast<std::size_t>(2 * N + 1) <= M, "2N + 1 ≤ M (Nyquist limit)");
  const auto spectrum = detail::dft_forward(g.samples());
  const double scale = 1.0 / static_cast<double>(M);
  std::vector<cplx> c(static_cast<std::size_t>(2 * N + 1));
  for (int n = -N; n <= N; ++n) {
    const std::size_t bin = n >= 0 ? static_cast<std::size_t>(n) : M - static_cast<std::size_t>(-n);
    c[static_cast<std::size_t>(n + N)] = spectrum[bin] * scale;
  }
  return FourierSeries(N, std::move(c), true);
}

GridFunction synthesize(const FourierSeries& s, std::size_t M) {
  require(is_power_of_two(M), "M is a power of two");
  const int N = s.bandwidth();
  require(M > static_cast<std::size_t>(2 * N), "M > 2N");
  std::vector<cplx> bins(M);
  for (int n = -N; n <= N; ++n) {
    const std::size_t bin = n >= 0 ? static_cast<std::size_t>(n) : M - static_cast<std::size_t>(-n);
    bins[bin] = s(n);
  }
  return GridFunction(detail::dft_inverse(bins));
}

GridFunction spectral_derivative(const GridFunction& g) {
  const std::size_t M = g.size();
  auto spectrum = detail::dft_forward(g.samples());
  const double scale = 1.0 / static_cast<double>(M);
  const long half = static_cast<long>(M / 2);
  for (std::size_t m = 0; m < M; ++m) {
    const long n = static_cast<long>(m) < half ? static_cast<long>(m) : static_cast<long>(m) - static_cast<long>(M);
    if (n == -half) {
      spectrum[m] = 0.0;
    } else {
      spectrum[m] *= cplx(0.0, static_cast<double>(n) * scale);
    }
  }
  return GridFunction(detail::dft_inverse(spectrum));
}

GridFunction pointwise_mul(const GridFunction& g, const GridFunction& h) {
  require(g.size() == h.size(), "factors share the same grid");
  std::vector<cplx> v(g.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = g[k] * h[k];
  return GridFunction(std::move(v));
}

FourierSeries shift(const FourierSeries& s, int k) {
  const int N = s.bandwidth();
  FourierSeries out(N + std::abs(k), std::vector<cplx>(static_cast<std::size_t>(2 * (N + std::abs(k)) + 1)),
                    s.truncated());
  for (int n = -N; n <= N; ++n) out.at(n + k) = s(n);
  return out;
}

double lip_seminorm(const GridFunction& g, double beta) {
  require(beta > 0.0 && beta <= 1.0, "β ∈ (0, 1]");
  const std::size_t M = g.size();
  // Chord powers depend only on the index offset.
  std::vector<double> inv_chord_pow(M, 0.0);
  for (std::size_t d = 1; d < M; ++d) {
    inv_chord_pow[d] = std::pow(2.0 * std::sin(kPi * static_cast<double>(d) / static_cast<double>(M)), -beta);
  }
  std::vector<double> row_max(M, 0.0);
  parallel_rows(M, [&](std::size_t j) {
    double best = 0.0;
    for (std::size_t k = j + 1; k < M; ++k) {
      best = std::max(best, std::abs(g[j] - g[k]) * inv_chord_pow[k - j]);
    }
    row_max[j] = best;
  });
  return *std::max_element(row_max.begin(), row_max.end());
}

}  // namespace hdlab
