#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hdlab {

using cplx = std::complex<double>;

/// Boundary samples f(θ_k), θ_k = 2πk/M, of a function on the unit circle.
/// M is a power of two, at least 4; every sample is finite.
class GridFunction {
 public:
  explicit GridFunction(std::vector<cplx> samples);

  /// Samples fn at the M equispaced angles.
  static GridFunction sample(std::size_t M, const std::function<cplx(double)>& fn);
  static GridFunction from_real(std::vector<double> values);
  static GridFunction constant(std::size_t M, cplx value);

  std::size_t size() const { return samples_.size(); }
  std::span<const cplx> samples() const { return samples_; }
  const cplx& operator[](std::size_t k) const { return samples_[k]; }
  double angle(std::size_t k) const;
  double spacing() const;

  bool is_real(double tol = 0.0) const;
  std::vector<double> real_part() const;
  std::vector<double> modulus() const;

 private:
  std::vector<cplx> samples_;
};

/// Coefficients c_n, n ∈ [-N, N]. `truncated` records whether the series came
/// from analysing grid data (true) or was band-limited by construction.
class FourierSeries {
 public:
  FourierSeries(int N, std::vector<cplx> coeffs, bool truncated = false);
  static FourierSeries zero(int N);
  /// Single harmonic value·e^{inθ}.
  static FourierSeries monomial(int n, cplx value = 1.0);

  int bandwidth() const { return N_; }
  bool truncated() const { return truncated_; }
  /// c_n; zero outside [-N, N].
  cplx operator()(int n) const;
  cplx& at(int n);
  std::span<const cplx> coefficients() const { return coeffs_; }

 private:
  int N_;
  std::vector<cplx> coeffs_;
  bool truncated_;
};

/// c_n = (1/M) Σ_k g(θ_k) e^{-inθ_k}. Requires 2N + 1 ≤ M.
FourierSeries analyze(const GridFunction& g, int N);

/// Samples of Σ c_n e^{inθ} at M angles. Requires M a power of two and M > 2N.
GridFunction synthesize(const FourierSeries& s, std::size_t M);

/// Angular derivative dg/dθ by spectral differentiation (Nyquist mode dropped).
GridFunction spectral_derivative(const GridFunction& g);

GridFunction pointwise_mul(const GridFunction& g, const GridFunction& h);

/// Multiplication by ζ^k: c_n ↦ c_{n-k}, bandwidth N + |k|.
FourierSeries shift(const FourierSeries& s, int k);

/// max_{j≠k} |g_j - g_k| / |ζ_j - ζ_k|^β over grid pairs; a lower bound for
/// the Lip_β seminorm. β ∈ (0, 1].
double lip_seminorm(const GridFunction& g, double beta);

}  // namespace hdlab
