#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hdlab/circle_fn.hpp"

namespace hdlab {

enum class NormMethod { spectral, quadrature };

/// ‖f‖²_{D(𝕋)} split into its L² and Dirichlet parts.
struct NormReport {
  double l2_sq = 0.0;
  double dirichlet_energy = 0.0;
  double total_sq = 0.0;
  NormMethod method = NormMethod::spectral;
  /// N for spectral reports, M for quadrature reports.
  std::size_t size = 0;
};

double l2_norm_sq(const FourierSeries& s);

/// D(f) = Σ |n| |c_n|².
double dirichlet_energy_spectral(const FourierSeries& s);

/// Σ (1 + |n|)^{1-α} |c_n|², α ∈ [0, 1).
double dirichlet_norm_sq_alpha(const FourierSeries& s, double alpha);

NormReport spectral_norm_report(const FourierSeries& s);

/// Trapezoidal L² norm and Douglas-quadrature Dirichlet energy on the grid.
NormReport quadrature_norm_report(const GridFunction& g);

/// Kernel table 1/|ζ_j - ζ_k|² indexed by the grid offset |j - k| (entry 0 unused).
std::vector<double> inverse_chord_sq_table(std::size_t M);

/// Douglas' double integral (1/4π²)∬ |f(ζ)-f(ζ')|²/|ζ-ζ'|² on the M×M grid.
/// Diagonal pairs take the limiting value |f'(θ_k)|² with a spectral
/// derivative. Equals the pairwise mean of local_dirichlet_all(g).
double douglas_energy(const GridFunction& g);

/// D_ζ(f) at ζ = e^{iθ_j}, same diagonal rule as douglas_energy.
double local_dirichlet(const GridFunction& g, std::size_t j);
std::vector<double> local_dirichlet_all(const GridFunction& g);

struct FractionalEnergyResult {
  double value = 0.0;         ///< quadrature at the input resolution M
  double coarse_value = 0.0;  ///< same quadrature on the even-index subgrid (M/2)
  bool diverging = false;     ///< |value - coarse_value| > 10% of |value|
};

/// ∬ |f(ζ)-f(ζ')|^{2-2η}/|ζ-ζ'|² |dζ'||dζ| with diagonal pairs dropped.
/// η ∈ (0, 1); requires M ≥ 8 so the subgrid is a valid grid.
FractionalEnergyResult fractional_douglas_integral(const GridFunction& g, double eta);

/// Carleson–Richter–Sundberg local Dirichlet integral of an outer function F
/// from its boundary modulus w = |F| > 0:
///   (1/2π) ∫ (w(ζ)² - w(ζ')² - 2 w(ζ')² log(w(ζ)/w(ζ'))) / |ζ-ζ'|² |dζ'|.
/// Only meaningful for outer functions. Diagonal limit is 2 (dw/dθ)².
double crs_local_dirichlet(const GridFunction& w, std::size_t j);

}  // namespace hdlab
