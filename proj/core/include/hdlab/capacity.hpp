#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "hdlab/geometry.hpp"

namespace hdlab {

/// Probability measure that is uniform on each of a set of disjoint cells.
class DiscreteMeasure {
 public:
  DiscreteMeasure(std::vector<double> centers, std::vector<double> widths, std::vector<double> weights);

  /// Same cells, uniform measure on their union (weights ∝ widths).
  static DiscreteMeasure uniform_on_cells(std::vector<double> centers, std::vector<double> widths);

  std::size_t size() const { return centers_.size(); }
  const std::vector<double>& centers() const { return centers_; }
  const std::vector<double>& widths() const { return widths_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> centers_;
  std::vector<double> widths_;
  std::vector<double> weights_;
};

/// Cells of width at most h = 2π/R covering the stored support of E. Points
/// are thickened to arcs of width h (overlaps merged); arcs are split evenly.
/// Every stored arc receives at least one cell.
DiscreteMeasure discretize(const CircleSet& E, std::size_t R);

/// μ̂(n) = ∫ e^{-inθ} dμ with the exact per-cell average (sinc factor).
std::vector<std::complex<double>> fourier_coefficients(const DiscreteMeasure& mu, std::size_t N);

/// Σ_{n=1}^N |μ̂(n)|² / n^{1-α}.
double energy_fourier(const DiscreteMeasure& mu, std::size_t N, double alpha);

/// Σ_ij w_i w_j K_ij, K_ij the mean of log(1/|ζ - ζ'|) between uniform measures
/// on cells i and j: exact segment formula for neighbours (K_ii ≈ log(1/h_i) + 3/2),
/// centre chord plus a second-moment term otherwise.
double energy_kernel(const DiscreteMeasure& mu);

/// Dense symmetric kernel matrices (row-major) for the quadratic forms above.
std::vector<double> log_kernel_matrix(const DiscreteMeasure& cells);
std::vector<double> fourier_kernel_matrix(const DiscreteMeasure& cells, std::size_t N, double alpha);

/// N = ⌈8/h⌉ for nominal cell width h = 2π/R.
std::size_t fourier_truncation(std::size_t R);

struct SolverOptions {
  double tol = 1e-8;          ///< projected-gradient ∞-norm
  std::size_t max_iter = 5000;
};

struct CapacityReport {
  double energy = 0.0;
  /// 1/energy; nullopt is the ∞ sentinel emitted when energy ≤ kInfiniteCapacityEnergy.
  std::optional<double> capacity;
  double alpha = 0.0;
  std::size_t resolution = 0;
  std::size_t cells = 0;
  std::size_t iterations = 0;
  bool converged = false;
  double projected_gradient = 0.0;
  /// Energy after every accepted iterate, starting with the initial point.
  std::vector<double> energy_history;
};

inline constexpr double kInfiniteCapacityEnergy = 1e-6;

struct EquilibriumResult {
  DiscreteMeasure measure;
  CapacityReport report;
};

/// Minimizes w^T K w over the probability simplex by projected gradient with
/// Barzilai–Borwein trial steps and Armijo backtracking. Never throws on
/// non-convergence: returns the last accepted iterate with converged = false.
EquilibriumResult equilibrium_measure(const CircleSet& E, std::size_t R, double alpha = 0.0,
                                      SolverOptions options = {});

/// Same solver on explicit cells.
EquilibriumResult equilibrium_on_cells(const DiscreteMeasure& cells, std::size_t R, double alpha,
                                       SolverOptions options = {});

struct CapacityEstimate {
  CapacityReport fine;         ///< at 2R
  double coarse_energy = 0.0;  ///< at R
  double gap = 0.0;            ///< |fine - coarse|, the reported error estimate
};

/// Equilibrium solve on the resolution ladder (R, 2R), reporting the finer one.
CapacityEstimate capacity_of(const CircleSet& E, double alpha = 0.0, std::size_t R = 512, SolverOptions options = {});

/// Euclidean projection onto {w ≥ 0, Σ w = 1}.
std::vector<double> project_to_simplex(const std::vector<double>& v);

}  // namespace hdlab
