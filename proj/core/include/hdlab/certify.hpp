#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hdlab/capacity.hpp"
#include "hdlab/circle_fn.hpp"
#include "hdlab/geometry.hpp"
#include "hdlab/outer.hpp"

namespace hdlab {

/// f(θ_k) = d(θ_k, E)^β (chordal); real, nonnegative, vanishing exactly on E.
GridFunction build_test_function(const CircleSet& E, double beta, std::size_t M);

/// f = ψ_w(ρ) with ψ_w(t) = t²/(t² + w²) and ρ the smoothed gap distance
/// x(L - x)/L (x = arclength from the left end of the gap of length L).
/// Vanishes to second order on E and is C^{1,1} elsewhere; Z(f) = E.
GridFunction build_mollified_function(const CircleSet& E, double width, std::size_t M);

struct SzegoResult {
  std::vector<double> eps;
  std::vector<double> values;  ///< ∫ log(|f| + ε) |dζ| per rung
  bool diverging = false;
};

/// Cauchy threshold between the last two rungs, relative to max(1, |value|).
inline constexpr double kSzegoCauchyTol = 2e-2;

SzegoResult szego_check(const GridFunction& f, const std::vector<double>& ladder);

struct CertificateRow {
  double eps = 0.0;
  double m_eps = 0.0;
  double l2_sq = 0.0;
  double dirichlet_energy = 0.0;
  double total_norm = 0.0;
  std::optional<double> a_eps;
  std::optional<double> b_eps;
  double p_at_zero = 1.0;
  /// Douglas quadrature of the certified product on the same grid.
  std::optional<double> douglas;
  /// thm2: 4 e^{-2M_ε} 4π² D(f); thm3: M_ε e^{-2M_ε}.
  std::optional<double> bound;
  /// D(F_ε) by spectral analysis of the F_ε boundary.
  std::optional<double> dirichlet_f_eps;
};

struct CertificateReport {
  CertificateKind kind = CertificateKind::thm2;
  std::string label;
  std::string set_descriptor;
  double beta = 0.0;
  double gamma = 0.0;
  double eta = 0.0;
  std::size_t M = 0;
  std::optional<double> mollify_width;
  std::optional<double> dirichlet_f;  ///< D(f) by Douglas quadrature (thm2)
  std::vector<CertificateRow> rows;
  std::vector<std::string> warnings;
  std::string expectation;  ///< "decay" or "no-decay"
  std::string verdict;      ///< observed: "decay", "no-decay" or "inconclusive"

  double decay_ratio() const;
};

struct CertificateOptions {
  bool split = true;  ///< compute the Γ-restricted A_ε / B_ε sums (O(M²))
};

/// For each ε: p_ε from p_eps_thm2, product p_ε f² on the grid, spectral norm
/// components, and the Γ = {|f(ζ')| ≤ |f(ζ)|} split of the Douglas integrand.
CertificateReport certificate_thm2(const GridFunction& abs_f, const std::vector<double>& eps,
                                   CertificateOptions options = {});

/// For each ε: f = d(·,E)^β, p_ε from p_eps_thm3, product p_ε f, and the
/// Γ = {d(ζ',E) ≤ d(ζ,E)} split. Exponents are validated before any work.
CertificateReport certificate_thm3(const CircleSet& E, const EpsilonSchedule& schedule, std::size_t M,
                                   CertificateOptions options = {});

/// Ratio of last to first total_norm, with the verdict thresholds.
inline constexpr double kDecayFactor = 0.5;
inline constexpr double kNoDecayFactor = 0.9;
std::string decay_verdict(const CertificateReport& report);

struct GammaSplit {
  double douglas = 0.0;  ///< (1/4π²)∬ |Δg|²/|Δζ|²
  double a_eps = 0.0;    ///< ∬_Γ |p(ζ)|² |Δq|²/|Δζ|²
  double b_eps = 0.0;    ///< ∬_Γ |q(ζ')|² |Δp|²/|Δζ|²
};

/// One symmetric pass over grid pairs. Ordered pair (ζ_j, ζ_k) lies in Γ when
/// key_k ≤ key_j (ties on both sides). Diagonal pairs use the derivative
/// arrays: |g'|², |p|²|q'|², |q|²|p'|².
GammaSplit gamma_split(std::span<const cplx> g, std::span<const cplx> p, std::span<const cplx> q,
                       std::span<const double> key, std::span<const cplx> dg, std::span<const cplx> dp,
                       std::span<const cplx> dq);

/// Douglas energy by the same symmetric pass (half the pairs).
double douglas_energy_symmetric(const GridFunction& g);

/// Energy growth per halving of the cell width above which capacity is read as zero.
inline constexpr double kZeroCapacityGrowth = 1e-2;

struct Classification {
  std::string set_descriptor;
  CarlesonResult carleson;
  CapacityEstimate capacity;
  bool zero_capacity = false;  ///< energy still climbing between R and 2R
};

Classification classify_set(const CircleSet& E, std::size_t R = 512, double alpha = 0.0);

struct SuiteConfig {
  std::vector<std::string> batteries;
  std::optional<CircleSet> set;  ///< defaults to closure of E_1 with n_max = 10^4
  double beta = 0.75;
  double gamma = 0.4;
  double eta = 0.3;
  std::vector<double> eps = EpsilonSchedule::default_decades();
  std::size_t M = 2048;
  double mollify_width = 1.0;
  std::size_t resolution = 512;
  bool split = true;
};

struct SuiteBundle {
  std::vector<CertificateReport> reports;
  std::vector<Classification> classifications;
};

/// Known batteries: smoke, thm2, thm3, thm3-Ebeta, negative, classify.
const std::vector<std::string>& known_batteries();

SuiteBundle run_suite(const SuiteConfig& config);

std::string describe(const CircleSet& E);

}  // namespace hdlab
