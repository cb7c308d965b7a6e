#pragma once

#include <optional>
#include <vector>

#include "hdlab/circle_fn.hpp"
#include "hdlab/geometry.hpp"

namespace hdlab {

/// Boundary values of an outer function F = exp(u + iũ), realized on the grid.
struct OuterFunction {
  GridFunction boundary;
  GridFunction log_modulus;  ///< u = log|F|, real
  cplx value_at_zero;        ///< F(0) = exp(mean u)
  std::optional<double> m_eps;  ///< normalization constant when built as a certificate p_ε
};

/// ε-ladder plus the exponents of a certificate run.
struct EpsilonSchedule {
  std::vector<double> values;
  double gamma = 0.0;  ///< exponent on d(ζ, E) (distance-based builders)
  double beta = 0.0;   ///< Lipschitz exponent of the test function
  double eta = 0.0;    ///< fractional exponent of the A_ε estimate

  /// Geometric decades 1e-1, ..., 1e-4.
  static std::vector<double> default_decades();
};

/// Throws ValidationError unless the ladder is nonempty, positive and strictly decreasing.
void validate_eps_ladder(const std::vector<double>& values);

/// β ∈ (1/2, 1], η ∈ (0, (2β-1)/(2β)), 0 < γ < 2βη and γ < 2β. The message
/// names the first violated inequality.
void validate_thm3_exponents(double beta, double eta, double gamma);

/// Harmonic conjugate via the multiplier -i sgn(n); the Nyquist mode and the
/// mean are dropped.
GridFunction conjugate(const GridFunction& u);

/// F = exp(u + iũ) from u = log|F|.
OuterFunction outer_from_log_modulus(const GridFunction& log_modulus);

struct CertificateOuter {
  OuterFunction p;
  double m_eps = 0.0;
};

/// |p_ε| = e^{-M_ε}/(|f| + ε) with M_ε = mean log(1/(|f| + ε)), so p_ε(0) = 1.
CertificateOuter p_eps_thm2(const GridFunction& abs_f, double eps);

/// |p_ε| = e^{-M_ε}/(d(ζ,E)^γ + ε)^{1/2} with M_ε = ½ mean log(1/(d^γ + ε)).
CertificateOuter p_eps_thm3(const CircleSet& E, double gamma, double eps, std::size_t M);

/// Same, reusing precomputed chordal distances d(θ_k, E).
CertificateOuter p_eps_thm3(const std::vector<double>& dist, double gamma, double eps);

enum class CertificateKind { thm2, thm3 };

/// F_ε with |F_ε| = |f| + ε (thm2).
OuterFunction f_eps_modulus_thm2(const GridFunction& abs_f, double eps);
/// F_ε with |F_ε| = d(ζ,E)^γ + ε (thm3).
OuterFunction f_eps_modulus_thm3(const CircleSet& E, double gamma, double eps, std::size_t M);

}  // namespace hdlab
