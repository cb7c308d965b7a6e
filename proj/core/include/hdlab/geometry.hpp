#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hdlab/common.hpp"

namespace hdlab {

/// Closed arc [start, start + length] on 𝕋 (angles in radians). A point is an
/// arc of length 0.
struct Arc {
  double start = 0.0;
  double length = 0.0;
  double end() const { return start + length; }
};

/// Complementary arc I_j of a closed set, with the Cantor generation that
/// produced it (0 for gaps not created by a Cantor step).
struct Gap {
  double start = 0.0;
  double length = 0.0;
  int generation = 0;
};

enum class SetFamily { finite, e_beta, cantor, arcs, full_circle };

/// How a stored set relates to the (possibly infinite) set it approximates.
struct Truncation {
  SetFamily family = SetFamily::finite;
  double beta = 0.0;           // e_beta
  long n_max = 0;              // e_beta
  std::vector<double> ratios;  // cantor
  int depth = 0;               // cantor
  double arc_start = 0.0;      // cantor
  double arc_length = 0.0;     // cantor
};

enum class SetKind { points, intervals };

enum class Metric { chordal, arclength };

/// Closed subset of 𝕋 as sorted disjoint closed arcs plus the complementary
/// gaps. Immutable after construction.
class CircleSet {
 public:
  static CircleSet from_points(const std::vector<double>& angles, Truncation truncation = {});
  /// Overlapping or touching arcs are merged; arcs may wrap through angle 0.
  static CircleSet from_arcs(const std::vector<Arc>& arcs, Truncation truncation = {});
  static CircleSet full_circle();

  SetKind kind() const { return kind_; }
  const std::vector<Arc>& components() const { return components_; }
  /// Gaps with positive length, sorted by start angle.
  const std::vector<Gap>& gaps() const { return gaps_; }
  const Truncation& truncation() const { return truncation_; }
  bool empty() const { return components_.empty(); }
  bool measure_zero() const { return kind_ == SetKind::points; }
  bool is_full_circle() const;

  /// Point representatives: the points of a point set, or arc endpoints.
  std::vector<double> angles() const;
  double total_gap_length() const;
  double measure() const;

  /// Distance from e^{iθ} to the set; exactly 0 on stored points and arcs.
  double distance(double theta, Metric metric = Metric::chordal) const;

  /// Replaces gap generations (used by the Cantor builder).
  void tag_gap_generations(const std::function<int(const Gap&)>& generation_of);

 private:
  CircleSet() = default;
  void compute_gaps();

  SetKind kind_ = SetKind::points;
  std::vector<Arc> components_;
  std::vector<double> gap_after_;  // gap length following components_[i]
  std::vector<Gap> gaps_;
  Truncation truncation_;
};

/// {e^{i/(log n)^β} : 2 ≤ n ≤ n_max} together with the accumulation point 1.
/// β ∈ (0, 1], n_max ≥ 3.
CircleSet build_E_beta(double beta, long n_max);

/// Middle-gap Cantor construction on the arc [arc_start, arc_start + arc_length].
/// At generation g every interval loses its middle fraction ratios[g-1]; when
/// fewer ratios than generations are given the last one repeats. On the full
/// circle the two end intervals meet at arc_start and form a single arc.
CircleSet build_cantor(const std::vector<double>& ratios, int depth, double arc_start = 0.0,
                       double arc_length = kTwoPi);

/// r_k = 1 - 2^{-1/k}, k = 1..depth: gap fractions that close slowly.
std::vector<double> slowly_closing_ratios(int depth);

double dist_to_set(double theta, const CircleSet& E, Metric metric = Metric::chordal);

/// d(θ_k, E) at the M grid angles θ_k = 2πk/M.
std::vector<double> sample_distance(const CircleSet& E, std::size_t M, Metric metric = Metric::chordal);

/// N_E(t) = 2 #{j : |I_j| > 2t}, arclength gap lengths. 0 < t < π.
long counting_function(const CircleSet& E, double t);

/// ∫_0^π Ω(t) N_E(t) dt evaluated gap by gap as Σ_j 2∫_0^{|I_j|/2} Ω(t) dt.
/// With an antiderivative the per-gap integrals are closed form; otherwise
/// tanh-sinh quadrature (tolerates integrable endpoint singularities).
double layer_cake(const CircleSet& E, const std::function<double(double)>& omega,
                  const std::function<double(double)>& antiderivative = nullptr);

/// (2π/M) Σ_k Ω(d_arc(θ_k, E)) over grid points off E: the left-hand side of
/// the layer-cake identity for a measure-zero E.
double layer_cake_grid(const CircleSet& E, const std::function<double(double)>& omega, std::size_t M);

struct CarlesonResult {
  double value = 0.0;                 ///< Σ_j L_j (1 + log(2/L_j))
  std::optional<double> coarse_value; ///< same sum one truncation level coarser
  bool diverging = false;
};

/// ∫_{𝕋∖E} log(1/d(ζ, E)) |dζ| by the per-gap closed form for arclength
/// distance. For truncated E_β / Cantor families the flag compares against the
/// next coarser truncation (n_max/10, depth-1) and is set when the partial
/// sum still moves by more than kCarlesonCauchyTol relative.
CarlesonResult carleson_integral(const CircleSet& E);

inline constexpr double kCarlesonCauchyTol = 1e-2;

/// Rebuilds a truncated family at a different level; nullopt for sets with no
/// family (explicit points or arcs).
std::optional<CircleSet> rebuild_truncation(const CircleSet& E, long n_max_or_depth);

std::string to_string(SetFamily family);
SetFamily set_family_from_string(const std::string& name);

}  // namespace hdlab
