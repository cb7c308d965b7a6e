#include "hdlab/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "hdlab/common.hpp"

namespace hdlab {

DiscreteMeasure::DiscreteMeasure(std::vector<double> centers, std::vector<double> widths, std::vector<double> weights)
    : centers_(std::move(centers)), widths_(std::move(widths)), weights_(std::move(weights)) {
  require(!centers_.empty(), "measure has at least one cell");
  require(centers_.size() == widths_.size() && centers_.size() == weights_.size(), "cell arrays have equal length");
  for (std::size_t i = 0; i < size(); ++i) {
    require(widths_[i] > 0.0, "cell widths are positive");
    require(weights_[i] >= 0.0, "weights are nonnegative");
  }
  require(std::abs(pairwise_sum(weights_) - 1.0) <= 1e-12, "weights sum to 1");
  // Disjointness: sort the cells by start angle and compare neighbours, including the wrap.
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), 0);
  auto start = [&](std::size_t i) { return wrap_angle(centers_[i] - 0.5 * widths_[i]); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return start(a) < start(b); });
  const double slack = 1e-12;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const std::size_t a = order[k], b = order[k + 1];
    require(start(a) + widths_[a] <= start(b) + slack, "cells are pairwise disjoint");
  }
  if (order.size() > 1) {
    const std::size_t last = order.back(), first = order.front();
    require(start(last) + widths_[last] <= start(first) + kTwoPi + slack, "cells are pairwise disjoint");
  }
}

DiscreteMeasure DiscreteMeasure::uniform_on_cells(std::vector<double> centers, std::vector<double> widths) {
  const double total = pairwise_sum(widths);
  std::vector<double> w(widths.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = widths[i] / total;
  // Renormalize so the sum is 1 to rounding.
  const double s = pairwise_sum(w);
  for (double& x : w) x /= s;
  return DiscreteMeasure(std::move(centers), std::move(widths), std::move(w));
}

DiscreteMeasure discretize(const CircleSet& E, std::size_t R) {
  require(!E.empty(), "E is nonempty");
  require(R >= 8, "R ≥ 8");
  const double h = kTwoPi / static_cast<double>(R);
  std::vector<Arc> support;
  support.reserve(E.components().size());
  for (const auto& a : E.components()) {
    if (a.length > 0.0) {
      support.push_back(a);
    } else {
      support.push_back(Arc{a.start - 0.5 * h, h});
    }
  }
  // Merging thickened points can only join neighbours; reuse the set builder.
  const CircleSet cover = CircleSet::from_arcs(support);
  std::vector<double> centers, widths;
  for (const auto& a : cover.components()) {
    const auto pieces = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(a.length / h - 1e-9)));
    const double w = a.length / static_cast<double>(pieces);
    for (std::size_t i = 0; i < pieces; ++i) {
      centers.push_back(wrap_angle(a.start + (static_cast<double>(i) + 0.5) * w));
      widths.push_back(w);
    }
  }
  return DiscreteMeasure::uniform_on_cells(std::move(centers), std::move(widths));
}

namespace {

double sinc(double x) { return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

}  // namespace

std::vector<std::complex<double>> fourier_coefficients(const DiscreteMeasure& mu, std::size_t N) {
  std::vector<std::complex<double>> hat(N + 1);
  const auto& c = mu.centers();
  const auto& h = mu.widths();
  const auto& w = mu.weights();
  for (std::size_t n = 0; n <= N; ++n) {
    const double nn = static_cast<double>(n);
    std::vector<double> re(mu.size()), im(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
      const double a = w[i] * sinc(0.5 * nn * h[i]);
      re[i] = a * std::cos(nn * c[i]);
      im[i] = -a * std::sin(nn * c[i]);
    }
    hat[n] = {pairwise_sum(re), pairwise_sum(im)};
  }
  return hat;
}

double energy_fourier(const DiscreteMeasure& mu, std::size_t N, double alpha) {
  require(N >= 1, "N ≥ 1");
  require(alpha >= 0.0 && alpha < 1.0, "α ∈ [0, 1)");
  const auto hat = fourier_coefficients(mu, N);
  return pairwise_generate(1, N + 1, [&](std::size_t n) {
    return std::norm(hat[n]) / std::pow(static_cast<double>(n), 1.0 - alpha);
  });
}

namespace {

// Second antiderivative of log|t|.
double log_g(double t) { return t == 0.0 ? 0.0 : 0.5 * t * t * std::log(std::abs(t)) - 0.75 * t * t; }

// Mean of -log|x - y| for x, y uniform on collinear segments of widths a, b
// whose centres are delta apart.
double segment_energy(double delta, double a, double b) {
  const double a1 = delta - 0.5 * a, a2 = delta + 0.5 * a, b1 = -0.5 * b, b2 = 0.5 * b;
  return -(log_g(a2 - b1) - log_g(a1 - b1) - log_g(a2 - b2) + log_g(a1 - b2)) / (a * b);
}

// Mean of log(1/|ζ - ζ'|) between uniform measures on two cells.
double cell_energy(double ci, double hi, double cj, double hj) {
  double delta = std::remainder(ci - cj, kTwoPi);
  const double spread = (hi * hi + hj * hj) / 12.0;  // variance of the offset between the two points
  if (std::abs(delta) < 4.0 * (hi + hj)) {
    // Exact on the tangent line; the chord/arc ratio is smooth and enters to second order.
    const double bend = delta == 0.0 ? 0.0 : -std::log(chord(ci, cj) / std::abs(delta));
    return segment_energy(delta, hi, hj) + bend + spread / 24.0;
  }
  const double c = chord(ci, cj);
  return -std::log(c) + spread / (2.0 * c * c);
}

}  // namespace

std::vector<double> log_kernel_matrix(const DiscreteMeasure& cells) {
  const std::size_t R = cells.size();
  const auto& c = cells.centers();
  const auto& h = cells.widths();
  std::vector<double> K(R * R);
  parallel_rows(R, [&](std::size_t i) {
    for (std::size_t j = 0; j < R; ++j) K[i * R + j] = cell_energy(c[i], h[i], c[j], h[j]);
  });
  return K;
}

std::vector<double> fourier_kernel_matrix(const DiscreteMeasure& cells, std::size_t N, double alpha) {
  require(alpha >= 0.0 && alpha < 1.0, "α ∈ [0, 1)");
  const std::size_t R = cells.size();
  const auto& c = cells.centers();
  const auto& h = cells.widths();
  // K_ij = Σ_n (cos nθ_i cos nθ_j + sin nθ_i sin nθ_j) s_i(n) s_j(n) / n^{1-α}.
  std::vector<double> cs(N * R), sn(N * R), coef(N);
  for (std::size_t n = 1; n <= N; ++n) {
    const double nn = static_cast<double>(n);
    coef[n - 1] = 1.0 / std::pow(nn, 1.0 - alpha);
    for (std::size_t i = 0; i < R; ++i) {
      const double s = sinc(0.5 * nn * h[i]);
      cs[(n - 1) * R + i] = std::cos(nn * c[i]) * s;
      sn[(n - 1) * R + i] = std::sin(nn * c[i]) * s;
    }
  }
  std::vector<double> K(R * R);
  parallel_rows(R, [&](std::size_t i) {
    for (std::size_t j = i; j < R; ++j) {
      double acc = 0.0;
      for (std::size_t n = 0; n < N; ++n) {
        acc += coef[n] * (cs[n * R + i] * cs[n * R + j] + sn[n * R + i] * sn[n * R + j]);
      }
      K[i * R + j] = acc;
    }
  });
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < i; ++j) K[i * R + j] = K[j * R + i];
  return K;
}

namespace {

std::vector<double> matvec(const std::vector<double>& K, const std::vector<double>& x) {
  const std::size_t R = x.size();
  std::vector<double> y(R);
  parallel_rows(R, [&](std::size_t i) {
    const double* row = K.data() + i * R;
    y[i] = pairwise_generate(0, R, [&](std::size_t j) { return row[j] * x[j]; });
  });
  return y;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return pairwise_generate(0, a.size(), [&](std::size_t i) { return a[i] * b[i]; });
}

}  // namespace

double energy_kernel(const DiscreteMeasure& mu) {
  const auto K = log_kernel_matrix(mu);
  return dot(mu.weights(), matvec(K, mu.weights()));
}

std::size_t fourier_truncation(std::size_t R) {
  const double h = kTwoPi / static_cast<double>(R);
  return static_cast<std::size_t>(std::ceil(8.0 / h));
}

std::vector<double> project_to_simplex(const std::vector<double>& v) {
  std::vector<double> u(v);
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0;
  double tau = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    cumulative += u[k];
    const double t = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (u[k] - t > 0.0) tau = t;
  }
  std::vector<double> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = std::max(v[i] - tau, 0.0);
  return w;
}

namespace {

double projected_gradient_norm(const std::vector<double>& w, const std::vector<double>& grad) {
  std::vector<double> trial(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) trial[i] = w[i] - grad[i];
  const auto p = project_to_simplex(trial);
  double norm = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) norm = std::max(norm, std::abs(p[i] - w[i]));
  return norm;
}

std::optional<double> capacity_from_energy(double energy) {
  if (energy <= kInfiniteCapacityEnergy) return std::nullopt;
  return 1.0 / energy;
}

}  // namespace

EquilibriumResult equilibrium_on_cells(const DiscreteMeasure& cells, std::size_t R, double alpha,
                                       SolverOptions options) {
  require(alpha >= 0.0 && alpha < 1.0, "α ∈ [0, 1)");
  require(options.tol > 0.0, "tol > 0");
  const std::size_t n = cells.size();
  const auto K = alpha == 0.0 ? log_kernel_matrix(cells) : fourier_kernel_matrix(cells, fourier_truncation(R), alpha);

  std::vector<double> w = cells.weights();
  std::vector<double> Kw = matvec(K, w);
  double energy = dot(w, Kw);
  long double energy_acc = energy;

  CapacityReport report;
  report.alpha = alpha;
  report.resolution = R;
  report.cells = n;
  report.energy_history.push_back(energy);

  constexpr double kArmijo = 1e-4;
  constexpr double kMinStep = 1e-12, kMaxStep = 1e12;
  double step = 1.0;
  std::vector<double> grad(n), trial(n), d(n);

  std::size_t it = 0;
  for (; it < options.max_iter; ++it) {
    // Constant shifts of the gradient do not matter on the simplex; centring it
    // keeps grad·d free of the rounding residue in Σ d.
    const double centre = 2.0 * dot(w, Kw);
    for (std::size_t i = 0; i < n; ++i) grad[i] = 2.0 * Kw[i] - centre;
    report.projected_gradient = projected_gradient_norm(w, grad);
    if (report.projected_gradient <= options.tol) {
      report.converged = true;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) trial[i] = w[i] - step * grad[i];
    const auto p = project_to_simplex(trial);
    for (std::size_t i = 0; i < n; ++i) d[i] = p[i] - w[i];
    const auto Kd = matvec(K, d);
    const double slope = dot(grad, d);  // directional derivative, < 0 for a descent direction
    const double curvature = dot(d, Kd);
    if (!(slope < 0.0)) break;

    // E(w + λd) = E + 2λ d·Kw + λ² d·Kd is quadratic, so backtracking is exact arithmetic.
    double lambda = 1.0;
    double decrease = lambda * slope + lambda * lambda * curvature;
    int halvings = 0;
    while (decrease > kArmijo * lambda * slope && halvings < 60) {
      lambda *= 0.5;
      decrease = lambda * slope + lambda * lambda * curvature;
      ++halvings;
    }
    if (!(decrease < 0.0)) break;
    std::vector<double> w_next(n), Kw_next(n);
    for (std::size_t i = 0; i < n; ++i) {
      w_next[i] = w[i] + lambda * d[i];
      Kw_next[i] = Kw[i] + lambda * Kd[i];
    }
    w = std::move(w_next);
    Kw = std::move(Kw_next);
    // Late decreases fall below one ulp of the energy; accumulate them wider.
    energy_acc += decrease;
    energy = static_cast<double>(energy_acc);
    report.energy_history.push_back(energy);

    const double dd = dot(d, d);
    step = curvature > 0.0 ? std::clamp(dd / (2.0 * curvature), kMinStep, kMaxStep) : kMaxStep;
  }
  report.iterations = it;
  report.energy = energy;
  report.capacity = capacity_from_energy(energy);

  // Renormalize against drift before building the measure.
  for (double& x : w) x = std::max(x, 0.0);
  const double s = pairwise_sum(w);
  for (double& x : w) x /= s;
  return EquilibriumResult{DiscreteMeasure(cells.centers(), cells.widths(), std::move(w)), std::move(report)};
}

EquilibriumResult equilibrium_measure(const CircleSet& E, std::size_t R, double alpha, SolverOptions options) {
  require(alpha >= 0.0 && alpha < 1.0, "α ∈ [0, 1)");
  return equilibrium_on_cells(discretize(E, R), R, alpha, options);
}

CapacityEstimate capacity_of(const CircleSet& E, double alpha, std::size_t R, SolverOptions options) {
  require(alpha >= 0.0 && alpha < 1.0, "α ∈ [0, 1)");
  const auto coarse = equilibrium_measure(E, R, alpha, options);
  auto fine = equilibrium_measure(E, 2 * R, alpha, options);
  CapacityEstimate est;
  est.coarse_energy = coarse.report.energy;
  est.gap = std::abs(fine.report.energy - coarse.report.energy);
  est.fine = std::move(fine.report);
  return est;
}

}  // namespace hdlab
