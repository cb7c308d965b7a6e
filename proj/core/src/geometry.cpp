#include "hdlab/geometry.hpp"

#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "hdlab/common.hpp"

namespace hdlab {

namespace {

std::vector<Arc> merge_arcs(std::vector<Arc> arcs) {
  for (auto& a : arcs) {
    require(std::isfinite(a.start) && std::isfinite(a.length) && a.length >= 0.0, "arc lengths are finite and ≥ 0");
    if (a.length >= kTwoPi) return {Arc{0.0, kTwoPi}};
    a.start = wrap_angle(a.start);
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return a.start < b.start || (a.start == b.start && a.length > b.length);
  });
  std::vector<Arc> merged;
  for (const auto& a : arcs) {
    if (!merged.empty() && a.start <= merged.back().end()) {
      merged.back().length = std::max(merged.back().end(), a.end()) - merged.back().start;
    } else {
      merged.push_back(a);
    }
  }
  // The last arc may run through 2π into the first ones.
  while (merged.size() > 1 && merged.back().end() >= merged.front().start + kTwoPi) {
    Arc& last = merged.back();
    last.length = std::max(last.end(), merged.front().end() + kTwoPi) - last.start;
    merged.erase(merged.begin());
  }
  if (!merged.empty() && merged.front().length >= kTwoPi) return {Arc{0.0, kTwoPi}};
  return merged;
}

}  // namespace

CircleSet CircleSet::from_points(const std::vector<double>& angles, Truncation truncation) {
  std::vector<Arc> arcs;
  arcs.reserve(angles.size());
  for (double a : angles) arcs.push_back(Arc{a, 0.0});
  CircleSet s;
  s.kind_ = SetKind::points;
  s.components_ = merge_arcs(std::move(arcs));
  s.truncation_ = std::move(truncation);
  s.compute_gaps();
  return s;
}

CircleSet CircleSet::from_arcs(const std::vector<Arc>& arcs, Truncation truncation) {
  CircleSet s;
  s.components_ = merge_arcs(arcs);
  const bool all_points =
      std::all_of(s.components_.begin(), s.components_.end(), [](const Arc& a) { return a.length == 0.0; });
  s.kind_ = all_points ? SetKind::points : SetKind::intervals;
  if (truncation.family == SetFamily::finite && !all_points) truncation.family = SetFamily::arcs;
  s.truncation_ = std::move(truncation);
  s.compute_gaps();
  return s;
}

CircleSet CircleSet::full_circle() {
  Truncation t;
  t.family = SetFamily::full_circle;
  return from_arcs({Arc{0.0, kTwoPi}}, t);
}

bool CircleSet::is_full_circle() const {
  return components_.size() == 1 && components_.front().length >= kTwoPi;
}

void CircleSet::compute_gaps() {
  gaps_.clear();
  gap_after_.assign(components_.size(), 0.0);
  if (components_.empty() || is_full_circle()) return;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const double next_start =
        i + 1 < components_.size() ? components_[i + 1].start : components_.front().start + kTwoPi;
    const double len = next_start - components_[i].end();
    gap_after_[i] = std::max(len, 0.0);
    if (len > 0.0) gaps_.push_back(Gap{wrap_angle(components_[i].end()), len, 0});
  }
  std::sort(gaps_.begin(), gaps_.end(), [](const Gap& a, const Gap& b) { return a.start < b.start; });
}

void CircleSet::tag_gap_generations(const std::function<int(const Gap&)>& generation_of) {
  for (auto& g : gaps_) g.generation = generation_of(g);
}

std::vector<double> CircleSet::angles() const {
  std::vector<double> out;
  for (const auto& a : components_) {
    out.push_back(a.start);
    if (a.length > 0.0) out.push_back(wrap_angle(a.end()));
  }
  return out;
}

double CircleSet::total_gap_length() const {
  std::vector<double> lens(gaps_.size());
  std::transform(gaps_.begin(), gaps_.end(), lens.begin(), [](const Gap& g) { return g.length; });
  return pairwise_sum(lens);
}

double CircleSet::measure() const {
  std::vector<double> lens(components_.size());
  std::transform(components_.begin(), components_.end(), lens.begin(), [](const Arc& a) { return a.length; });
  return pairwise_sum(lens);
}

double CircleSet::distance(double theta, Metric metric) const {
  require(!components_.empty(), "E is nonempty");
  if (is_full_circle()) return 0.0;
  const double t = wrap_angle(theta);
  // Last component starting at or before t; wraps to the final component.
  auto it = std::upper_bound(components_.begin(), components_.end(), t,
                             [](double value, const Arc& a) { return value < a.start; });
  std::size_t idx;
  double tt = t;
  if (it == components_.begin()) {
    idx = components_.size() - 1;
    tt = t + kTwoPi;
  } else {
    idx = static_cast<std::size_t>(it - components_.begin()) - 1;
  }
  const Arc& comp = components_[idx];
  double arc_dist;
  if (tt <= comp.end()) {
    arc_dist = 0.0;
  } else {
    // The final component may wrap through 2π and cover t from the left.
    const Arc& last = components_.back();
    if (t + kTwoPi <= last.end()) return 0.0;
    const double x = tt - comp.end();
    const double gap = gap_after_[idx];
    arc_dist = std::max(0.0, std::min(x, gap - x));
  }
  if (metric == Metric::arclength) return arc_dist;
  return 2.0 * std::sin(0.5 * arc_dist);
}

CircleSet build_E_beta(double beta, long n_max) {
  require(beta > 0.0, "β > 0");
  require(beta <= 1.0, "β ≤ 1");
  require(n_max >= 3, "n_max ≥ 3");
  std::vector<double> angles;
  angles.reserve(static_cast<std::size_t>(n_max));
  angles.push_back(0.0);
  for (long n = 2; n <= n_max; ++n) angles.push_back(1.0 / std::pow(std::log(static_cast<double>(n)), beta));
  Truncation t;
  t.family = SetFamily::e_beta;
  t.beta = beta;
  t.n_max = n_max;
  return CircleSet::from_points(angles, t);
}

std::vector<double> slowly_closing_ratios(int depth) {
  require(depth >= 1, "depth ≥ 1");
  std::vector<double> r(static_cast<std::size_t>(depth));
  for (int k = 1; k <= depth; ++k) r[static_cast<std::size_t>(k - 1)] = 1.0 - std::pow(2.0, -1.0 / k);
  return r;
}

CircleSet build_cantor(const std::vector<double>& ratios, int depth, double arc_start, double arc_length) {
  require(depth >= 1, "depth ≥ 1");
  require(!ratios.empty(), "at least one ratio");
  for (double r : ratios) require(r > 0.0 && r < 1.0, "ratio ∈ (0, 1)");
  require(arc_length > 0.0 && arc_length <= kTwoPi, "arc length ∈ (0, 2π]");

  std::vector<Arc> intervals{Arc{arc_start, arc_length}};
  std::vector<Gap> made;
  for (int g = 1; g <= depth; ++g) {
    const double r = ratios[std::min<std::size_t>(static_cast<std::size_t>(g - 1), ratios.size() - 1)];
    std::vector<Arc> next;
    next.reserve(intervals.size() * 2);
    for (const auto& iv : intervals) {
      const double side = 0.5 * (1.0 - r) * iv.length;
      next.push_back(Arc{iv.start, side});
      next.push_back(Arc{iv.start + iv.length - side, side});
      made.push_back(Gap{wrap_angle(iv.start + side), r * iv.length, g});
    }
    intervals = std::move(next);
  }
  Truncation t;
  t.family = SetFamily::cantor;
  t.ratios = ratios;
  t.depth = depth;
  t.arc_start = arc_start;
  t.arc_length = arc_length;
  CircleSet s = CircleSet::from_arcs(intervals, t);
  std::sort(made.begin(), made.end(), [](const Gap& a, const Gap& b) { return a.start < b.start; });
  s.tag_gap_generations([&](const Gap& gap) {
    auto it = std::lower_bound(made.begin(), made.end(), gap.start - 1e-12,
                               [](const Gap& a, double v) { return a.start < v; });
    if (it != made.end() && std::abs(it->start - gap.start) <= 1e-12) return it->generation;
    return 0;
  });
  return s;
}

double dist_to_set(double theta, const CircleSet& E, Metric metric) { return E.distance(theta, metric); }

std::vector<double> sample_distance(const CircleSet& E, std::size_t M, Metric metric) {
  std::vector<double> d(M);
  const double h = kTwoPi / static_cast<double>(M);
  for (std::size_t k = 0; k < M; ++k) d[k] = E.distance(h * static_cast<double>(k), metric);
  return d;
}

long counting_function(const CircleSet& E, double t) {
  require(t > 0.0, "t > 0");
  require(t < kPi, "t < π");
  long count = 0;
  for (const auto& g : E.gaps()) {
    if (g.length > 2.0 * t) ++count;
  }
  return 2 * count;
}

double layer_cake(const CircleSet& E, const std::function<double(double)>& omega,
                  const std::function<double(double)>& antiderivative) {
  const auto& gaps = E.gaps();
  std::vector<double> parts(gaps.size());
  boost::math::quadrature::tanh_sinh<double> integrator;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    const double half = 0.5 * gaps[i].length;
    if (antiderivative) {
      parts[i] = 2.0 * (antiderivative(half) - antiderivative(0.0));
    } else {
      parts[i] = 2.0 * integrator.integrate(omega, 0.0, half);
    }
  }
  return pairwise_sum(parts);
}

double layer_cake_grid(const CircleSet& E, const std::function<double(double)>& omega, std::size_t M) {
  require(M >= 4, "M ≥ 4");
  const double h = kTwoPi / static_cast<double>(M);
  const double total = pairwise_generate(0, M, [&](std::size_t k) {
    const double d = E.distance(h * static_cast<double>(k), Metric::arclength);
    return d > 0.0 ? omega(d) : 0.0;
  });
  return total * h;
}

namespace {

double carleson_sum(const CircleSet& E) {
  const auto& gaps = E.gaps();
  return pairwise_generate(0, gaps.size(), [&](std::size_t i) {
    const double L = gaps[i].length;
    return L * (1.0 + std::log(2.0 / L));
  });
}

}  // namespace

std::optional<CircleSet> rebuild_truncation(const CircleSet& E, long level) {
  const auto& t = E.truncation();
  switch (t.family) {
    case SetFamily::e_beta:
      if (level < 3) return std::nullopt;
      return build_E_beta(t.beta, level);
    case SetFamily::cantor:
      if (level < 1) return std::nullopt;
      return build_cantor(t.ratios, static_cast<int>(level), t.arc_start, t.arc_length);
    default:
      return std::nullopt;
  }
}

CarlesonResult carleson_integral(const CircleSet& E) {
  require(!E.empty(), "E is nonempty");
  CarlesonResult r;
  r.value = carleson_sum(E);
  const auto& t = E.truncation();
  std::optional<CircleSet> coarse;
  if (t.family == SetFamily::e_beta) coarse = rebuild_truncation(E, t.n_max / 10);
  if (t.family == SetFamily::cantor) coarse = rebuild_truncation(E, t.depth - 1);
  if (coarse) {
    r.coarse_value = carleson_sum(*coarse);
    r.diverging = (r.value - *r.coarse_value) > kCarlesonCauchyTol * std::abs(r.value);
  }
  return r;
}

std::string to_string(SetFamily family) {
  switch (family) {
    case SetFamily::finite: return "finite";
    case SetFamily::e_beta: return "E_beta";
    case SetFamily::cantor: return "cantor";
    case SetFamily::arcs: return "arcs";
    case SetFamily::full_circle: return "full_circle";
  }
  return "finite";
}

SetFamily set_family_from_string(const std::string& name) {
  if (name == "finite") return SetFamily::finite;
  if (name == "E_beta") return SetFamily::e_beta;
  if (name == "cantor") return SetFamily::cantor;
  if (name == "arcs") return SetFamily::arcs;
  if (name == "full_circle") return SetFamily::full_circle;
  throw ValidationError("unknown set family \"" + name + "\"");
}

}  // namespace hdlab
