#include "hdlab/certify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "hdlab/common.hpp"
#include "hdlab/norms.hpp"

namespace hdlab {

GridFunction build_test_function(const CircleSet& E, double beta, std::size_t M) {
  require(!E.empty(), "E is nonempty");
  require(beta > 0.0 && beta <= 1.0, "β ∈ (0, 1]");
  auto d = sample_distance(E, M);
  for (double& x : d) x = std::pow(x, beta);
  return GridFunction::from_real(std::move(d));
}

GridFunction build_mollified_function(const CircleSet& E, double width, std::size_t M) {
  require(!E.empty(), "E is nonempty");
  require(width > 0.0, "mollify width > 0");
  std::vector<double> f(M);
  const double h = kTwoPi / static_cast<double>(M);
  const double w2 = width * width;
  for (std::size_t k = 0; k < M; ++k) {
    const double theta = h * static_cast<double>(k);
    const double d = E.distance(theta, Metric::arclength);
    if (d == 0.0) {
      f[k] = 0.0;
      continue;
    }
    // Locate the gap containing θ: its left end is θ minus the distance to the
    // left neighbour, found from the gap list.
    const auto& gaps = E.gaps();
    auto it = std::upper_bound(gaps.begin(), gaps.end(), theta,
                               [](double v, const Gap& g) { return v < g.start; });
    const Gap& gap = it == gaps.begin() ? gaps.back() : *(it - 1);
    double x = theta - gap.start;
    if (x < 0.0) x += kTwoPi;
    const double L = gap.length;
    const double rho = x * (L - x) / L;
    f[k] = rho * rho / (rho * rho + w2);
  }
  return GridFunction::from_real(std::move(f));
}

SzegoResult szego_check(const GridFunction& f, const std::vector<double>& ladder) {
  validate_eps_ladder(ladder);
  require(ladder.size() >= 2, "ε ladder has at least two rungs");
  const auto mod = f.modulus();
  require(std::any_of(mod.begin(), mod.end(), [](double v) { return v > 0.0; }), "f is not identically 0");
  SzegoResult r;
  r.eps = ladder;
  for (double eps : ladder) {
    const double mean = pairwise_generate(0, mod.size(), [&](std::size_t k) { return std::log(mod[k] + eps); }) /
                        static_cast<double>(mod.size());
    r.values.push_back(kTwoPi * mean);
  }
  const double last = r.values.back();
  const double prev = r.values[r.values.size() - 2];
  r.diverging = std::abs(last - prev) > kSzegoCauchyTol * std::max(1.0, std::abs(last));
  return r;
}

namespace {

using Sums = std::array<double, 3>;

Sums add(const Sums& a, const Sums& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

template <class Term>
Sums pairwise_triple(std::size_t begin, std::size_t end, const Term& term) {
  if (end - begin <= 64) {
    Sums s{0.0, 0.0, 0.0};
    for (std::size_t i = begin; i < end; ++i) s = add(s, term(i));
    return s;
  }
  const std::size_t mid = begin + (end - begin) / 2;
  return add(pairwise_triple(begin, mid, term), pairwise_triple(mid, end, term));
}

}  // namespace

GammaSplit gamma_split(std::span<const cplx> g, std::span<const cplx> p, std::span<const cplx> q,
                       std::span<const double> key, std::span<const cplx> dg, std::span<const cplx> dp,
                       std::span<const cplx> dq) {
  const std::size_t M = g.size();
  require(p.size() == M && q.size() == M && key.size() == M && dg.size() == M && dp.size() == M && dq.size() == M,
          "split inputs share the same grid");
  const auto kernel = inverse_chord_sq_table(M);
  std::vector<double> p2(M), q2(M);
  for (std::size_t k = 0; k < M; ++k) {
    p2[k] = std::norm(p[k]);
    q2[k] = std::norm(q[k]);
  }
  std::vector<Sums> rows(M);
  parallel_rows(M, [&](std::size_t j) {
    const Sums off = pairwise_triple(j + 1, M, [&](std::size_t k) -> Sums {
      const double K = kernel[k - j];
      const double dG = std::norm(g[j] - g[k]) * K;
      const double dP = std::norm(p[j] - p[k]) * K;
      const double dQ = std::norm(q[j] - q[k]) * K;
      double a = 0.0, b = 0.0;
      if (key[k] <= key[j]) {  // (ζ, ζ') = (j, k) ∈ Γ
        a += p2[j] * dQ;
        b += q2[k] * dP;
      }
      if (key[j] <= key[k]) {  // (ζ, ζ') = (k, j) ∈ Γ
        a += p2[k] * dQ;
        b += q2[j] * dP;
      }
      return {2.0 * dG, a, b};
    });
    const Sums diag{std::norm(dg[j]), p2[j] * std::norm(dq[j]), q2[j] * std::norm(dp[j])};
    rows[j] = add(off, diag);
  });
  std::array<std::vector<double>, 3> parts;
  for (auto& v : parts) v.resize(M);
  for (std::size_t j = 0; j < M; ++j)
    for (int c = 0; c < 3; ++c) parts[static_cast<std::size_t>(c)][j] = rows[j][static_cast<std::size_t>(c)];
  const double h = kTwoPi / static_cast<double>(M);
  const double m2 = static_cast<double>(M) * static_cast<double>(M);
  GammaSplit out;
  out.douglas = pairwise_sum(parts[0]) / m2;
  out.a_eps = pairwise_sum(parts[1]) * h * h;
  out.b_eps = pairwise_sum(parts[2]) * h * h;
  return out;
}

double douglas_energy_symmetric(const GridFunction& g) {
  const std::size_t M = g.size();
  const auto kernel = inverse_chord_sq_table(M);
  const GridFunction dg = spectral_derivative(g);
  std::vector<double> rows(M);
  parallel_rows(M, [&](std::size_t j) {
    const double off = pairwise_generate(j + 1, M, [&](std::size_t k) { return std::norm(g[j] - g[k]) * kernel[k - j]; });
    rows[j] = 2.0 * off + std::norm(dg[j]);
  });
  return pairwise_sum(rows) / (static_cast<double>(M) * static_cast<double>(M));
}

double CertificateReport::decay_ratio() const {
  if (rows.empty() || rows.front().total_norm == 0.0) return 1.0;
  return rows.back().total_norm / rows.front().total_norm;
}

std::string decay_verdict(const CertificateReport& report) {
  if (report.rows.size() < 2) return "inconclusive";
  const double ratio = report.decay_ratio();
  if (ratio < kDecayFactor) return "decay";
  if (ratio >= kNoDecayFactor) return "no-decay";
  return "inconclusive";
}

namespace {

int spectral_bandwidth(std::size_t M) { return static_cast<int>(M / 2) - 1; }

struct RowNorms {
  double l2_sq;
  double dirichlet;
};

RowNorms spectral_components(const GridFunction& g) {
  const auto s = analyze(g, spectral_bandwidth(g.size()));
  return {l2_norm_sq(s), dirichlet_energy_spectral(s)};
}

void fill_norms(CertificateRow& row, const GridFunction& product) {
  const auto n = spectral_components(product);
  row.l2_sq = n.l2_sq;
  row.dirichlet_energy = n.dirichlet;
  row.total_norm = std::sqrt(n.l2_sq + n.dirichlet);
}

}  // namespace

CertificateReport certificate_thm2(const GridFunction& abs_f, const std::vector<double>& eps,
                                   CertificateOptions options) {
  validate_eps_ladder(eps);
  require(abs_f.is_real(), "|f| samples are real");
  const std::size_t M = abs_f.size();
  const auto f = abs_f.real_part();
  for (double v : f) require(v >= 0.0, "|f| ≥ 0");

  CertificateReport report;
  report.kind = CertificateKind::thm2;
  report.M = M;
  report.expectation = "decay";

  std::vector<cplx> q(M), dq(M);
  const GridFunction df = spectral_derivative(abs_f);
  for (std::size_t k = 0; k < M; ++k) {
    q[k] = f[k] * f[k];
    dq[k] = 2.0 * f[k] * df[k].real();  // (f²)' by the chain rule
  }
  const GridFunction q_grid(q);
  if (options.split) report.dirichlet_f = douglas_energy_symmetric(abs_f);

  for (double e : eps) {
    CertificateRow row;
    row.eps = e;
    const auto cert = p_eps_thm2(abs_f, e);
    row.m_eps = cert.m_eps;
    row.p_at_zero = cert.p.value_at_zero.real();
    const GridFunction product = pointwise_mul(cert.p.boundary, q_grid);
    fill_norms(row, product);
    const auto F = f_eps_modulus_thm2(abs_f, e);
    row.dirichlet_f_eps = dirichlet_energy_spectral(analyze(F.boundary, spectral_bandwidth(M)));
    if (options.split) {
      const GridFunction dg = spectral_derivative(product);
      const GridFunction dp = spectral_derivative(cert.p.boundary);
      const auto split = gamma_split(product.samples(), cert.p.boundary.samples(), q, f, dg.samples(),
                                     dp.samples(), dq);
      row.a_eps = split.a_eps;
      row.b_eps = split.b_eps;
      row.douglas = split.douglas;
      row.bound = 4.0 * std::exp(-2.0 * cert.m_eps) * 4.0 * kPi * kPi * *report.dirichlet_f;
    }
    report.rows.push_back(row);
  }
  report.verdict = decay_verdict(report);
  return report;
}

CertificateReport certificate_thm3(const CircleSet& E, const EpsilonSchedule& schedule, std::size_t M,
                                   CertificateOptions options) {
  require(!E.empty(), "E is nonempty");
  validate_thm3_exponents(schedule.beta, schedule.eta, schedule.gamma);
  validate_eps_ladder(schedule.values);
  require(is_power_of_two(M) && M >= 4, "M is a power of two ≥ 4");

  CertificateReport report;
  report.kind = CertificateKind::thm3;
  report.M = M;
  report.beta = schedule.beta;
  report.gamma = schedule.gamma;
  report.eta = schedule.eta;
  report.set_descriptor = describe(E);
  report.expectation = "decay";

  const auto dist = sample_distance(E, M);
  const GridFunction f = build_test_function(E, schedule.beta, M);
  const GridFunction df = spectral_derivative(f);
  const double spacing = kTwoPi / static_cast<double>(M);

  for (double e : schedule.values) {
    if (std::pow(e, 1.0 / schedule.gamma) < spacing) {
      std::ostringstream msg;
      msg << "ε = " << e << ": ε^{1/γ} = " << std::pow(e, 1.0 / schedule.gamma)
          << " is below the grid spacing " << spacing << "; decay may be under-resolved near E";
      report.warnings.push_back(msg.str());
    }
    CertificateRow row;
    row.eps = e;
    const auto cert = p_eps_thm3(dist, schedule.gamma, e);
    row.m_eps = cert.m_eps;
    row.p_at_zero = cert.p.value_at_zero.real();
    const GridFunction product = pointwise_mul(cert.p.boundary, f);
    fill_norms(row, product);
    if (options.split) {
      const GridFunction dg = spectral_derivative(product);
      const GridFunction dp = spectral_derivative(cert.p.boundary);
      const auto split =
          gamma_split(product.samples(), cert.p.boundary.samples(), f.samples(), dist, dg.samples(), dp.samples(),
                      df.samples());
      row.a_eps = split.a_eps;
      row.b_eps = split.b_eps;
      row.douglas = split.douglas;
      row.bound = cert.m_eps * std::exp(-2.0 * cert.m_eps);
    }
    report.rows.push_back(row);
  }
  report.verdict = decay_verdict(report);
  return report;
}

Classification classify_set(const CircleSet& E, std::size_t R, double alpha) {
  Classification c;
  c.set_descriptor = describe(E);
  c.carleson = carleson_integral(E);
  c.capacity = capacity_of(E, alpha, R);
  c.zero_capacity = c.capacity.fine.capacity.has_value() &&
                    c.capacity.fine.energy - c.capacity.coarse_energy > kZeroCapacityGrowth;
  return c;
}

const std::vector<std::string>& known_batteries() {
  static const std::vector<std::string> names{"smoke", "thm2", "thm3", "thm3-Ebeta", "negative", "classify"};
  return names;
}

std::string describe(const CircleSet& E) {
  std::ostringstream os;
  const auto& t = E.truncation();
  switch (t.family) {
    case SetFamily::e_beta:
      os << "E_beta(beta=" << t.beta << ", n_max=" << t.n_max << ")";
      break;
    case SetFamily::cantor:
      os << "cantor(depth=" << t.depth << ", ratios=" << t.ratios.size() << ")";
      break;
    case SetFamily::full_circle:
      os << "full_circle";
      break;
    case SetFamily::arcs:
      os << "arcs(" << E.components().size() << ")";
      break;
    case SetFamily::finite:
      os << "points(" << E.components().size() << ")";
      break;
  }
  return os.str();
}

namespace {

CertificateReport constant_one_thm2(const SuiteConfig& config) {
  auto r = certificate_thm2(GridFunction::constant(config.M, 1.0), config.eps, {config.split});
  r.label = "negative/f≡1";
  r.set_descriptor = "empty (f ≡ 1)";
  r.expectation = "no-decay";
  return r;
}

CertificateReport single_point_thm3(const SuiteConfig& config) {
  EpsilonSchedule s{config.eps, config.gamma, config.beta, config.eta};
  auto r = certificate_thm3(CircleSet::from_points({0.0}), s, config.M, {config.split});
  r.label = "negative/E={1}";
  r.expectation = "no-decay";
  return r;
}

CertificateReport thm3_on(const CircleSet& E, const SuiteConfig& config, const std::string& label) {
  EpsilonSchedule s{config.eps, config.gamma, config.beta, config.eta};
  auto r = certificate_thm3(E, s, config.M, {config.split});
  r.label = label;
  return r;
}

CertificateReport thm2_on(const CircleSet& E, const SuiteConfig& config) {
  auto r = certificate_thm2(build_mollified_function(E, config.mollify_width, config.M), config.eps, {config.split});
  r.label = "thm2";
  r.set_descriptor = describe(E);
  r.mollify_width = config.mollify_width;
  return r;
}

}  // namespace

SuiteBundle run_suite(const SuiteConfig& config) {
  const auto& known = known_batteries();
  for (const auto& b : config.batteries) {
    require(std::find(known.begin(), known.end(), b) != known.end(), "battery \"" + b + "\" is known");
  }
  validate_eps_ladder(config.eps);
  require(is_power_of_two(config.M) && config.M >= 4, "M is a power of two ≥ 4");
  const CircleSet E = config.set ? *config.set : build_E_beta(1.0, 10000);

  SuiteBundle bundle;
  for (const auto& b : config.batteries) {
    if (b == "smoke") {
      bundle.reports.push_back(constant_one_thm2(config));
      bundle.reports.back().label = "smoke/f≡1";
      bundle.reports.push_back(single_point_thm3(config));
      bundle.reports.back().label = "smoke/E={1}";
    } else if (b == "thm2") {
      bundle.reports.push_back(thm2_on(E, config));
    } else if (b == "thm3") {
      bundle.reports.push_back(thm3_on(E, config, "thm3"));
    } else if (b == "thm3-Ebeta") {
      bundle.reports.push_back(thm3_on(build_E_beta(1.0, 10000), config, "thm3-Ebeta"));
    } else if (b == "negative") {
      bundle.reports.push_back(constant_one_thm2(config));
      bundle.reports.push_back(single_point_thm3(config));
    } else if (b == "classify") {
      bundle.classifications.push_back(classify_set(E, config.resolution));
    }
  }
  return bundle;
}

}  // namespace hdlab
