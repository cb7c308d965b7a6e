// Acceptance checks 1-11. Each prints one PASS/FAIL line with the measured
// quantities; `acceptance --criterion N` runs a single check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>

#include "hdlab/capacity.hpp"
#include "hdlab/certify.hpp"
#include "hdlab/norms.hpp"
#include "hdlab/outer.hpp"
#include "support.hpp"

using namespace hdlab;
using oracle::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (ok ? "" : " [FAILED]");
  }
};

std::string fmt(double x, int digits = 4) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool non_increasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return true;
}

const std::vector<double> kDecades = EpsilonSchedule::default_decades();

// 1 -------------------------------------------------------------------------
void norm_identities(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> deg(1, 8);
  double worst_rel = 0.0, worst_local = 0.0, worst_parseval = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int N = deg(rng);
    const auto c = oracle::random_coeffs(rng, N);
    const GridFunction g(oracle::sample_poly(c, 4096));
    const FourierSeries s(N, c);
    const double spectral = dirichlet_energy_spectral(s);
    const double douglas = douglas_energy(g);
    const auto local = local_dirichlet_all(g);
    long double mean = 0.0;
    for (double v : local) mean += v;
    mean /= local.size();
    double l2_grid = 0.0;
    for (const auto& z : g.samples()) l2_grid += std::norm(z) / 4096.0;
    worst_rel = std::max(worst_rel, oracle::rel(douglas, spectral));
    worst_local = std::max(worst_local, oracle::rel(static_cast<double>(mean), douglas));
    worst_parseval = std::max(worst_parseval, oracle::rel(l2_grid, l2_norm_sq(s)));
  }
  const double secs = seconds_since(t0);
  o.check(worst_rel <= 1e-3, "spectral vs Douglas max rel " + fmt(worst_rel) + " (≤ 1e-3)");
  o.check(worst_local <= 1e-10, "local mean vs double integral " + fmt(worst_local) + " (≤ 1e-10)");
  o.check(worst_parseval <= 1e-10, "Parseval " + fmt(worst_parseval) + " (≤ 1e-10)");
  o.check(secs < 60.0, "runtime " + fmt(secs) + " s (< 60 s)");
}

// 2 -------------------------------------------------------------------------
void douglas_identity(Outcome& o) {
  const auto z = GridFunction::sample(4096, [](double t) { return std::polar(1.0, t); });
  const double d = douglas_energy(z);
  o.check(std::abs(d - 1.0) <= 1e-12, "D(ζ) = " + fmt(d) + ", |D - 1| = " + fmt(std::abs(d - 1.0)));
  bool ok = true;
  for (int n = -8; n <= 8; ++n) ok = ok && dirichlet_energy_spectral(FourierSeries::monomial(n)) == std::abs(n);
  o.check(ok, "D(ζ^n) = |n| for n ∈ [-8, 8]");
}

// 3 -------------------------------------------------------------------------
void energy_identity(Outcome& o) {
  const std::size_t R = 512;
  const std::size_t N = fourier_truncation(R);
  double worst = 0.0;
  for (const auto& arcs : std::vector<std::vector<Arc>>{{{0.0, 0.5}}, {{1.0, pi / 2}}, {{2.0, pi}}, {{0.3, 4.0}},
                                                        {{0.0, 0.4}, {2.5, 0.8}}}) {
    const auto mu = discretize(CircleSet::from_arcs(arcs), R);
    worst = std::max(worst, oracle::rel(energy_kernel(mu), energy_fourier(mu, N, 0.0)));
  }
  o.check(worst <= 1e-2, "kernel vs Fourier max rel " + fmt(worst) + " on 5 arc sets (≤ 1e-2)");
  const double full = energy_kernel(discretize(CircleSet::full_circle(), R));
  o.check(std::abs(full) <= 1e-3, "full-circle uniform |I| = " + fmt(std::abs(full)) + " at R = 512 (≤ 1e-3)");
}

// 4 -------------------------------------------------------------------------
void equilibrium_solver(Outcome& o) {
  bool monotone = true;
  const auto full = equilibrium_measure(CircleSet::full_circle(), 512);
  monotone = monotone && non_increasing(full.report.energy_history);
  double dev = 0.0;
  for (double w : full.measure.weights()) dev = std::max(dev, std::abs(w - 1.0 / full.measure.size()));
  o.check(dev <= 1e-6, "full-circle weight deviation " + fmt(dev) + " (≤ 1e-6)");
  o.check(full.report.energy <= 1e-6, "full-circle energy " + fmt(full.report.energy) + " (≤ 1e-6)");
  double worst = 0.0;
  for (const auto& arcs : std::vector<std::vector<Arc>>{{{0.0, pi}}, {{1.0, 1.0}}, {{0.0, 0.5}, {3.0, 1.5}}}) {
    const auto E = CircleSet::from_arcs(arcs);
    const auto a = equilibrium_measure(E, 512), b = equilibrium_measure(E, 1024);
    monotone = monotone && non_increasing(a.report.energy_history) && non_increasing(b.report.energy_history);
    worst = std::max(worst, oracle::rel(b.report.energy, a.report.energy));
  }
  for (int d : {4, 8}) {
    const auto r = equilibrium_measure(build_cantor(slowly_closing_ratios(d), d), 512).report;
    monotone = monotone && non_increasing(r.energy_history);
  }
  o.check(worst <= 1e-2, "arc energies 512 vs 1024 max rel " + fmt(worst) + " (≤ 1e-2)");
  o.check(monotone, "energy non-increasing across iterations on every run");
}

// 5 -------------------------------------------------------------------------
void capacity_trends(Outcome& o) {
  const auto two = CircleSet::from_points({0.0, pi});
  double worst = 0.0, prev = equilibrium_measure(two, 256).report.energy;
  std::string incs;
  for (std::size_t R : {512u, 1024u, 2048u}) {
    const double e = equilibrium_measure(two, R).report.energy;
    const double inc = e - prev;
    incs += (incs.empty() ? "" : ", ") + fmt(inc);
    worst = std::max(worst, std::abs(inc - std::log(2.0)) / std::log(2.0));
    prev = e;
  }
  o.check(worst <= 0.2, "two-point increments per halving {" + incs + "} vs log 2 = " + fmt(std::log(2.0)) +
                            " max rel dev " + fmt(worst) + " (≤ 0.2)");
  const std::vector<std::pair<std::vector<Arc>, std::vector<Arc>>> pairs{
      {{{0.0, 0.5}}, {{0.0, 1.0}}},
      {{{1.0, 0.3}}, {{1.0, 0.3}, {3.0, 0.3}}},
      {{{2.0, 1.0}}, {{1.5, 2.0}}},
      {{{0.0, 0.2}, {2.0, 0.2}}, {{0.0, 0.2}, {2.0, 0.2}, {4.0, 0.2}}},
      {{{5.0, 0.8}}, {{4.5, 2.0}}},
  };
  int nested_ok = 0;
  for (const auto& [small, big] : pairs) {
    const double es = equilibrium_measure(CircleSet::from_arcs(small), 512).report.energy;
    const double eb = equilibrium_measure(CircleSet::from_arcs(big), 512).report.energy;
    nested_ok += es >= eb;
  }
  o.check(nested_ok == 5, "nested monotonicity " + std::to_string(nested_ok) + "/5 pairs");
  // Each adjacent pair of depths shares a resolution fine enough to split every
  // interval of the shallower set into several cells.
  const auto cantor_energy = [](int d, std::size_t R) {
    return equilibrium_measure(build_cantor(slowly_closing_ratios(d), d), R).report.energy;
  };
  const double c4 = cantor_energy(4, 8192), c8a = cantor_energy(8, 8192);
  const double c8b = cantor_energy(8, 32768), c12 = cantor_energy(12, 32768);
  o.check(c4 < c8a && c8b < c12, "Cantor energy depth 4 < 8 at R=8192: " + fmt(c4, 7) + " < " + fmt(c8a, 7) +
                                      "; depth 8 < 12 at R=32768: " + fmt(c8b, 7) + " < " + fmt(c12, 7));
}

// 6 -------------------------------------------------------------------------
void carleson_classification(Outcome& o) {
  const double v = carleson_integral(CircleSet::from_points({0.0, pi})).value;
  const double exact = 2 * pi * (1 + std::log(2 / pi));
  o.check(std::abs(v - exact) <= 1e-12, "E = {1, -1}: |value - 2π(1 + log(2/π))| = " + fmt(std::abs(v - exact)));
  std::vector<double> vals;
  bool flagged = true;
  for (long n : {1000L, 10000L, 100000L}) {
    const auto r = carleson_integral(build_E_beta(1.0, n));
    vals.push_back(r.value);
    flagged = flagged && r.diverging;
  }
  o.check(vals[0] < vals[1] && vals[1] < vals[2] && flagged,
          "E_1 partial integrals " + fmt(vals[0]) + " < " + fmt(vals[1]) + " < " + fmt(vals[2]) + ", flag set");
  double worst = 0.0;
  const auto E = build_E_beta(1.0, 1000);
  for (const auto& [omega, anti] :
       std::vector<std::pair<std::function<double(double)>, std::function<double(double)>>>{
           {[](double t) { return std::sqrt(t); }, [](double t) { return 2.0 / 3.0 * std::pow(t, 1.5); }},
           {[](double t) { return t; }, [](double t) { return 0.5 * t * t; }},
           {[](double) { return 1.0; }, [](double t) { return t; }}}) {
    worst = std::max(worst, oracle::rel(layer_cake_grid(E, omega, 4096), layer_cake(E, omega, anti)));
  }
  o.check(worst <= 1e-3, "layer-cake vs grid quadrature at M = 4096 max rel " + fmt(worst) + " (≤ 1e-3)");
}

// 7 -------------------------------------------------------------------------
void outer_suite(Outcome& o) {
  const std::size_t M = 4096;
  double worst_mod = 0.0;
  for (double eps : {0.1, 0.01}) {
    const auto f = GridFunction::sample(M, [](double t) { return cplx(std::abs(std::cos(t)), 0.0); });
    const auto F = f_eps_modulus_thm2(f, eps);
    for (std::size_t k = 0; k < M; ++k)
      worst_mod = std::max(worst_mod, std::abs(std::abs(F.boundary[k]) - (f[k].real() + eps)));
  }
  const auto E = build_E_beta(1.0, 10000);
  const auto d = sample_distance(E, M);
  for (double eps : kDecades) {
    const auto F = f_eps_modulus_thm3(E, 0.4, eps, M);
    for (std::size_t k = 0; k < M; ++k)
      worst_mod = std::max(worst_mod, std::abs(std::abs(F.boundary[k]) - (std::pow(d[k], 0.4) + eps)));
  }
  o.check(worst_mod <= 1e-8, "modulus mismatch " + fmt(worst_mod) + " (≤ 1e-8)");

  double worst_p0 = 0.0;
  std::size_t rows = 0;
  EpsilonSchedule s{kDecades, 0.4, 0.75, 0.3};
  for (const auto& r : {certificate_thm3(E, s, 2048, {false}), certificate_thm3(CircleSet::from_points({0.0}), s, 2048, {false}),
                        certificate_thm2(build_mollified_function(E, 1.0, 2048), kDecades, {false}),
                        certificate_thm2(GridFunction::constant(2048, 1.0), kDecades, {false})}) {
    for (const auto& row : r.rows) {
      worst_p0 = std::max(worst_p0, std::abs(row.p_at_zero - 1.0));
      ++rows;
    }
  }
  o.check(worst_p0 <= 1e-8, "|p_ε(0) - 1| max " + fmt(worst_p0) + " over " + std::to_string(rows) + " rows (≤ 1e-8)");

  double worst_neg = 0.0;
  for (const auto& u : {std::function<double(double)>([](double t) { return std::cos(t); }),
                        std::function<double(double)>([](double t) { return 0.5 * std::sin(3 * t) - 0.2 * std::cos(2 * t); }),
                        std::function<double(double)>([](double t) { return std::log(2.0 + std::cos(t)); })}) {
    const auto F = outer_from_log_modulus(GridFunction::sample(1024, [&](double t) { return cplx(u(t), 0.0); }));
    const auto c = analyze(F.boundary, 511);
    double neg = 0.0, all = 0.0;
    for (int n = -511; n <= 511; ++n) {
      all += std::norm(c(n));
      if (n < 0) neg += std::norm(c(n));
    }
    worst_neg = std::max(worst_neg, neg / all);
  }
  o.check(worst_neg <= 1e-6, "negative-frequency energy fraction " + fmt(worst_neg) + " (≤ 1e-6)");
}

const CircleSet& e1_closure() {
  static const CircleSet E = build_E_beta(1.0, 10000);
  return E;
}

// 8 -------------------------------------------------------------------------
void thm3_positive(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  EpsilonSchedule s{kDecades, 0.4, 0.75, 0.3};
  const auto r = certificate_thm3(e1_closure(), s, 1 << 16, {false});
  const double secs = seconds_since(t0);
  bool increasing = true;
  std::string ms, norms;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (i > 0) increasing = increasing && r.rows[i].m_eps > r.rows[i - 1].m_eps;
    ms += (i ? ", " : "") + fmt(r.rows[i].m_eps);
    norms += (i ? ", " : "") + fmt(r.rows[i].total_norm);
  }
  o.check(increasing, "M_ε {" + ms + "} strictly increasing");
  const double ratio = r.rows.back().total_norm / r.rows.front().total_norm;
  o.check(ratio < 0.5, "total_norm {" + norms + "}, final/initial " + fmt(ratio) + " (< 0.5)");
  o.check(secs < 600.0, "runtime " + fmt(secs) + " s (< 600 s)");
}

// 9 -------------------------------------------------------------------------
void thm2_positive(Outcome& o) {
  const auto f = build_mollified_function(e1_closure(), 1.0, 1 << 16);
  const auto r = certificate_thm2(f, kDecades);
  const double ratio = r.rows.back().total_norm / r.rows.front().total_norm;
  o.check(ratio < 0.5, "‖p_ε f²‖ final/initial " + fmt(ratio) + " (< 0.5)");
  bool within = true;
  std::string pairs;
  for (const auto& row : r.rows) {
    within = within && *row.a_eps <= *row.bound;
    pairs += (pairs.empty() ? "" : ", ") + fmt(*row.a_eps) + " ≤ " + fmt(*row.bound);
  }
  o.check(within, "A_ε vs 16π² e^{-2M_ε} D(f) with D(f) = " + fmt(*r.dirichlet_f) + ": {" + pairs + "}");
}

// 10 ------------------------------------------------------------------------
void negative_controls(Outcome& o) {
  const auto one = certificate_thm2(GridFunction::constant(2048, 1.0), kDecades);
  const double r1 = one.rows.back().total_norm / one.rows.front().total_norm;
  o.check(r1 >= 0.9, "f ≡ 1: final/initial " + fmt(r1) + " (≥ 0.9)");

  EpsilonSchedule s{kDecades, 0.4, 0.75, 0.3};
  const auto pt = certificate_thm3(CircleSet::from_points({0.0}), s, 1 << 14, {false});
  const auto& rows = pt.rows;
  const double m_prev = rows[rows.size() - 2].m_eps, m_last = rows.back().m_eps;
  // M_ε tends to ½ mean log(1/d^γ) = 0 for a single point, so compare e^{-M_ε}, the factor it scales p_ε by.
  const double plateau = std::abs(std::exp(m_prev - m_last) - 1.0);
  o.check(plateau <= 0.01, "E = {1}: last two M_ε " + fmt(m_prev) + ", " + fmt(m_last) + ", |e^{ΔM} - 1| = " +
                               fmt(plateau) + " (≤ 0.01)");
  const double r2 = rows.back().total_norm / rows.front().total_norm;
  o.check(pt.verdict != "decay" && r2 >= 0.9, "E = {1}: final/initial " + fmt(r2) + ", verdict " + pt.verdict);

  const auto sweep = certificate_thm3(e1_closure(), s, 1 << 16);
  double lo = 1e300, hi = 0.0;
  std::string ratios;
  for (const auto& row : sweep.rows) {
    if (row.m_eps <= 0.0) continue;
    const double q = *row.b_eps / (row.m_eps * std::exp(-2 * row.m_eps));
    lo = std::min(lo, q);
    hi = std::max(hi, q);
    ratios += (ratios.empty() ? "" : ", ") + fmt(q);
  }
  o.check(hi / lo < 10.0, "B_ε/(M_ε e^{-2M_ε}) on E_1 {" + ratios + "}, max/min " + fmt(hi / lo) + " (< 10)");
}

// 11 ------------------------------------------------------------------------
void weighted_family(Outcome& o) {
  std::mt19937_64 rng(11);
  bool monotone = true, exact = true;
  for (int trial = 0; trial < 20; ++trial) {
    const FourierSeries s(12, oracle::random_coeffs(rng, 12));
    double prev = dirichlet_norm_sq_alpha(s, 0.0);
    exact = exact && prev == spectral_norm_report(s).total_sq;
    for (int k = 1; k < 10; ++k) {
      const double v = dirichlet_norm_sq_alpha(s, 0.1 * k);
      monotone = monotone && v <= prev;
      prev = v;
    }
  }
  o.check(monotone, "weighted norm non-increasing in α on 20 series");
  o.check(exact, "α = 0 equals the unweighted norm exactly");
  const std::vector<CircleSet> sets{CircleSet::from_arcs({{0.0, pi}}), CircleSet::from_arcs({{1.0, 1.0}}),
                                    CircleSet::from_arcs({{0.0, 0.4}, {2.5, 0.8}}),
                                    build_cantor(slowly_closing_ratios(4), 4), build_E_beta(1.0, 100)};
  int ok = 0;
  std::string detail;
  for (const auto& E : sets) {
    const auto c0 = equilibrium_measure(E, 256, 0.0).report;
    const auto ca = equilibrium_measure(E, 256, 0.5).report;
    // c = 1/I: c_α ≤ c ⇔ I_α ≥ I_0 (both finite here).
    const bool dominated = ca.energy >= c0.energy;
    ok += dominated;
    detail += (detail.empty() ? "" : ", ") + fmt(1 / ca.energy) + " ≤ " + fmt(1 / c0.energy);
  }
  o.check(ok == 5, "c_α ≤ c (α = 1/2) on " + std::to_string(ok) + "/5 sets {" + detail + "}");
}

struct Criterion {
  const char* title;
  void (*run)(Outcome&);
};

const Criterion kCriteria[] = {
    {"norm identity suite", norm_identities},
    {"Douglas identity case", douglas_identity},
    {"energy identity", energy_identity},
    {"equilibrium solver", equilibrium_solver},
    {"capacity trends", capacity_trends},
    {"Carleson classification", carleson_classification},
    {"outer-function suite", outer_suite},
    {"distance-certificate decay on the E_1 closure", thm3_positive},
    {"modulus-certificate decay on the E_1 closure", thm2_positive},
    {"negative controls", negative_controls},
    {"weighted family", weighted_family},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  constexpr int count = sizeof kCriteria / sizeof kCriteria[0];
  if (only < 0 || only > count) {
    std::fprintf(stderr, "criterion must be in 1..%d\n", count);
    return 2;
  }
  bool all = true;
  for (int n = 1; n <= count; ++n) {
    if (only && n != only) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      kCriteria[n - 1].run(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    std::printf("[%s] criterion %d (%s, %.1f s): %s\n", o.pass ? "PASS" : "FAIL", n, kCriteria[n - 1].title,
                seconds_since(t0), o.detail.str().c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
