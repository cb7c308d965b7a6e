// hdlab: sets, norms, outer functions, capacity, Carleson tests and
// certificate batteries from the command line. JSON in, JSON (or CSV) out.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#ifdef HDLAB_SYSTEM_CLI11
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include "hdlab/capacity.hpp"
#include "hdlab/certify.hpp"
#include "hdlab/geometry.hpp"
#include "hdlab/io.hpp"
#include "hdlab/norms.hpp"
#include "hdlab/outer.hpp"

namespace fs = std::filesystem;
using hdlab::io::json;

namespace {

struct Common {
  std::string out;
  std::string format = "json";
  unsigned threads = 0;
};

fs::path resolve_output(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("HDLAB_OUTPUT_DIR"); dir && *dir) p = fs::path(dir) / p;
  }
  return p;
}

void emit(const Common& common, const std::string& text) {
  if (common.out.empty() || common.out == "-") {
    std::cout << text;
    return;
  }
  const fs::path p = resolve_output(common.out);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream os(p, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + p.string());
  os << text;
}

// sets --------------------------------------------------------------------

struct SetsArgs {
  std::optional<double> beta;
  std::optional<long> nmax;
  std::vector<double> ratios;
  std::optional<int> depth;
  std::vector<double> points;
  std::vector<double> arcs;  // start,length pairs
  double arc_start = 0.0;
  double arc_length = hdlab::kTwoPi;
  bool full = false;
};

hdlab::CircleSet build_set(const SetsArgs& a) {
  const int families = (a.beta || a.nmax) + (a.depth.has_value() || !a.ratios.empty()) + !a.points.empty() +
                       !a.arcs.empty() + a.full;
  hdlab::require(families == 1,
                 "exactly one set family (--beta/--nmax, --depth/--ratios, --points, --arcs, --full-circle)");
  if (a.beta || a.nmax) {
    hdlab::require(a.beta && a.nmax, "--beta and --nmax are given together");
    return hdlab::build_E_beta(*a.beta, *a.nmax);
  }
  if (a.depth || !a.ratios.empty()) {
    hdlab::require(a.depth.has_value(), "--depth is given for a Cantor set");
    hdlab::require(*a.depth >= 0, "depth ≥ 0");
    const auto ratios = a.ratios.empty() ? hdlab::slowly_closing_ratios(*a.depth) : a.ratios;
    return hdlab::build_cantor(ratios, *a.depth, a.arc_start, a.arc_length);
  }
  if (!a.points.empty()) return hdlab::CircleSet::from_points(a.points);
  if (!a.arcs.empty()) {
    hdlab::require(a.arcs.size() % 2 == 0, "--arcs lists start,length pairs");
    std::vector<hdlab::Arc> arcs;
    for (std::size_t i = 0; i < a.arcs.size(); i += 2) arcs.push_back({a.arcs[i], a.arcs[i + 1]});
    hdlab::Truncation t;
    t.family = hdlab::SetFamily::arcs;
    return hdlab::CircleSet::from_arcs(arcs, t);
  }
  return hdlab::CircleSet::full_circle();
}

hdlab::CircleSet load_set(const std::string& path) { return hdlab::io::set_from_json(hdlab::io::read_json_file(path)); }

// norm --------------------------------------------------------------------

struct NormArgs {
  std::string fn;
  std::string method = "spectral";
  std::optional<int> N;
  std::optional<double> alpha;
};

std::string run_norm(const NormArgs& a) {
  const json doc = hdlab::io::read_json_file(a.fn);
  const bool is_series = doc.value("kind", "grid") == "fourier";
  if (a.alpha) hdlab::require(*a.alpha >= 0.0 && *a.alpha < 1.0, "α ∈ [0, 1)");

  std::optional<hdlab::GridFunction> grid;
  auto get_grid = [&]() -> const hdlab::GridFunction& {
    if (!grid) grid = hdlab::io::grid_from_json(doc);
    return *grid;
  };
  auto series = [&]() {
    if (is_series) return hdlab::io::fourier_from_json(doc);
    const auto& g = get_grid();
    const int N = a.N.value_or(static_cast<int>(g.size() / 2) - 1);
    hdlab::require(N >= 0 && 2 * static_cast<std::size_t>(N) + 1 <= g.size(), "2N + 1 ≤ M (Nyquist limit)");
    return hdlab::analyze(g, N);
  };
  auto spectral = [&]() {
    const auto s = series();
    json j = hdlab::io::to_json(hdlab::spectral_norm_report(s));
    if (a.alpha) j["dirichlet_norm_sq_alpha"] = hdlab::dirichlet_norm_sq_alpha(s, *a.alpha);
    return j;
  };
  auto quadrature = [&]() { return hdlab::io::to_json(hdlab::quadrature_norm_report(get_grid())); };

  if (a.method == "spectral") return hdlab::io::dump(spectral());
  if (a.method == "quadrature") return hdlab::io::dump(quadrature());
  const json s = spectral(), q = quadrature();
  const double ds = s["dirichlet_energy"].get<double>(), dq = q["dirichlet_energy"].get<double>();
  const double scale = std::max(std::abs(ds), 1e-300);
  return hdlab::io::dump(json{{"spectral", s}, {"quadrature", q}, {"dirichlet_relative_gap", std::abs(ds - dq) / scale}});
}

// outer -------------------------------------------------------------------

struct OuterArgs {
  std::string log_modulus;
  std::string abs_f;
  std::string set;
  std::optional<double> eps;
  double gamma = 0.4;
  std::size_t M = 2048;
};

hdlab::OuterFunction run_outer(const OuterArgs& a) {
  const int sources = !a.log_modulus.empty() + !a.abs_f.empty() + !a.set.empty();
  hdlab::require(sources == 1, "exactly one of --log-modulus, --abs-f, --set");
  if (!a.log_modulus.empty()) {
    const auto u = hdlab::io::grid_from_json(hdlab::io::read_json_file(a.log_modulus));
    return hdlab::outer_from_log_modulus(u);
  }
  hdlab::require(a.eps.has_value(), "--eps is given for a certificate p_ε");
  hdlab::require(*a.eps > 0.0, "ε > 0");
  if (!a.abs_f.empty()) {
    const auto f = hdlab::io::grid_from_json(hdlab::io::read_json_file(a.abs_f));
    return hdlab::p_eps_thm2(f, *a.eps).p;
  }
  hdlab::require(a.gamma > 0.0, "γ > 0");
  hdlab::require(hdlab::is_power_of_two(a.M) && a.M >= 4, "M is a power of two ≥ 4");
  return hdlab::p_eps_thm3(load_set(a.set), a.gamma, *a.eps, a.M).p;
}

std::string outer_csv(const hdlab::OuterFunction& F) {
  std::ostringstream os;
  os << "theta,re,im,abs,log_modulus\n";
  const auto u = F.log_modulus.real_part();
  for (std::size_t k = 0; k < F.boundary.size(); ++k) {
    const auto z = F.boundary[k];
    os << hdlab::io::format_double(F.boundary.angle(k)) << ',' << hdlab::io::format_double(z.real()) << ','
       << hdlab::io::format_double(z.imag()) << ',' << hdlab::io::format_double(std::abs(z)) << ','
       << hdlab::io::format_double(u[k]) << '\n';
  }
  return os.str();
}

// capacity ----------------------------------------------------------------

struct CapacityArgs {
  std::string set;
  double alpha = 0.0;
  std::size_t resolution = 512;
  double tol = 1e-8;
  std::size_t max_iter = 5000;
  std::string measure_csv;
};

// certify -----------------------------------------------------------------

struct CertifyArgs {
  std::string config;
  std::vector<std::string> battery;
  std::string set;
  std::optional<double> beta, gamma, eta, mollify_width;
  std::vector<double> eps;
  std::optional<std::size_t> M, resolution;
  bool no_split = false;
  std::string csv_dir;
};

hdlab::SuiteConfig certify_config(const CertifyArgs& a) {
  hdlab::SuiteConfig c;
  if (!a.config.empty()) c = hdlab::io::suite_config_from_json(hdlab::io::read_json_file(a.config));
  if (!a.battery.empty()) c.batteries = a.battery;
  if (!a.set.empty()) c.set = load_set(a.set);
  if (a.beta) c.beta = *a.beta;
  if (a.gamma) c.gamma = *a.gamma;
  if (a.eta) c.eta = *a.eta;
  if (a.mollify_width) c.mollify_width = *a.mollify_width;
  if (!a.eps.empty()) c.eps = a.eps;
  if (a.M) c.M = *a.M;
  if (a.resolution) c.resolution = *a.resolution;
  if (a.no_split) c.split = false;

  const auto& known = hdlab::known_batteries();
  for (const auto& b : c.batteries)
    hdlab::require(std::find(known.begin(), known.end(), b) != known.end(), "battery \"" + b + "\" is known");
  hdlab::validate_eps_ladder(c.eps);
  hdlab::require(hdlab::is_power_of_two(c.M) && c.M >= 4, "M is a power of two ≥ 4");
  hdlab::require(c.mollify_width > 0.0, "mollify width > 0");
  hdlab::require(c.resolution >= 8, "resolution ≥ 8");
  for (const auto& b : c.batteries)
    if (b == "thm3" || b == "thm3-Ebeta" || b == "negative" || b == "smoke") {
      hdlab::validate_thm3_exponents(c.beta, c.eta, c.gamma);
      break;
    }
  return c;
}

std::string sanitize(std::string s) {
  std::string out;
  for (unsigned char ch : s) out += std::isalnum(ch) || ch == '-' || ch == '_' ? static_cast<char>(ch) : '_';
  return out;
}

void write_csvs(const std::string& dir, const hdlab::SuiteBundle& bundle) {
  const fs::path base = resolve_output(dir);
  fs::create_directories(base);
  for (std::size_t i = 0; i < bundle.reports.size(); ++i) {
    const auto& r = bundle.reports[i];
    std::ofstream os(base / (std::to_string(i) + "-" + sanitize(r.label) + ".csv"), std::ios::binary);
    if (!os) throw std::runtime_error("cannot write into " + base.string());
    hdlab::io::write_report_csv(os, r);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hdlab: Dirichlet-space cyclicity experiments on the unit circle"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Common common;
  app.add_option("--out,-o", common.out, "Output file (default stdout); relative paths resolve against $HDLAB_OUTPUT_DIR");
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", common.threads, "Worker threads (default: all cores)");

  SetsArgs sets;
  auto* sets_cmd = app.add_subcommand("sets", "Build a closed subset of the circle");
  sets_cmd->add_option("--beta", sets.beta, "E_β exponent");
  sets_cmd->add_option("--nmax", sets.nmax, "E_β truncation");
  sets_cmd->add_option("--ratios", sets.ratios, "Cantor gap fractions per generation")->delimiter(',');
  sets_cmd->add_option("--depth", sets.depth, "Cantor depth");
  sets_cmd->add_option("--arc-start", sets.arc_start, "Cantor base arc start");
  sets_cmd->add_option("--arc-length", sets.arc_length, "Cantor base arc length");
  sets_cmd->add_option("--points", sets.points, "Explicit angles")->delimiter(',');
  sets_cmd->add_option("--arcs", sets.arcs, "Explicit arcs as start,length,...")->delimiter(',');
  sets_cmd->add_flag("--full-circle", sets.full, "The whole circle");

  NormArgs norm;
  auto* norm_cmd = app.add_subcommand("norm", "Dirichlet-space norm of a function");
  norm_cmd->add_option("--fn", norm.fn, "Grid or Fourier JSON")->required();
  norm_cmd->add_option("--method", norm.method)->check(CLI::IsMember({"spectral", "quadrature", "both"}));
  norm_cmd->add_option("--N", norm.N, "Bandwidth for grid analysis (default M/2 - 1)");
  norm_cmd->add_option("--alpha", norm.alpha, "Also report the α-weighted norm");

  OuterArgs outer;
  auto* outer_cmd = app.add_subcommand("outer", "Outer function from a boundary log-modulus, or a certificate p_ε");
  outer_cmd->add_option("--log-modulus", outer.log_modulus, "Real grid JSON u = log|F|");
  outer_cmd->add_option("--abs-f", outer.abs_f, "Grid JSON |f| for the p_ε = e^{-M_ε}/(|f| + ε) certificate");
  outer_cmd->add_option("--set", outer.set, "Set JSON for the p_ε = e^{-M_ε}(d^γ + ε)^{-1/2} certificate");
  outer_cmd->add_option("--eps", outer.eps);
  outer_cmd->add_option("--gamma", outer.gamma);
  outer_cmd->add_option("--M", outer.M, "Grid size for --set");

  CapacityArgs cap;
  auto* cap_cmd = app.add_subcommand("capacity", "Equilibrium measure and capacity estimate");
  cap_cmd->add_option("--set", cap.set)->required();
  cap_cmd->add_option("--alpha", cap.alpha, "0 for logarithmic capacity, α ∈ (0,1) for c_α");
  cap_cmd->add_option("--resolution", cap.resolution, "Cells per 2π at the coarse level");
  cap_cmd->add_option("--tol", cap.tol);
  cap_cmd->add_option("--max-iter", cap.max_iter);
  cap_cmd->add_option("--measure-csv", cap.measure_csv, "Also write the equilibrium weights as CSV");

  std::string carleson_set;
  auto* carleson_cmd = app.add_subcommand("carleson", "Carleson integral of the complement");
  carleson_cmd->add_option("--set", carleson_set)->required();

  CertifyArgs cert;
  auto* cert_cmd = app.add_subcommand("certify", "Run certificate batteries");
  cert_cmd->add_option("--config", cert.config, "JSON config");
  cert_cmd->add_option("--battery", cert.battery, "smoke, thm2, thm3, thm3-Ebeta, negative, classify")->delimiter(',');
  cert_cmd->add_option("--set", cert.set);
  cert_cmd->add_option("--beta", cert.beta);
  cert_cmd->add_option("--gamma", cert.gamma);
  cert_cmd->add_option("--eta", cert.eta);
  cert_cmd->add_option("--eps", cert.eps)->delimiter(',');
  cert_cmd->add_option("--M", cert.M);
  cert_cmd->add_option("--mollify-width", cert.mollify_width);
  cert_cmd->add_option("--resolution", cert.resolution);
  cert_cmd->add_flag("--no-split", cert.no_split, "Skip the O(M²) A_ε/B_ε split");
  cert_cmd->add_option("--csv-dir", cert.csv_dir, "Directory for per-report CSV tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "hdlab: error: " << e.what() << '\n';
    return 2;
  }

  try {
    hdlab::set_thread_budget(common.threads ? common.threads : std::max(1u, std::thread::hardware_concurrency()));
    const bool csv = common.format == "csv";

    if (*sets_cmd) {
      const auto E = build_set(sets);
      hdlab::require(!csv, "sets emits JSON only");
      emit(common, hdlab::io::dump(hdlab::io::to_json(E)));
    } else if (*norm_cmd) {
      hdlab::require(!csv, "norm emits JSON only");
      emit(common, run_norm(norm));
    } else if (*outer_cmd) {
      const auto F = run_outer(outer);
      emit(common, csv ? outer_csv(F) : hdlab::io::dump(hdlab::io::to_json(F)));
    } else if (*cap_cmd) {
      hdlab::require(cap.alpha >= 0.0 && cap.alpha < 1.0, "α ∈ [0, 1)");
      hdlab::require(cap.resolution >= 8, "resolution ≥ 8");
      hdlab::require(cap.tol > 0.0, "tol > 0");
      const auto E = load_set(cap.set);
      hdlab::SolverOptions opts{cap.tol, cap.max_iter};
      if (csv || !cap.measure_csv.empty()) {
        const auto eq = hdlab::equilibrium_measure(E, 2 * cap.resolution, cap.alpha, opts);
        std::ostringstream os;
        hdlab::io::write_measure_csv(os, eq.measure);
        if (csv) {
          emit(common, os.str());
          return 0;
        }
        Common side = common;
        side.out = cap.measure_csv;
        emit(side, os.str());
      }
      emit(common, hdlab::io::dump(hdlab::io::to_json(hdlab::capacity_of(E, cap.alpha, cap.resolution, opts))));
    } else if (*carleson_cmd) {
      hdlab::require(!csv, "carleson emits JSON only");
      const auto E = load_set(carleson_set);
      json j = hdlab::io::to_json(hdlab::carleson_integral(E));
      j["set"] = hdlab::describe(E);
      j["gaps"] = E.gaps().size();
      j["total_gap_length"] = E.total_gap_length();
      emit(common, hdlab::io::dump(j));
    } else if (*cert_cmd) {
      const auto config = certify_config(cert);
      const auto bundle = hdlab::run_suite(config);
      if (!cert.csv_dir.empty()) write_csvs(cert.csv_dir, bundle);
      if (csv) {
        hdlab::require(bundle.reports.size() == 1, "--format csv needs exactly one report; use --csv-dir");
        std::ostringstream os;
        hdlab::io::write_report_csv(os, bundle.reports.front());
        emit(common, os.str());
      } else {
        emit(common, hdlab::io::dump(hdlab::io::to_json(bundle)));
      }
    }
  } catch (const hdlab::ValidationError& e) {
    std::cerr << "hdlab: invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hdlab: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
