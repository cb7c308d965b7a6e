#include "hdlab/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace hdlab::io {

namespace {

json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

json opt(const std::optional<double>& x) { return x ? number(*x) : json(nullptr); }

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("field \"") + key + "\" has the wrong type");
  }
}

template <class T>
T field_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? field<T>(j, key) : fallback;
}

std::vector<cplx> complex_samples(const json& j) {
  const auto re = field<std::vector<double>>(j, "re");
  const auto im = j.contains("im") ? field<std::vector<double>>(j, "im") : std::vector<double>(re.size(), 0.0);
  if (re.size() != im.size()) throw FormatError("\"re\" and \"im\" have equal length");
  std::vector<cplx> out(re.size());
  for (std::size_t k = 0; k < re.size(); ++k) out[k] = {re[k], im[k]};
  return out;
}

void split_complex(json& j, std::span<const cplx> v) {
  std::vector<double> re(v.size()), im(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    re[k] = v[k].real();
    im[k] = v[k].imag();
  }
  j["re"] = re;
  j["im"] = im;
}

json truncation_json(const Truncation& t) {
  json j{{"family", to_string(t.family)}};
  switch (t.family) {
    case SetFamily::e_beta:
      j["beta"] = t.beta;
      j["n_max"] = t.n_max;
      break;
    case SetFamily::cantor:
      j["ratios"] = t.ratios;
      j["depth"] = t.depth;
      j["arc_start"] = t.arc_start;
      j["arc_length"] = t.arc_length;
      break;
    default:
      break;
  }
  return j;
}

CircleSet build_from_spec(const std::string& family, const json& j) {
  if (family == "E_beta" || family == "e_beta") return build_E_beta(field<double>(j, "beta"), field<long>(j, "n_max"));
  if (family == "cantor") {
    const int depth = field<int>(j, "depth");
    std::vector<double> ratios = j.contains("ratios") ? field<std::vector<double>>(j, "ratios")
                                                      : slowly_closing_ratios(depth);
    return build_cantor(ratios, depth, field_or<double>(j, "arc_start", 0.0),
                        field_or<double>(j, "arc_length", kTwoPi));
  }
  if (family == "full_circle") return CircleSet::full_circle();
  throw FormatError("unknown set builder \"" + family + "\"");
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

json to_json(const GridFunction& g) {
  json j{{"kind", "grid"}, {"M", g.size()}};
  split_complex(j, g.samples());
  return j;
}

json to_json(const FourierSeries& s) {
  json j{{"kind", "fourier"}, {"N", s.bandwidth()}};
  split_complex(j, s.coefficients());
  j["truncated"] = s.truncated();
  return j;
}

json to_json(const NormReport& r) {
  const bool spectral = r.method == NormMethod::spectral;
  json j{{"l2_sq", number(r.l2_sq)},
         {"dirichlet_energy", number(r.dirichlet_energy)},
         {"total_sq", number(r.total_sq)},
         {"method", spectral ? "spectral" : "quadrature"}};
  j[spectral ? "N" : "M"] = r.size;
  return j;
}

json to_json(const CircleSet& E) {
  json j{{"kind", E.kind() == SetKind::points ? "points" : "intervals"}, {"angles", E.angles()}};
  if (E.kind() == SetKind::intervals) {
    json arcs = json::array();
    for (const auto& a : E.components()) arcs.push_back({a.start, a.length});
    j["intervals"] = arcs;
  }
  json gaps = json::array();
  for (const auto& g : E.gaps()) gaps.push_back({g.start, g.length});
  j["gaps"] = gaps;
  j["truncation"] = truncation_json(E.truncation());
  return j;
}

json to_json(const OuterFunction& F) {
  json j{{"kind", "outer"}, {"M", F.boundary.size()}};
  split_complex(j, F.boundary.samples());
  j["log_modulus"] = F.log_modulus.real_part();
  j["value_at_zero"] = {F.value_at_zero.real(), F.value_at_zero.imag()};
  j["M_eps"] = opt(F.m_eps);
  return j;
}

json to_json(const CapacityReport& r) {
  return json{{"energy", number(r.energy)},
              {"capacity", r.capacity ? number(*r.capacity) : json("inf")},
              {"alpha", r.alpha},
              {"resolution", r.resolution},
              {"cells", r.cells},
              {"iterations", r.iterations},
              {"converged", r.converged},
              {"projected_gradient", number(r.projected_gradient)},
              {"energy_history", r.energy_history}};
}

json to_json(const CapacityEstimate& c) {
  json j = to_json(c.fine);
  j["coarse_resolution"] = c.fine.resolution / 2;
  j["coarse_energy"] = number(c.coarse_energy);
  j["resolution_gap"] = number(c.gap);
  return j;
}

json to_json(const CarlesonResult& r) {
  return json{{"value", number(r.value)}, {"coarse_value", opt(r.coarse_value)}, {"diverging", r.diverging}};
}

json to_json(const CertificateReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back(json{{"eps", row.eps},
                        {"M_eps", number(row.m_eps)},
                        {"l2_sq", number(row.l2_sq)},
                        {"dirichlet_energy", number(row.dirichlet_energy)},
                        {"total_norm", number(row.total_norm)},
                        {"A_eps", opt(row.a_eps)},
                        {"B_eps", opt(row.b_eps)},
                        {"p_at_zero", number(row.p_at_zero)},
                        {"douglas", opt(row.douglas)},
                        {"bound", opt(row.bound)},
                        {"dirichlet_F_eps", opt(row.dirichlet_f_eps)}});
  }
  const bool distance_based = r.kind == CertificateKind::thm3;
  json j{{"kind", distance_based ? "thm3" : "thm2"},
         {"label", r.label},
         {"set", r.set_descriptor},
         {"M", r.M},
         {"rows", rows},
         {"warnings", r.warnings},
         {"expectation", r.expectation},
         {"verdict", r.verdict},
         {"decay_ratio", number(r.decay_ratio())}};
  if (distance_based) {
    j["beta"] = r.beta;
    j["gamma"] = r.gamma;
    j["eta"] = r.eta;
  }
  if (r.mollify_width) j["mollify_width"] = *r.mollify_width;
  if (r.dirichlet_f) j["D_f"] = number(*r.dirichlet_f);
  return j;
}

json to_json(const Classification& c) {
  return json{{"set", c.set_descriptor},
              {"carleson", to_json(c.carleson)},
              {"capacity", to_json(c.capacity)},
              {"carleson_class", c.carleson.diverging ? "not-carleson" : "carleson"},
              {"capacity_class", c.zero_capacity ? "zero" : "positive"}};
}

json to_json(const SuiteBundle& b) {
  json reports = json::array();
  for (const auto& r : b.reports) reports.push_back(to_json(r));
  json classes = json::array();
  for (const auto& c : b.classifications) classes.push_back(to_json(c));
  return json{{"reports", reports}, {"classifications", classes}, {"meta", {{"tool", "hdlab"}, {"format", 1}}}};
}

GridFunction grid_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("function document is a JSON object");
  const auto kind = field_or<std::string>(j, "kind", "grid");
  if (kind == "fourier") {
    const auto s = fourier_from_json(j);
    std::size_t M = 4;
    while (M <= 2 * static_cast<std::size_t>(s.bandwidth())) M *= 2;
    return synthesize(s, M);
  }
  if (kind != "grid") throw FormatError("function kind is \"grid\" or \"fourier\"");
  auto samples = complex_samples(j);
  if (j.contains("M") && field<std::size_t>(j, "M") != samples.size())
    throw FormatError("\"M\" matches the number of samples");
  return GridFunction(std::move(samples));
}

FourierSeries fourier_from_json(const json& j) {
  if (field_or<std::string>(j, "kind", "fourier") != "fourier") throw FormatError("expected kind \"fourier\"");
  const int N = field<int>(j, "N");
  auto coeffs = complex_samples(j);
  if (N < 0 || coeffs.size() != static_cast<std::size_t>(2 * N + 1))
    throw FormatError("a Fourier document has 2N + 1 coefficients");
  return FourierSeries(N, std::move(coeffs), field_or<bool>(j, "truncated", false));
}

CircleSet set_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("set document is a JSON object");
  if (j.contains("builder")) return build_from_spec(field<std::string>(j, "builder"), j);
  if (j.contains("truncation")) {
    const auto& t = j.at("truncation");
    const auto family = field_or<std::string>(t, "family", "finite");
    if (family == "E_beta" || family == "cantor" || family == "full_circle") return build_from_spec(family, t);
  }
  const auto kind = field<std::string>(j, "kind");
  if (kind == "points") return CircleSet::from_points(field<std::vector<double>>(j, "angles"));
  if (kind == "intervals") {
    std::vector<Arc> arcs;
    for (const auto& a : field<std::vector<std::vector<double>>>(j, "intervals")) {
      if (a.size() != 2) throw FormatError("each interval is [start, length]");
      arcs.push_back({a[0], a[1]});
    }
    Truncation t;
    t.family = SetFamily::arcs;
    return CircleSet::from_arcs(arcs, t);
  }
  throw FormatError("set kind is \"points\" or \"intervals\"");
}

SuiteConfig suite_config_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("config is a JSON object");
  SuiteConfig c;
  if (j.contains("battery")) {
    const auto& b = j.at("battery");
    if (b.is_string()) c.batteries = {b.get<std::string>()};
    else c.batteries = field<std::vector<std::string>>(j, "battery");
  }
  if (j.contains("set")) c.set = set_from_json(j.at("set"));
  c.beta = field_or(j, "beta", c.beta);
  c.gamma = field_or(j, "gamma", c.gamma);
  c.eta = field_or(j, "eta", c.eta);
  c.eps = field_or(j, "eps", c.eps);
  c.M = field_or(j, "M", c.M);
  c.mollify_width = field_or(j, "mollify_width", c.mollify_width);
  c.resolution = field_or(j, "resolution", c.resolution);
  c.split = field_or(j, "split", c.split);
  return c;
}

void write_measure_csv(std::ostream& os, const DiscreteMeasure& mu) {
  os << "center,weight\n";
  for (std::size_t i = 0; i < mu.size(); ++i)
    os << format_double(mu.centers()[i]) << ',' << format_double(mu.weights()[i]) << '\n';
}

void write_report_csv(std::ostream& os, const CertificateReport& r) {
  auto cell = [](const std::optional<double>& x) { return x ? format_double(*x) : std::string(); };
  os << "eps,M_eps,l2_sq,dirichlet_energy,total_norm,A_eps,B_eps\n";
  for (const auto& row : r.rows) {
    os << format_double(row.eps) << ',' << format_double(row.m_eps) << ',' << format_double(row.l2_sq) << ','
       << format_double(row.dirichlet_energy) << ',' << format_double(row.total_norm) << ',' << cell(row.a_eps)
       << ',' << cell(row.b_eps) << '\n';
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open \"" + path + "\"");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("\"" + path + "\" is not valid JSON (byte " + std::to_string(e.byte) + ")");
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hdlab::io
