#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "hdlab/capacity.hpp"
#include "hdlab/certify.hpp"
#include "hdlab/circle_fn.hpp"
#include "hdlab/geometry.hpp"
#include "hdlab/norms.hpp"
#include "hdlab/outer.hpp"

namespace hdlab::io {

using nlohmann::json;

/// Parse or shape errors in input documents; the CLI maps these to exit 2.
class FormatError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

json to_json(const GridFunction& g);
json to_json(const FourierSeries& s);
json to_json(const NormReport& r);
json to_json(const CircleSet& E);
json to_json(const OuterFunction& F);
json to_json(const CapacityReport& r);
json to_json(const CapacityEstimate& c);
json to_json(const CarlesonResult& r);
json to_json(const CertificateReport& r);
json to_json(const Classification& c);
json to_json(const SuiteBundle& b);

GridFunction grid_from_json(const json& j);
FourierSeries fourier_from_json(const json& j);
/// "points" / "intervals" documents, or a builder spec
/// {"builder": "E_beta"|"cantor"|"full_circle", ...}.
CircleSet set_from_json(const json& j);
SuiteConfig suite_config_from_json(const json& j);

/// Shortest round-trip decimal form.
std::string format_double(double x);

/// "center,weight" rows.
void write_measure_csv(std::ostream& os, const DiscreteMeasure& mu);
/// eps,M_eps,l2_sq,dirichlet_energy,total_norm,A_eps,B_eps (empty cell when absent).
void write_report_csv(std::ostream& os, const CertificateReport& r);

json read_json_file(const std::string& path);
/// Two-space indented dump with a trailing newline.
std::string dump(const json& j);

}  // namespace hdlab::io
