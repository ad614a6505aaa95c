#include "croots/report_io.hpp"

#include <json.hpp>

namespace croots {

using nlohmann::json;

std::string report_to_json(const ClusterReport& report) {
  json j;
  j["success"] = report.success;
  j["epsilon"] = report.epsilon.exact_decimal();
  j["mode"] = report.mode == SolveMode::kCompression ? "compression" : "refinement";
  json cl = json::array();
  for (const Cluster& c : report.clusters) {
    cl.push_back({{"center_re", c.disc.center.re.exact_decimal()},
                  {"center_im", c.disc.center.im.exact_decimal()},
                  {"radius", c.disc.radius.exact_decimal()},
                  {"multiplicity", c.multiplicity}});
  }
  j["clusters"] = std::move(cl);
  json stats;
  stats["exclusion_tests"] = report.stats.exclusion_tests;
  stats["max_precision_bits"] = report.stats.max_precision_bits;
  stats[report.mode == SolveMode::kCompression ? "t_compress_s" : "t_refine_s"] =
      report.stats.t_stage_s;
  stats["t_verify_s"] = report.stats.t_verify_s;
  stats["t_total_s"] = report.stats.t_total_s;
  j["stats"] = std::move(stats);
  if (!report.diagnostic.empty()) j["diagnostic"] = report.diagnostic;
  return j.dump(2);
}

ClusterReport report_from_json(const std::string& text) {
  json j = json::parse(text);
  ClusterReport report;
  report.success = j.at("success").get<bool>();
  report.mode =
      j.at("mode").get<std::string>() == "refinement" ? SolveMode::kRefinement
                                                      : SolveMode::kCompression;
  report.epsilon = Real::from_decimal(j.at("epsilon").get<std::string>());
  for (const auto& c : j.at("clusters")) {
    Cluster cl;
    cl.disc.center.re = Real::from_decimal(c.at("center_re").get<std::string>());
    cl.disc.center.im = Real::from_decimal(c.at("center_im").get<std::string>());
    cl.disc.radius = Real::from_decimal(c.at("radius").get<std::string>());
    cl.multiplicity = c.at("multiplicity").get<long>();
    report.clusters.push_back(std::move(cl));
  }
  const auto& stats = j.at("stats");
  report.stats.exclusion_tests = stats.at("exclusion_tests").get<long long>();
  report.stats.max_precision_bits = stats.at("max_precision_bits").get<long>();
  report.stats.t_stage_s = stats.contains("t_compress_s")
                               ? stats.at("t_compress_s").get<double>()
                               : stats.value("t_refine_s", 0.0);
  report.stats.t_verify_s = stats.at("t_verify_s").get<double>();
  report.stats.t_total_s = stats.at("t_total_s").get<double>();
  if (j.contains("diagnostic")) report.diagnostic = j.at("diagnostic").get<std::string>();
  return report;
}

bool reports_equal(const ClusterReport& a, const ClusterReport& b) {
  if (a.success != b.success || a.mode != b.mode || !(a.epsilon == b.epsilon)) return false;
  if (a.clusters.size() != b.clusters.size()) return false;
  for (size_t i = 0; i < a.clusters.size(); ++i) {
    const Cluster& x = a.clusters[i];
    const Cluster& y = b.clusters[i];
    if (x.multiplicity != y.multiplicity) return false;
    if (!(x.disc.center.re == y.disc.center.re) || !(x.disc.center.im == y.disc.center.im) ||
        !(x.disc.radius == y.disc.radius))
      return false;
  }
  if (a.stats.exclusion_tests != b.stats.exclusion_tests) return false;
  if (a.stats.max_precision_bits != b.stats.max_precision_bits) return false;
  if (a.diagnostic != b.diagnostic) return false;
  return true;
}

}  // namespace croots
