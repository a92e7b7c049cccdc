#include "fptvc/result_json.hpp"

namespace fptvc {

void to_json(nlohmann::json& j, const SolveStats& s) {
  j = nlohmann::json{{"nodes_expanded", s.nodes_expanded},
                     {"max_depth", s.max_depth},
                     {"triplet_scans", s.triplet_scans},
                     {"elapsed_ms", s.elapsed_ms}};
}

void from_json(const nlohmann::json& j, SolveStats& s) {
  j.at("nodes_expanded").get_to(s.nodes_expanded);
  j.at("max_depth").get_to(s.max_depth);
  j.at("triplet_scans").get_to(s.triplet_scans);
  j.at("elapsed_ms").get_to(s.elapsed_ms);
}

void to_json(nlohmann::json& j, const SolveResult& r) {
  j = nlohmann::json{{"decision", r.decision}, {"stats", r.stats}, {"timed_out", r.timed_out}};
  j["certificate"] = r.certificate ? nlohmann::json(*r.certificate) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, SolveResult& r) {
  j.at("decision").get_to(r.decision);
  j.at("stats").get_to(r.stats);
  r.timed_out = j.value("timed_out", false);
  const auto& cert = j.at("certificate");
  if (cert.is_null()) {
    r.certificate.reset();
  } else {
    r.certificate = cert.get<std::vector<Vertex>>();
  }
}

}  // namespace fptvc
