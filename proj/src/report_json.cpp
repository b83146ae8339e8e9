#include "sparsecol/report_json.hpp"

#include "sparsecol/io.hpp"

namespace sparsecol {

nlohmann::json graph_json(const Graph& g) {
  return {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"digest", graph_digest(g)}};
}

nlohmann::json certificate_json(const DensityCertificate& cert) {
  return {{"witness", cert.witness}, {"density", cert.density.to_string()}};
}

nlohmann::json colouring_report(const std::string& command, const Graph& g,
                                const nlohmann::json& params,
                                const ColouringResult& result,
                                double elapsed_ms, std::uint64_t seed) {
  const Report& r = result.report;
  return {
      {"command", command},
      {"graph", graph_json(g)},
      {"params", params},
      {"colours", result.colouring},
      {"defect", r.defect},
      {"clustering", r.clustering},
      {"bound", r.bound},
      {"kind", to_string(r.kind)},
      {"ok", r.ok},
      {"elapsed_ms", elapsed_ms},
      {"seed", seed},
      {"stats",
       {{"levels", result.stats.levels},
        {"moves", result.stats.moves},
        {"restarts", result.stats.restarts},
        {"exchanges", result.stats.exchanges}}},
  };
}

nlohmann::json violation_report(const std::string& command, const Graph& g,
                                const nlohmann::json& params,
                                const DensityViolation& violation,
                                double elapsed_ms, std::uint64_t seed) {
  ColouringResult empty;
  auto out = colouring_report(command, g, params, empty, elapsed_ms, seed);
  out["bound"] = nullptr;
  out["kind"] = nullptr;
  out["defect"] = nullptr;
  out["clustering"] = nullptr;
  out["ok"] = false;
  out["error"] = violation.what();
  out["certificate"] = certificate_json(violation.certificate());
  out["certificate"]["threshold"] = violation.threshold().to_string();
  return out;
}

nlohmann::json preset_json(const Preset& preset) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : preset.rows)
    rows.push_back({{"colours", row.colours},
                    {"kind", to_string(row.kind)},
                    {"bound", row.bound},
                    {"solver", to_string(row.solver)},
                    {"d", row.d},
                    {"n0", row.n0}});
  return {{"class", to_string(preset.cls)},
          {"params", {{"t", preset.params.t}, {"g", preset.params.g}, {"k", preset.params.k}}},
          {"mad_below", preset.mad_bound.to_string()},
          {"mad_n0", preset.mad_n0},
          {"rows", rows}};
}

}  // namespace sparsecol
