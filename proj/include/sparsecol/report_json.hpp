#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>

#include "sparsecol/density.hpp"
#include "sparsecol/graph.hpp"
#include "sparsecol/presets.hpp"
#include "sparsecol/result.hpp"

namespace sparsecol {

/// {"n", "m", "digest"}.
nlohmann::json graph_json(const Graph& g);

/// {"witness": [...], "density": "p/q"}.
nlohmann::json certificate_json(const DensityCertificate& cert);

/// Fixed schema for every colouring command: command, graph, params,
/// colours, defect, clustering, bound, kind, ok, elapsed_ms, seed, stats.
/// Keys are always present; colours is empty when no colouring exists.
nlohmann::json colouring_report(const std::string& command, const Graph& g,
                                const nlohmann::json& params,
                                const ColouringResult& result,
                                double elapsed_ms, std::uint64_t seed);

/// The same schema for a run that stopped on a density violation: ok is
/// false and "error" plus "certificate" are added.
nlohmann::json violation_report(const std::string& command, const Graph& g,
                                const nlohmann::json& params,
                                const DensityViolation& violation,
                                double elapsed_ms, std::uint64_t seed);

nlohmann::json preset_json(const Preset& preset);

}  // namespace sparsecol
