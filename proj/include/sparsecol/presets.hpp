#pragma once

#include <string>
#include <vector>

#include "sparsecol/density.hpp"
#include "sparsecol/graph.hpp"

namespace sparsecol {

enum class PresetClass {
  EarthMoonDefective,
  EarthMoonClustered,
  Thickness,
  GThickness,
  Stack,
  Queue,
};

const char* to_string(PresetClass cls) noexcept;
PresetClass parse_preset_class(const std::string& name);

/// Solver that realises a row.
enum class PresetSolver { Defective, Mad7_10, Extension };

const char* to_string(PresetSolver solver) noexcept;

struct PresetRow {
  int colours = 0;
  BoundKind kind = BoundKind::Clustering;
  int bound = 0;
  PresetSolver solver = PresetSolver::Defective;
  int d = 0;   // Defective: defect parameter
  int n0 = 1;  // Extension: smallest subgraph counted by the density bound
};

/// Guarantees for a graph class whose members all satisfy
/// mad(G, n0) < mad_bound. Class membership is assumed, never checked.
struct PresetParams {
  int t = 1;
  int g = 0;
  int k = 1;
};

struct Preset {
  PresetClass cls = PresetClass::EarthMoonDefective;
  PresetParams params;
  Rational mad_bound{12, 1};
  int mad_n0 = 1;
  std::vector<PresetRow> rows;
};

/// Throws Error(InvalidSpec) unless t >= 1, g >= 0 and k >= 1.
Preset preset_bounds(PresetClass cls, const PresetParams& params);

}  // namespace sparsecol
