#include "sparsecol/presets.hpp"

#include <algorithm>
#include <array>
#include <string_view>

#include "sparsecol/error.hpp"

namespace sparsecol {
namespace {

constexpr std::array<std::pair<PresetClass, std::string_view>, 6> kClassNames{{
    {PresetClass::EarthMoonDefective, "earthMoonDefective"},
    {PresetClass::EarthMoonClustered, "earthMoonClustered"},
    {PresetClass::Thickness, "thickness"},
    {PresetClass::GThickness, "gThickness"},
    {PresetClass::Stack, "stack"},
    {PresetClass::Queue, "queue"},
}};

PresetRow defect_row(int colours, int d, BoundKind kind, int bound) {
  return {colours, kind, bound, PresetSolver::Defective, d, 1};
}

PresetRow nine_row(int colours) {
  return {colours, BoundKind::Clustering, 9, PresetSolver::Mad7_10, 0, 1};
}

PresetRow extension_row(int colours, int bound, int n0 = 1) {
  return {colours, BoundKind::Clustering, bound, PresetSolver::Extension, 0, n0};
}

int ceil_div(int a, int b) { return static_cast<int>(Rational(a, b).ceil()); }

}  // namespace

const char* to_string(PresetClass cls) noexcept {
  for (const auto& [value, name] : kClassNames)
    if (value == cls) return name.data();
  return "?";
}

PresetClass parse_preset_class(const std::string& name) {
  for (const auto& [value, text] : kClassNames)
    if (text == name) return value;
  throw Error(Errc::InvalidSpec, "unknown preset class '" + name + "'");
}

const char* to_string(PresetSolver solver) noexcept {
  switch (solver) {
    case PresetSolver::Defective: return "choose_defective";
    case PresetSolver::Mad7_10: return "choose_clustered_mad7_10";
    case PresetSolver::Extension: return "choose_clustered_extension";
  }
  return "?";
}

Preset preset_bounds(PresetClass cls, const PresetParams& params) {
  if (params.t < 1 || params.g < 0 || params.k < 1)
    throw Error(Errc::InvalidSpec, "preset needs t >= 1, g >= 0, k >= 1");
  const int t = params.t;
  const int g = params.g;
  const int k = params.k;
  Preset p{cls, params, Rational(12, 1), 1, {}};
  switch (cls) {
    case PresetClass::EarthMoonDefective:
      for (const auto& [colours, d] : {std::pair{7, 6}, {8, 3}, {9, 2}, {11, 1}})
        p.rows.push_back(defect_row(colours, d, BoundKind::Defect, d));
      break;
    case PresetClass::EarthMoonClustered:
      p.rows = {defect_row(9, 1, BoundKind::Clustering, 2), extension_row(8, 405)};
      break;
    case PresetClass::Thickness:
      p.mad_bound = Rational(6 * t, 1);
      p.rows = {defect_row(ceil_div(9 * t, 2), 1, BoundKind::Clustering, 2),
                nine_row(ceil_div(21 * t, 5)), extension_row(4 * t, 228 * t - 51)};
      break;
    case PresetClass::GThickness: {
      p.mad_bound = Rational(12 * t + 3, 2);
      p.mad_n0 = std::max(1, 4 * t * g - 8 * t + 1);
      const int bound = std::max(ceil_div(4 * t * g - 8 * t, 4 * t + 1), 228 * t + 6);
      p.rows = {extension_row(4 * t + 1, bound, p.mad_n0)};
      break;
    }
    case PresetClass::Stack:
      p.mad_bound = Rational(2 * k + 2, 1);
      p.rows = {defect_row((3 * k + 4) / 2, 1, BoundKind::Defect, 1),
                nine_row((7 * k + 11) / 5), extension_row((4 * k + 6) / 3, 76 * k + 53)};
      break;
    case PresetClass::Queue:
      p.mad_bound = Rational(4 * k, 1);
      p.rows = {defect_row(3 * k, 1, BoundKind::Defect, 1), nine_row((14 * k + 4) / 5),
                extension_row((8 * k + 2) / 3, 152 * k - 13)};
      break;
  }
  return p;
}

}  // namespace sparsecol
