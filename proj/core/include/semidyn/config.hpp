#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semidyn/grid.hpp"
#include "semidyn/julia.hpp"
#include "semidyn/map_catalog.hpp"
#include "semidyn/orbit.hpp"
#include "semidyn/semigroup.hpp"

namespace semidyn {

struct SamplingConfig {
  std::uint64_t seed = 1;
  std::size_t ifs_count = 100000;
  int ifs_burn_in = 50;
  std::size_t gate_samples = 1000;
  double gate_radius = 1.0;
  int trials = 200;

  bool operator==(const SamplingConfig&) const = default;
};

/// Pass thresholds for each check. Kept in the scene so every run states
/// the policy it was judged by.
struct CheckThresholds {
  double forward = 0.01;
  double backward = 0.02;
  double intersection = 0.02;
  double union_identity = 0.02;
  double abelian = 0.03;
  double inclusion = 0.02;
  double annulus = 0.01;
  Complex annulus_a{2.0, 0.0};
  double gate_tolerance = 1e-9;

  bool operator==(const CheckThresholds&) const = default;
};

struct OutputPaths {
  std::string pgm;
  std::string csv;
  std::string report;

  bool operator==(const OutputPaths&) const = default;
};

/// INI-style scene:
///
///   [semigroup]
///   label = annulus
///   generator = power d=2 b=1
///   generator = power d=2 b=2
///   word_depth = 3          (optional, overrides [escape] and [julia])
///   [grid]     re_min re_max im_min im_max width height
///   [escape]   radius max_iter word_depth confirm
///   [julia]    word_depth boundary_band
///   [sampling] seed ifs_count ifs_burn_in gate_samples gate_radius trials
///   [check]    forward backward intersection union abelian inclusion annulus
///              annulus_a gate_tolerance
///   [output]   pgm csv report
///
/// [semigroup] and [grid] are required; everything else has defaults.
struct SceneConfig {
  std::string label = "semigroup";
  std::vector<MapDescriptor> generators;
  std::optional<int> word_depth;
  GridSpec grid;
  EscapeParams escape;
  int julia_word_depth = 3;
  int boundary_band = 2;
  SamplingConfig sampling;
  CheckThresholds check;
  OutputPaths output;

  SemigroupSpec semigroup() const { return SemigroupSpec(generators, label); }
  /// Escape parameters with the word-depth override applied.
  EscapeParams effective_escape() const;
  JuliaParams effective_julia() const;

  void validate() const;

  bool operator==(const SceneConfig&) const = default;
};

/// Throws Error(ParseError) naming the offending line.
SceneConfig parse_config(std::string_view text);
std::string render_config(const SceneConfig& config);

/// Reads and parses a file; a missing file is an Io error naming the path.
SceneConfig load_config(const std::string& path);

}  // namespace semidyn
