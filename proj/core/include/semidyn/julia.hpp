#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semidyn/grid.hpp"
#include "semidyn/orbit.hpp"
#include "semidyn/semigroup.hpp"

namespace semidyn {

struct PointCloud {
  std::vector<Complex> points;
  std::vector<std::uint32_t> via;  ///< generator whose inverse branch produced each point
  std::uint64_t seed = 0;
  int burn_in = 0;
  std::string label;
};

struct JuliaParams {
  int word_depth = 3;
  EscapeParams escape;
  int boundary_band = 2;

  void validate() const;
  bool operator==(const JuliaParams&) const = default;
};

inline constexpr Complex kIfsStart{1.0, 0.0};

/// Random backward orbit of the semigroup starting at 1: each step picks a
/// uniform generator and a uniform inverse branch of it. The first `burn_in`
/// points are discarded. Reaching the critical value 0 restarts the chain at
/// the start point without emitting. Only power-quotient generators are
/// supported (UnsupportedMap otherwise).
PointCloud backward_ifs_sample(const SemigroupSpec& spec, std::size_t count, int burn_in,
                               std::uint64_t seed);

/// Boundary band of the escape-time picture of one word map. A pixel is
/// marked when its 3x3 neighbourhood of centers contains both escaping and
/// bounded points, or when its own center and four corners disagree (this
/// catches Julia sets thinner than a pixel that run between pixel centers).
IndicatorGrid word_julia_band(const SemigroupSpec& spec, const Word& w, const GridSpec& grid,
                              const EscapeParams& p, int threads = 0);

/// Union of the word bands over every examined word of length <= L, plus
/// every pixel whose center escapes under one word and stays bounded under
/// another. Marked pixels are JuliaBand, all others Fatou.
IndicatorGrid approximate_julia_union(const SemigroupSpec& spec, const GridSpec& grid,
                                      const JuliaParams& p, int threads = 0);

/// Swaps JuliaBand and Fatou (and Escaping and Bounded); keeps metadata.
/// The result is the F(S) mask for rendering: F(S) becomes the marked, dark
/// class. Checks take the Julia grid itself with class Fatou.
IndicatorGrid fatou_indicator(const IndicatorGrid& julia);

/// Pixel z is `target` iff m(z) lands inside the window on a `target` pixel
/// of src, Unknown if m(z) leaves the window (or lands on an Unknown pixel),
/// and the complement of `target` otherwise.
IndicatorGrid preimage_grid(const MapDescriptor& m, const IndicatorGrid& src, PixelClass target);

}  // namespace semidyn
