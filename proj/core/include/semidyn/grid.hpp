#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semidyn/complex.hpp"
#include "semidyn/orbit.hpp"

namespace semidyn {

/// Rectangular window with pixel centers at
///   re = re_min + (i + 0.5) (re_max - re_min) / width
///   im = im_max - (j + 0.5) (im_max - im_min) / height
/// for column i and row j counted from the top.
struct GridSpec {
  double re_min = -2.0;
  double re_max = 2.0;
  double im_min = -2.0;
  double im_max = 2.0;
  int width = 400;
  int height = 400;

  void validate() const;

  std::size_t pixel_count() const noexcept {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  double pixel_width() const noexcept { return (re_max - re_min) / width; }
  double pixel_height() const noexcept { return (im_max - im_min) / height; }

  Complex pixel_to_point(int i, int j) const noexcept {
    return {re_min + ((i + 0.5) * (re_max - re_min)) / width,
            im_max - ((j + 0.5) * (im_max - im_min)) / height};
  }

  /// Corner (i, j) of the (width+1) x (height+1) vertex lattice; corner (i, j)
  /// is the top-left corner of pixel (i, j).
  Complex corner_point(int i, int j) const noexcept {
    return {re_min + (i * (re_max - re_min)) / width, im_max - (j * (im_max - im_min)) / height};
  }

  struct Pixel {
    int i;
    int j;
    bool operator==(const Pixel&) const = default;
  };

  /// Pixel containing z, or nullopt if z is outside the window or overflowed.
  std::optional<Pixel> point_to_pixel(Complex z) const noexcept;

  bool operator==(const GridSpec&) const = default;
};

enum class PixelClass : std::uint8_t {
  Escaping,
  Bounded,
  JuliaBand,
  Fatou,
  Unknown,
  Indeterminate,
};

const char* to_string(PixelClass c);

/// Escaping <-> Bounded, JuliaBand <-> Fatou; Unknown and Indeterminate are fixed.
PixelClass complement(PixelClass c) noexcept;

struct Provenance {
  std::string label;
  std::uint64_t seed = 0;
  std::string version;
};

struct IndicatorGrid {
  GridSpec grid;
  std::vector<PixelClass> classes;  ///< row-major, row 0 = top
  EscapeParams params;
  Provenance meta;

  IndicatorGrid() = default;
  IndicatorGrid(GridSpec g, PixelClass fill) : grid(g), classes(g.pixel_count(), fill) {}

  PixelClass at(int i, int j) const {
    return classes[static_cast<std::size_t>(j) * grid.width + static_cast<std::size_t>(i)];
  }
  PixelClass& at(int i, int j) {
    return classes[static_cast<std::size_t>(j) * grid.width + static_cast<std::size_t>(i)];
  }
  std::size_t count(PixelClass c) const;
  double fraction(PixelClass c) const;
};

using Mask = std::vector<std::uint8_t>;

/// Pixels with class `c`.
Mask mask_of(const IndicatorGrid& g, PixelClass c);

/// Chebyshev dilation of a mask by `radius` pixels.
Mask dilate(const Mask& mask, int width, int height, int radius);

/// Pixels within Chebyshev distance `radius` of a pixel of a different class.
/// Unknown and Indeterminate pixels never create a boundary.
Mask boundary_band(const IndicatorGrid& g, int radius);

std::string library_version();

}  // namespace semidyn
