#include "semidyn/grid.hpp"

#include <algorithm>

#include "semidyn/error.hpp"

namespace semidyn {

void GridSpec::validate() const {
  if (!(re_min < re_max) || !(im_min < im_max)) {
    throw Error(ErrorCode::InvalidParameter, "grid window must satisfy min < max on both axes");
  }
  if (width < 1 || height < 1) {
    throw Error(ErrorCode::InvalidParameter, "grid width and height must be >= 1");
  }
}

std::optional<GridSpec::Pixel> GridSpec::point_to_pixel(Complex z) const noexcept {
  if (is_overflow(z)) return std::nullopt;
  const double x = ((z.real() - re_min) * width) / (re_max - re_min);
  const double y = ((im_max - z.imag()) * height) / (im_max - im_min);
  if (!(x >= 0.0) || !(y >= 0.0) || x >= width || y >= height) return std::nullopt;
  return Pixel{static_cast<int>(x), static_cast<int>(y)};
}

const char* to_string(PixelClass c) {
  switch (c) {
    case PixelClass::Escaping: return "escaping";
    case PixelClass::Bounded: return "bounded";
    case PixelClass::JuliaBand: return "julia";
    case PixelClass::Fatou: return "fatou";
    case PixelClass::Unknown: return "unknown";
    case PixelClass::Indeterminate: return "indeterminate";
  }
  return "?";
}

PixelClass complement(PixelClass c) noexcept {
  switch (c) {
    case PixelClass::Escaping: return PixelClass::Bounded;
    case PixelClass::Bounded: return PixelClass::Escaping;
    case PixelClass::JuliaBand: return PixelClass::Fatou;
    case PixelClass::Fatou: return PixelClass::JuliaBand;
    default: return c;
  }
}

std::size_t IndicatorGrid::count(PixelClass c) const {
  return static_cast<std::size_t>(std::count(classes.begin(), classes.end(), c));
}

double IndicatorGrid::fraction(PixelClass c) const {
  return classes.empty() ? 0.0 : static_cast<double>(count(c)) / classes.size();
}

Mask mask_of(const IndicatorGrid& g, PixelClass c) {
  Mask m(g.classes.size(), 0);
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = g.classes[k] == c;
  return m;
}

Mask dilate(const Mask& mask, int width, int height, int radius) {
  if (radius <= 0) return mask;
  // Separable: rows then columns.
  Mask rows(mask.size(), 0);
  for (int j = 0; j < height; ++j) {
    for (int i = 0; i < width; ++i) {
      if (!mask[static_cast<std::size_t>(j) * width + i]) continue;
      const int lo = std::max(0, i - radius);
      const int hi = std::min(width - 1, i + radius);
      for (int x = lo; x <= hi; ++x) rows[static_cast<std::size_t>(j) * width + x] = 1;
    }
  }
  Mask out(mask.size(), 0);
  for (int j = 0; j < height; ++j) {
    for (int i = 0; i < width; ++i) {
      if (!rows[static_cast<std::size_t>(j) * width + i]) continue;
      const int lo = std::max(0, j - radius);
      const int hi = std::min(height - 1, j + radius);
      for (int y = lo; y <= hi; ++y) out[static_cast<std::size_t>(y) * width + i] = 1;
    }
  }
  return out;
}

Mask boundary_band(const IndicatorGrid& g, int radius) {
  const int w = g.grid.width;
  const int h = g.grid.height;
  Mask edge(g.classes.size(), 0);
  if (radius <= 0) return edge;
  auto informative = [](PixelClass c) {
    return c != PixelClass::Unknown && c != PixelClass::Indeterminate;
  };
  // A pixel is an edge if a 4- or 8-neighbour carries a different class.
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < w; ++i) {
      const PixelClass c = g.at(i, j);
      if (!informative(c)) continue;
      bool differs = false;
      for (int dj = -1; dj <= 1 && !differs; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          const int x = i + di;
          const int y = j + dj;
          if (x < 0 || y < 0 || x >= w || y >= h) continue;
          const PixelClass o = g.at(x, y);
          if (informative(o) && o != c) {
            differs = true;
            break;
          }
        }
      }
      edge[static_cast<std::size_t>(j) * w + i] = differs;
    }
  }
  // Edge pixels sit at distance 1 from the other class, so widen by radius-1.
  return dilate(edge, w, h, radius - 1);
}

std::string library_version() { return "semidyn 1.0.0"; }

}  // namespace semidyn
