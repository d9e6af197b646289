#include "semidyn/julia.hpp"

#include "semidyn/error.hpp"
#include "semidyn/escape.hpp"
#include "semidyn/parallel.hpp"
#include "semidyn/random.hpp"

namespace semidyn {

void JuliaParams::validate() const {
  if (word_depth < 1) throw Error(ErrorCode::InvalidParameter, "julia word_depth must be >= 1");
  if (boundary_band < 1) throw Error(ErrorCode::InvalidParameter, "boundary_band must be >= 1");
  escape.validate();
}

PointCloud backward_ifs_sample(const SemigroupSpec& spec, std::size_t count, int burn_in,
                               std::uint64_t seed) {
  for (const auto& g : spec.generators()) {
    if (!g.has_inverse_branches()) {
      throw Error(ErrorCode::UnsupportedMap,
                  "backward sampling needs power maps, got '" + render_map(g) + "'");
    }
  }
  if (burn_in < 0) throw Error(ErrorCode::InvalidParameter, "burn_in must be >= 0");

  PointCloud cloud;
  cloud.seed = seed;
  cloud.burn_in = burn_in;
  cloud.label = spec.label();
  cloud.points.reserve(count);
  cloud.via.reserve(count);

  CounterRng rng(seed, 0);
  Complex cur = kIfsStart;
  int discarded = 0;
  while (cloud.points.size() < count) {
    const std::uint32_t gi = rng.below(static_cast<std::uint32_t>(spec.size()));
    const auto& gen = spec.generator(gi);
    if (cur == Complex{}) {
      cur = kIfsStart;
      continue;
    }
    const auto branches = inverse_branches(gen, cur);
    cur = branches[rng.below(static_cast<std::uint32_t>(branches.size()))];
    if (discarded < burn_in) {
      ++discarded;
      continue;
    }
    cloud.points.push_back(cur);
    cloud.via.push_back(gi);
  }
  return cloud;
}

namespace {

// Escape flags of one word on pixel centers and on the corner lattice.
struct WordPicture {
  std::vector<std::uint8_t> center;  // width * height
  std::vector<std::uint8_t> corner;  // (width + 1) * (height + 1)
};

WordPicture picture(const SemigroupSpec& spec, const Word& w, const GridSpec& g,
                    const EscapeParams& p, int threads) {
  WordPicture pic;
  pic.center.assign(g.pixel_count(), 0);
  const std::size_t cw = static_cast<std::size_t>(g.width) + 1;
  pic.corner.assign(cw * (static_cast<std::size_t>(g.height) + 1), 0);
  // Rows 0..height-1 fill centers and top corners, row `height` the bottom corners.
  parallel_for(static_cast<std::size_t>(g.height) + 1, threads, [&](std::size_t row) {
    const int j = static_cast<int>(row);
    for (int i = 0; i <= g.width; ++i) {
      pic.corner[row * cw + i] = classify_orbit(spec, w, g.corner_point(i, j), p).escapes();
    }
    if (j == g.height) return;
    for (int i = 0; i < g.width; ++i) {
      pic.center[row * g.width + i] = classify_orbit(spec, w, g.pixel_to_point(i, j), p).escapes();
    }
  });
  return pic;
}

void mark_band(const WordPicture& pic, const GridSpec& g, std::vector<std::uint8_t>& band) {
  const int w = g.width;
  const int h = g.height;
  const std::size_t cw = static_cast<std::size_t>(w) + 1;
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < w; ++i) {
      const std::size_t idx = static_cast<std::size_t>(j) * w + i;
      if (band[idx]) continue;
      bool esc = false;
      bool bnd = false;
      for (int dj = -1; dj <= 1; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          const int x = i + di;
          const int y = j + dj;
          if (x < 0 || y < 0 || x >= w || y >= h) continue;
          (pic.center[static_cast<std::size_t>(y) * w + x] ? esc : bnd) = true;
        }
      }
      for (int dj = 0; dj <= 1; ++dj) {
        for (int di = 0; di <= 1; ++di) {
          (pic.corner[static_cast<std::size_t>(j + dj) * cw + (i + di)] ? esc : bnd) = true;
        }
      }
      if (esc && bnd) band[idx] = 1;
    }
  }
}

IndicatorGrid band_grid(const GridSpec& g, const std::vector<std::uint8_t>& band,
                        const EscapeParams& p, std::string label) {
  IndicatorGrid out(g, PixelClass::Fatou);
  for (std::size_t k = 0; k < band.size(); ++k) {
    if (band[k]) out.classes[k] = PixelClass::JuliaBand;
  }
  out.params = p;
  out.meta = {std::move(label), 0, library_version()};
  return out;
}

}  // namespace

IndicatorGrid word_julia_band(const SemigroupSpec& spec, const Word& w, const GridSpec& grid,
                              const EscapeParams& p, int threads) {
  w.validate(spec);
  p.validate();
  grid.validate();
  std::vector<std::uint8_t> band(grid.pixel_count(), 0);
  mark_band(picture(spec, w, grid, p, threads), grid, band);
  return band_grid(grid, band, p, spec.label() + " word " + to_string(w));
}

IndicatorGrid approximate_julia_union(const SemigroupSpec& spec, const GridSpec& grid,
                                      const JuliaParams& p, int threads) {
  p.validate();
  grid.validate();
  const auto words = examined_words(spec, p.word_depth);
  std::vector<std::uint8_t> band(grid.pixel_count(), 0);
  std::vector<std::uint8_t> seen_escape(grid.pixel_count(), 0);
  std::vector<std::uint8_t> seen_bounded(grid.pixel_count(), 0);
  for (const auto& w : words) {
    const WordPicture pic = picture(spec, w, grid, p.escape, threads);
    mark_band(pic, grid, band);
    for (std::size_t k = 0; k < band.size(); ++k) {
      (pic.center[k] ? seen_escape : seen_bounded)[k] = 1;
    }
  }
  for (std::size_t k = 0; k < band.size(); ++k) {
    if (seen_escape[k] && seen_bounded[k]) band[k] = 1;
  }
  EscapeParams echo = p.escape;
  echo.word_depth = p.word_depth;
  return band_grid(grid, band, echo, spec.label());
}

IndicatorGrid fatou_indicator(const IndicatorGrid& julia) {
  IndicatorGrid out = julia;
  for (auto& c : out.classes) c = complement(c);
  return out;
}

IndicatorGrid preimage_grid(const MapDescriptor& m, const IndicatorGrid& src, PixelClass target) {
  const GridSpec& g = src.grid;
  IndicatorGrid out(g, PixelClass::Unknown);
  out.params = src.params;
  out.meta = src.meta;
  const PixelClass other = complement(target);
  for (int j = 0; j < g.height; ++j) {
    for (int i = 0; i < g.width; ++i) {
      const auto q = g.point_to_pixel(eval_map(m, g.pixel_to_point(i, j)));
      if (!q) continue;
      const PixelClass c = src.at(q->i, q->j);
      if (c == target) {
        out.at(i, j) = target;
      } else if (c != PixelClass::Unknown && c != PixelClass::Indeterminate) {
        out.at(i, j) = other;
      }
    }
  }
  return out;
}

}  // namespace semidyn
