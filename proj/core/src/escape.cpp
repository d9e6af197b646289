#include "semidyn/escape.hpp"

#include "semidyn/error.hpp"
#include "semidyn/parallel.hpp"

namespace semidyn {

OrbitOutcome classify_orbit(const SemigroupSpec& spec, const Word& w, Complex z,
                            const EscapeParams& p) {
  return iterate_word(spec, w, z, p, /*store_points=*/false).outcome;
}

std::vector<Word> examined_words(const SemigroupSpec& spec, int depth) {
  if (spec.is_cyclic()) return {Word{0}};
  return words_up_to(spec, depth);
}

void require_entire(const SemigroupSpec& spec) {
  for (const auto& g : spec.generators()) {
    if (!g.is_entire()) {
      throw Error(ErrorCode::RationalGeneratorsRejected,
                  "escaping sets need entire generators, got '" + render_map(g) + "'");
    }
  }
}

namespace {

SemigroupEscapeClass classify_with_words(const SemigroupSpec& spec, const std::vector<Word>& words,
                                         Complex z, const EscapeParams& p) {
  bool indeterminate = false;
  for (const auto& w : words) {
    const OrbitOutcome o = classify_orbit(spec, w, z, p);
    if (o.kind == OrbitOutcome::Kind::Bounded) {
      return {SemigroupEscapeClass::Kind::BoundedWitness, w};
    }
    if (o.kind == OrbitOutcome::Kind::Indeterminate) indeterminate = true;
  }
  if (indeterminate) return {SemigroupEscapeClass::Kind::Indeterminate, {}};
  return {SemigroupEscapeClass::Kind::EscapingCandidate, {}};
}

PixelClass to_pixel(const SemigroupEscapeClass& c) {
  switch (c.kind) {
    case SemigroupEscapeClass::Kind::EscapingCandidate: return PixelClass::Escaping;
    case SemigroupEscapeClass::Kind::BoundedWitness: return PixelClass::Bounded;
    default: return PixelClass::Indeterminate;
  }
}

}  // namespace

SemigroupEscapeClass classify_point_semigroup(const SemigroupSpec& spec, Complex z,
                                              const EscapeParams& p) {
  require_entire(spec);
  p.validate();
  return classify_with_words(spec, examined_words(spec, p.word_depth), z, p);
}

IndicatorGrid approximate_escaping_set(const SemigroupSpec& spec, const GridSpec& grid,
                                       const EscapeParams& p, int threads) {
  require_entire(spec);
  p.validate();
  grid.validate();
  const auto words = examined_words(spec, p.word_depth);
  IndicatorGrid out(grid, PixelClass::Indeterminate);
  out.params = p;
  out.meta = {spec.label(), 0, library_version()};
  parallel_for(static_cast<std::size_t>(grid.height), threads, [&](std::size_t row) {
    const int j = static_cast<int>(row);
    for (int i = 0; i < grid.width; ++i) {
      out.at(i, j) = to_pixel(classify_with_words(spec, words, grid.pixel_to_point(i, j), p));
    }
  });
  return out;
}

IndicatorGrid word_escape_grid(const SemigroupSpec& spec, const Word& w, const GridSpec& grid,
                               const EscapeParams& p, int threads) {
  w.validate(spec);
  p.validate();
  grid.validate();
  IndicatorGrid out(grid, PixelClass::Indeterminate);
  out.params = p;
  out.meta = {spec.label() + " word " + to_string(w), 0, library_version()};
  parallel_for(static_cast<std::size_t>(grid.height), threads, [&](std::size_t row) {
    const int j = static_cast<int>(row);
    for (int i = 0; i < grid.width; ++i) {
      const OrbitOutcome o = classify_orbit(spec, w, grid.pixel_to_point(i, j), p);
      out.at(i, j) = o.escapes() ? PixelClass::Escaping
                     : o.kind == OrbitOutcome::Kind::Bounded ? PixelClass::Bounded
                                                             : PixelClass::Indeterminate;
    }
  });
  return out;
}

double random_word_divergence_test(const SemigroupSpec& spec, Complex z, const EscapeParams& p,
                                   std::uint64_t seed, int trials) {
  p.validate();
  if (trials < 1) throw Error(ErrorCode::InvalidParameter, "trials must be >= 1");
  const double r2 = p.radius * p.radius;
  int diverged = 0;
  for (int t = 0; t < trials; ++t) {
    auto stream = random_word_stream(spec, seed, static_cast<std::uint64_t>(t));
    Complex cur = z;
    int run = -1;  // confirmation steps so far, -1 when not above R
    double last = 0.0;
    bool escaped = is_overflow(cur);
    for (int k = 1; !escaped && k <= p.max_iter + p.confirm; ++k) {
      cur = eval_map(spec.generator(stream.next()), cur);
      if (is_overflow(cur)) {
        escaped = true;
        break;
      }
      const double mag = std::norm(cur);
      if (run >= 0) {
        if (mag >= last) {
          last = mag;
          if (++run == p.confirm) escaped = true;
          continue;
        }
        run = -1;
      }
      if (k <= p.max_iter && mag > r2) {
        run = 0;
        last = mag;
      } else if (k >= p.max_iter) {
        break;
      }
    }
    if (escaped) ++diverged;
  }
  return static_cast<double>(diverged) / trials;
}

}  // namespace semidyn
