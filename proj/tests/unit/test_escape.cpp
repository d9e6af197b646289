#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"

using namespace semidyn;
using testing::exp_pair;
using testing::square;
using testing::window;

namespace {

// Plain loop over a word with no shared code: true when the orbit stays
// within `radius` for `steps` applications.
bool stays_bounded(const SemigroupSpec& spec, const Word& w, Complex z, double radius,
                   int steps) {
  for (int k = 0; k < steps; ++k) {
    for (auto letter : w.letters()) {
      const auto& kind = spec.generator(letter).kind();
      if (const auto* e = std::get_if<ExpAffine>(&kind)) {
        const Complex u = e->gamma * z + e->shift;
        if (u.real() > 700.0) return false;
        z = std::exp(u);
      } else {
        const auto& p = std::get<PowerQuotient>(kind);
        z = std::pow(z, p.degree) / p.divisor;
      }
    }
    if (!(std::abs(z) <= radius)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("escape") {

TEST_CASE("classify_orbit") {
  CHECK(classify_orbit(square(), Word{0}, 2.0, {1e10, 100, 3, 3}) == OrbitOutcome::escaped(6));
  CHECK(classify_orbit(square(), Word{0}, 0.3, {}) == OrbitOutcome::bounded());

  const SemigroupSpec decay({MapDescriptor::exp_affine(-1.0, 0.0)}, "e^-z");
  REQUIRE(stays_bounded(decay, Word{0}, 50.0, 10.0, 200));
  CHECK(classify_orbit(decay, Word{0}, 50.0, {}) == OrbitOutcome::bounded());
}

TEST_CASE("confirmation rejects a transient excursion") {
  // -5 -> e^5 > R, then e^{-148} is tiny: the excursion is not confirmed.
  const SemigroupSpec decay({MapDescriptor::exp_affine(-1.0, 0.0)}, "e^-z");
  const EscapeParams p{100.0, 50, 1, 3};
  CHECK(classify_orbit(decay, Word{0}, -5.0, p).kind == OrbitOutcome::Kind::Bounded);
}

TEST_CASE("classify_point_semigroup") {
  const EscapeParams p{1e10, 200, 2, 3};
  const auto at3 = classify_point_semigroup(exp_pair(), 3.0, p);
  REQUIRE(at3.kind == SemigroupEscapeClass::Kind::BoundedWitness);
  // The witness is the first bounded word in enumeration order.
  Word expected;
  for (const Word& w : words_up_to(exp_pair(), 2)) {
    if (stays_bounded(exp_pair(), w, 3.0, 1e10, 200)) {
      expected = w;
      break;
    }
  }
  CHECK(at3.witness == expected);
  // g o f itself is a bounded word at 3.
  CHECK(stays_bounded(exp_pair(), Word{0, 1}, 3.0, 1e10, 200));
  CHECK(classify_orbit(exp_pair(), Word{0, 1}, 3.0, p) == OrbitOutcome::bounded());

  CHECK(classify_point_semigroup(square(), 2.0, p).kind ==
        SemigroupEscapeClass::Kind::EscapingCandidate);
  const auto half = classify_point_semigroup(square(), 0.5, p);
  CHECK(half.kind == SemigroupEscapeClass::Kind::BoundedWitness);
  CHECK(half.witness == Word{0});
}

TEST_CASE("escaping set of z^2 against the area oracle") {
  const GridSpec g = window(2.0, 400);
  const IndicatorGrid grid = approximate_escaping_set(square(), g, {1e10, 100, 3, 3}, 1);
  const double area = (16.0 - std::numbers::pi) / 16.0;
  CHECK(std::fabs(grid.fraction(PixelClass::Escaping) - area) < 0.01);
  std::size_t outside = 0;
  std::size_t disagree = 0;
  for (int j = 0; j < g.height; ++j) {
    for (int i = 0; i < g.width; ++i) {
      const bool out = std::abs(g.pixel_to_point(i, j)) > 1.0;
      outside += out;
      disagree += out != (grid.at(i, j) == PixelClass::Escaping);
    }
  }
  CHECK(disagree == 0);
  CHECK(grid.count(PixelClass::Escaping) == outside);
  CHECK(grid.params.max_iter == 100);
}

TEST_CASE("escaping set of the exponential pair is nearly empty") {
  const IndicatorGrid grid =
      approximate_escaping_set(exp_pair(), window(2.0, 100), {1e10, 200, 2, 3}, 0);
  CHECK(grid.fraction(PixelClass::Escaping) < 0.005);
}

TEST_CASE("single pixel grid") {
  const GridSpec one{1.0, 3.0, -1.0, 1.0, 1, 1};
  const IndicatorGrid grid = approximate_escaping_set(square(), one, {}, 0);
  REQUIRE(grid.classes.size() == 1);
  CHECK(grid.classes[0] == PixelClass::Escaping);
}

TEST_CASE("random word divergence") {
  const EscapeParams p{1e10, 200, 3, 3};
  CHECK(random_word_divergence_test(square(), 2.0, p, 1, 20) == 1.0);
  CHECK(random_word_divergence_test(square(), 0.5, p, 1, 20) == 0.0);
  bool bounded_word = false;
  for (const Word& w : words_up_to(exp_pair(), 3)) {
    bounded_word = bounded_word || stays_bounded(exp_pair(), w, 3.0, 1e10, 200);
  }
  REQUIRE(bounded_word);
  const double frac = random_word_divergence_test(exp_pair(), 3.0, p, 7, 200);
  CHECK(frac < 1.0);
  CHECK(frac == random_word_divergence_test(exp_pair(), 3.0, p, 7, 200));
  CHECK_THROWS_AS(random_word_divergence_test(square(), 2.0, p, 1, 0), Error);
}

TEST_CASE("every catalog generator is entire") {
  CHECK_NOTHROW(require_entire(exp_pair()));
  CHECK_NOTHROW(require_entire(testing::tcheb23()));
}

TEST_CASE("examined words") {
  CHECK(examined_words(square(), 4) == std::vector<Word>{Word{0}});
  CHECK(examined_words(exp_pair(), 2).size() == 6);
}

}  // TEST_SUITE
