#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "support.hpp"

using namespace semidyn;

namespace {

// Independent expansion: multiply polynomials with integer arithmetic.
std::vector<long long> tcheb_by_hand(int n) {
  std::vector<long long> a{1};
  if (n == 0) return a;
  std::vector<long long> b{0, 1};
  for (int k = 1; k < n; ++k) {
    std::vector<long long> c(b.size() + 1, 0);
    for (std::size_t i = 0; i < b.size(); ++i) c[i + 1] += 2 * b[i];
    for (std::size_t i = 0; i < a.size(); ++i) c[i] -= a[i];
    a = b;
    b = c;
  }
  return b;
}

Complex horner(const std::vector<double>& coeffs, Complex z) {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

bool contains_near(const std::vector<Complex>& set, Complex z, double tol = 1e-12) {
  return std::any_of(set.begin(), set.end(), [&](Complex s) { return std::abs(s - z) <= tol; });
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Io;
}

}  // namespace

TEST_SUITE("map_catalog") {

TEST_CASE("eval_map fixed points") {
  CHECK(eval_map(MapDescriptor::power(2, 1.0), 1.0) == Complex(1.0, 0.0));
  CHECK(eval_map(MapDescriptor::power(2, 2.0), 2.0) == Complex(2.0, 0.0));
  CHECK(eval_map(MapDescriptor::sine_affine(0.5, 0.0, 1), 0.0) == Complex(0.0, 0.0));
}

TEST_CASE("eval_map matches closed forms") {
  const Complex z{0.3, -0.7};
  CHECK(std::abs(eval_map(MapDescriptor::power(3, {1.0, 1.0}), z) - z * z * z / Complex(1, 1)) <
        1e-15);
  CHECK(std::abs(eval_map(MapDescriptor::exp_affine(-1.0, 0.5), z) - std::exp(-z + 0.5)) < 1e-15);
  CHECK(std::abs(eval_map(MapDescriptor::affine_exp(0.25, 1.0), z) -
                 (z + 0.25 * std::exp(z) + 1.0)) < 1e-15);
  CHECK(std::abs(eval_map(MapDescriptor::sine_affine(0.5, 2.0, -1), z) -
                 (-(z + 0.5 * std::sin(z)) + 2.0)) < 1e-15);
}

TEST_CASE("overflow guard") {
  CHECK(is_overflow(eval_map(MapDescriptor::exp_affine(1.0, 0.0), 800.0)));
  CHECK(is_overflow(eval_map(MapDescriptor::affine_exp(1.0, 0.0), 710.0)));
  CHECK(is_overflow(eval_map(MapDescriptor::sine_affine(0.5, 0.0, 1), Complex(0.0, 720.0))));
  CHECK(is_overflow(eval_map(MapDescriptor::power(2, 1.0), 1e100)));
  CHECK(is_overflow(eval_map(MapDescriptor::tchebyshev(3), Complex(1e60, 1e60))));
  CHECK(is_overflow(eval_map(MapDescriptor::power(2, 1.0), overflow_value())));
  CHECK(is_overflow(guard({std::nan(""), 0.0})));
  CHECK(is_overflow(guard({0.0, 2e150})));
  CHECK_FALSE(is_overflow(guard({1e149, -1e149})));
}

TEST_CASE("tchebyshev coefficients") {
  CHECK(tchebyshev_coeffs(0) == std::vector<double>{1.0});
  CHECK(tchebyshev_coeffs(2) == std::vector<double>{-1.0, 0.0, 2.0});
  CHECK(tchebyshev_coeffs(3) == std::vector<double>{0.0, -3.0, 0.0, 4.0});
  for (int n = 0; n <= 12; ++n) {
    const auto hand = tcheb_by_hand(n);
    const auto got = tchebyshev_coeffs(n);
    REQUIRE(got.size() == hand.size());
    for (std::size_t i = 0; i < hand.size(); ++i) CHECK(got[i] == static_cast<double>(hand[i]));
  }
}

TEST_CASE("tchebyshev evaluation agrees with the expanded polynomial") {
  for (int n = 2; n <= 8; ++n) {
    const auto coeffs = tchebyshev_coeffs(n);
    for (Complex z : sample_disc({{0.0, 0.0}, 1.2, 200, 7})) {
      CHECK(std::abs(eval_map(MapDescriptor::tchebyshev(n), z) - horner(coeffs, z)) < 1e-12);
    }
  }
  // T_n(cos t) = cos(n t)
  for (double t : {0.1, 0.7, 2.0, 3.0}) {
    CHECK(std::abs(eval_map(MapDescriptor::tchebyshev(5), std::cos(t)) - std::cos(5 * t)) <
          1e-13);
  }
}

TEST_CASE("inverse branches") {
  const auto sq = inverse_branches(MapDescriptor::power(2, 1.0), 4.0);
  CHECK(sq.size() == 2);
  CHECK(contains_near(sq, 2.0));
  CHECK(contains_near(sq, -2.0));
  const auto half = inverse_branches(MapDescriptor::power(2, 2.0), 2.0);
  CHECK(contains_near(half, 2.0));
  CHECK(contains_near(half, -2.0));
  const auto minus_one = inverse_branches(MapDescriptor::power(2, 1.0), -1.0);
  CHECK(contains_near(minus_one, {0.0, 1.0}));
  CHECK(contains_near(minus_one, {0.0, -1.0}));
}

TEST_CASE("inverse branch errors") {
  CHECK(code_of([] { inverse_branches(MapDescriptor::tchebyshev(2), 1.0); }) ==
        ErrorCode::UnsupportedMap);
  CHECK(code_of([] { inverse_branches(MapDescriptor::exp_affine(1.0, 0.0), 1.0); }) ==
        ErrorCode::UnsupportedMap);
  CHECK(code_of([] { inverse_branches(MapDescriptor::power(2, 1.0), 0.0); }) ==
        ErrorCode::ZeroArgument);
}

TEST_CASE("construction validates parameters") {
  CHECK(code_of([] { MapDescriptor::power(1, 1.0); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { MapDescriptor::power(2, 0.0); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { MapDescriptor::tchebyshev(1); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { MapDescriptor::exp_affine(0.0, 1.0); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { MapDescriptor::sine_affine(0.5, 0.0, 0); }) ==
        ErrorCode::InvalidParameter);
  CHECK(code_of([] { tchebyshev_coeffs(-1); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("metadata flags") {
  CHECK(MapDescriptor::power(2, 1.0).is_rational());
  CHECK(MapDescriptor::tchebyshev(3).is_rational());
  CHECK_FALSE(MapDescriptor::exp_affine(1.0, 0.0).is_rational());
  CHECK(MapDescriptor::exp_affine(1.0, 0.0).finite_type_claimed());
  CHECK_FALSE(MapDescriptor::affine_exp(1.0, 0.0).finite_type_claimed());
  CHECK_FALSE(MapDescriptor::sine_affine(0.5, 0.0, 1).finite_type_claimed());
  CHECK(MapDescriptor::power(3, 1.0).has_inverse_branches());
  CHECK_FALSE(MapDescriptor::tchebyshev(3).has_inverse_branches());
  CHECK_FALSE(singular_value_note(MapDescriptor::exp_affine(1.0, 0.0)).note.empty());
}

TEST_CASE("commutator defect") {
  const SampleSpec unit{{0.0, 0.0}, 1.0, 1000, 1};
  CHECK(commutator_defect(MapDescriptor::tchebyshev(2), MapDescriptor::tchebyshev(3), unit)
            .defect < 1e-12);
  const SampleSpec wide{{0.0, 0.0}, 1.5, 1000, 1};
  CHECK(commutator_defect(MapDescriptor::power(2, 1.0), MapDescriptor::power(2, 2.0), wide)
            .defect > 0.1);
  for (const auto& m : {MapDescriptor::power(3, {1.0, 1.0}), MapDescriptor::exp_affine(1.0, 0.5),
                        MapDescriptor::sine_affine(0.5, 1.0, -1)}) {
    CHECK(commutator_defect(m, m, unit).defect == 0.0);
  }
}

TEST_CASE("commutator defect skips overflow and fails when nothing is left") {
  const SampleSpec far{{2000.0, 0.0}, 1.0, 50, 3};
  CHECK(code_of([&] {
          commutator_defect(MapDescriptor::exp_affine(1.0, 0.0), MapDescriptor::power(2, 1.0),
                            far);
        }) == ErrorCode::AllSamplesOverflowed);
}

TEST_CASE("parse_map") {
  CHECK(parse_map("power d=2 b=1") == MapDescriptor::power(2, 1.0));
  CHECK(parse_map("tcheb n=3") == MapDescriptor::tchebyshev(3));
  const MapDescriptor sine = parse_map("sine gamma=0.5 c=6.283185307 s=+");
  const auto& k = std::get<SineAffine>(sine.kind());
  CHECK(k.gamma == Complex(0.5, 0.0));
  CHECK(k.shift.real() == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-9));
  CHECK(k.sign == 1);
  CHECK(parse_map("  exp   c=0.5  gamma=-1 ") == MapDescriptor::exp_affine(-1.0, 0.5));
  CHECK(parse_map("power d=3 b=1+i") == MapDescriptor::power(3, {1.0, 1.0}));
}

TEST_CASE("parse_map errors carry positions") {
  const char* bad[] = {"",          "cube d=3",           "power d=2",      "power d=2 b=1 b=2",
                       "power d=2 b=1 q=1", "power d=x b=1", "sine gamma=1 c=0 s=*",
                       "power d=2 b=1+-2i", "power d=1 b=1", "tcheb n"};
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_map(text), ParseError);
  }
  try {
    parse_map("power d=2 b=1 q=1");
  } catch (const ParseError& e) {
    CHECK(e.position() == 14);
  }
}

TEST_CASE("parse_complex forms") {
  CHECK(parse_complex("2") == Complex(2.0, 0.0));
  CHECK(parse_complex("-1.5+2i") == Complex(-1.5, 2.0));
  CHECK(parse_complex("1-0.25i") == Complex(1.0, -0.25));
  CHECK(parse_complex("3+i") == Complex(3.0, 1.0));
  CHECK_THROWS_AS(parse_complex("1+"), ParseError);
  CHECK_THROWS_AS(parse_complex("1+2"), ParseError);
  CHECK_THROWS_AS(parse_complex("1+2ix"), ParseError);
  CHECK_THROWS_AS(parse_complex("inf"), ParseError);
}

TEST_CASE("render and parse round-trip") {
  const MapDescriptor catalog[] = {
      MapDescriptor::power(2, 1.0),
      MapDescriptor::power(3, {1.0, 1.0}),
      MapDescriptor::power(5, {-0.1, -1e-7}),
      MapDescriptor::tchebyshev(7),
      MapDescriptor::exp_affine(-1.0, {0.1, 0.3}),
      MapDescriptor::affine_exp({0.25, -0.5}, 1.0 / 3.0),
      MapDescriptor::sine_affine(0.5, 2.0 * std::numbers::pi, 1),
      MapDescriptor::sine_affine({0.5, 0.1}, -1.0, -1),
  };
  for (const auto& m : catalog) {
    CAPTURE(render_map(m));
    CHECK(parse_map(render_map(m)) == m);
  }
  CHECK(map_grammar().find("tcheb n=<int>") != std::string::npos);
}

}  // TEST_SUITE
