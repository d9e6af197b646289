#include <doctest.h>

#include "support.hpp"

using namespace semidyn;
using testing::square;
using testing::squares;
using testing::tcheb23;
using testing::window;

namespace {

const GridSpec kAnnulusWindow = window(3.0, 300);
const GridSpec kUnitWindow = window(2.0, 400);

const IndicatorGrid& annulus_julia() {
  static const IndicatorGrid g = approximate_julia_union(squares(), kAnnulusWindow, {}, 0);
  return g;
}

const IndicatorGrid& tcheb_julia() {
  static const IndicatorGrid g = approximate_julia_union(tcheb23(), kUnitWindow, {}, 0);
  return g;
}

const IndicatorGrid& square_escaping() {
  static const IndicatorGrid g = approximate_escaping_set(square(), kUnitWindow, {}, 0);
  return g;
}

const SampleSpec kGate{{0.0, 0.0}, 1.0, 1000, 1};

}  // namespace

TEST_SUITE("checks") {

TEST_CASE("forward invariance") {
  const auto f = check_forward_invariance(annulus_julia(), PixelClass::Fatou, squares(), 2, 0.01);
  CHECK(f.residual < 0.01);
  CHECK(f.verdict == Verdict::Pass);
  CHECK(f.name == "forward_invariance[fatou]");
  const auto i =
      check_forward_invariance(square_escaping(), PixelClass::Escaping, square(), 2, 0.01);
  CHECK(i.residual < 0.01);
  const auto empty = check_forward_invariance(square_escaping(), PixelClass::Unknown, square(), 2,
                                              0.01);
  CHECK(empty.residual == 0.0);
}

TEST_CASE("backward invariance separates the abelian and non-abelian witnesses") {
  const auto nonabelian = check_backward_invariance(annulus_julia(), PixelClass::Fatou, squares(),
                                                    2, 0.02, true);
  CHECK(nonabelian.residual > 0.02);
  CHECK(nonabelian.verdict == Verdict::Informational);
  CHECK_FALSE(nonabelian.violations.empty());
  CHECK(nonabelian.violations.size() <= kMaxViolationSamples);

  const auto abelian =
      check_backward_invariance(tcheb_julia(), PixelClass::Fatou, tcheb23(), 2, 0.02);
  CHECK(abelian.residual < 0.02);
  CHECK(abelian.verdict == Verdict::Pass);
  CHECK(nonabelian.residual > abelian.residual);

  const IndicatorGrid whole(kUnitWindow, PixelClass::Fatou);
  CHECK(check_backward_invariance(whole, PixelClass::Fatou, squares(), 2, 0.02).residual == 0.0);
}

TEST_CASE("intersection identity") {
  const auto f = check_intersection_identity(annulus_julia(), squares(), 2, 0.02);
  CHECK(f.residual < 0.02);
  CHECK(f.name == "intersection_identity[fatou]");
  const auto i = check_intersection_identity(square_escaping(), square(), 2, 0.02);
  CHECK(i.residual < 0.02);
  CHECK(i.name == "intersection_identity[escaping]");
  const auto single = check_complete_invariance(square_escaping(), square().generator(0), 2, 0.02);
  CHECK(single.residual == i.residual);
}

TEST_CASE("union identity") {
  CHECK(check_union_identity(annulus_julia(), squares(), 2, 0.02).residual < 0.02);
  const IndicatorGrid unit = approximate_julia_union(square(), kUnitWindow, {}, 0);
  CHECK(check_union_identity(unit, square(), 2, 0.02).residual < 0.02);
  CHECK(check_union_identity(tcheb_julia(), tcheb23(), 2, 0.03).residual < 0.03);
}

TEST_CASE("abelian gate and equalities") {
  const AbelianGate t = abelian_gate(tcheb23(), kGate, 1e-9);
  CHECK(t.abelian);
  CHECK(t.max_defect < 1e-12);
  CHECK_FALSE(abelian_gate(squares(), {{0.0, 0.0}, 1.5, 1000, 1}, 1e-9).abelian);

  JuliaParams jp;
  const auto eq = check_abelian_equalities(tcheb23(), kUnitWindow, jp, kGate, 1e-9, 0.03, 0);
  CHECK(eq.residual < 0.03);
  CHECK(eq.verdict == Verdict::Pass);

  const GridSpec small = window(3.0, 120);
  const auto na = check_abelian_equalities(squares(), small, jp, {{0.0, 0.0}, 1.5, 1000, 1},
                                           1e-9, 0.03, 0);
  CHECK(na.verdict == Verdict::Informational);

  const auto cyclic = check_abelian_equalities(square(), small, jp, kGate, 1e-9, 0.03, 0);
  CHECK(cyclic.residual == 0.0);
}

TEST_CASE("inclusions") {
  JuliaParams jp;
  const GridSpec g = window(3.0, 200);
  const auto r = check_inclusions(squares(), build_inclusion_grids(squares(), Word{0}, g, jp,
                                                                   true, 0),
                                  2, 0.02);
  CHECK(r.residual < 0.02);
  const auto cyclic =
      check_inclusions(square(), build_inclusion_grids(square(), Word{0}, g, jp, true, 0), 2, 0.02);
  CHECK(cyclic.residual == 0.0);
}

TEST_CASE("annulus reference") {
  JuliaParams jp;
  const auto two = annulus_reference_from_grid({2.0, 0.0}, annulus_julia(), 2, 0.01);
  CHECK(two.residual < 0.01);
  CHECK(two.verdict == Verdict::Pass);
  const auto wide = annulus_reference_check({1.5, 0.0}, kAnnulusWindow, jp, 2, 0.01, 0);
  CHECK(wide.residual < 0.01);
  CHECK(annulus_reference_from_grid({2.0, 0.0}, annulus_julia(), 1000, 0.01).residual == 0.0);
  CHECK_THROWS_AS(annulus_semigroup({0.5, 0.0}), Error);
  CHECK(annulus_semigroup({2.0, 0.0}).size() == 2);
}

TEST_CASE("reports are pure") {
  const auto a = check_forward_invariance(annulus_julia(), PixelClass::Fatou, squares(), 2, 0.01);
  const auto b = check_forward_invariance(annulus_julia(), PixelClass::Fatou, squares(), 2, 0.01);
  CHECK(a == b);
  CHECK(render_report({a}) == render_report({b}));
}

TEST_CASE("grids on different windows are rejected") {
  const IndicatorGrid a(window(1.0, 10), PixelClass::Fatou);
  InclusionGrids grids{Word{0}, a, IndicatorGrid(window(2.0, 10), PixelClass::Fatou),
                       std::nullopt, std::nullopt};
  CHECK_THROWS_AS(check_inclusions(square(), grids, 2, 0.02), Error);
}

}  // TEST_SUITE
