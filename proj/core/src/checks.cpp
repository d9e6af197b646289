#include "semidyn/checks.hpp"

#include <algorithm>

#include "semidyn/error.hpp"
#include "semidyn/escape.hpp"

namespace semidyn {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Informational: return "informational";
  }
  return "?";
}

namespace {

bool known(PixelClass c) { return c != PixelClass::Unknown && c != PixelClass::Indeterminate; }

CheckReport make_report(std::string name, const std::string& label, const IndicatorGrid& grid,
                        int band, double threshold) {
  CheckReport r;
  r.name = std::move(name);
  r.label = label;
  r.params = describe(grid.params) + " band=" + std::to_string(band);
  r.threshold = threshold;
  return r;
}

void finish(CheckReport& r, std::size_t violations, std::size_t population, bool informational) {
  r.residual = population == 0 ? 0.0 : static_cast<double>(violations) / population;
  if (informational) {
    r.verdict = Verdict::Informational;
  } else {
    r.verdict = r.residual <= r.threshold ? Verdict::Pass : Verdict::Fail;
  }
}

void sample(CheckReport& r, Complex z, PixelClass before, PixelClass after) {
  if (r.violations.size() < kMaxViolationSamples) r.violations.push_back({z, before, after});
}

std::size_t index(const GridSpec& g, int i, int j) {
  return static_cast<std::size_t>(j) * g.width + static_cast<std::size_t>(i);
}

std::size_t index(const GridSpec& g, const GridSpec::Pixel& p) { return index(g, p.i, p.j); }

void require_same_grid(const IndicatorGrid& a, const IndicatorGrid& b) {
  if (!(a.grid == b.grid)) {
    throw Error(ErrorCode::InvalidParameter, "grids compared on different windows");
  }
}

PixelClass region_target(const IndicatorGrid& set) {
  const bool escaping = std::any_of(set.classes.begin(), set.classes.end(), [](PixelClass c) {
    return c == PixelClass::Escaping || c == PixelClass::Bounded;
  });
  return escaping ? PixelClass::Escaping : PixelClass::Fatou;
}

// Symmetric difference of two region indicators over pixels known on both
// sides, excluding the boundary bands of both.
void compare_regions(CheckReport& r, const IndicatorGrid& a, const IndicatorGrid& b,
                     PixelClass target, int band, bool informational) {
  require_same_grid(a, b);
  const Mask band_a = boundary_band(a, band);
  const Mask band_b = boundary_band(b, band);
  std::size_t population = 0;
  std::size_t violations = 0;
  const GridSpec& g = a.grid;
  for (int j = 0; j < g.height; ++j) {
    for (int i = 0; i < g.width; ++i) {
      const std::size_t k = index(g, i, j);
      if (!known(a.classes[k]) || !known(b.classes[k])) continue;
      ++population;
      if (band_a[k] || band_b[k]) continue;
      if ((a.classes[k] == target) != (b.classes[k] == target)) {
        ++violations;
        sample(r, g.pixel_to_point(i, j), a.classes[k], b.classes[k]);
      }
    }
  }
  finish(r, violations, population, informational);
}

// Two thin sets agree if each lies within `band` pixels of the other.
void compare_bands(CheckReport& r, const GridSpec& g, const Mask& a, const Mask& b,
                   const Mask& usable, int band, bool informational) {
  const Mask near_a = dilate(a, g.width, g.height, band);
  const Mask near_b = dilate(b, g.width, g.height, band);
  std::size_t population = 0;
  std::size_t violations = 0;
  for (int j = 0; j < g.height; ++j) {
    for (int i = 0; i < g.width; ++i) {
      const std::size_t k = index(g, i, j);
      if (!usable[k] || !(a[k] || b[k])) continue;
      ++population;
      if ((a[k] && !near_b[k]) || (b[k] && !near_a[k])) {
        ++violations;
        sample(r, g.pixel_to_point(i, j), a[k] ? PixelClass::JuliaBand : PixelClass::Fatou,
               b[k] ? PixelClass::JuliaBand : PixelClass::Fatou);
      }
    }
  }
  finish(r, violations, population, informational);
}

}  // namespace

CheckReport check_forward_invariance(const IndicatorGrid& set, PixelClass cls,
                                     const SemigroupSpec& spec, int band, double threshold) {
  CheckReport r = make_report(std::string("forward_invariance[") + to_string(cls) + "]", spec.label(), set,
                              band, threshold);
  const GridSpec& g = set.grid;
  const Mask edge = boundary_band(set, band);
  std::size_t population = 0;
  std::size_t violations = 0;
  std::vector<std::optional<GridSpec::Pixel>> images(spec.size());
  for (int j = 0; j < g.height; ++j) {
    for (int i = 0; i < g.width; ++i) {
      if (set.at(i, j) != cls) continue;
      const Complex z = g.pixel_to_point(i, j);
      bool any_known = false;
      for (std::size_t f = 0; f < spec.size(); ++f) {
        images[f] = g.point_to_pixel(eval_map(spec.generator(f), z));
        if (images[f] && !known(set.classes[index(g, *images[f])])) images[f].reset();
        any_known = any_known || images[f].has_value();
      }
      if (!any_known) continue;
      ++population;
      if (edge[index(g, i, j)]) continue;
      for (const auto& q : images) {
        if (!q || edge[index(g, *q)]) continue;
        const PixelClass after = set.classes[index(g, *q)];
        if (after != cls) {
          ++violations;
          sample(r, z, cls, after);
          break;
        }
      }
    }
  }
  finish(r, violations, population, false);
  return r;
}

CheckReport check_backward_invariance(const IndicatorGrid& set, PixelClass cls,
                                      const SemigroupSpec& spec, int band, double threshold,
                                      bool informational) {
  CheckReport r = make_report(std::string("backward_invariance[") + to_string(cls) + "]", spec.label(), set,
                              band, threshold);
  const GridSpec& g = set.grid;
  const Mask edge = boundary_band(set, band);
  double worst = 0.0;
  for (std::size_t f = 0; f < spec.size(); ++f) {
    CheckReport per = r;
    per.violations.clear();
    std::size_t population = 0;
    std::size_t violations = 0;
    for (int j = 0; j < g.height; ++j) {
      for (int i = 0; i < g.width; ++i) {
        const PixelClass before = set.at(i, j);
        if (!known(before)) continue;
        const Complex z = g.pixel_to_point(i, j);
        const auto q = g.point_to_pixel(eval_map(spec.generator(f), z));
        if (!q || set.classes[index(g, *q)] != cls) continue;
        ++population;
        if (before == cls || edge[index(g, i, j)] || edge[index(g, *q)]) continue;
        ++violations;
        sample(per, z, before, cls);
      }
    }
    finish(per, violations, population, true);
    if (f == 0 || per.residual > worst) {
      worst = per.residual;
      r.violations = per.violations;
      r.note = "worst generator " + std::to_string(f) + ": " + render_map(spec.generator(f));
    }
  }
  r.residual = worst;
  r.verdict = informational            ? Verdict::Informational
              : worst <= r.threshold   ? Verdict::Pass
                                       : Verdict::Fail;
  return r;
}

CheckReport check_complete_invariance(const IndicatorGrid& set, const MapDescriptor& f, int band,
                                      double threshold) {
  const PixelClass target = region_target(set);
  CheckReport r = make_report(std::string("complete_invariance[") + to_string(target) + "]", set.meta.label,
                              set, band, threshold);
  compare_regions(r, set, preimage_grid(f, set, target), target, band, false);
  return r;
}

CheckReport check_intersection_identity(const IndicatorGrid& set, const SemigroupSpec& spec,
                                        int band, double threshold, bool informational) {
  const PixelClass target = region_target(set);
  CheckReport r = make_report(std::string("intersection_identity[") + to_string(target) + "]", spec.label(),
                              set, band, threshold);
  IndicatorGrid meet = preimage_grid(spec.generator(0), set, target);
  const PixelClass other = complement(target);
  for (std::size_t f = 1; f < spec.size(); ++f) {
    const IndicatorGrid pre = preimage_grid(spec.generator(f), set, target);
    for (std::size_t k = 0; k < meet.classes.size(); ++k) {
      PixelClass& m = meet.classes[k];
      const PixelClass p = pre.classes[k];
      if (m == other || p == other) {
        m = other;
      } else if (!known(m) || !known(p)) {
        m = PixelClass::Unknown;
      }
    }
  }
  compare_regions(r, set, meet, target, band, informational);
  return r;
}

CheckReport check_union_identity(const IndicatorGrid& julia, const SemigroupSpec& spec, int band,
                                 double threshold) {
  CheckReport r = make_report("union_identity[julia]", spec.label(), julia, band, threshold);
  const GridSpec& g = julia.grid;
  const Mask edge = boundary_band(julia, band);
  const Mask near_julia = dilate(mask_of(julia, PixelClass::JuliaBand), g.width, g.height, band);
  std::size_t population = 0;
  std::size_t violations = 0;
  for (int j = 0; j < g.height; ++j) {
    for (int i = 0; i < g.width; ++i) {
      const std::size_t k = index(g, i, j);
      const Complex z = g.pixel_to_point(i, j);
      bool hit = false;        // some image lands on the band
      bool clear_hit = false;  // ... away from its edge
      bool clear_miss = true;  // every image is clearly outside the band
      bool any_known = false;
      for (const auto& f : spec.generators()) {
        const auto q = g.point_to_pixel(eval_map(f, z));
        if (!q || !known(julia.classes[index(g, *q)])) {
          clear_miss = false;
          continue;
        }
        any_known = true;
        const bool in_band = julia.classes[index(g, *q)] == PixelClass::JuliaBand;
        const bool on_edge = edge[index(g, *q)] != 0;
        hit = hit || in_band;
        clear_hit = clear_hit || (in_band && !on_edge);
        if (in_band || on_edge) clear_miss = false;
      }
      const bool in_julia = julia.classes[k] == PixelClass::JuliaBand;
      if (!hit && !(in_julia && any_known)) continue;
      ++population;
      if (in_julia && clear_miss) {
        ++violations;
        sample(r, z, PixelClass::JuliaBand, PixelClass::Fatou);
      } else if (!in_julia && !near_julia[k] && clear_hit) {
        ++violations;
        sample(r, z, PixelClass::Fatou, PixelClass::JuliaBand);
      }
    }
  }
  finish(r, violations, population, false);
  return r;
}

AbelianGate abelian_gate(const SemigroupSpec& spec, const SampleSpec& sample,
                         double tolerance) {
  AbelianGate gate;
  gate.abelian = true;
  for (std::size_t a = 0; a < spec.size(); ++a) {
    for (std::size_t b = a + 1; b < spec.size(); ++b) {
      try {
        const auto d = commutator_defect(spec.generator(a), spec.generator(b), sample);
        gate.max_defect = std::max(gate.max_defect, d.defect);
        if (!(d.defect < tolerance)) gate.abelian = false;
      } catch (const Error& e) {
        gate.abelian = false;
        gate.note = e.what();
      }
    }
  }
  if (gate.note.empty()) {
    gate.note = std::string(gate.abelian ? "abelian" : "non-abelian") +
                " (max commutator defect " + format_double(gate.max_defect) + ")";
  }
  return gate;
}

CheckReport check_abelian_equalities(const SemigroupSpec& spec, const GridSpec& grid,
                                     const JuliaParams& p, const SampleSpec& gate_sample,
                                     double gate_tolerance, double threshold, int threads) {
  const AbelianGate gate = abelian_gate(spec, gate_sample, gate_tolerance);
  const IndicatorGrid js = approximate_julia_union(spec, grid, p, threads);
  CheckReport r = make_report("abelian_equalities", spec.label(), js, p.boundary_band, threshold);
  const bool informational = !gate.abelian;
  const Mask all(grid.pixel_count(), 1);
  const Mask js_mask = mask_of(js, PixelClass::JuliaBand);

  EscapeParams ep = p.escape;
  ep.word_depth = p.word_depth;
  const IndicatorGrid is = approximate_escaping_set(spec, grid, ep, threads);

  double worst = -1.0;
  for (const auto& w : examined_words(spec, 2)) {
    CheckReport jr = r;
    const IndicatorGrid jf = word_julia_band(spec, w, grid, p.escape, threads);
    compare_bands(jr, grid, js_mask, mask_of(jf, PixelClass::JuliaBand), all, p.boundary_band,
                  true);
    CheckReport ir = r;
    const IndicatorGrid iff = word_escape_grid(spec, w, grid, p.escape, threads);
    compare_regions(ir, is, iff, PixelClass::Escaping, p.boundary_band, true);
    for (CheckReport* part : {&jr, &ir}) {
      if (part->residual > worst) {
        worst = part->residual;
        r.violations = part->violations;
        r.note = std::string(part == &jr ? "J(S) vs J(f)" : "I(S) vs I(f)") + " worst at f=" +
                 to_string(w);
      }
    }
  }
  finish(r, 0, 0, informational);
  r.residual = std::max(worst, 0.0);
  if (!informational) r.verdict = r.residual <= threshold ? Verdict::Pass : Verdict::Fail;
  r.note += "; gate: " + gate.note;
  return r;
}

InclusionGrids build_inclusion_grids(const SemigroupSpec& spec, const Word& word,
                                     const GridSpec& grid, const JuliaParams& p,
                                     bool with_escaping, int threads) {
  InclusionGrids g{word, approximate_julia_union(spec, grid, p, threads),
                   word_julia_band(spec, word, grid, p.escape, threads), std::nullopt,
                   std::nullopt};
  if (with_escaping) {
    EscapeParams ep = p.escape;
    ep.word_depth = p.word_depth;
    g.semigroup_escaping = approximate_escaping_set(spec, grid, ep, threads);
    g.word_escaping = word_escape_grid(spec, word, grid, p.escape, threads);
  }
  return g;
}

CheckReport check_inclusions(const SemigroupSpec& spec, const InclusionGrids& grids, int band,
                             double threshold) {
  CheckReport r = make_report("inclusions[f=" + to_string(grids.word) + "]", spec.label(),
                              grids.semigroup_julia, band, threshold);
  require_same_grid(grids.semigroup_julia, grids.word_julia);
  const GridSpec& g = grids.semigroup_julia.grid;
  const std::size_t n = g.pixel_count();
  const Mask js = mask_of(grids.semigroup_julia, PixelClass::JuliaBand);
  const Mask jf = mask_of(grids.word_julia, PixelClass::JuliaBand);
  const Mask near_js = dilate(js, g.width, g.height, band);

  std::size_t fatou = 0;
  std::size_t julia_f = 0;
  std::size_t outside = 0;  // J(f) pixels away from J(S), which are also F(S) pixels not in F(f)
  for (std::size_t k = 0; k < n; ++k) {
    if (!js[k]) ++fatou;
    if (!jf[k]) continue;
    ++julia_f;
    if (!near_js[k]) {
      ++outside;
      sample(r, g.pixel_to_point(static_cast<int>(k % g.width), static_cast<int>(k / g.width)),
             PixelClass::JuliaBand, PixelClass::Fatou);
    }
  }
  const double fatou_residual = fatou == 0 ? 0.0 : static_cast<double>(outside) / fatou;
  const double julia_residual = julia_f == 0 ? 0.0 : static_cast<double>(outside) / julia_f;
  double escaping_residual = 0.0;
  if (grids.semigroup_escaping && grids.word_escaping) {
    const IndicatorGrid& is = *grids.semigroup_escaping;
    const IndicatorGrid& iff = *grids.word_escaping;
    require_same_grid(is, iff);
    const Mask edge = boundary_band(iff, band);
    std::size_t candidates = 0;
    std::size_t missing = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (is.classes[k] != PixelClass::Escaping) continue;
      ++candidates;
      if (edge[k] || iff.classes[k] == PixelClass::Escaping) continue;
      ++missing;
      sample(r, g.pixel_to_point(static_cast<int>(k % g.width), static_cast<int>(k / g.width)),
             PixelClass::Escaping, iff.classes[k]);
    }
    escaping_residual = candidates == 0 ? 0.0 : static_cast<double>(missing) / candidates;
  }
  r.residual = std::max({fatou_residual, julia_residual, escaping_residual});
  r.verdict = r.residual <= threshold ? Verdict::Pass : Verdict::Fail;
  r.note = "F(S)<=F(f) " + format_double(fatou_residual) + ", J(f)<=J(S) " +
           format_double(julia_residual) + ", I(S)<=I(f) " + format_double(escaping_residual);
  return r;
}

SemigroupSpec annulus_semigroup(Complex a) {
  if (!(std::abs(a) > 1.0)) {
    throw Error(ErrorCode::InvalidParameter, "annulus reference needs |a| > 1");
  }
  return SemigroupSpec({MapDescriptor::power(2, {1.0, 0.0}), MapDescriptor::power(2, a)},
                       "<z^2, z^2/(" + render_complex(a) + ")>");
}

CheckReport annulus_reference_from_grid(Complex a, const IndicatorGrid& julia, int band,
                                        double threshold) {
  if (!(std::abs(a) > 1.0)) {
    throw Error(ErrorCode::InvalidParameter, "annulus reference needs |a| > 1");
  }
  CheckReport r = make_report("annulus_reference", julia.meta.label, julia, band, threshold);
  const GridSpec& g = julia.grid;
  const double outer = std::abs(a);
  const double margin = band * std::max(g.pixel_width(), g.pixel_height());
  std::size_t mismatches = 0;
  for (int j = 0; j < g.height; ++j) {
    for (int i = 0; i < g.width; ++i) {
      const Complex z = g.pixel_to_point(i, j);
      const double radius = std::abs(z);
      if (std::fabs(radius - 1.0) <= margin || std::fabs(radius - outer) <= margin) continue;
      const bool expect_julia = radius >= 1.0 && radius <= outer;
      const PixelClass got = julia.at(i, j);
      if ((got == PixelClass::JuliaBand) != expect_julia) {
        ++mismatches;
        sample(r, z, expect_julia ? PixelClass::JuliaBand : PixelClass::Fatou, got);
      }
    }
  }
  finish(r, mismatches, g.pixel_count(), false);
  return r;
}

CheckReport annulus_reference_check(Complex a, const GridSpec& grid, const JuliaParams& p,
                                    int band, double threshold, int threads) {
  const SemigroupSpec spec = annulus_semigroup(a);
  return annulus_reference_from_grid(a, approximate_julia_union(spec, grid, p, threads), band,
                                     threshold);
}

}  // namespace semidyn
