#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semidyn/grid.hpp"
#include "semidyn/julia.hpp"
#include "semidyn/map_catalog.hpp"
#include "semidyn/semigroup.hpp"

namespace semidyn {

enum class Verdict { Pass, Fail, Informational };

const char* to_string(Verdict v);

struct Violation {
  Complex z;
  PixelClass before;
  PixelClass after;

  bool operator==(const Violation&) const = default;
};

inline constexpr std::size_t kMaxViolationSamples = 32;

/// Residuals are fractions in [0, 1]. Denominators never depend on the
/// boundary band, so widening the band can only lower a residual.
struct CheckReport {
  std::string name;
  std::string label;
  std::string params;
  double residual = 0.0;
  double threshold = 0.0;
  Verdict verdict = Verdict::Informational;
  std::vector<Violation> violations;
  std::string note;

  bool operator==(const CheckReport&) const = default;
};

/// Pixels z of class `cls` (outside the band) with some generator image that
/// lands in the window, outside the band, on a pixel of another class; as a
/// fraction of the class pixels with at least one in-window image.
CheckReport check_forward_invariance(const IndicatorGrid& set, PixelClass cls,
                                     const SemigroupSpec& spec, int band, double threshold);

/// Per generator f: pixels with f(z) of class `cls` but z of another class,
/// as a fraction of pixels with f(z) of class `cls`; the max over generators.
/// `informational` marks a report that can never fail.
CheckReport check_backward_invariance(const IndicatorGrid& set, PixelClass cls,
                                      const SemigroupSpec& spec, int band, double threshold,
                                      bool informational = false);

/// Classical complete invariance A = f^{-1}(A) for a single map.
CheckReport check_complete_invariance(const IndicatorGrid& set, const MapDescriptor& f, int band,
                                      double threshold);

/// A = intersection of f_i^{-1}(A) for a Fatou or escaping grid. Residual is
/// the symmetric difference over pixels where both sides are known, outside
/// the boundary bands of both.
CheckReport check_intersection_identity(const IndicatorGrid& set, const SemigroupSpec& spec,
                                        int band, double threshold, bool informational = false);

/// J = union of f_i^{-1}(J) on a Julia-band grid, with A the band and B the
/// pixels some generator maps onto it. Violations are band pixels whose images
/// all land clearly outside the band, and pixels more than `band` pixels from
/// A whose image lands on the band away from its edge. Residual is relative
/// to |A u B|.
CheckReport check_union_identity(const IndicatorGrid& julia, const SemigroupSpec& spec, int band,
                                 double threshold);

struct AbelianGate {
  bool abelian = false;
  double max_defect = 0.0;
  std::string note;
};

/// Numerical commutator test over every generator pair.
AbelianGate abelian_gate(const SemigroupSpec& spec, const SampleSpec& sample, double tolerance);

/// J(S) against J(f), and I(S) against I(f), for every word f of length <= 2.
/// Informational when the gate finds a non-commuting pair.
CheckReport check_abelian_equalities(const SemigroupSpec& spec, const GridSpec& grid,
                                     const JuliaParams& p, const SampleSpec& gate_sample,
                                     double gate_tolerance, double threshold, int threads = 0);

struct InclusionGrids {
  Word word;
  IndicatorGrid semigroup_julia;
  IndicatorGrid word_julia;
  std::optional<IndicatorGrid> semigroup_escaping;
  std::optional<IndicatorGrid> word_escaping;
};

InclusionGrids build_inclusion_grids(const SemigroupSpec& spec, const Word& word,
                                     const GridSpec& grid, const JuliaParams& p,
                                     bool with_escaping, int threads = 0);

/// F(S) in F(f), J(f) in J(S) (dilated by band) and I(S) in I(f); the
/// residual is the largest of the three.
CheckReport check_inclusions(const SemigroupSpec& spec, const InclusionGrids& grids, int band,
                             double threshold);

/// F/J classification of <z^2, z^2/a> against {|z| < 1 or |z| > |a|}.
/// Pixels within `band` pixel sizes of either circle are excluded; the
/// residual is mismatches over all pixels.
CheckReport annulus_reference_check(Complex a, const GridSpec& grid, const JuliaParams& p,
                                    int band, double threshold, int threads = 0);

/// Same comparison on an already computed Julia grid (used to reuse work).
CheckReport annulus_reference_from_grid(Complex a, const IndicatorGrid& julia, int band,
                                        double threshold);

SemigroupSpec annulus_semigroup(Complex a);

}  // namespace semidyn
