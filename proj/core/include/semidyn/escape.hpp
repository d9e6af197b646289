#pragma once

#include <cstdint>
#include <vector>

#include "semidyn/grid.hpp"
#include "semidyn/orbit.hpp"
#include "semidyn/semigroup.hpp"

namespace semidyn {

/// Outcome of iterating one word at one point; no orbit is stored.
OrbitOutcome classify_orbit(const SemigroupSpec& spec, const Word& w, Complex z,
                            const EscapeParams& p);

struct SemigroupEscapeClass {
  enum class Kind { EscapingCandidate, BoundedWitness, Indeterminate };

  Kind kind = Kind::Indeterminate;
  Word witness;  ///< the first bounded word, for BoundedWitness

  bool operator==(const SemigroupEscapeClass&) const = default;
};

/// The words examined at depth L. A cyclic semigroup <f> uses only [0]:
/// the iterates f^k have the same escaping and Julia sets as f, and this
/// keeps every cyclic result identical to the classical single-map one.
std::vector<Word> examined_words(const SemigroupSpec& spec, int depth);

/// Throws RationalGeneratorsRejected unless every generator is entire.
void require_entire(const SemigroupSpec& spec);

/// EscapingCandidate iff every examined word of length <= L escapes (or
/// overflows) at z. Otherwise BoundedWitness carrying the first bounded word
/// in shortest-then-lexicographic order. The candidate set is necessary
/// evidence for membership in I(S) only.
SemigroupEscapeClass classify_point_semigroup(const SemigroupSpec& spec, Complex z,
                                              const EscapeParams& p);

/// Per-pixel classification at pixel centers: Escaping for candidates,
/// Bounded for witnessed points, Indeterminate otherwise.
IndicatorGrid approximate_escaping_set(const SemigroupSpec& spec, const GridSpec& grid,
                                       const EscapeParams& p, int threads = 0);

/// Per-pixel escape of a single word map (Escaping / Bounded).
IndicatorGrid word_escape_grid(const SemigroupSpec& spec, const Word& w, const GridSpec& grid,
                               const EscapeParams& p, int threads = 0);

/// Fraction of `trials` random compositions (stream `t` of `seed` for trial
/// t) along which z exceeds R with m-step confirmation within N applications.
double random_word_divergence_test(const SemigroupSpec& spec, Complex z, const EscapeParams& p,
                                   std::uint64_t seed, int trials);

}  // namespace semidyn
