#pragma once

#include <string>
#include <vector>

#include "semidyn/complex.hpp"
#include "semidyn/semigroup.hpp"

namespace semidyn {

/// Numerical escape thresholds. None of these has a counterpart in the
/// mathematics; every report echoes them.
struct EscapeParams {
  double radius = 1e10;  ///< R
  int max_iter = 200;    ///< N, applications of the word map
  int word_depth = 3;    ///< L
  int confirm = 3;       ///< m, non-decreasing steps required after |z| > R

  /// Throws InvalidParameter unless R >= 100, N >= 10, L >= 1, 1 <= m < N.
  void validate() const;

  bool operator==(const EscapeParams&) const = default;
};

std::string describe(const EscapeParams& p);

struct OrbitOutcome {
  enum class Kind { Escaped, Bounded, Overflow, Indeterminate };

  Kind kind = Kind::Indeterminate;
  int step = 0;  ///< meaningful for Escaped and Overflow

  static OrbitOutcome escaped(int step) { return {Kind::Escaped, step}; }
  static OrbitOutcome overflow(int step) { return {Kind::Overflow, step}; }
  static OrbitOutcome bounded() { return {Kind::Bounded, 0}; }
  static OrbitOutcome indeterminate() { return {Kind::Indeterminate, 0}; }

  /// Escaped or Overflow.
  bool escapes() const noexcept { return kind == Kind::Escaped || kind == Kind::Overflow; }

  bool operator==(const OrbitOutcome&) const = default;
};

std::string to_string(const OrbitOutcome& o);

struct Orbit {
  Complex start;
  std::vector<Complex> points;  ///< points[0] == start; empty in classification-only mode
  OrbitOutcome outcome;
};

/// Iterates the word map g = eval_word(spec, w, .) from z up to N times.
/// Escape at step k means |g^k(z)| > R and the next m iterates are
/// non-decreasing in modulus (or overflow). Overflow at step k is reported
/// as Overflow(k). Confirmation iterates may run past N.
Orbit iterate_word(const SemigroupSpec& spec, const Word& w, Complex z, const EscapeParams& p,
                   bool store_points = true);

}  // namespace semidyn
