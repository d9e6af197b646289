#include "semidyn/orbit.hpp"

#include "semidyn/error.hpp"

namespace semidyn {

void EscapeParams::validate() const {
  if (!(radius >= 100.0)) throw Error(ErrorCode::InvalidParameter, "escape radius must be >= 100");
  if (max_iter < 10) throw Error(ErrorCode::InvalidParameter, "max_iter must be >= 10");
  if (word_depth < 1) throw Error(ErrorCode::InvalidParameter, "word_depth must be >= 1");
  if (confirm < 1 || confirm >= max_iter) {
    throw Error(ErrorCode::InvalidParameter, "confirm must satisfy 1 <= m < max_iter");
  }
}

std::string describe(const EscapeParams& p) {
  return "R=" + format_double(p.radius) + " N=" + std::to_string(p.max_iter) +
         " L=" + std::to_string(p.word_depth) + " m=" + std::to_string(p.confirm);
}

std::string to_string(const OrbitOutcome& o) {
  switch (o.kind) {
    case OrbitOutcome::Kind::Escaped: return "Escaped(" + std::to_string(o.step) + ")";
    case OrbitOutcome::Kind::Overflow: return "Overflow(" + std::to_string(o.step) + ")";
    case OrbitOutcome::Kind::Bounded: return "Bounded";
    case OrbitOutcome::Kind::Indeterminate: return "Indeterminate";
  }
  return "?";
}

Orbit iterate_word(const SemigroupSpec& spec, const Word& w, Complex z, const EscapeParams& p,
                   bool store_points) {
  Orbit orbit{z, {}, OrbitOutcome::indeterminate()};
  if (store_points) orbit.points.push_back(z);
  if (is_overflow(z)) {
    orbit.outcome = OrbitOutcome::overflow(0);
    return orbit;
  }
  const double r2 = p.radius * p.radius;
  Complex cur = z;
  for (int k = 1; k <= p.max_iter; ++k) {
    const Complex prev = cur;
    cur = eval_word(spec, w, cur);
    if (store_points) orbit.points.push_back(cur);
    if (is_overflow(cur)) {
      orbit.outcome = OrbitOutcome::overflow(k);
      return orbit;
    }
    if (std::norm(cur) <= r2) {
      // A floating-point fixed point repeats forever, so the rest of the
      // orbit is known to stay bounded.
      if (cur == prev && !store_points) break;
      continue;
    }
    // Confirmation: the following m iterates must not shrink in modulus.
    bool confirmed = true;
    Complex probe = cur;
    double last = std::norm(cur);
    for (int j = 0; j < p.confirm; ++j) {
      probe = eval_word(spec, w, probe);
      if (is_overflow(probe)) break;
      const double mag = std::norm(probe);
      if (mag < last) {
        confirmed = false;
        break;
      }
      last = mag;
    }
    if (confirmed) {
      orbit.outcome = OrbitOutcome::escaped(k);
      return orbit;
    }
  }
  orbit.outcome = OrbitOutcome::bounded();
  return orbit;
}

}  // namespace semidyn
