#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semidyn/complex.hpp"

namespace semidyn {

/// z -> z^degree / divisor
struct PowerQuotient {
  int degree = 2;
  Complex divisor{1.0, 0.0};
  bool operator==(const PowerQuotient&) const = default;
};

/// Tchebyshev polynomial T_order (T_0 = 1, T_1 = z, T_{n+1} = 2z T_n - T_{n-1}).
struct Tchebyshev {
  int order = 2;
  bool operator==(const Tchebyshev&) const = default;
};

/// z -> exp(gamma z + shift)
struct ExpAffine {
  Complex gamma{1.0, 0.0};
  Complex shift{0.0, 0.0};
  bool operator==(const ExpAffine&) const = default;
};

/// z -> z + gamma exp(z) + shift
struct AffineExp {
  Complex gamma{1.0, 0.0};
  Complex shift{0.0, 0.0};
  bool operator==(const AffineExp&) const = default;
};

/// z -> sign (z + gamma sin z) + shift
struct SineAffine {
  Complex gamma{1.0, 0.0};
  Complex shift{0.0, 0.0};
  int sign = 1;
  bool operator==(const SineAffine&) const = default;
};

using MapKind = std::variant<PowerQuotient, Tchebyshev, ExpAffine, AffineExp, SineAffine>;

/// One generator from the closed catalog. Construction validates the family
/// parameters; the metadata flags are derived from the kind.
class MapDescriptor {
 public:
  explicit MapDescriptor(MapKind kind);

  static MapDescriptor power(int degree, Complex divisor) {
    return MapDescriptor(PowerQuotient{degree, divisor});
  }
  static MapDescriptor tchebyshev(int order) { return MapDescriptor(Tchebyshev{order}); }
  static MapDescriptor exp_affine(Complex gamma, Complex shift) {
    return MapDescriptor(ExpAffine{gamma, shift});
  }
  static MapDescriptor affine_exp(Complex gamma, Complex shift) {
    return MapDescriptor(AffineExp{gamma, shift});
  }
  static MapDescriptor sine_affine(Complex gamma, Complex shift, int sign) {
    return MapDescriptor(SineAffine{gamma, shift, sign});
  }

  const MapKind& kind() const noexcept { return kind_; }

  bool is_rational() const noexcept;
  bool is_entire() const noexcept { return true; }
  bool finite_type_claimed() const noexcept;
  bool has_inverse_branches() const noexcept {
    return std::holds_alternative<PowerQuotient>(kind_);
  }

  bool operator==(const MapDescriptor&) const = default;

 private:
  MapKind kind_;
};

/// Documentation record for the singular-value facts of a catalog family.
struct SingularValueNote {
  MapDescriptor map;
  std::string note;
};

SingularValueNote singular_value_note(const MapDescriptor& m);

/// f(z) with the overflow guard applied to every intermediate. A non-finite
/// input propagates as overflow.
Complex eval_map(const MapDescriptor& m, Complex z) noexcept;

/// Coefficients of T_n in increasing powers of z, exact in double for small n.
std::vector<double> tchebyshev_coeffs(int n);

/// All d solutions of z^d / b = w. Throws UnsupportedMap for non power maps
/// and ZeroArgument for w = 0.
std::vector<Complex> inverse_branches(const MapDescriptor& m, Complex w);

/// Points drawn uniformly from a disc with a counter-based stream.
struct SampleSpec {
  Complex center{0.0, 0.0};
  double radius = 1.0;
  std::size_t count = 1000;
  std::uint64_t seed = 1;
};

std::vector<Complex> sample_disc(const SampleSpec& sample);

struct CommutatorDefect {
  double defect = 0.0;
  std::size_t skipped = 0;
};

/// max |f(g(z)) - g(f(z))| / (1 + max(|f(g(z))|, |g(f(z))|)) over the sample,
/// skipping points where either composition overflows.
CommutatorDefect commutator_defect(const MapDescriptor& f, const MapDescriptor& g,
                                   const SampleSpec& sample);

/// Map grammar:
///   power d=<int> b=<complex>
///   tcheb n=<int>
///   exp gamma=<complex> c=<complex>
///   affexp gamma=<complex> c=<complex>
///   sine gamma=<complex> c=<complex> s=<+|->
/// where <complex> is a, a+bi or a-bi.
MapDescriptor parse_map(std::string_view text);
std::string render_map(const MapDescriptor& m);

Complex parse_complex(std::string_view text);
std::string render_complex(Complex z);
std::string format_double(double x);

/// Human-readable description of the grammar (printed by `catalog`).
std::string map_grammar();

}  // namespace semidyn
