#include "semidyn/map_catalog.hpp"

#include <charconv>
#include <cstdio>
#include <numbers>
#include <optional>

#include "semidyn/error.hpp"
#include "semidyn/random.hpp"

namespace semidyn {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidParameter, what);
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Multiplication with the guard applied to the result. Inputs are within the
// guard box, so the product itself cannot overflow double range.
inline Complex gmul(Complex a, Complex b) { return guard(a * b); }

Complex eval_power(const PowerQuotient& p, Complex z) {
  Complex acc = z;
  for (int k = 1; k < p.degree; ++k) {
    acc = gmul(acc, z);
    if (is_overflow(acc)) return acc;
  }
  return guard(acc / p.divisor);
}

Complex eval_tchebyshev(const Tchebyshev& t, Complex z) {
  if (t.order == 0) return {1.0, 0.0};
  Complex prev{1.0, 0.0};
  Complex cur = z;
  const Complex two_z = 2.0 * z;
  for (int k = 1; k < t.order; ++k) {
    const Complex next = guard(two_z * cur - prev);
    if (is_overflow(next)) return next;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex eval_exp_affine(const ExpAffine& e, Complex z) {
  const Complex u = guard(e.gamma * z + e.shift);
  if (is_overflow(u)) return u;
  if (u.real() > 709.0) return overflow_value();
  return guard(std::exp(u));
}

Complex eval_affine_exp(const AffineExp& e, Complex z) {
  if (z.real() > 709.0) return overflow_value();
  const Complex ez = guard(std::exp(z));
  if (is_overflow(ez)) return ez;
  return guard(z + e.gamma * ez + e.shift);
}

Complex eval_sine_affine(const SineAffine& s, Complex z) {
  if (std::fabs(z.imag()) > 709.0) return overflow_value();
  const Complex sz = guard(std::sin(z));
  if (is_overflow(sz)) return sz;
  const Complex inner = guard(z + s.gamma * sz);
  if (is_overflow(inner)) return inner;
  return guard(static_cast<double>(s.sign) * inner + s.shift);
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedMap: return "UnsupportedMap";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::AllSamplesOverflowed: return "AllSamplesOverflowed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::RationalGeneratorsRejected: return "RationalGeneratorsRejected";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::Io: return "IoError";
  }
  return "Error";
}

MapDescriptor::MapDescriptor(MapKind kind) : kind_(std::move(kind)) {
  std::visit(Overloaded{
                 [](const PowerQuotient& p) {
                   require(p.degree >= 2, "power map degree must be >= 2");
                   require(finite(p.divisor) && p.divisor != Complex{},
                           "power map divisor must be finite and nonzero");
                 },
                 [](const Tchebyshev& t) { require(t.order >= 2, "tcheb order must be >= 2"); },
                 [](const ExpAffine& e) {
                   require(finite(e.gamma) && e.gamma != Complex{}, "exp gamma must be nonzero");
                   require(finite(e.shift), "exp shift must be finite");
                 },
                 [](const AffineExp& e) {
                   require(finite(e.gamma) && e.gamma != Complex{},
                           "affexp gamma must be nonzero");
                   require(finite(e.shift), "affexp shift must be finite");
                 },
                 [](const SineAffine& s) {
                   require(finite(s.gamma) && s.gamma != Complex{}, "sine gamma must be nonzero");
                   require(finite(s.shift), "sine shift must be finite");
                   require(s.sign == 1 || s.sign == -1, "sine sign must be +1 or -1");
                 },
             },
             kind_);
}

bool MapDescriptor::is_rational() const noexcept {
  return std::holds_alternative<PowerQuotient>(kind_) ||
         std::holds_alternative<Tchebyshev>(kind_);
}

bool MapDescriptor::finite_type_claimed() const noexcept {
  // Polynomials have finitely many critical values and no finite asymptotic
  // value; exp(gamma z + c) has the single omitted value 0. The affine-exp
  // and affine-sine families carry infinitely many critical values.
  return !std::holds_alternative<AffineExp>(kind_) &&
         !std::holds_alternative<SineAffine>(kind_);
}

SingularValueNote singular_value_note(const MapDescriptor& m) {
  std::string note = std::visit(
      Overloaded{
          [](const PowerQuotient&) {
            return std::string("polynomial; single critical point 0 with critical value 0");
          },
          [](const Tchebyshev& t) {
            return "polynomial of degree " + std::to_string(t.order) +
                   "; critical values contained in {-1, 1}";
          },
          [](const ExpAffine&) {
            return std::string("no critical points; asymptotic value 0 (finite type)");
          },
          [](const AffineExp&) {
            return std::string(
                "critical points where gamma e^z = -1, infinitely many critical values; "
                "not finite type");
          },
          [](const SineAffine&) {
            return std::string(
                "critical points where gamma cos z = -1, critical values spaced by 2 pi; "
                "not finite type");
          },
      },
      m.kind());
  return SingularValueNote{m, std::move(note)};
}

Complex eval_map(const MapDescriptor& m, Complex z) noexcept {
  if (is_overflow(z)) return overflow_value();
  return std::visit(Overloaded{
                        [z](const PowerQuotient& p) { return eval_power(p, z); },
                        [z](const Tchebyshev& t) { return eval_tchebyshev(t, z); },
                        [z](const ExpAffine& e) { return eval_exp_affine(e, z); },
                        [z](const AffineExp& e) { return eval_affine_exp(e, z); },
                        [z](const SineAffine& s) { return eval_sine_affine(s, z); },
                    },
                    m.kind());
}

std::vector<double> tchebyshev_coeffs(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidParameter, "tchebyshev order must be >= 0");
  std::vector<double> prev{1.0};
  if (n == 0) return prev;
  std::vector<double> cur{0.0, 1.0};
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Complex> inverse_branches(const MapDescriptor& m, Complex w) {
  const auto* p = std::get_if<PowerQuotient>(&m.kind());
  if (p == nullptr) {
    throw Error(ErrorCode::UnsupportedMap,
                "inverse branches are only available for power maps, got '" + render_map(m) +
                    "'");
  }
  if (w == Complex{}) throw Error(ErrorCode::ZeroArgument, "w = 0 is a critical value");
  const Complex target = p->divisor * w;
  const double radius = std::pow(std::abs(target), 1.0 / p->degree);
  const double angle = std::arg(target);
  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(p->degree));
  for (int k = 0; k < p->degree; ++k) {
    const double theta = (angle + 2.0 * std::numbers::pi * k) / p->degree;
    roots.push_back(std::polar(radius, theta));
  }
  return roots;
}

std::vector<Complex> sample_disc(const SampleSpec& sample) {
  CounterRng rng(sample.seed, 0);
  std::vector<Complex> points;
  points.reserve(sample.count);
  for (std::size_t k = 0; k < sample.count; ++k) {
    const double r = sample.radius * std::sqrt(rng.uniform());
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    points.push_back(sample.center + std::polar(r, theta));
  }
  return points;
}

CommutatorDefect commutator_defect(const MapDescriptor& f, const MapDescriptor& g,
                                   const SampleSpec& sample) {
  CommutatorDefect out;
  std::size_t used = 0;
  for (Complex z : sample_disc(sample)) {
    const Complex fg = eval_map(f, eval_map(g, z));
    const Complex gf = eval_map(g, eval_map(f, z));
    if (is_overflow(fg) || is_overflow(gf)) {
      ++out.skipped;
      continue;
    }
    ++used;
    const double scale = 1.0 + std::max(std::abs(fg), std::abs(gf));
    out.defect = std::max(out.defect, std::abs(fg - gf) / scale);
  }
  if (used == 0) {
    throw Error(ErrorCode::AllSamplesOverflowed,
                "every sample overflowed for '" + render_map(f) + "' and '" + render_map(g) + "'");
  }
  return out;
}

// ---------------------------------------------------------------------------
// text form

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string render_complex(Complex z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string out = format_double(z.real());
  out += std::signbit(z.imag()) ? '-' : '+';
  out += format_double(std::fabs(z.imag()));
  out += 'i';
  return out;
}

namespace {

// Reads one decimal number starting at `pos`, accepting a leading '+'.
std::optional<double> read_number(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  if (start < text.size() && text[start] == '+') ++start;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + text.size(), value);
  if (ec != std::errc{}) return std::nullopt;
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

Complex parse_complex_at(std::string_view text, std::size_t base) {
  std::size_t pos = 0;
  const auto re = read_number(text, pos);
  if (!re) throw ParseError(base, "expected a decimal number in '" + std::string(text) + "'");
  if (!std::isfinite(*re)) throw ParseError(base, "complex literal must be finite");
  if (pos == text.size()) return {*re, 0.0};
  const char sign = text[pos];
  if (sign != '+' && sign != '-') {
    throw ParseError(base + pos, "expected '+', '-' or end of complex literal");
  }
  ++pos;
  double im = 0.0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    throw ParseError(base + pos, "expected imaginary magnitude");
  }
  if (pos < text.size() && text[pos] == 'i') {
    im = 1.0;
  } else {
    const auto value = read_number(text, pos);
    if (!value) throw ParseError(base + pos, "expected imaginary magnitude");
    im = *value;
  }
  if (pos >= text.size() || text[pos] != 'i') {
    throw ParseError(base + pos, "expected 'i' after imaginary part");
  }
  if (pos + 1 != text.size()) throw ParseError(base + pos + 1, "trailing characters");
  if (!std::isfinite(im)) throw ParseError(base, "complex literal must be finite");
  return {*re, sign == '-' ? -im : im};
}

struct Token {
  std::string_view text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.push_back({text.substr(start, i - start), start});
  }
  return tokens;
}

class KeyValues {
 public:
  KeyValues(const std::vector<Token>& tokens, std::string_view family) : family_(family) {
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      const auto eq = tokens[k].text.find('=');
      if (eq == std::string_view::npos || eq == 0 || eq + 1 == tokens[k].text.size()) {
        throw ParseError(tokens[k].pos, "expected key=value, got '" +
                                            std::string(tokens[k].text) + "'");
      }
      entries_.push_back({tokens[k].text.substr(0, eq), tokens[k].text.substr(eq + 1),
                          tokens[k].pos + eq + 1, tokens[k].pos, false});
    }
    end_ = tokens.empty() ? 0 : tokens.back().pos + tokens.back().text.size();
  }

  // Returns the value text and its offset, marking the key as consumed.
  std::pair<std::string_view, std::size_t> take(std::string_view key) {
    for (auto& e : entries_) {
      if (e.key != key) continue;
      if (e.used) throw ParseError(e.key_pos, "duplicate key '" + std::string(key) + "'");
      e.used = true;
      return {e.value, e.value_pos};
    }
    throw ParseError(end_, "expected key '" + std::string(key) + "=' for '" +
                               std::string(family_) + "'");
  }

  void finish() const {
    for (const auto& e : entries_) {
      if (!e.used) {
        throw ParseError(e.key_pos, "unexpected key '" + std::string(e.key) + "' for '" +
                                        std::string(family_) + "'");
      }
    }
  }

 private:
  struct Entry {
    std::string_view key;
    std::string_view value;
    std::size_t value_pos;
    std::size_t key_pos;
    bool used;
  };
  std::string_view family_;
  std::vector<Entry> entries_;
  std::size_t end_ = 0;
};

int parse_int(std::pair<std::string_view, std::size_t> field) {
  int value = 0;
  const auto [text, pos] = field;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(pos, "expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

Complex parse_complex_field(std::pair<std::string_view, std::size_t> field) {
  return parse_complex_at(field.first, field.second);
}

int parse_sign(std::pair<std::string_view, std::size_t> field) {
  if (field.first == "+") return 1;
  if (field.first == "-") return -1;
  throw ParseError(field.second, "expected '+' or '-' for s");
}

template <class Build>
MapDescriptor build_checked(std::size_t pos, Build build) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(pos, e.what());
  }
}

}  // namespace

Complex parse_complex(std::string_view text) { return parse_complex_at(text, 0); }

MapDescriptor parse_map(std::string_view text) {
  const auto tokens = tokenize(text);
  if (tokens.empty()) {
    throw ParseError(0, "expected one of 'power', 'tcheb', 'exp', 'affexp', 'sine'");
  }
  const Token head = tokens.front();
  KeyValues kv(tokens, head.text);
  MapDescriptor result = build_checked(head.pos, [&]() -> MapDescriptor {
    if (head.text == "power") {
      const int d = parse_int(kv.take("d"));
      const Complex b = parse_complex_field(kv.take("b"));
      return MapDescriptor::power(d, b);
    }
    if (head.text == "tcheb") return MapDescriptor::tchebyshev(parse_int(kv.take("n")));
    if (head.text == "exp" || head.text == "affexp") {
      const Complex gamma = parse_complex_field(kv.take("gamma"));
      const Complex c = parse_complex_field(kv.take("c"));
      return head.text == "exp" ? MapDescriptor::exp_affine(gamma, c)
                                : MapDescriptor::affine_exp(gamma, c);
    }
    if (head.text == "sine") {
      const Complex gamma = parse_complex_field(kv.take("gamma"));
      const Complex c = parse_complex_field(kv.take("c"));
      const int s = parse_sign(kv.take("s"));
      return MapDescriptor::sine_affine(gamma, c, s);
    }
    throw ParseError(head.pos, "expected one of 'power', 'tcheb', 'exp', 'affexp', 'sine', got '" +
                                   std::string(head.text) + "'");
  });
  kv.finish();
  return result;
}

std::string render_map(const MapDescriptor& m) {
  return std::visit(
      Overloaded{
          [](const PowerQuotient& p) {
            return "power d=" + std::to_string(p.degree) + " b=" + render_complex(p.divisor);
          },
          [](const Tchebyshev& t) { return "tcheb n=" + std::to_string(t.order); },
          [](const ExpAffine& e) {
            return "exp gamma=" + render_complex(e.gamma) + " c=" + render_complex(e.shift);
          },
          [](const AffineExp& e) {
            return "affexp gamma=" + render_complex(e.gamma) + " c=" + render_complex(e.shift);
          },
          [](const SineAffine& s) {
            return "sine gamma=" + render_complex(s.gamma) + " c=" + render_complex(s.shift) +
                   " s=" + (s.sign > 0 ? "+" : "-");
          },
      },
      m.kind());
}

std::string map_grammar() {
  return "power d=<int> b=<complex>                 z -> z^d / b\n"
         "tcheb n=<int>                             Tchebyshev polynomial T_n\n"
         "exp gamma=<complex> c=<complex>           z -> exp(gamma z + c)\n"
         "affexp gamma=<complex> c=<complex>        z -> z + gamma exp(z) + c\n"
         "sine gamma=<complex> c=<complex> s=<+|->  z -> s (z + gamma sin z) + c\n"
         "<complex> is a, a+bi or a-bi in decimal notation\n";
}

}  // namespace semidyn
