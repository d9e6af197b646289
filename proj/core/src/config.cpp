#include "semidyn/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "semidyn/error.hpp"

namespace semidyn {

EscapeParams SceneConfig::effective_escape() const {
  EscapeParams p = escape;
  if (word_depth) p.word_depth = *word_depth;
  return p;
}

JuliaParams SceneConfig::effective_julia() const {
  JuliaParams p;
  p.word_depth = word_depth ? *word_depth : julia_word_depth;
  p.escape = effective_escape();
  p.boundary_band = boundary_band;
  return p;
}

void SceneConfig::validate() const {
  if (generators.empty()) {
    throw Error(ErrorCode::InvalidParameter, "[semigroup] needs at least one generator");
  }
  grid.validate();
  effective_escape().validate();
  effective_julia().validate();
  if (sampling.gate_samples < 1) {
    throw Error(ErrorCode::InvalidParameter, "gate_samples must be >= 1");
  }
  if (sampling.trials < 1) throw Error(ErrorCode::InvalidParameter, "trials must be >= 1");
  if (sampling.ifs_burn_in < 0) throw Error(ErrorCode::InvalidParameter, "ifs_burn_in < 0");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw Error(ErrorCode::ParseError, "config line " + std::to_string(line) + ": " + message);
}

template <class T>
T number(std::string_view value, int line) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    fail(line, "expected a number, got '" + std::string(value) + "'");
  }
  return out;
}

}  // namespace

SceneConfig parse_config(std::string_view text) {
  SceneConfig c;
  bool saw_semigroup = false;
  bool saw_grid = false;
  std::string section;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section == "semigroup") {
        saw_semigroup = true;
      } else if (section == "grid") {
        saw_grid = true;
      } else if (section != "escape" && section != "julia" && section != "sampling" &&
                 section != "check" && section != "output") {
        fail(line_no, "unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (section.empty()) fail(line_no, "key '" + key + "' outside any section");

    auto unknown = [&] { fail(line_no, "unknown key '" + key + "' in [" + section + "]"); };
    auto as_double = [&] { return number<double>(value, line_no); };
    auto as_int = [&] { return number<int>(value, line_no); };

    try {
      if (section == "semigroup") {
        if (key == "label") c.label = std::string(value);
        else if (key == "generator") c.generators.push_back(parse_map(value));
        else if (key == "word_depth") c.word_depth = as_int();
        else unknown();
      } else if (section == "grid") {
        if (key == "re_min") c.grid.re_min = as_double();
        else if (key == "re_max") c.grid.re_max = as_double();
        else if (key == "im_min") c.grid.im_min = as_double();
        else if (key == "im_max") c.grid.im_max = as_double();
        else if (key == "width") c.grid.width = as_int();
        else if (key == "height") c.grid.height = as_int();
        else unknown();
      } else if (section == "escape") {
        if (key == "radius") c.escape.radius = as_double();
        else if (key == "max_iter") c.escape.max_iter = as_int();
        else if (key == "word_depth") c.escape.word_depth = as_int();
        else if (key == "confirm") c.escape.confirm = as_int();
        else unknown();
      } else if (section == "julia") {
        if (key == "word_depth") c.julia_word_depth = as_int();
        else if (key == "boundary_band") c.boundary_band = as_int();
        else unknown();
      } else if (section == "sampling") {
        if (key == "seed") c.sampling.seed = number<std::uint64_t>(value, line_no);
        else if (key == "ifs_count") c.sampling.ifs_count = number<std::size_t>(value, line_no);
        else if (key == "ifs_burn_in") c.sampling.ifs_burn_in = as_int();
        else if (key == "gate_samples") c.sampling.gate_samples = number<std::size_t>(value, line_no);
        else if (key == "gate_radius") c.sampling.gate_radius = as_double();
        else if (key == "trials") c.sampling.trials = as_int();
        else unknown();
      } else if (section == "check") {
        if (key == "forward") c.check.forward = as_double();
        else if (key == "backward") c.check.backward = as_double();
        else if (key == "intersection") c.check.intersection = as_double();
        else if (key == "union") c.check.union_identity = as_double();
        else if (key == "abelian") c.check.abelian = as_double();
        else if (key == "inclusion") c.check.inclusion = as_double();
        else if (key == "annulus") c.check.annulus = as_double();
        else if (key == "annulus_a") c.check.annulus_a = parse_complex(value);
        else if (key == "gate_tolerance") c.check.gate_tolerance = as_double();
        else unknown();
      } else if (section == "output") {
        if (key == "pgm") c.output.pgm = std::string(value);
        else if (key == "csv") c.output.csv = std::string(value);
        else if (key == "report") c.output.report = std::string(value);
        else unknown();
      }
    } catch (const ParseError& e) {
      fail(line_no, e.what());
    }
  }
  if (!saw_semigroup) fail(line_no, "missing [semigroup] section");
  if (!saw_grid) fail(line_no, "missing [grid] section");
  c.validate();
  return c;
}

std::string render_config(const SceneConfig& c) {
  std::ostringstream out;
  out << "[semigroup]\n";
  out << "label = " << c.label << '\n';
  for (const auto& g : c.generators) out << "generator = " << render_map(g) << '\n';
  if (c.word_depth) out << "word_depth = " << *c.word_depth << '\n';
  out << "\n[grid]\n"
      << "re_min = " << format_double(c.grid.re_min) << '\n'
      << "re_max = " << format_double(c.grid.re_max) << '\n'
      << "im_min = " << format_double(c.grid.im_min) << '\n'
      << "im_max = " << format_double(c.grid.im_max) << '\n'
      << "width = " << c.grid.width << '\n'
      << "height = " << c.grid.height << '\n';
  out << "\n[escape]\n"
      << "radius = " << format_double(c.escape.radius) << '\n'
      << "max_iter = " << c.escape.max_iter << '\n'
      << "word_depth = " << c.escape.word_depth << '\n'
      << "confirm = " << c.escape.confirm << '\n';
  out << "\n[julia]\n"
      << "word_depth = " << c.julia_word_depth << '\n'
      << "boundary_band = " << c.boundary_band << '\n';
  out << "\n[sampling]\n"
      << "seed = " << c.sampling.seed << '\n'
      << "ifs_count = " << c.sampling.ifs_count << '\n'
      << "ifs_burn_in = " << c.sampling.ifs_burn_in << '\n'
      << "gate_samples = " << c.sampling.gate_samples << '\n'
      << "gate_radius = " << format_double(c.sampling.gate_radius) << '\n'
      << "trials = " << c.sampling.trials << '\n';
  out << "\n[check]\n"
      << "forward = " << format_double(c.check.forward) << '\n'
      << "backward = " << format_double(c.check.backward) << '\n'
      << "intersection = " << format_double(c.check.intersection) << '\n'
      << "union = " << format_double(c.check.union_identity) << '\n'
      << "abelian = " << format_double(c.check.abelian) << '\n'
      << "inclusion = " << format_double(c.check.inclusion) << '\n'
      << "annulus = " << format_double(c.check.annulus) << '\n'
      << "annulus_a = " << render_complex(c.check.annulus_a) << '\n'
      << "gate_tolerance = " << format_double(c.check.gate_tolerance) << '\n';
  out << "\n[output]\n";
  if (!c.output.pgm.empty()) out << "pgm = " << c.output.pgm << '\n';
  if (!c.output.csv.empty()) out << "csv = " << c.output.csv << '\n';
  if (!c.output.report.empty()) out << "report = " << c.output.report << '\n';
  return out.str();
}

SceneConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace semidyn
