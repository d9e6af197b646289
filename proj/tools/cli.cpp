#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>

#include "semidyn/semidyn.hpp"

namespace semidyn::cli {

namespace {

constexpr const char* kGrammar =
    "usage:\n"
    "  semidyn render-julia    --config <path> [--out <pgm>] [--threads <n>]\n"
    "  semidyn render-escaping --config <path> [--out <pgm>] [--threads <n>]\n"
    "  semidyn sample-ifs      --config <path> [--out <csv>] [--seed <u64>]\n"
    "  semidyn check           --config <path> --suite <invariance|identities|references|all>\n"
    "                          [--report <path>] [--threads <n>] [--seed <u64>]\n"
    "  semidyn catalog\n"
    "--threads 0 means auto and never changes results; SEMIDYN_THREADS is the fallback.\n";

struct Options {
  std::string config;
  std::string out;
  std::string report;
  std::string suite;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int thread_count(const Options& o) {
  if (o.threads) return *o.threads;
  if (const char* env = std::getenv("SEMIDYN_THREADS")) {
    try {
      return std::max(0, std::stoi(env));
    } catch (const std::exception&) {
      throw UsageError(std::string("SEMIDYN_THREADS is not an integer: '") + env + "'");
    }
  }
  return 0;
}

SceneConfig load(const Options& o) {
  if (o.config.empty()) throw UsageError("--config is required");
  SceneConfig c = load_config(o.config);
  if (o.seed) c.sampling.seed = *o.seed;
  return c;
}

std::string output_path(const std::string& flag, const std::string& configured,
                        const char* what) {
  if (!flag.empty()) return flag;
  if (!configured.empty()) return configured;
  throw UsageError(std::string("no output path: pass --out or set ") + what + " in [output]");
}

bool has_rational(const SemigroupSpec& spec) {
  return std::any_of(spec.generators().begin(), spec.generators().end(),
                     [](const MapDescriptor& m) { return m.is_rational(); });
}

std::string julia_caveat(const SemigroupSpec& spec) {
  for (const auto& g : spec.generators()) {
    if (!g.is_rational() && !g.finite_type_claimed()) {
      return "escape-boundary Julia band is heuristic for '" + render_map(g) + "'";
    }
  }
  return {};
}

void append_note(CheckReport& r, const std::string& extra) {
  if (extra.empty()) return;
  r.note = r.note.empty() ? extra : r.note + "; " + extra;
}

int render(const Options& o, bool julia, std::ostream& out) {
  const SceneConfig c = load(o);
  const std::string path = output_path(o.out, c.output.pgm, "pgm");
  const SemigroupSpec spec = c.semigroup();
  const int threads = thread_count(o);
  IndicatorGrid grid = julia ? approximate_julia_union(spec, c.grid, c.effective_julia(), threads)
                             : approximate_escaping_set(spec, c.grid, c.effective_escape(), threads);
  grid.meta.seed = c.sampling.seed;
  write_pgm(grid, path);
  const PixelClass marked = julia ? PixelClass::JuliaBand : PixelClass::Escaping;
  out << (julia ? "render-julia" : "render-escaping") << ": " << spec.label() << ' '
      << c.grid.width << 'x' << c.grid.height << ' ' << to_string(marked) << "_fraction="
      << format_double(grid.fraction(marked)) << " -> " << path << '\n';
  return kOk;
}

int sample_ifs(const Options& o, std::ostream& out) {
  const SceneConfig c = load(o);
  const std::string path = output_path(o.out, c.output.csv, "csv");
  const PointCloud cloud =
      backward_ifs_sample(c.semigroup(), c.sampling.ifs_count, c.sampling.ifs_burn_in,
                          c.sampling.seed);
  write_point_cloud_csv(cloud, path);
  out << "sample-ifs: " << cloud.label << " points=" << cloud.points.size()
      << " seed=" << cloud.seed << " rng=" << kRandomAlgorithm << " -> " << path << '\n';
  return kOk;
}

int check(const Options& o, std::ostream& out) {
  const SceneConfig c = load(o);
  if (o.suite.empty()) throw UsageError("--suite is required");
  const auto reports = run_suite(c, o.suite, thread_count(o));
  const std::string path = o.report.empty() ? c.output.report : o.report;
  if (path.empty()) {
    out << render_report(reports);
  } else {
    write_report(reports, path);
  }
  for (const auto& r : reports) {
    out << r.name << ": " << to_string(r.verdict) << " residual=" << format_double(r.residual)
        << ' ' << r.params;
    if (!r.note.empty()) out << " (" << r.note << ')';
    out << '\n';
  }
  const auto failed = std::count_if(reports.begin(), reports.end(), [](const CheckReport& r) {
    return r.verdict == Verdict::Fail;
  });
  out << "check: suite=" << o.suite << " checks=" << reports.size() << " failed=" << failed;
  if (!path.empty()) out << " -> " << path;
  out << '\n';
  return failed == 0 ? kOk : kCheckFailed;
}

}  // namespace

std::vector<CheckReport> run_suite(const SceneConfig& c, const std::string& suite, int threads) {
  const bool invariance = suite == "invariance" || suite == "all";
  const bool identities = suite == "identities" || suite == "all";
  const bool references = suite == "references" || suite == "all";
  if (!invariance && !identities && !references) {
    throw UsageError("unknown suite '" + suite + "'");
  }

  const SemigroupSpec spec = c.semigroup();
  const JuliaParams jp = c.effective_julia();
  const EscapeParams ep = c.effective_escape();
  const int band = c.boundary_band;
  const auto& t = c.check;
  const SampleSpec gate_sample{{0.0, 0.0}, c.sampling.gate_radius, c.sampling.gate_samples,
                               c.sampling.seed};
  const AbelianGate gate = abelian_gate(spec, gate_sample, t.gate_tolerance);
  const std::string escape_caveat =
      has_rational(spec) ? "classical escape, not the transcendental I(S)" : "";
  const std::string jcaveat = julia_caveat(spec);

  std::vector<CheckReport> reports;
  if (invariance || identities) {
    const IndicatorGrid julia = approximate_julia_union(spec, c.grid, jp, threads);
    const IndicatorGrid escaping = approximate_escaping_set(spec, c.grid, ep, threads);
    auto add = [&](CheckReport r, const std::string& caveat) {
      append_note(r, caveat);
      reports.push_back(std::move(r));
    };
    if (invariance) {
      add(check_forward_invariance(julia, PixelClass::Fatou, spec, band, t.forward), jcaveat);
      add(check_forward_invariance(escaping, PixelClass::Escaping, spec, band, t.forward),
          escape_caveat);
      CheckReport bf =
          check_backward_invariance(julia, PixelClass::Fatou, spec, band, t.backward, !gate.abelian);
      append_note(bf, "gate: " + gate.note);
      add(std::move(bf), jcaveat);
      add(check_backward_invariance(julia, PixelClass::JuliaBand, spec, band, t.backward),
          jcaveat);
      CheckReport bi = check_backward_invariance(escaping, PixelClass::Escaping, spec, band,
                                                 t.backward, !gate.abelian);
      append_note(bi, "gate: " + gate.note);
      add(std::move(bi), escape_caveat);
    }
    if (identities) {
      add(check_intersection_identity(julia, spec, band, t.intersection), jcaveat);
      add(check_intersection_identity(escaping, spec, band, t.intersection), escape_caveat);
      add(check_union_identity(julia, spec, band, t.union_identity), jcaveat);
      add(check_abelian_equalities(spec, c.grid, jp, gate_sample, t.gate_tolerance, t.abelian,
                                   threads),
          jcaveat);
      add(check_inclusions(spec, build_inclusion_grids(spec, Word{0}, c.grid, jp, true, threads),
                           band, t.inclusion),
          jcaveat);
    }
  }
  if (references) {
    reports.push_back(annulus_reference_check(t.annulus_a, c.grid, jp, band, t.annulus, threads));
  }
  for (auto& r : reports) r.params += " seed=" + std::to_string(c.sampling.seed);
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
  return reports;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"semidyn: Fatou, Julia and escaping sets of holomorphic semigroups"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "scene configuration file")->required();
    sub->add_option("--threads", o.threads, "worker threads, 0 = auto");
    sub->add_option("--seed", o.seed, "override [sampling] seed");
  };
  auto* julia = app.add_subcommand("render-julia", "write the Julia-band mask as PGM");
  add_common(julia);
  julia->add_option("--out", o.out, "output PGM path");
  auto* escaping = app.add_subcommand("render-escaping", "write the escaping-candidate mask as PGM");
  add_common(escaping);
  escaping->add_option("--out", o.out, "output PGM path");
  auto* ifs = app.add_subcommand("sample-ifs", "backward orbit sample as CSV");
  add_common(ifs);
  ifs->add_option("--out", o.out, "output CSV path");
  auto* chk = app.add_subcommand("check", "run invariance and identity checks");
  add_common(chk);
  chk->add_option("--suite", o.suite, "invariance | identities | references | all")->required();
  chk->add_option("--report", o.report, "report path");
  auto* catalog = app.add_subcommand("catalog", "print the map grammar");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << kGrammar;
    return kUsage;
  }

  try {
    if (o.threads && *o.threads < 0) throw UsageError("--threads must be >= 0");
    if (*julia) return render(o, true, out);
    if (*escaping) return render(o, false, out);
    if (*ifs) return sample_ifs(o, out);
    if (*chk) return check(o, out);
    if (*catalog) {
      out << map_grammar();
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << kGrammar;
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << kGrammar;
  return kUsage;
}

}  // namespace semidyn::cli
