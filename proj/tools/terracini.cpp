// Command line front end: certificates for scheme files, constructions and
// the verification suites.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "terracini/harness.hpp"

using namespace terracini;

namespace {

constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

// "path,value" rows, one per leaf, keyed by JSON pointer.
void flatten(const Json& j, const std::string& path, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path + "/" + it.key(), os);
  } else if (j.is_array() && !j.empty() && (j.front().is_structured())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "/" + std::to_string(i), os);
  } else {
    std::string v = j.is_string() ? j.get<std::string>() : j.dump();
    if (v.find_first_of(",\"\n") != std::string::npos) {
      std::string q = "\"";
      for (char c : v) q += c == '"' ? std::string("\"\"") : std::string(1, c);
      v = q + "\"";
    }
    os << path << ',' << v << '\n';
  }
}

void suite_csv(const Json& report, std::ostream& os) {
  os << "suite,cell,n,d,x,part,kind,trials,failed,counterexamples,passed\n";
  std::size_t i = 0;
  for (const auto& c : report["cells"]) {
    auto get = [&](const char* k) { return c.contains(k) ? (c[k].is_string() ? c[k].get<std::string>() : c[k].dump()) : ""; };
    os << report["suite"].get<std::string>() << ',' << i++ << ',' << get("n") << ',' << get("d") << ','
       << get("x") << ',' << get("part") << ',' << get("kind") << ',' << get("trials") << ',' << get("failed")
       << ',' << get("counterexamples") << ',' << get("passed") << '\n';
  }
}

struct Output {
  std::string format = "json";
  std::string path;

  void emit(const Json& j, bool suite = false) const {
    std::ofstream file;
    if (!path.empty()) {
      file.open(path);
      if (!file) throw Error("cannot write " + path);
    }
    std::ostream& os = path.empty() ? std::cout : file;
    if (format == "csv") {
      if (suite) suite_csv(j, os);
      else {
        os << "path,value\n";
        flatten(j, "", os);
      }
    } else {
      os << j.dump(2) << '\n';
    }
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0, 0, "");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<std::uint64_t> prime_list(std::uint64_t prime, const std::vector<std::uint64_t>& primes) {
  std::vector<std::uint64_t> out;
  if (prime) out.push_back(prime);
  for (auto p : primes)
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

Json construct(const std::string& family, int n, int d, int x, std::uint64_t seed, const PrimeField& f,
               const std::vector<int>& segments) {
  std::optional<CurveSample> sample;
  std::vector<Point> pts;
  if (family == "general") pts = general_points(f, n, x, seed);
  else if (family == "rnc") sample = rnc_points(f, n, x, seed);
  else if (family == "conic") sample = conic_points(f, n, x, seed);
  else if (family == "elliptic") sample = elliptic_quartic_points(f, d, seed);
  else if (family == "elliptic-free") sample = elliptic_quartic_free_points(f, x, seed);
  else if (family == "plane-cubic")
    sample = plane_cubic_points(f, d, d % 2 == 0 ? CubicMode::CompleteIntersectionEvenD : CubicMode::FreePointsOddD,
                                seed);
  else if (family == "reducible-rnc") {
    if (segments.size() < 2) throw Error("reducible-rnc needs --segments with at least two entries");
    std::vector<int> alloc(segments.size(), x / static_cast<int>(segments.size()));
    for (int i = 0; i < x % static_cast<int>(segments.size()); ++i) ++alloc[i];
    sample = reducible_rnc_points(f, segments, alloc, seed);
  } else if (family == "ai0") pts = ai0_witness(f, n, d, x, seed);
  else throw CLI::ValidationError("family", "unknown family '" + family + "'");
  if (sample) pts = sample->points;
  Json doc = point_set_document(f, pts, d > 0 ? std::optional(d) : std::nullopt);
  doc["family"] = family;
  doc["seed"] = seed;
  if (sample) doc["curve"] = to_json(*sample);
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Terracini loci of double points: certificates and verification suites"};
  app.require_subcommand(1);

  Output out;
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> primes;
  std::size_t budget = kDefaultWitnessBudget;
  std::optional<int> d;
  std::string file;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", out.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("-o,--output", out.path, "write to a file instead of stdout");
    sub->add_option("--prime", prime, "field characteristic");
    sub->add_option("--primes", primes, "further primes for cross-checks")->delimiter(',');
    sub->add_option("--budget", budget, "witness search candidates");
  };

  struct FileCmd {
    CLI::App* app;
    CheckOptions opts;
  };
  std::vector<FileCmd> file_cmds;
  auto file_cmd = [&](const char* name, const char* desc, CheckOptions o) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("file", file, "scheme or point-set JSON")->required();
    sub->add_option("--d", d, "degree");
    common(sub);
    file_cmds.push_back({sub, o});
  };
  file_cmd("check", "cohomology, membership, critical scheme and witness", {true, true, true, {}, {}, 0});
  file_cmd("minimal", "minimal Terracini membership", {true, false, false, {}, {}, 0});
  file_cmd("critical", "critical subscheme", {false, true, false, {}, {}, 0});
  file_cmd("witness", "critical subscheme and its witness curve", {false, true, true, {}, {}, 0});

  auto* cons = app.add_subcommand("construct", "emit a point set from a construction");
  std::string family;
  int cn = 3, cx = 0, cd = 0;
  std::uint64_t seed = 1;
  std::vector<int> segments;
  cons->add_option("family", family,
                   "general, rnc, conic, elliptic, elliptic-free, plane-cubic, reducible-rnc, ai0")
      ->required();
  cons->add_option("--n", cn, "ambient dimension");
  cons->add_option("--x", cx, "number of points");
  cons->add_option("--d", cd, "degree");
  cons->add_option("--seed", seed);
  cons->add_option("--segments", segments, "segment degrees of a reducible chain")->delimiter(',');
  common(cons);

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  SuiteConfig cfg;
  std::string suite;
  bool no_timing = false;
  ver->add_option("--suite", suite, "suite id")->required()->check(CLI::IsMember(suite_ids()));
  ver->add_option("--n", cfg.n_values, "ambient dimensions")->delimiter(',');
  ver->add_option("--d", cfg.d_values, "degrees")->delimiter(',');
  ver->add_option("--x", cfg.x_values, "point counts")->delimiter(',');
  ver->add_option("--trials", cfg.trials, "random trials per cell");
  ver->add_option("--seed", cfg.seed);
  ver->add_option("--workers", cfg.workers, "threads; the report does not depend on it");
  ver->add_flag("--no-timing", no_timing, "omit timing and environment fields");
  common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    for (auto& fc : file_cmds) {
      if (!fc.app->parsed()) continue;
      if (prime) fc.opts.prime = prime;
      fc.opts.cross_primes = primes;
      fc.opts.budget = budget;
      out.emit(check_scheme(slurp(file), d, fc.opts));
      return 0;
    }
    if (cons->parsed()) {
      PrimeField f(prime ? prime : kDefaultPrime);
      out.emit(construct(family, cn, cd, cx, seed, f, segments));
      return 0;
    }
    cfg.suite = suite;
    if (prime || !primes.empty()) cfg.primes = prime_list(prime, primes);
    cfg.budget = budget;
    const auto report = run_suite(cfg);
    out.emit(report.to_json(!no_timing), true);
    if (!report.passed) {
      try {
        throw_if_counterexample(report);
      } catch (const CounterexampleFound& e) {
        std::cerr << e.what() << '\n' << e.certificate().dump(2) << '\n';
      }
      return kExitCounterexample;
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterOutOfTheoremRange& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
