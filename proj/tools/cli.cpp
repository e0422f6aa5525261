#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsres/error.hpp"
#include "hsres/fock.hpp"
#include "hsres/gaussian.hpp"
#include "hsres/measures.hpp"
#include "hsres/pmix.hpp"
#include "hsres/suite.hpp"

namespace hsres::cli {

namespace {

using Json = nlohmann::ordered_json;

// Bad command-line content discovered after CLI11 is done (state specs, grids).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Margins this close to the threshold are reported as boundary cases.
constexpr double kBoundaryMargin = 1e-6;

double parse_real(const std::string& text, const std::string& context) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v))
    throw UsageError("malformed number '" + text + "' in " + context);
  return v;
}

std::vector<double> parse_reals(const std::string& text, const std::string& context) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(item, context));
  if (out.empty() || text.back() == ',') throw UsageError("missing value in " + context);
  return out;
}

struct StateSpec {
  std::string text;
  std::string kind;
  std::vector<double> values;
  std::string path;
};

StateSpec parse_state(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon + 1 == text.size())
    throw UsageError("state spec '" + text + "' must look like kind:params");
  StateSpec s{text, text.substr(0, colon), {}, {}};
  const std::string rest = text.substr(colon + 1);
  if (s.kind == "mixture") {
    s.path = rest;
    return s;
  }
  s.values = parse_reals(rest, "state spec '" + text + "'");
  std::size_t lo = 1, hi = 1;
  if (s.kind == "coherent") hi = 2;
  else if (s.kind == "displaced-squeezed") lo = hi = 2;
  else if (s.kind != "squeezed" && s.kind != "thermal")
    throw UsageError("unknown state kind '" + s.kind +
                     "' (expected coherent, squeezed, thermal, displaced-squeezed or mixture)");
  if (s.values.size() < lo || s.values.size() > hi)
    throw UsageError("wrong number of parameters in state spec '" + text + "'");
  return s;
}

// A state on one or two modes together with the Fock spaces it lives in.
struct Probe {
  DensityMatrix rho;
  FockSpace first;
  std::optional<FockSpace> second;
  double deficit = 0.0;
};

FockSpace pick(std::optional<Index> cutoff, FockSpace heuristic) {
  return cutoff ? FockSpace(*cutoff) : heuristic;
}

Probe from_state(const FockState& st, FockSpace space) {
  return {st.rho, space, std::nullopt, st.truncation.trace_deficit};
}

Probe two_mode_mixture(const TwoModeCoherentMixture& mix, std::optional<Index> cutoff) {
  double r1 = 0.0, r2 = 0.0;
  for (const auto& p : mix.amplitudes()) {
    r1 = std::max(r1, std::abs(p[0]));
    r2 = std::max(r2, std::abs(p[1]));
  }
  const FockSpace s1 = pick(cutoff, space_for_coherent(r1, 1e-10));
  const FockSpace s2 = pick(cutoff, space_for_coherent(r2, 1e-10));
  const FockState st = to_density(mix, s1, s2);
  return {st.rho, s1, s2, st.truncation.trace_deficit};
}

Probe build(const StateSpec& s, std::optional<Index> cutoff, bool allow_two_mode) {
  const auto& v = s.values;
  if (s.kind == "coherent") {
    const Complex alpha(v[0], v.size() > 1 ? v[1] : 0.0);
    const FockSpace space = pick(cutoff, space_for_coherent(alpha));
    return from_state(coherent_state(alpha, space), space);
  }
  if (s.kind == "squeezed") {
    const FockSpace space = pick(cutoff, space_for_squeezed(v[0]));
    return from_state(squeezed_vacuum(v[0], space), space);
  }
  if (s.kind == "thermal") {
    const FockSpace space = pick(cutoff, space_for_thermal(v[0]));
    return from_state(thermal_state(v[0], space), space);
  }
  if (s.kind == "displaced-squeezed") {
    const double r = v[1];
    const FockSpace space =
        pick(cutoff, space_for_gaussian(v[0], 0.0, std::exp(r) / std::sqrt(2.0), std::exp(-r) / std::sqrt(2.0)));
    return from_state(displaced_squeezed(v[0], r, space), space);
  }
  const MixtureDocument doc = load_mixture_file(s.path);
  if (!doc.two_mode.empty()) {
    if (!allow_two_mode) throw UsageError("two-mode mixture '" + s.path + "' needs the Jz generator");
    return two_mode_mixture(doc.two_mode.front(), cutoff);
  }
  const CoherentMixture& mix = doc.single.front();
  const FockSpace space = pick(cutoff, space_for_mixture(mix));
  return from_state(to_density(mix, space), space);
}

// The probe a generator acts on: Jz needs two modes, either from a two-mode
// mixture or from --state (x) --state2.
Probe probe_for(const std::string& generator, const std::string& state, const std::string& state2,
                std::optional<Index> cutoff) {
  const StateSpec first = parse_state(state);
  if (generator != "Jz") {
    if (!state2.empty()) throw UsageError("--state2 only applies to the Jz generator");
    return build(first, cutoff, false);
  }
  Probe p = build(first, cutoff, true);
  if (p.second) {
    if (!state2.empty()) throw UsageError("--state2 cannot be combined with a two-mode mixture");
    return p;
  }
  if (state2.empty()) throw UsageError("the Jz generator needs --state2 or a two-mode mixture");
  const Probe q = build(parse_state(state2), cutoff, false);
  return {two_mode(p.rho, q.rho), p.first, q.first, 1.0 - (1.0 - p.deficit) * (1.0 - q.deficit)};
}

Observable generator_for(const std::string& name, const Probe& p) {
  if (name == "X") return quadratures(p.first).x;
  if (name == "Y") return quadratures(p.first).y;
  if (name == "N") return number_operator(p.first);
  return jz(p.first, *p.second);
}

std::string cutoff_text(const Probe& p) {
  std::string s = std::to_string(p.first.cutoff());
  if (p.second) s += "x" + std::to_string(p.second->cutoff());
  return s;
}

void print_fields(const Json& j, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [key, _] : j.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : j.items()) {
    out << key << std::string(width + 2 - key.size(), ' ');
    if (value.is_string()) out << value.get<std::string>();
    else if (value.is_number_float()) out << format_number(value.get<double>());
    else out << value.dump();
    out << "\n";
  }
}

double ratio(double a, double b) { return b == 0.0 ? (a == 0.0 ? 1.0 : INFINITY) : a / b; }

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

// -- subcommands ------------------------------------------------------------

struct ReproduceArgs {
  std::string report = "hsres-report.json";
  std::uint64_t seed = SuiteOptions{}.seed;
  bool corrupt = false;
};

int reproduce(const ReproduceArgs& a, std::ostream& out, std::ostream& err) {
  SuiteOptions opts;
  opts.seed = a.seed;
  opts.corrupt_lambda_sign = a.corrupt;
  const SuiteReport report = run_suite(opts);

  std::size_t width = 0;
  for (const Check& c : report.checks) width = std::max(width, c.check_id.size());
  int failed = 0;
  for (const Check& c : report.checks) {
    if (!c.pass) ++failed;
    out << (c.pass ? "PASS  " : "FAIL  ") << c.check_id << std::string(width + 2 - c.check_id.size(), ' ')
        << "computed=" << format_number(c.computed) << " expected=" << format_number(c.expected)
        << " tol=" << format_number(c.tolerance) << "\n";
  }
  out << "\n";
  for (const CriterionSummary& c : report.criteria())
    out << (c.pass() ? "PASS" : "FAIL") << "  criterion " << (c.number < 10 ? "0" : "") << c.number << "  "
        << c.title << "\n";
  const int total = static_cast<int>(report.checks.size());
  out << "\n" << total - failed << "/" << total << " checks passed (seed " << report.seed << ")\n";

  if (!a.report.empty()) {
    std::ofstream f(a.report, std::ios::binary);
    f << to_json(report) << "\n";
    if (!f) {
      err << "error: cannot write report to '" << a.report << "'\n";
      return kFailed;
    }
    out << "report written to " << a.report << "\n";
  }
  for (const Check& c : report.checks)
    if (!c.pass) err << "failed: " << c.check_id << " (" << c.description << ")\n";
  return failed == 0 ? kOk : kFailed;
}

struct MeasureArgs {
  std::string state, state2, generator;
  std::optional<Index> cutoff;
  bool json = false;
};

int measure(const MeasureArgs& a, std::ostream& out) {
  const Probe p = probe_for(a.generator, a.state, a.state2, a.cutoff);
  const Observable g = generator_for(a.generator, p);
  const ResolutionReport r = resolution(p.rho, g);
  const double fisher = fisher_info(p.rho, g);
  const double skew = skew_info(p.rho, g);

  Json j;
  j["state"] = a.state;
  if (!a.state2.empty()) j["state2"] = a.state2;
  j["generator"] = a.generator;
  j["cutoff"] = cutoff_text(p);
  j["lambda_sq"] = number(r.lambda_sq);
  j["variance"] = number(r.variance);
  j["fisher"] = number(fisher);
  j["skew"] = number(skew);
  j["lambda_over_variance"] = number(r.ratio);
  j["fisher_over_variance"] = number(ratio(fisher, r.variance));
  j["skew_over_variance"] = number(ratio(skew, r.variance));
  j["trace_deficit"] = number(p.deficit);
  if (a.json) out << j.dump(2) << "\n";
  else print_fields(j, out);
  return kOk;
}

std::vector<double> parse_grid(const std::string& text) {
  // start:stop:count (inclusive, evenly spaced) or a comma list.
  if (text.find(':') == std::string::npos) return parse_reals(text, "--param-grid");
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw UsageError("--param-grid must be start:stop:count or a comma list");
  const double start = parse_real(parts[0], "--param-grid");
  const double stop = parse_real(parts[1], "--param-grid");
  const double count = parse_real(parts[2], "--param-grid");
  if (count < 1 || count != std::floor(count) || count > 1e5)
    throw UsageError("--param-grid count must be a positive integer");
  const int n = static_cast<int>(count);
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = n == 1 ? start : start + (stop - start) * i / (n - 1);
  if (n > 1) grid.back() = stop;
  return grid;
}

struct ScanArgs {
  std::string family, grid, out = "-";
  std::optional<Index> cutoff;
};

int scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  const std::vector<double> params = parse_grid(a.grid);
  std::ostringstream csv;
  csv << "param,lambda_x,lambda_y,product,fisher_x,fisher_y,fisher_product,skew_x,skew_y\n";
  for (const double v : params) {
    StateSpec s{a.family + ":" + format_number(v), a.family, {v}, {}};
    const Probe p = build(s, a.cutoff, false);
    const Quadratures q = quadratures(p.first);
    const double lx = lambda_sq(p.rho, q.x), ly = lambda_sq(p.rho, q.y);
    const double fx = fisher_info(p.rho, q.x), fy = fisher_info(p.rho, q.y);
    const double wx = skew_info(p.rho, q.x), wy = skew_info(p.rho, q.y);
    for (const double x : {v, lx, ly, lx * ly, fx, fy, fx * fy, wx})
      csv << format_number(x) << ",";
    csv << format_number(wy) << "\n";
  }
  if (a.out == "-") {
    out << csv.str();
    return kOk;
  }
  std::ofstream f(a.out, std::ios::binary);
  f << csv.str();
  if (!f) {
    err << "error: cannot write '" << a.out << "'\n";
    return kFailed;
  }
  out << params.size() << " rows written to " << a.out << "\n";
  return kOk;
}

struct WitnessArgs {
  std::string state, state2, mixture, generator;
  std::optional<Index> cutoff;
};

int witness(const WitnessArgs& a, std::ostream& out) {
  if (a.mixture.empty() == a.state.empty()) throw UsageError("give exactly one of --mixture and --state");
  const std::string state = a.mixture.empty() ? a.state : "mixture:" + a.mixture;
  const Probe p = probe_for(a.generator, state, a.state2, a.cutoff);
  WitnessResult w;
  if (a.generator == "X") w = witness_displacement(p.rho, quadratures(p.first).x);
  else if (a.generator == "N") w = witness_number(p.rho, number_operator(p.first));
  else w = witness_jz(p.rho, p.first, *p.second);

  out << "verdict: " << to_string(w.verdict) << "\n"
      << "lambda_sq: " << format_number(w.lambda_sq) << "\n"
      << "threshold: " << format_number(w.threshold) << "\n"
      << "margin: " << format_number(w.margin()) << "\n"
      << "trace_deficit: " << format_number(p.deficit) << "\n";
  if (std::abs(w.margin()) <= kBoundaryMargin)
    out << "note: margin ≈ 0, boundary case (a coherent probe sits exactly at the threshold)\n";
  if (w.verdict == Verdict::classical_consistent)
    out << "note: classical-consistent does not certify a positive P representation\n";
  return w.verdict == Verdict::nonclassical ? kNonclassical : kOk;
}

struct OptimizeArgs {
  std::string task;
  double n = 0.0;
  bool json = false;
};

int optimize(const OptimizeArgs& a, std::ostream& out) {
  const GaussianOptimum o = a.task == "displacement" ? optimize_displacement(a.n) : optimize_phase(a.n);
  Json j;
  j["task"] = a.task;
  j["n"] = number(a.n);
  j["lambda_sq"] = number(o.lambda_sq);
  j["x0"] = number(o.state.mean_x());
  j["dx"] = number(o.state.dx());
  j["dy"] = number(o.state.dy());
  j["purity_factor"] = number(o.state.purity_factor());
  j["mean_photon"] = number(mean_photon(o.state));
  j["grid_lambda_sq"] = number(o.grid_lambda_sq);
  j["analytic_lambda_sq"] = number(o.analytic_lambda_sq);
  j["analytic_dx"] = number(o.analytic_state.dx());
  j["analytic_dy"] = number(o.analytic_state.dy());
  if (a.json) out << j.dump(2) << "\n";
  else print_fields(j, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert-Schmidt resolution of quantum probes", "hsres"};
  app.require_subcommand(1);

  ReproduceArgs rep;
  auto* c_rep = app.add_subcommand("reproduce", "run every reference check and write a JSON report");
  c_rep->add_option("--report", rep.report, "JSON report path (empty to skip)")->capture_default_str();
  c_rep->add_option("--seed", rep.seed, "seed for the randomized checks")->capture_default_str();
  c_rep->add_flag("--corrupt-lambda-sign", rep.corrupt, "debug: flip the cross-term sign of Lambda^2");

  const std::vector<std::string> generators{"X", "Y", "N", "Jz"};
  Index cutoff_value = 0;
  auto add_cutoff = [&](CLI::App* c) {
    return c->add_option("--cutoff", cutoff_value, "Fock cutoff per mode (default: adaptive)")
        ->check(CLI::Range(Index(1), Index(4096)));
  };

  MeasureArgs mea;
  auto* c_mea = app.add_subcommand("measure", "Lambda^2, variance, Fisher and skew information of a probe");
  c_mea->add_option("--state", mea.state, "coherent:re[,im] | squeezed:r | thermal:xi | "
                                          "displaced-squeezed:x0,r | mixture:<file>")->required();
  c_mea->add_option("--generator", mea.generator, "X, Y, N or Jz")->required()->check(CLI::IsMember(generators));
  c_mea->add_option("--state2", mea.state2, "second mode for Jz");
  auto* o_mea_cut = add_cutoff(c_mea);
  c_mea->add_flag("--json", mea.json, "print JSON");

  ScanArgs sca;
  auto* c_sca = app.add_subcommand("scan", "quadrature resolution across a family of probes, as CSV");
  c_sca->add_option("--family", sca.family, "thermal or squeezed")
      ->required()->check(CLI::IsMember({"thermal", "squeezed"}));
  c_sca->add_option("--param-grid", sca.grid, "start:stop:count or v1,v2,...")->required();
  c_sca->add_option("--out", sca.out, "CSV path, - for stdout")->capture_default_str();
  auto* o_sca_cut = add_cutoff(c_sca);

  WitnessArgs wit;
  auto* c_wit = app.add_subcommand("witness", "nonclassicality witness; exit 3 when nonclassical");
  auto* o_mix = c_wit->add_option("--mixture", wit.mixture, "coherent-mixture JSON file");
  c_wit->add_option("--state", wit.state, "state spec as for measure")->excludes(o_mix);
  c_wit->add_option("--state2", wit.state2, "second mode for Jz");
  c_wit->add_option("--generator", wit.generator, "X, N or Jz")->required()->check(CLI::IsMember({"X", "N", "Jz"}));
  auto* o_wit_cut = add_cutoff(c_wit);

  OptimizeArgs opt;
  auto* c_opt = app.add_subcommand("optimize", "best Gaussian probe at fixed mean photon number");
  c_opt->add_option("--task", opt.task, "displacement or phase")
      ->required()->check(CLI::IsMember({"displacement", "phase"}));
  c_opt->add_option("--n", opt.n, "mean photon number")->required()->check(CLI::PositiveNumber);
  c_opt->add_flag("--json", opt.json, "print JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  auto cutoff_of = [&](CLI::Option* o) { return o->count() ? std::optional<Index>(cutoff_value) : std::nullopt; };
  try {
    if (c_rep->parsed()) return reproduce(rep, out, err);
    if (c_mea->parsed()) {
      mea.cutoff = cutoff_of(o_mea_cut);
      return measure(mea, out);
    }
    if (c_sca->parsed()) {
      sca.cutoff = cutoff_of(o_sca_cut);
      return scan(sca, out, err);
    }
    if (c_wit->parsed()) {
      wit.cutoff = cutoff_of(o_wit_cut);
      return witness(wit, out);
    }
    return optimize(opt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const TruncationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace hsres::cli
