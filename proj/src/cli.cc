// Copyright 2026 The secgap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "secgap/cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "secgap/acceptance.h"
#include "secgap/algorithms.h"
#include "secgap/bounds.h"
#include "secgap/generators.h"
#include "secgap/montecarlo.h"
#include "secgap/rng.h"

namespace secgap::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) parts.push_back(item);
  }
  if (parts.empty()) throw std::invalid_argument("empty list: '" + s + "'");
  return parts;
}

int ParseInt(const std::string& s, const std::string& what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument(what + " must be an integer, got '" + s + "'");
  }
  return v;
}

uint64_t DefaultSeed() {
  const char* env = std::getenv("SECGAP_SEED");
  if (env == nullptr) return 1;
  const std::string s(env);
  uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("SECGAP_SEED must be an unsigned integer");
  }
  return v;
}

// Inclusive arithmetic grid; values are rounded to 1e-9 so that 0.1 steps
// print as 0.3 rather than 0.30000000000000004.
std::vector<double> Grid(double from, double to, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be > 0");
  if (!(from <= to)) throw std::invalid_argument("from must be <= to");
  const long count = static_cast<long>(std::floor((to - from) / step + 1e-9));
  if (count > 1000000) throw std::invalid_argument("grid has too many points");
  std::vector<double> values;
  for (long i = 0; i <= count; ++i) {
    values.push_back(std::round((from + i * step) * 1e9) / 1e9);
  }
  return values;
}

std::vector<int> IntGrid(double from, double to, double step) {
  for (double v : {from, to, step}) {
    if (v != std::floor(v)) {
      throw std::invalid_argument("k sweep bounds and step must be integers");
    }
  }
  std::vector<int> ks;
  for (double v : Grid(from, to, step)) ks.push_back(static_cast<int>(v));
  return ks;
}

TauPolicy ParseTauPolicy(const std::string& s) {
  if (s == "fixed") return TauPolicy::kFixed;
  if (s == "from-k") return TauPolicy::kFromK;
  if (s == "min") return TauPolicy::kMin;
  throw std::invalid_argument("tau policy must be one of fixed, from-k, min");
}

Estimator ParseEstimator(const std::string& s) {
  if (s == "mean-of-ratios") return Estimator::kMeanOfRatios;
  if (s == "ratio-of-means") return Estimator::kRatioOfMeans;
  throw std::invalid_argument(
      "estimator must be mean-of-ratios or ratio-of-means");
}

ParetoReading ParseParetoReading(const std::string& s) {
  if (s == "scale-shape") return ParetoReading::kScaleShape;
  if (s == "shape-scale") return ParetoReading::kShapeScale;
  throw std::invalid_argument(
      "pareto reading must be scale-shape or shape-scale");
}

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::invalid_argument("cannot open output file " + path);
  return file;
}

// Command arguments with the resolved seed made explicit, so a replay does
// not depend on the environment.
std::vector<std::string> CanonicalArgs(std::vector<std::string> args,
                                       uint64_t seed) {
  const bool has_seed = std::any_of(args.begin(), args.end(), [](auto& a) {
    return a == "--seed" || a.starts_with("--seed=");
  });
  if (!has_seed) {
    args.push_back("--seed");
    args.push_back(std::to_string(seed));
  }
  return args;
}

void WriteManifest(const std::string& output, const std::string& command,
                   const std::vector<std::string>& args, Json params,
                   uint64_t seed) {
  Json m;
  m["command"] = command;
  m["args"] = CanonicalArgs(args, seed);
  m["params"] = std::move(params);
  m["master_seed"] = seed;
  m["version"] = kVersion;
  m["csv_schema"] = kCsvSchema;
  m["output"] = output;
  std::ofstream file = OpenOutput(output + ".manifest.json");
  file << m.dump(2) << "\n";
}

struct ExperimentFlags {
  std::string family = "pareto";
  int n = 200;
  int iters = 5000;
  std::string algo = "exact-gap";
  double tau = 0.2;
  bool tau_from_k = false;
  std::string tau_policy = "fixed";
  double gamma = 0.05;
  double epsilon = 0.0;
  std::string k = "2";
  double sigma = 1.0;
  double gap = 0.0;
  CLI::Option* gap_opt = nullptr;
  double noise = 0.0;
  int l = 2;
  uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
  int threads = 1;
  std::string out;
  std::string instances;
  std::string estimator = "mean-of-ratios";
  int df = 10;
  double superstar = 100.0;
  std::string pareto_reading = "scale-shape";

  uint64_t ResolvedSeed() const {
    return seed_opt->count() > 0 ? seed : DefaultSeed();
  }
};

void AddExperimentFlags(CLI::App* app, ExperimentFlags& f, bool sweep) {
  app->add_option("--family", f.family,
                  "pareto | exp | chisq | exp-superstar")
      ->capture_default_str();
  app->add_option("--n", f.n, "Number of elements")->capture_default_str();
  app->add_option("--iters", f.iters, "Monte Carlo iterations")
      ->capture_default_str();
  app->add_option("--algo", f.algo,
                  sweep ? "Comma-separated list of algorithms"
                        : "classical | strict-classical | exact-gap | robust "
                          "| bounded | l-select")
      ->capture_default_str();
  app->add_option("--tau", f.tau, "Waiting time")->capture_default_str();
  app->add_flag("--tau-from-k", f.tau_from_k,
                "Use tau = 1 - (1/(k+1))^(1/k)");
  app->add_option("--tau-policy", f.tau_policy, "fixed | from-k | min")
      ->capture_default_str();
  app->add_option("--gamma", f.gamma, "Robust phase length")
      ->capture_default_str();
  app->add_option("--epsilon", f.epsilon,
                  "Error bound for bounded (units of the max weight)")
      ->capture_default_str();
  app->add_option("--k", f.k,
                  sweep ? "Gap index list for sigma sweeps"
                        : "Gap index in [2, n] or 'unknown'")
      ->capture_default_str();
  app->add_option("--sigma", f.sigma, "Prediction = sigma * true gap")
      ->capture_default_str();
  f.gap_opt = app->add_option("--gap", f.gap,
                              "Absolute predicted gap (overrides sigma)");
  app->add_option("--noise", f.noise, "Uniform noise added to the prediction")
      ->capture_default_str();
  app->add_option("--L", f.l, "Selections for l-select")->capture_default_str();
  f.seed_opt = app->add_option("--seed", f.seed,
                               "Master seed (default $SECGAP_SEED or 1)");
  app->add_option("--threads", f.threads, "Worker threads")
      ->capture_default_str();
  app->add_option("--out", f.out, "CSV output path (stdout when omitted)");
  app->add_option("--instances", f.instances,
                  "Profile file; replaces generated weights");
  app->add_option("--estimator", f.estimator,
                  "mean-of-ratios | ratio-of-means")
      ->capture_default_str();
  app->add_option("--df", f.df, "Chi-squared degrees of freedom")
      ->capture_default_str();
  app->add_option("--superstar-factor", f.superstar, "Superstar multiplier")
      ->capture_default_str();
  app->add_option("--pareto-reading", f.pareto_reading,
                  "scale-shape | shape-scale")
      ->capture_default_str();
}

AlgorithmConfig BuildAlgorithm(const ExperimentFlags& f,
                               const std::string& name) {
  AlgorithmConfig a;
  a.algorithm = ParseAlgorithm(name);
  a.tau = f.tau;
  a.tau_policy = f.tau_from_k ? TauPolicy::kFromK : ParseTauPolicy(f.tau_policy);
  a.gamma = f.gamma;
  a.epsilon = f.epsilon;
  a.l = f.l;
  return a;
}

struct Experiment {
  ExperimentConfig config;
  std::string family_name;
};

Experiment BuildExperiment(const ExperimentFlags& f) {
  Experiment e;
  ExperimentConfig& c = e.config;
  c.family = ParseFamily(f.family);
  c.family.df = f.df;
  c.family.superstar_factor = f.superstar;
  c.family.pareto_reading = ParseParetoReading(f.pareto_reading);
  e.family_name = std::string(c.family.name());
  c.n = f.n;
  c.iterations = f.iters;
  c.algorithm = BuildAlgorithm(f, SplitList(f.algo).front());
  if (f.k == "unknown") {
    c.gap.k = std::nullopt;
  } else {
    // Sweeps override k per cell; the first entry keeps Validate() honest.
    c.gap.k = ParseInt(SplitList(f.k).front(), "k");
  }
  c.gap.sigma = f.sigma;
  if (f.gap_opt->count() > 0) c.gap.absolute = f.gap;
  c.gap.noise = f.noise;
  c.master_seed = f.ResolvedSeed();
  c.threads = f.threads;
  c.estimator = ParseEstimator(f.estimator);
  if (!f.instances.empty()) {
    std::ifstream in(f.instances);
    if (!in) throw std::invalid_argument("cannot open " + f.instances);
    ProfileFile file = ReadProfiles(in);
    if (file.profiles.empty()) {
      throw std::invalid_argument("instance file has no profiles");
    }
    c.fixed_profiles = std::move(file.profiles);
    c.n = c.fixed_profiles.front().size();
    e.family_name = file.family;
  }
  return e;
}

Json ExperimentParams(const ExperimentFlags& f, const Experiment& e) {
  Json p;
  p["family"] = e.family_name;
  p["n"] = e.config.n;
  p["iters"] = f.iters;
  p["algo"] = f.algo;
  p["tau"] = f.tau;
  p["tau_policy"] = f.tau_from_k ? "from-k" : f.tau_policy;
  p["gamma"] = f.gamma;
  p["epsilon"] = f.epsilon;
  p["k"] = f.k;
  p["sigma"] = f.sigma;
  if (e.config.gap.absolute) p["gap"] = *e.config.gap.absolute;
  p["noise"] = f.noise;
  p["L"] = f.l;
  p["threads"] = f.threads;
  p["estimator"] = f.estimator;
  p["df"] = f.df;
  p["superstar_factor"] = f.superstar;
  p["pareto_reading"] = f.pareto_reading;
  if (!f.instances.empty()) p["instances"] = f.instances;
  return p;
}

void WriteRow(std::ostream& os, const Experiment& e, const SweepRow& row) {
  const ExperimentConfig& c = e.config;
  const AlgorithmConfig& a = row.algorithm;
  const bool lsel = a.algorithm == Algorithm::kLSelection;
  os << e.family_name << ',' << AlgorithmName(a.algorithm) << ',' << c.n
     << ',' << c.iterations << ',';
  if (!lsel) os << (row.k ? std::to_string(*row.k) : "unknown");
  os << ',' << Fmt(row.tau) << ',';
  if (a.algorithm == Algorithm::kRobustConsistent) os << Fmt(a.gamma);
  os << ',' << Fmt(row.sigma) << ',';
  if (a.algorithm == Algorithm::kBoundedError) os << Fmt(a.epsilon);
  os << ',';
  if (lsel) os << a.l;
  const RatioEstimate& r = row.estimate;
  os << ',' << c.master_seed << ',' << Fmt(r.mean) << ',' << Fmt(r.std_error)
     << ',' << Fmt(r.select_best_prob) << ',' << Fmt(r.none_prob) << '\n';
}

void EmitCsv(const std::string& command, const std::vector<std::string>& args,
             const ExperimentFlags& f, const Experiment& e,
             const std::vector<SweepRow>& rows, std::ostream& out,
             Json extra = Json::object()) {
  std::ostringstream csv;
  csv << kCsvHeader << '\n';
  for (const SweepRow& row : rows) WriteRow(csv, e, row);
  if (f.out.empty()) {
    out << csv.str();
    return;
  }
  {
    std::ofstream file = OpenOutput(f.out);
    file << csv.str();
  }
  Json params = ExperimentParams(f, e);
  for (auto& [key, value] : extra.items()) params[key] = value;
  WriteManifest(f.out, command, args, std::move(params), e.config.master_seed);
}

int CmdSimulate(const ExperimentFlags& f, const std::vector<std::string>& args,
                std::ostream& out) {
  if (SplitList(f.algo).size() != 1) {
    throw std::invalid_argument("simulate takes a single --algo; use sweep");
  }
  if (f.k.find(',') != std::string::npos) {
    throw std::invalid_argument("simulate takes a single --k; use sweep");
  }
  Experiment e = BuildExperiment(f);
  const RatioEstimate est = EstimateRatio(e.config);
  const SweepRow row{e.config.gap.k, e.config.gap.sigma, e.config.algorithm,
                     e.config.TauFor(e.config.gap.k), est};
  EmitCsv("simulate", args, f, e, {row}, out);
  return kExitOk;
}

struct SweepFlags {
  std::string sweep;
  double from = 0.0, to = 0.0, step = 0.0;
  CLI::Option* from_opt = nullptr;
  CLI::Option* to_opt = nullptr;
  CLI::Option* step_opt = nullptr;
};

int CmdSweep(const ExperimentFlags& f, const SweepFlags& s,
             const std::vector<std::string>& args, std::ostream& out) {
  Experiment e = BuildExperiment(f);
  std::vector<AlgorithmConfig> algos;
  for (const std::string& name : SplitList(f.algo)) {
    algos.push_back(BuildAlgorithm(f, name));
  }
  std::vector<SweepRow> rows;
  Json extra;
  extra["sweep"] = s.sweep;
  if (s.sweep == "k") {
    const double from = s.from_opt->count() ? s.from : 2;
    const double to = s.to_opt->count() ? s.to : e.config.n;
    const double step = s.step_opt->count() ? s.step : 1;
    const std::vector<int> ks = IntGrid(from, to, step);
    extra["from"] = from;
    extra["to"] = to;
    extra["step"] = step;
    rows = SweepK(e.config, ks, algos);
  } else if (s.sweep == "sigma") {
    const double from = s.from_opt->count() ? s.from : 0;
    const double to = s.to_opt->count() ? s.to : 3;
    const double step = s.step_opt->count() ? s.step : 0.1;
    const std::vector<double> sigmas = Grid(from, to, step);
    std::vector<int> ks;
    for (const std::string& k : SplitList(f.k)) ks.push_back(ParseInt(k, "k"));
    extra["from"] = from;
    extra["to"] = to;
    extra["step"] = step;
    rows = SweepSigma(e.config, sigmas, ks, algos);
  } else {
    throw std::invalid_argument("--sweep must be k or sigma");
  }
  EmitCsv("sweep", args, f, e, rows, out, extra);
  return kExitOk;
}

struct BoundsFlags {
  std::string which;
  double tau = 0.2;
  bool tau_from_k = false;
  double gamma = 0.6;
  int k = 2;
  int l = 2;
  double beta = 0.0;
  int n = 0;
  std::string k_agg = "worst";
  int k_max = kDefaultWorstCaseKMax;
  double w1 = 1.0;
  double epsilon = 0.0;
  CLI::Option* beta_opt = nullptr;
  CLI::Option* n_opt = nullptr;
};

KAggregation ParseAggregation(const std::string& s, int k_max) {
  if (s == "worst") return KAggregation::WorstCase(k_max);
  return KAggregation::Fixed(ParseInt(s, "k aggregation"));
}

Json ReportJson(const GuaranteeReport& r) {
  Json j;
  j["alpha"] = r.alpha;
  Json comps = Json::object();
  for (const auto& [name, value] : r.components) comps[name] = value;
  j["components"] = comps;
  j["binding_term"] = r.binding_term;
  return j;
}

int CmdBounds(const BoundsFlags& b, std::ostream& out) {
  Json j;
  j["which"] = b.which;
  if (b.which == "exact" || b.which == "bounded") {
    const double tau = b.tau_from_k ? TauForK(b.k) : b.tau;
    j["tau"] = tau;
    j["k"] = b.k;
    const GuaranteeReport r =
        b.which == "exact" ? AlphaExact(tau, b.k) : GuaranteeBoundedError(tau, b.k);
    j.update(ReportJson(r));
    if (b.which == "bounded") {
      j["epsilon_penalty"] = r.epsilon_penalty;
      j["w1"] = b.w1;
      j["epsilon"] = b.epsilon;
      j["lower_bound"] = r.LowerBound(b.w1, b.epsilon);
    }
  } else if (b.which == "rc") {
    const KAggregation agg = ParseAggregation(b.k_agg, b.k_max);
    const GuaranteeReport r = Consistency(b.tau, b.gamma, agg);
    j["tau"] = b.tau;
    j["gamma"] = b.gamma;
    j["k_aggregation"] = agg.ToString();
    j["consistency"] = r.alpha;
    j["robustness"] = Robustness(b.tau, b.gamma);
    Json comps = Json::object();
    for (const auto& [name, value] : r.components) comps[name] = value;
    j["components"] = comps;
    j["binding_term"] = r.binding_term;
  } else if (b.which == "tie23") {
    j["tau"] = b.tau;
    j["probability"] = TwoThreeTieProb(b.tau);
    if (b.n_opt->count() > 0) {
      j["n"] = b.n;
      j["probability_finite_n"] = TwoThreeTieProbExact(b.tau, b.n);
    }
  } else if (b.which == "lselect") {
    const double beta = b.beta_opt->count() > 0 ? b.beta : 1.0 / b.l;
    j["L"] = b.l;
    j["beta"] = beta;
    j["bound"] = LSelectionBound(b.l, beta);
  } else {
    throw std::invalid_argument(
        "--which must be one of exact, rc, bounded, tie23, lselect");
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

struct FrontierFlags {
  double r_from = 0.0;
  double r_to = 0.36;
  double r_step = 0.02;
  double grid_step = 0.002;
  std::string k_agg = "worst";
  int k_max = kDefaultWorstCaseKMax;
  int threads = 1;
  std::string out;
};

int CmdFrontier(const FrontierFlags& f, const std::vector<std::string>& args,
                std::ostream& out) {
  const std::vector<double> targets = Grid(f.r_from, f.r_to, f.r_step);
  const KAggregation agg = ParseAggregation(f.k_agg, f.k_max);
  const std::vector<FrontierPoint> points =
      Frontier(targets, f.grid_step, agg, f.threads);
  std::ostringstream csv;
  csv << "robustness_target,feasible,tau,gamma,consistency,robustness,"
         "k_aggregation\n";
  for (const FrontierPoint& p : points) {
    csv << Fmt(p.robustness_target) << ',' << (p.feasible ? 1 : 0) << ',';
    if (p.feasible) {
      csv << Fmt(p.tau) << ',' << Fmt(p.gamma) << ',' << Fmt(p.consistency)
          << ',' << Fmt(p.robustness);
    } else {
      csv << ",,,";
    }
    csv << ',' << agg.ToString() << '\n';
  }
  if (f.out.empty()) {
    out << csv.str();
    return kExitOk;
  }
  {
    std::ofstream file = OpenOutput(f.out);
    file << csv.str();
  }
  Json p;
  p["r_from"] = f.r_from;
  p["r_to"] = f.r_to;
  p["r_step"] = f.r_step;
  p["grid_step"] = f.grid_step;
  p["k_aggregation"] = agg.ToString();
  p["threads"] = f.threads;
  WriteManifest(f.out, "frontier", args, std::move(p), 0);
  return kExitOk;
}

struct GenerateFlags {
  ExperimentFlags exp;
  int count = 1;
};

int CmdGenerate(const GenerateFlags& g, const std::vector<std::string>& args,
                std::ostream& out) {
  const ExperimentFlags& f = g.exp;
  if (g.count < 1) throw std::invalid_argument("count must be >= 1");
  InstanceFamily family = ParseFamily(f.family);
  family.df = f.df;
  family.superstar_factor = f.superstar;
  family.pareto_reading = ParseParetoReading(f.pareto_reading);
  family.Validate();
  const uint64_t seed = f.ResolvedSeed();
  ProfileFile file{
      .family = std::string(family.name()), .seed = seed, .profiles = {}};
  for (int j = 0; j < g.count; ++j) {
    SeededRng rng(seed, j);
    file.profiles.push_back(Generate(family, f.n, rng).Normalized());
  }
  if (f.out.empty()) {
    WriteProfiles(out, file);
    return kExitOk;
  }
  {
    std::ofstream o = OpenOutput(f.out);
    WriteProfiles(o, file);
  }
  Json p;
  p["family"] = file.family;
  p["n"] = f.n;
  p["count"] = g.count;
  p["df"] = f.df;
  p["superstar_factor"] = f.superstar;
  p["pareto_reading"] = f.pareto_reading;
  WriteManifest(f.out, "generate", args, std::move(p), seed);
  return kExitOk;
}

struct VerifyFlags {
  std::string suite = "all";
  bool fast = false;
  int threads = 1;
  uint64_t seed = acceptance::Options{}.seed;
};

int CmdVerify(const VerifyFlags& v, std::ostream& out, std::ostream& err) {
  acceptance::Options opts{.fast = v.fast, .threads = v.threads, .seed = v.seed};
  const auto results = acceptance::RunSuite(v.suite, opts);
  acceptance::PrintResults(results, out);
  if (acceptance::AllPassed(results)) return kExitOk;
  err << "failed:";
  for (const auto& r : results) {
    if (!r.passed) err << ' ' << r.id;
  }
  err << '\n';
  return kExitInternal;
}

int CmdReplay(const std::string& manifest_path, const std::string& out_override,
              std::ostream& out, std::ostream& err) {
  std::ifstream in(manifest_path);
  if (!in) throw std::invalid_argument("cannot open " + manifest_path);
  Json m;
  try {
    m = Json::parse(in);
  } catch (const Json::exception& e) {
    throw std::invalid_argument("malformed manifest: " + std::string(e.what()));
  }
  if (!m.contains("command") || !m.contains("args")) {
    throw std::invalid_argument("manifest needs 'command' and 'args'");
  }
  const std::string command = m["command"].get<std::string>();
  if (command == "replay" || command == "verify") {
    throw std::invalid_argument("cannot replay command " + command);
  }
  std::vector<std::string> args = {command};
  for (const auto& a : m["args"]) args.push_back(a.get<std::string>());
  if (!out_override.empty()) {
    for (size_t i = 1; i < args.size(); ++i) {
      if (args[i] == "--out" && i + 1 < args.size()) {
        args[i + 1] = out_override;
      } else if (args[i].starts_with("--out=")) {
        args[i] = "--out=" + out_override;
      }
    }
  }
  return Run(args, out, err);
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Secretary selection with additive gap information",
               "secgap"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  ExperimentFlags sim_flags;
  CLI::App* sim = app.add_subcommand("simulate", "Estimate one competitive ratio");
  AddExperimentFlags(sim, sim_flags, false);

  ExperimentFlags sweep_flags;
  SweepFlags sweep_range;
  CLI::App* sweep = app.add_subcommand("sweep", "Estimate ratios over a k or sigma grid");
  AddExperimentFlags(sweep, sweep_flags, true);
  sweep->add_option("--sweep", sweep_range.sweep, "k | sigma")->required();
  sweep_range.from_opt = sweep->add_option("--from", sweep_range.from);
  sweep_range.to_opt = sweep->add_option("--to", sweep_range.to);
  sweep_range.step_opt = sweep->add_option("--step", sweep_range.step);

  BoundsFlags bounds_flags;
  CLI::App* bounds = app.add_subcommand("bounds", "Evaluate closed-form guarantees");
  bounds->add_option("--which", bounds_flags.which,
                     "exact | rc | bounded | tie23 | lselect")
      ->required();
  bounds->add_option("--tau", bounds_flags.tau)->capture_default_str();
  bounds->add_flag("--tau-from-k", bounds_flags.tau_from_k);
  bounds->add_option("--gamma", bounds_flags.gamma)->capture_default_str();
  bounds->add_option("--k", bounds_flags.k)->capture_default_str();
  bounds->add_option("--L", bounds_flags.l)->capture_default_str();
  bounds_flags.beta_opt = bounds->add_option("--beta", bounds_flags.beta,
                                             "w_L / OPT (default 1/L)");
  bounds_flags.n_opt = bounds->add_option("--n", bounds_flags.n,
                                          "Finite n for tie23");
  bounds->add_option("--k-agg", bounds_flags.k_agg, "worst | INT")
      ->capture_default_str();
  bounds->add_option("--k-max", bounds_flags.k_max)->capture_default_str();
  bounds->add_option("--w1", bounds_flags.w1)->capture_default_str();
  bounds->add_option("--epsilon", bounds_flags.epsilon)->capture_default_str();

  FrontierFlags frontier_flags;
  CLI::App* frontier = app.add_subcommand("frontier", "Robustness/consistency frontier");
  frontier->add_option("--r-from", frontier_flags.r_from)->capture_default_str();
  frontier->add_option("--r-to", frontier_flags.r_to)->capture_default_str();
  frontier->add_option("--r-step", frontier_flags.r_step)->capture_default_str();
  frontier->add_option("--grid-step", frontier_flags.grid_step)
      ->capture_default_str();
  frontier->add_option("--k-agg", frontier_flags.k_agg, "worst | INT")
      ->capture_default_str();
  frontier->add_option("--k-max", frontier_flags.k_max)->capture_default_str();
  frontier->add_option("--threads", frontier_flags.threads)
      ->capture_default_str();
  frontier->add_option("--out", frontier_flags.out);

  VerifyFlags verify_flags;
  CLI::App* verify = app.add_subcommand("verify", "Run acceptance checks");
  verify->add_option("--suite", verify_flags.suite,
                     "bounds | oracle | figures | determinism | all")
      ->capture_default_str();
  verify->add_flag("--fast", verify_flags.fast, "Reduced iteration counts");
  verify->add_option("--threads", verify_flags.threads)->capture_default_str();
  verify->add_option("--seed", verify_flags.seed)->capture_default_str();

  GenerateFlags gen_flags;
  CLI::App* gen = app.add_subcommand("generate", "Write instance profiles");
  gen->add_option("--family", gen_flags.exp.family)->capture_default_str();
  gen->add_option("--n", gen_flags.exp.n)->capture_default_str();
  gen->add_option("--count", gen_flags.count)->capture_default_str();
  gen_flags.exp.seed_opt = gen->add_option("--seed", gen_flags.exp.seed);
  gen->add_option("--out", gen_flags.exp.out);
  gen->add_option("--df", gen_flags.exp.df)->capture_default_str();
  gen->add_option("--superstar-factor", gen_flags.exp.superstar)
      ->capture_default_str();
  gen->add_option("--pareto-reading", gen_flags.exp.pareto_reading)
      ->capture_default_str();

  std::string manifest_path, replay_out;
  CLI::App* replay = app.add_subcommand("replay", "Re-run a manifest");
  replay->add_option("--manifest", manifest_path)->required();
  replay->add_option("--out", replay_out, "Override the output path");

  const std::vector<std::string> sub_args(
      args.empty() ? args.end() : args.begin() + 1, args.end());
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (sim->parsed()) return CmdSimulate(sim_flags, sub_args, out);
    if (sweep->parsed()) {
      return CmdSweep(sweep_flags, sweep_range, sub_args, out);
    }
    if (bounds->parsed()) return CmdBounds(bounds_flags, out);
    if (frontier->parsed()) return CmdFrontier(frontier_flags, sub_args, out);
    if (verify->parsed()) return CmdVerify(verify_flags, out, err);
    if (gen->parsed()) return CmdGenerate(gen_flags, sub_args, out);
    if (replay->parsed()) {
      return CmdReplay(manifest_path, replay_out, out, err);
    }
    err << "error: no command given\n";
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace secgap::cli
