// Command-line front end: verification runs, resource curves, threshold
// sweeps.  All output is CSV with '#' metadata lines carrying the tool
// version, a hash of the effective configuration, and the master seed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hqt/bell.hpp"
#include "hqt/channels.hpp"
#include "hqt/loss.hpp"
#include "hqt/resources.hpp"
#include "hqt/teleport.hpp"
#include "hqt/threshold.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

// exit codes: 0 ok, 1 verification failure, 2 config error, 3 convergence
enum ExitCode { kOk = 0, kVerifyFail = 1, kConfigError = 2, kNoConverge = 3 };

struct RunConfig {
  double alpha_min = 0.6, alpha_max = 1.6;
  int alpha_steps = 6;
  double eta_min = 0.0, eta_max = 0.2;
  std::string strategy = "gi";
  long trials = 100000;
  uint64_t seed = 20260826;
  std::string out;
  int threads = 0;  // 0: pick from env / hardware

  nlohmann::json to_json() const {
    return {{"alpha_min", alpha_min}, {"alpha_max", alpha_max},
            {"alpha_steps", alpha_steps}, {"eta_min", eta_min},
            {"eta_max", eta_max}, {"strategy", strategy},
            {"trials", trials}, {"seed", seed}, {"out", out}};
  }
};

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

hqt::Strategy parse_strategy(const std::string& s) {
  if (s == "gi") return hqt::Strategy::GI;
  if (s == "galpha") return hqt::Strategy::GAlpha;
  throw CLI::ValidationError("--strategy", "must be 'gi' or 'galpha'");
}

std::vector<double> alpha_grid(const RunConfig& c) {
  std::vector<double> g;
  if (c.alpha_steps <= 1) {
    g.push_back(c.alpha_min);
    return g;
  }
  for (int i = 0; i < c.alpha_steps; ++i)
    g.push_back(c.alpha_min + (c.alpha_max - c.alpha_min) * i /
                                  (c.alpha_steps - 1));
  return g;
}

int effective_threads(const RunConfig& c) {
  if (c.threads > 0) return c.threads;
  if (const char* env = std::getenv("HQT_THREADS")) return std::atoi(env);
  return int(std::thread::hardware_concurrency());
}

std::ostream& open_output(const RunConfig& c, std::ofstream& file) {
  if (c.out.empty() || c.out == "-") return std::cout;
  file.open(c.out);
  if (!file) throw std::runtime_error("cannot open output file: " + c.out);
  return file;
}

void write_metadata(std::ostream& os, const RunConfig& c,
                    const std::string& columns_units) {
  os << "# hqt " << kVersion << "\n";
  os << "# config_hash " << std::hex << fnv1a(c.to_json().dump()) << std::dec
     << "\n";
  os << "# master_seed " << c.seed << "\n";
  os << "# units " << columns_units << "\n";
}

void apply_config_file(const std::string& path, RunConfig& c) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config file: " + path);
  nlohmann::json j = nlohmann::json::parse(f);
  if (j.contains("alpha_min")) c.alpha_min = j["alpha_min"];
  if (j.contains("alpha_max")) c.alpha_max = j["alpha_max"];
  if (j.contains("alpha_steps")) c.alpha_steps = j["alpha_steps"];
  if (j.contains("eta_min")) c.eta_min = j["eta_min"];
  if (j.contains("eta_max")) c.eta_max = j["eta_max"];
  if (j.contains("strategy")) c.strategy = j["strategy"];
  if (j.contains("trials")) c.trials = j["trials"];
  if (j.contains("seed")) c.seed = j["seed"];
  if (j.contains("out")) c.out = j["out"];
  if (j.contains("threads")) c.threads = j["threads"];
}

// --- verify -----------------------------------------------------------------

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

void report(std::ostream& os, std::vector<Check>& checks, const std::string& n,
            bool pass, const std::string& detail) {
  checks.push_back({n, pass, detail});
  os << (pass ? "PASS " : "FAIL ") << n << "  " << detail << "\n";
}

int cmd_verify(const RunConfig& c) {
  std::ofstream file;
  std::ostream& os = open_output(c, file);
  write_metadata(os, c, "probabilities dimensionless");
  std::vector<Check> checks;

  {  // teleportation failure frequency at alpha = 1.4
    const double alpha = 1.4;
    const double pf = hqt::failure_probability(alpha);
    hqt::Rng rng = hqt::Rng::stream(c.seed, 1, 0, 0);
    const long shots = std::max(c.trials, 100000L);
    long fails = 0;
    hqt::HybridQubit in{0.6, 0.8, alpha};
    for (long i = 0; i < shots; ++i)
      if (!hqt::teleport(in, hqt::ChannelKind::PsiC, rng).success) ++fails;
    const double emp = double(fails) / double(shots);
    const double sigma = std::sqrt(pf * (1 - pf) / double(shots));
    std::ostringstream d;
    d << "empirical " << emp << " expected " << pf << " (3sigma "
      << 3 * sigma << ")";
    report(os, checks, "teleport_failure_alpha_1.4",
           std::abs(emp - pf) <= 3 * sigma, d.str());
  }

  {  // carrier-loss branch weights vs beam-splitter oracle
    double max_dev = 0.0;
    for (double eta : {0.05, 0.1, 0.2, 0.3})
      for (double alpha : {0.6, 0.9, 1.2, 1.5}) {
        hqt::HybridQubit q{1.0 / std::sqrt(2.0), {0.0, 1.0 / std::sqrt(2.0)},
                           alpha};
        auto ensemble = hqt::loss::evolve_hybrid_under_loss(q, eta);
        // oracle: explicit loss channels on the embedded register
        hqt::fock::State reg = hqt::embed_fock(q);
        double kept_plus = 0.0, kept_minus = 0.0, lost = 0.0;
        for (auto& rail_h : hqt::fock::loss_channel(reg, 0, eta))
          for (auto& rail_v : hqt::fock::loss_channel(rail_h.state, 1, eta)) {
            const bool photon_lost = rail_h.key + rail_v.key > 0;
            for (auto& car :
                 hqt::fock::loss_channel(rail_v.state, 2, eta)) {
              const double w = rail_h.weight * rail_v.weight * car.weight;
              if (photon_lost)
                lost += w;
              else if (car.key % 2 == 0)
                kept_plus += w;
              else
                kept_minus += w;
            }
          }
        const double model[3] = {ensemble[0].weight, ensemble[1].weight,
                                 ensemble[2].weight + ensemble[3].weight};
        const double oracle[3] = {kept_plus, kept_minus, lost};
        for (int i = 0; i < 3; ++i)
          max_dev = std::max(max_dev, std::abs(model[i] - oracle[i]));
        const double p_model = hqt::loss::memory_error_rate(eta, alpha);
        max_dev = std::max(max_dev,
                           std::abs(p_model - (kept_minus + 0.5 * lost)));
      }
    std::ostringstream d;
    d << "max deviation " << max_dev;
    report(os, checks, "loss_branch_weights_vs_oracle", max_dev < 1e-6,
           d.str());
  }

  {  // lossless limit of the lossy failure formula
    bool ok = true;
    for (double alpha : {0.5, 1.0, 1.4, 2.0})
      ok = ok && hqt::lossy_failure_probability(alpha, 0.0) ==
                     hqt::failure_probability(alpha);
    report(os, checks, "lossy_formula_eta0_limit", ok, "exact equality");
  }

  {  // generation success statistics at alpha = 1
    const double alpha = 1.0;
    bool all_ok = true;
    std::ostringstream d;
    for (auto s : {hqt::Strategy::GI, hqt::Strategy::GAlpha})
      for (auto k : {hqt::ChannelKind::Z, hqt::ChannelKind::Zprime}) {
        hqt::Rng rng = hqt::Rng::stream(c.seed, 2, uint64_t(s), uint64_t(k));
        const long attempts = std::max(c.trials, 100000L);
        long succ = 0;
        for (long i = 0; i < attempts; ++i)
          if (hqt::attempt_generation(k, s, alpha, rng).success) ++succ;
        const double p = hqt::generation_success_probability(k, s, alpha);
        const double emp = double(succ) / double(attempts);
        const double sigma = std::sqrt(p * (1 - p) / double(attempts));
        if (std::abs(emp - p) > 3 * sigma) all_ok = false;
        d << hqt::to_string(k) << "/" << hqt::to_string(s) << " " << emp
          << " vs " << p << "; ";
      }
    report(os, checks, "generation_success_rates", all_ok, d.str());
  }

  for (const auto& ck : checks)
    if (!ck.pass) return kVerifyFail;
  return kOk;
}

// --- resources --------------------------------------------------------------

int cmd_resources(const RunConfig& c) {
  std::ofstream file;
  std::ostream& os = open_output(c, file);
  write_metadata(os, c, "alpha dimensionless, costs in entangled pairs");
  os << "alpha,strategy,z_cost,z_prime_cost,total_round_cost\n";
  for (double a : alpha_grid(c)) {
    for (auto s : {hqt::Strategy::GI, hqt::Strategy::GAlpha}) {
      os << a << "," << hqt::to_string(s) << ","
         << hqt::resources::average_channel_cost(hqt::ChannelKind::Z, s, a)
         << ","
         << hqt::resources::average_channel_cost(hqt::ChannelKind::Zprime, s,
                                                 a)
         << "," << hqt::resources::total_round_cost(s, a) << "\n";
    }
  }
  os << "crossover," << hqt::resources::crossover_alpha() << ",,,\n";
  return kOk;
}

// --- threshold --------------------------------------------------------------

int cmd_threshold(const RunConfig& c) {
  std::ofstream file;
  std::ostream& os = open_output(c, file);
  write_metadata(os, c, "alpha dimensionless, eta_threshold loss probability");
  os << "alpha,strategy,eta_threshold,ci\n";
  const double tol = 1e-4;
  auto pts = hqt::threshold::threshold_sweep(
      alpha_grid(c), parse_strategy(c.strategy), c.trials, c.seed,
      effective_threads(c), c.eta_max, tol);
  bool bracketed_any = false;
  for (const auto& p : pts) {
    os << p.alpha << "," << c.strategy << "," << p.eta_threshold << "," << tol
       << "\n";
    if (p.eta_threshold > 0.0 && p.eta_threshold < c.eta_max)
      bracketed_any = true;
  }
  return bracketed_any ? kOk : kNoConverge;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hybrid-qubit teleportation toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--alpha-min", cfg.alpha_min, "low end of the alpha grid");
  app.add_option("--alpha-max", cfg.alpha_max, "high end of the alpha grid");
  app.add_option("--alpha-steps", cfg.alpha_steps, "alpha grid points");
  app.add_option("--eta-min", cfg.eta_min, "low end of the loss grid");
  app.add_option("--eta-max", cfg.eta_max, "high end of the loss grid");
  app.add_option("--strategy", cfg.strategy, "gi or galpha");
  app.add_option("--trials", cfg.trials, "Monte Carlo trials per point");
  app.add_option("--seed", cfg.seed, "master seed");
  app.add_option("--out", cfg.out, "output file ('-' for stdout)");
  app.add_option("--threads", cfg.threads, "worker threads (0 = auto)");

  auto* verify = app.add_subcommand("verify", "oracle-vs-analytic checks");
  auto* resources = app.add_subcommand("resources", "resource cost curves");
  auto* threshold = app.add_subcommand("threshold", "loss threshold sweep");
  // shared options may appear after the subcommand name
  for (auto* sub : {verify, resources, threshold}) sub->fallthrough();

  // config file first, then flag overrides
  try {
    app.parse(argc, argv);
    if (!config_path.empty()) {
      RunConfig base;
      apply_config_file(config_path, base);
      // re-parse so explicit flags win over the file
      cfg = base;
      app.clear();
      app.parse(argc, argv);
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    parse_strategy(cfg.strategy);
    if (verify->parsed()) return cmd_verify(cfg);
    if (resources->parsed()) return cmd_resources(cfg);
    if (threshold->parsed()) return cmd_threshold(cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNoConverge;
  }
  return kConfigError;
}
