#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "l0graph/expansion.hpp"
#include "l0graph/graph.hpp"

namespace l0graph {

using Rng = std::mt19937_64;

/// Generator for stream `stream` of a run seeded with `seed`; distinct
/// (seed, stream...) tuples give independent, reproducible streams.
Rng make_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> stream = {});

Vector gaussian_noise(Index n, double sigma, Rng& rng);

struct EpidemicLevels {
  double infected = 1.005;
  double healthy = 0.005;
};

struct EpidemicOutcome {
  Index source = 0;
  std::vector<char> infected;
  Vector signal;
};

/// Discrete-time SI spread from one uniformly chosen source. In each of
/// `steps` synchronous rounds every vertex infected before the round tries
/// once to infect each healthy neighbour, succeeding with probability p.
EpidemicOutcome run_epidemic(const Graph& g, Index steps, double p, std::uint64_t seed,
                             EpidemicLevels levels = {});
Vector simulate_epidemic(const Graph& g, Index steps, double p, std::uint64_t seed,
                         EpidemicLevels levels = {});

/// MAD of edge differences y_i - y_j scaled by 1 / (Phi^{-1}(0.75) sqrt 2).
/// Consistent for sigma when most edges join equal true values.
double estimate_sigma(const Vector& y, const Graph& g);

/// ||mu_hat - mu0||^2 / (n sigma^2).
double st_mse(const Vector& mu_hat, const Vector& mu0, double sigma);

/// One tuning-parameter point: penalty and (for relaxed TV) the mixing weight.
struct Setting {
  double lambda = 0.0;
  double mix = 1.0;
};

using FitFunction = std::function<Vector(const Vector& data, const Setting& setting)>;

struct TuneResult {
  std::vector<Setting> settings;
  std::vector<double> mean_error;
  std::vector<double> std_error;
  Index chosen = 0;
  Index replicates = 0;
  double alpha = 0.04;
  double sigma_hat = 0.0;
  std::uint64_t seed = 0;

  double chosen_lambda() const { return settings[static_cast<std::size_t>(chosen)].lambda; }
};

/// Noise-injection tuning: for b = 1..B draw z ~ N(0, alpha sigma_hat^2 I),
/// fit every setting to y + z and score ||fit - (y - z / alpha)||^2. Picks the
/// setting with the smallest mean score (first on ties).
TuneResult tune_settings(const Vector& y, const FitFunction& fit, const std::vector<Setting>& settings,
                         Index replicates, double alpha, double sigma_hat, std::uint64_t seed);

using LambdaFit = std::function<Vector(const Vector& data, double lambda)>;
TuneResult tune_lambda(const Vector& y, const LambdaFit& fit, const std::vector<double>& lambdas,
                       Index replicates, double alpha, double sigma_hat, std::uint64_t seed);

/// `count` geometrically spaced values from lo to hi inclusive.
std::vector<double> geometric_grid(double lo, double hi, Index count);

struct MethodOptions {
  double delta = 0.01;
  double tau = 0.0;
  /// Truth signal; required by the "oracle" method.
  std::optional<Vector> truth;
  /// Precomputed weights for "w"; computed from the graph when absent.
  std::optional<EdgeWeighting> weights;
};

/// Named estimator bound to a graph. Known names: identity, oracle, l0, w,
/// exact-chain, tv-chain, tv-relaxed.
struct Method {
  std::string name;
  FitFunction fit;
  /// Whether the fit depends on the setting at all.
  bool tunable = true;
};

std::vector<std::string> known_methods();
/// Throws DimensionError for unknown names and GraphError when a chain
/// method is bound to a graph that is not a path.
Method make_method(const std::string& name, std::shared_ptr<const Graph> g, MethodOptions options = {});

/// Settings scanned for a method: 25-point geometric grids over
/// [1e-3, 10] sigma^2 log|E| (l0, w, exact-chain) or [1e-3, 1] lambda_max(y)
/// (TV methods, crossed with mix in {0, 0.1, ..., 1} for tv-relaxed).
std::vector<Setting> default_settings(const std::string& method, const Graph& g, const Vector& y,
                                      double sigma, Index points = 25);

Index default_tuning_replicates(const Graph& g);

struct Scenario {
  std::string graph = "chain:100";
  std::string signal = "steps:breaks=3,height=1";
  std::vector<double> sigmas{0.5};
  Index replicates = 10;
  std::uint64_t seed = 1;
  std::vector<std::string> methods{"l0"};
  double delta = 0.01;
  double tau = 0.0;
  /// Tuning replicates; 0 selects the default for the graph size.
  Index tuning_replicates = 0;
  double alpha = 0.04;
  Index grid_points = 25;
  bool report_tuned = true;
  bool report_best = true;
  /// Worker threads; 0 reads L0GRAPH_THREADS or uses the hardware count.
  Index threads = 0;
};

/// Builds a graph from "chain:N", "cycle:N", "complete:N", "lattice:RxC",
/// "tadpole:CHAIN,CLIQUE" or "file:PATH" (edge list).
Graph graph_from_spec(const std::string& spec);

/// Builds the true signal from "constant:V", "steps:breaks=K,height=H"
/// (K+1 equal blocks alternating 0 and H), "blocks:V1xL1,V2xL2,...",
/// "epidemic:T=..,p=..,seed=..[,infected=..,healthy=..]" or "file:PATH".
Vector signal_from_spec(const std::string& spec, const Graph& g);

struct ExperimentRow {
  std::string method;
  double sigma = 0.0;
  std::string lambda_mode;
  double mean_stmse = 0.0;
  double std_error = 0.0;
  Index replicates = 0;
  std::uint64_t seed = 0;
  /// Setting of the best-attained row; for tuned rows the most frequent choice.
  Setting setting;
};

struct ExperimentResult {
  Scenario scenario;
  std::vector<ExperimentRow> rows;

  const ExperimentRow* find(const std::string& method, double sigma, const std::string& mode) const;
  /// CSV with header comments describing the scenario.
  std::string to_csv() const;
};

ExperimentResult run_experiment(const Scenario& scenario);

/// Scenario from a JSON document; missing keys keep their defaults.
Scenario scenario_from_json(const std::string& text);
std::string scenario_to_json(const Scenario& scenario);

Index worker_threads(Index requested);

}  // namespace l0graph
