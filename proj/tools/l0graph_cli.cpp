// l0graph command-line front end: denoise, weights, tune, simulate, bench.
//
// Exit codes: 0 success, 1 computational failure, 2 usage or validation error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "l0graph/chain_exact.hpp"
#include "l0graph/errors.hpp"
#include "l0graph/evalsim.hpp"
#include "l0graph/expansion.hpp"
#include "l0graph/io.hpp"
#include "l0graph/objective.hpp"
#include "l0graph/resistance.hpp"
#include "l0graph/tv_chain.hpp"

using namespace l0graph;

namespace {

struct DenoiseArgs {
  std::string graph_path;
  std::string signal_path;
  std::string method = "l0";
  double lambda = 1.0;
  double delta = 0.01;
  double tau = 0.0;
  std::string weights;
  std::string out;
};

struct TuneArgs {
  std::string graph_path;
  std::string signal_path;
  std::string method = "l0";
  std::string grid;
  Index replicates = 0;
  double alpha = 0.04;
  std::optional<std::uint64_t> seed;
  std::string truth_path;
  std::optional<double> sigma_hat;
  double delta = 0.01;
  double tau = 0.0;
};

struct SimulateArgs {
  std::string graph;
  std::string signal;
  double sigma = 1.0;
  std::uint64_t seed = 1;
  std::vector<std::string> out;
};

struct BenchArgs {
  std::string scenario_path;
  std::string out;
  Index threads = 0;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "lo:hi:count" (geometric) or "l1,l2,...".
std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  const char sep = spec.find(':') != std::string::npos ? ':' : ',';
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double x = std::stod(s, &used);
      if (used == s.size()) return x;
    } catch (const std::exception&) {
    }
    throw ParseError("bad grid entry '" + s + "' in '" + spec + "'");
  };
  if (sep == ':') {
    if (parts.size() != 3) throw ParseError("geometric grid must be LO:HI:COUNT");
    return geometric_grid(number(parts[0]), number(parts[1]), static_cast<Index>(number(parts[2])));
  }
  std::vector<double> out;
  for (const auto& p : parts) out.push_back(number(p));
  if (out.empty()) throw ParseError("grid is empty");
  return out;
}

Vector load_signal(const std::string& path, const Graph& g) {
  Vector y = read_signal_file(path);
  if (y.size() != g.num_vertices()) {
    throw DimensionError(path + " has " + std::to_string(y.size()) + " values but the graph has " +
                         std::to_string(g.num_vertices()) + " vertices");
  }
  return y;
}

int run_denoise(const DenoiseArgs& a) {
  const EdgeList file = read_edge_list_file(a.graph_path);
  const Graph& g = file.graph;
  const Vector y = load_signal(a.signal_path, g);

  std::string weights_mode = a.weights;
  if (weights_mode.empty()) weights_mode = a.method == "w" ? "resistance" : "unit";
  EdgeWeighting w = EdgeWeighting::unit(g);
  if (weights_mode == "resistance") {
    w = effective_resistances(g);
  } else if (weights_mode == "file") {
    if (!file.weights) throw ParseError(a.graph_path + " has no weight column");
    w = *file.weights;
  }

  Vector mu;
  double objective_value = 0.0;
  Index iterations = 1;
  if (a.method == "l0" || a.method == "w") {
    const auto prob = make_problem(g, w, y, a.lambda, a.delta, a.tau);
    const DenoiseResult res = denoise(prob);
    mu = res.signal.values();
    objective_value = res.objective;
    iterations = res.sweeps;
  } else if (a.method == "exact-chain" || a.method == "tv-chain") {
    const auto order = g.chain_order();
    if (!order) throw GraphError("graph is not a chain");
    Vector yc(y.size());
    for (Index k = 0; k < y.size(); ++k) yc[k] = y[(*order)[static_cast<std::size_t>(k)]];
    const Vector fit = a.method == "exact-chain" ? exact_l0_chain(yc, a.lambda).fitted()
                                                 : tv_chain(yc, a.lambda).mu;
    mu.resize(y.size());
    for (Index k = 0; k < y.size(); ++k) mu[(*order)[static_cast<std::size_t>(k)]] = fit[k];
    objective_value = a.method == "exact-chain" ? objective_w(y, mu, a.lambda, g, w)
                                                : objective_tv(y, mu, a.lambda, g);
  } else {
    throw DimensionError("unknown method '" + a.method + "'");
  }

  std::ostringstream config;
  config << "l0graph denoise graph=" << a.graph_path << " signal=" << a.signal_path
         << " method=" << a.method << " lambda=" << format_real(a.lambda)
         << " delta=" << format_real(a.delta) << " tau=" << format_real(a.tau)
         << " weights=" << weights_mode;
  const std::vector<std::string> comments{config.str(),
                                          "objective=" + format_real(objective_value)};
  if (a.out.empty()) {
    write_signal(std::cout, mu, comments);
  } else {
    write_signal_file(a.out, mu, comments);
  }
  std::ostream& report = a.out.empty() ? std::cerr : std::cout;
  report << "objective: " << format_real(objective_value) << '\n'
         << "cut_count: " << cut_count(mu, g) << '\n'
         << "cut_weight: " << format_real(weighted_cut(mu, g, w)) << '\n'
         << "iterations: " << iterations << '\n';
  return 0;
}

int run_weights(const std::string& graph_path, const std::string& out_path) {
  const Graph g = read_edge_list_file(graph_path).graph;
  const EdgeWeighting r = effective_resistances(g);
  const std::vector<std::string> comments{
      "l0graph weights graph=" + graph_path,
      "checksum: sum of weights = " + format_real(r.values().sum()) + " (n - 1 = " +
          std::to_string(g.num_vertices() - 1) + ")"};
  if (out_path.empty()) {
    write_edge_list(std::cout, g, &r, comments);
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write " + out_path);
    write_edge_list(out, g, &r, comments);
  }
  return 0;
}

int run_tune(const TuneArgs& a) {
  auto g = std::make_shared<const Graph>(read_edge_list_file(a.graph_path).graph);
  const Vector y = load_signal(a.signal_path, *g);
  MethodOptions options;
  options.delta = a.delta;
  options.tau = a.tau;
  if (!a.truth_path.empty()) options.truth = load_signal(a.truth_path, *g);
  const Method method = make_method(a.method, g, options);

  const std::uint64_t seed = a.seed ? *a.seed : std::random_device{}();
  const double sigma_hat = a.sigma_hat ? *a.sigma_hat : estimate_sigma(y, *g);
  const Index reps = a.replicates > 0 ? a.replicates : default_tuning_replicates(*g);
  std::vector<Setting> settings;
  if (a.grid.empty()) {
    settings = default_settings(a.method, *g, y, sigma_hat, 25);
  } else {
    for (double l : parse_grid(a.grid)) settings.push_back({l, 1.0});
  }
  const TuneResult res = tune_settings(y, method.fit, settings, reps, a.alpha, sigma_hat, seed);

  std::cout << "# l0graph tune graph=" << a.graph_path << " signal=" << a.signal_path
            << " method=" << a.method << " B=" << reps << " alpha=" << format_real(a.alpha)
            << " sigma_hat=" << format_real(sigma_hat) << '\n';
  std::cout << "# seed=" << seed << '\n';
  std::cout << "# chosen_lambda=" << format_real(res.chosen_lambda()) << '\n';
  std::cout << "lambda,mix,mean_score,stderr,chosen\n";
  for (std::size_t s = 0; s < res.settings.size(); ++s) {
    std::cout << format_real(res.settings[s].lambda) << ',' << format_real(res.settings[s].mix) << ','
              << format_real(res.mean_error[s]) << ',' << format_real(res.std_error[s]) << ','
              << (static_cast<Index>(s) == res.chosen ? 1 : 0) << '\n';
  }
  return 0;
}

int run_simulate(const SimulateArgs& a) {
  if (!(a.sigma >= 0.0)) throw DimensionError("sigma must be nonnegative");
  const Graph g = graph_from_spec(a.graph);
  const Vector mu0 = signal_from_spec(a.signal, g);
  Rng rng = make_rng(a.seed, {1});
  const Vector y = mu0 + gaussian_noise(g.num_vertices(), a.sigma, rng);
  std::ostringstream config;
  config << "l0graph simulate graph=" << a.graph << " signal=" << a.signal
         << " sigma=" << format_real(a.sigma);
  const std::string seed_line = "seed=" + std::to_string(a.seed);
  write_signal_file(a.out[0], mu0, {config.str(), seed_line, "truth"});
  write_signal_file(a.out[1], y, {config.str(), seed_line, "observed"});
  return 0;
}

int run_bench(const BenchArgs& a) {
  Scenario sc = scenario_from_json(read_text(a.scenario_path));
  if (a.threads > 0) sc.threads = a.threads;
  const std::string csv = run_experiment(sc).to_csv();
  if (a.out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(a.out);
    if (!out) throw ParseError("cannot write " + a.out);
    out << csv;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Piecewise-constant graph signal denoising"};
  app.require_subcommand(1);

  DenoiseArgs den;
  auto* c_den = app.add_subcommand("denoise", "Denoise a signal on a graph");
  c_den->add_option("graph", den.graph_path, "Edge list file")->required();
  c_den->add_option("signal", den.signal_path, "Signal file")->required();
  c_den->add_option("--method", den.method)
      ->check(CLI::IsMember({"l0", "w", "exact-chain", "tv-chain"}));
  c_den->add_option("--lambda", den.lambda)->check(CLI::NonNegativeNumber);
  c_den->add_option("--delta", den.delta)->check(CLI::PositiveNumber);
  c_den->add_option("--tau", den.tau)->check(CLI::NonNegativeNumber);
  c_den->add_option("--weights", den.weights, "unit, resistance or file")
      ->check(CLI::IsMember({"unit", "resistance", "file"}));
  c_den->add_option("--out", den.out, "Output signal file (stdout if absent)");

  std::string weights_graph;
  std::string weights_out;
  auto* c_w = app.add_subcommand("weights", "Write effective-resistance edge weights");
  c_w->add_option("graph", weights_graph)->required();
  c_w->add_option("--out", weights_out);

  TuneArgs tune;
  auto* c_tune = app.add_subcommand("tune", "Choose lambda by noise injection");
  c_tune->add_option("graph", tune.graph_path)->required();
  c_tune->add_option("signal", tune.signal_path)->required();
  c_tune->add_option("--method", tune.method)->check(CLI::IsMember(known_methods()));
  c_tune->add_option("--grid", tune.grid, "LO:HI:COUNT or comma-separated values");
  c_tune->add_option("--B", tune.replicates)->check(CLI::PositiveNumber);
  c_tune->add_option("--alpha", tune.alpha)->check(CLI::PositiveNumber);
  c_tune->add_option("--seed", tune.seed);
  c_tune->add_option("--truth", tune.truth_path, "True signal for the oracle method");
  c_tune->add_option("--sigma-hat", tune.sigma_hat)->check(CLI::NonNegativeNumber);
  c_tune->add_option("--delta", tune.delta)->check(CLI::PositiveNumber);
  c_tune->add_option("--tau", tune.tau)->check(CLI::NonNegativeNumber);

  SimulateArgs sim;
  auto* c_sim = app.add_subcommand("simulate", "Generate a true signal and noisy data");
  c_sim->add_option("--graph", sim.graph)->required();
  c_sim->add_option("--signal", sim.signal)->required();
  c_sim->add_option("--sigma", sim.sigma)->check(CLI::NonNegativeNumber);
  c_sim->add_option("--seed", sim.seed);
  c_sim->add_option("--out", sim.out, "TRUTH_FILE DATA_FILE")->expected(2)->required();

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "Run a risk experiment");
  c_bench->add_option("scenario", bench.scenario_path, "Scenario JSON")->required();
  c_bench->add_option("--out", bench.out);
  c_bench->add_option("--threads", bench.threads)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_den) return run_denoise(den);
    if (*c_w) return run_weights(weights_graph, weights_out);
    if (*c_tune) return run_tune(tune);
    if (*c_sim) return run_simulate(sim);
    if (*c_bench) return run_bench(bench);
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
