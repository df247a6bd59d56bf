#include "l0graph/evalsim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "l0graph/chain_exact.hpp"
#include "l0graph/io.hpp"
#include "l0graph/resistance.hpp"
#include "l0graph/tv_chain.hpp"

namespace l0graph {

namespace {

// Stream tags keep the generators of different stages independent.
enum Stream : std::uint64_t { kNoise = 1, kTuning = 2, kEpidemic = 3 };

constexpr double kNormalQuartile = 0.6744897501960817;  // Phi^{-1}(0.75)

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(s);
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double x = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return x;
  } catch (const std::exception&) {
    throw ParseError("cannot read " + what + " from '" + s + "'");
  }
}

Index to_index(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<Index>(x);
  } catch (const std::exception&) {
    throw ParseError("cannot read " + what + " from '" + s + "'");
  }
}

// "k1=v1,k2=v2" into a map.
std::map<std::string, std::string> parse_options(const std::string& text) {
  std::map<std::string, std::string> out;
  if (text.empty()) return out;
  for (const auto& part : split(text, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in '" + part + "'");
    out[part.substr(0, eq)] = part.substr(eq + 1);
  }
  return out;
}

template <typename Fn>
void parallel_for(Index count, Index threads, Fn&& body) {
  threads = std::max<Index>(1, std::min(threads, count));
  if (threads == 1) {
    for (Index i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<Index> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (Index t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (Index i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

Vector permute(const Vector& y, const std::vector<Index>& order) {
  Vector out(y.size());
  for (Index k = 0; k < y.size(); ++k) out[k] = y[order[static_cast<std::size_t>(k)]];
  return out;
}

Vector unpermute(const Vector& x, const std::vector<Index>& order) {
  Vector out(x.size());
  for (Index k = 0; k < x.size(); ++k) out[order[static_cast<std::size_t>(k)]] = x[k];
  return out;
}

std::vector<Index> require_chain(const Graph& g) {
  auto order = g.chain_order();
  if (!order) throw GraphError("graph is not a chain");
  return *order;
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> stream) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  for (auto s : stream) {
    words.push_back(static_cast<std::uint32_t>(s));
    words.push_back(static_cast<std::uint32_t>(s >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

Vector gaussian_noise(Index n, double sigma, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector out(n);
  for (Index i = 0; i < n; ++i) out[i] = sigma * normal(rng);
  return out;
}

EpidemicOutcome run_epidemic(const Graph& g, Index steps, double p, std::uint64_t seed,
                             EpidemicLevels levels) {
  if (!(p >= 0.0 && p <= 1.0)) throw DimensionError("infection probability must lie in [0, 1]");
  if (steps < 0) throw DimensionError("step count must be nonnegative");
  const Index n = g.num_vertices();
  Rng rng = make_rng(seed, {kEpidemic});
  EpidemicOutcome out;
  out.source = std::uniform_int_distribution<Index>(0, n - 1)(rng);
  out.infected.assign(static_cast<std::size_t>(n), 0);
  out.infected[static_cast<std::size_t>(out.source)] = 1;
  std::bernoulli_distribution transmit(p);
  for (Index t = 0; t < steps; ++t) {
    const std::vector<char> before = out.infected;
    for (Index v = 0; v < n; ++v) {
      if (!before[static_cast<std::size_t>(v)]) continue;
      for (const auto& inc : g.incident(v)) {
        if (before[static_cast<std::size_t>(inc.neighbor)]) continue;
        if (transmit(rng)) out.infected[static_cast<std::size_t>(inc.neighbor)] = 1;
      }
    }
  }
  out.signal.resize(n);
  for (Index v = 0; v < n; ++v) {
    out.signal[v] = out.infected[static_cast<std::size_t>(v)] ? levels.infected : levels.healthy;
  }
  return out;
}

Vector simulate_epidemic(const Graph& g, Index steps, double p, std::uint64_t seed,
                         EpidemicLevels levels) {
  return run_epidemic(g, steps, p, seed, levels).signal;
}

double estimate_sigma(const Vector& y, const Graph& g) {
  if (y.size() != g.num_vertices()) throw DimensionError("signal length does not match vertex count");
  if (g.num_edges() < 10) throw DimensionError("noise estimation needs at least 10 edges");
  std::vector<double> diffs;
  diffs.reserve(static_cast<std::size_t>(g.num_edges()));
  for (const auto& e : g.edges()) diffs.push_back(y[e.u] - y[e.v]);
  auto median = [](std::vector<double>& v) {
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    double m = v[mid];
    if (v.size() % 2 == 0) {
      m = 0.5 * (m + *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid)));
    }
    return m;
  };
  const double center = median(diffs);
  for (auto& d : diffs) d = std::abs(d - center);
  return median(diffs) / (kNormalQuartile * std::sqrt(2.0));
}

double st_mse(const Vector& mu_hat, const Vector& mu0, double sigma) {
  if (mu_hat.size() != mu0.size()) throw DimensionError("estimate and truth differ in length");
  if (!(sigma > 0.0)) throw DimensionError("sigma must be positive");
  return (mu_hat - mu0).squaredNorm() / (static_cast<double>(mu0.size()) * sigma * sigma);
}

TuneResult tune_settings(const Vector& y, const FitFunction& fit, const std::vector<Setting>& settings,
                         Index replicates, double alpha, double sigma_hat, std::uint64_t seed) {
  if (settings.empty()) throw DimensionError("tuning grid is empty");
  if (replicates < 1) throw DimensionError("tuning needs at least one replicate");
  if (!(alpha > 0.0)) throw DimensionError("alpha must be positive");
  if (!(sigma_hat >= 0.0) || !std::isfinite(sigma_hat)) {
    throw DimensionError("noise estimate must be finite and nonnegative");
  }
  TuneResult result;
  result.settings = settings;
  result.replicates = replicates;
  result.alpha = alpha;
  result.sigma_hat = sigma_hat;
  result.seed = seed;

  const std::size_t k = settings.size();
  std::vector<double> sum(k, 0.0);
  std::vector<double> sum_sq(k, 0.0);
  Rng rng = make_rng(seed, {kTuning});
  const double z_scale = std::sqrt(alpha) * sigma_hat;
  for (Index b = 0; b < replicates; ++b) {
    const Vector z = gaussian_noise(y.size(), z_scale, rng);
    const Vector y_fit = y + z;
    const Vector y_score = y - z / alpha;
    for (std::size_t s = 0; s < k; ++s) {
      const double err = (fit(y_fit, settings[s]) - y_score).squaredNorm();
      if (!std::isfinite(err)) throw SolverError("tuning score is not finite");
      sum[s] += err;
      sum_sq[s] += err * err;
    }
  }
  const auto reps = static_cast<double>(replicates);
  for (std::size_t s = 0; s < k; ++s) {
    const double mean = sum[s] / reps;
    const double var = replicates > 1 ? std::max(0.0, (sum_sq[s] - reps * mean * mean) / (reps - 1.0)) : 0.0;
    result.mean_error.push_back(mean);
    result.std_error.push_back(std::sqrt(var / reps));
  }
  result.chosen = std::min_element(result.mean_error.begin(), result.mean_error.end()) -
                  result.mean_error.begin();
  return result;
}

TuneResult tune_lambda(const Vector& y, const LambdaFit& fit, const std::vector<double>& lambdas,
                       Index replicates, double alpha, double sigma_hat, std::uint64_t seed) {
  std::vector<Setting> settings;
  for (double l : lambdas) settings.push_back({l, 1.0});
  return tune_settings(
      y, [&](const Vector& data, const Setting& s) { return fit(data, s.lambda); }, settings,
      replicates, alpha, sigma_hat, seed);
}

std::vector<double> geometric_grid(double lo, double hi, Index count) {
  if (count < 1 || !(lo > 0.0) || !(hi >= lo)) throw DimensionError("invalid geometric grid");
  std::vector<double> out;
  if (count == 1) return {lo};
  const double ratio = std::log(hi / lo) / static_cast<double>(count - 1);
  for (Index k = 0; k < count; ++k) out.push_back(lo * std::exp(ratio * static_cast<double>(k)));
  out.back() = hi;
  return out;
}

std::vector<std::string> known_methods() {
  return {"identity", "oracle", "l0", "w", "exact-chain", "tv-chain", "tv-relaxed"};
}

Method make_method(const std::string& name, std::shared_ptr<const Graph> g, MethodOptions options) {
  Method m;
  m.name = name;
  const double delta = options.delta;
  const double tau = options.tau;
  if (name == "identity") {
    m.tunable = false;
    m.fit = [](const Vector& data, const Setting&) { return data; };
  } else if (name == "oracle") {
    if (!options.truth) throw DimensionError("the oracle method needs the true signal");
    m.tunable = false;
    m.fit = [truth = *options.truth](const Vector&, const Setting&) { return truth; };
  } else if (name == "l0" || name == "w") {
    EdgeWeighting weights = EdgeWeighting::unit(*g);
    if (name == "w") weights = options.weights ? *options.weights : effective_resistances(*g);
    require_aligned(*g, weights);
    m.fit = [g, weights, delta, tau](const Vector& data, const Setting& s) {
      return denoise(make_problem(*g, weights, data, s.lambda, delta, tau)).signal.values();
    };
  } else if (name == "exact-chain") {
    m.fit = [g, order = require_chain(*g)](const Vector& data, const Setting& s) {
      return unpermute(exact_l0_chain(permute(data, order), s.lambda).fitted(), order);
    };
  } else if (name == "tv-chain") {
    m.fit = [g, order = require_chain(*g)](const Vector& data, const Setting& s) {
      return unpermute(tv_chain(permute(data, order), s.lambda).mu, order);
    };
  } else if (name == "tv-relaxed") {
    m.fit = [g, order = require_chain(*g)](const Vector& data, const Setting& s) {
      return unpermute(tv_relaxed(permute(data, order), s.lambda, s.mix), order);
    };
  } else {
    throw DimensionError("unknown method '" + name + "'");
  }
  return m;
}

std::vector<Setting> default_settings(const std::string& method, const Graph& g, const Vector& y,
                                      double sigma, Index points) {
  if (method == "identity" || method == "oracle") return {Setting{}};
  std::vector<Setting> out;
  if (method == "l0" || method == "w" || method == "exact-chain") {
    const double log_edges = std::log(std::max<double>(2.0, static_cast<double>(g.num_edges())));
    const double scale = std::max(sigma * sigma, 1e-12) * log_edges;
    for (double l : geometric_grid(1e-3 * scale, 10.0 * scale, points)) out.push_back({l, 1.0});
    return out;
  }
  if (method == "tv-chain" || method == "tv-relaxed") {
    double lmax = tv_lambda_max(permute(y, require_chain(g)));
    if (!(lmax > 0.0)) lmax = 1.0;
    const auto lambdas = geometric_grid(1e-3 * lmax, lmax, points);
    if (method == "tv-chain") {
      for (double l : lambdas) out.push_back({l, 1.0});
    } else {
      for (double l : lambdas)
        for (int k = 0; k <= 10; ++k) out.push_back({l, 0.1 * k});
    }
    return out;
  }
  throw DimensionError("unknown method '" + method + "'");
}

Index default_tuning_replicates(const Graph& g) { return g.num_vertices() <= 10000 ? 20 : 5; }

Graph graph_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("graph spec '" + spec + "' lacks a kind prefix");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "chain") return chain_graph(to_index(arg, "chain length"));
  if (kind == "cycle") return cycle_graph(to_index(arg, "cycle length"));
  if (kind == "complete") return complete_graph(to_index(arg, "clique size"));
  if (kind == "lattice") {
    const auto x = arg.find('x');
    if (x == std::string::npos) throw ParseError("lattice spec must be ROWSxCOLS");
    return lattice_graph(to_index(arg.substr(0, x), "lattice rows"),
                         to_index(arg.substr(x + 1), "lattice columns"));
  }
  if (kind == "tadpole") {
    const auto parts = split(arg, ',');
    if (parts.size() != 2) throw ParseError("tadpole spec must be CHAIN,CLIQUE");
    return tadpole_graph(to_index(parts[0], "chain length"), to_index(parts[1], "clique size"));
  }
  if (kind == "file") return read_edge_list_file(arg).graph;
  throw ParseError("unknown graph kind '" + kind + "'");
}

Vector signal_from_spec(const std::string& spec, const Graph& g) {
  const Index n = g.num_vertices();
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "constant") return Vector::Constant(n, arg.empty() ? 0.0 : to_double(arg, "level"));
  if (kind == "steps") {
    const auto opts = parse_options(arg);
    const Index breaks = opts.count("breaks") ? to_index(opts.at("breaks"), "breaks") : 1;
    const double height = opts.count("height") ? to_double(opts.at("height"), "height") : 1.0;
    if (breaks < 0 || breaks >= n) throw DimensionError("break count must lie in [0, n)");
    Vector out(n);
    for (Index i = 0; i < n; ++i) {
      const Index block = (i * (breaks + 1)) / n;
      out[i] = (block % 2 == 1) ? height : 0.0;
    }
    return out;
  }
  if (kind == "blocks") {
    Vector out(n);
    Index pos = 0;
    for (const auto& piece : split(arg, ',')) {
      const auto x = piece.find('x');
      if (x == std::string::npos) throw ParseError("block '" + piece + "' must be VALUExLENGTH");
      const double value = to_double(piece.substr(0, x), "block value");
      const Index len = to_index(piece.substr(x + 1), "block length");
      if (len < 0 || pos + len > n) throw DimensionError("blocks exceed the vertex count");
      out.segment(pos, len).setConstant(value);
      pos += len;
    }
    if (pos != n) throw DimensionError("blocks cover " + std::to_string(pos) + " of " + std::to_string(n) + " vertices");
    return out;
  }
  if (kind == "epidemic") {
    const auto opts = parse_options(arg);
    EpidemicLevels levels;
    if (opts.count("infected")) levels.infected = to_double(opts.at("infected"), "infected level");
    if (opts.count("healthy")) levels.healthy = to_double(opts.at("healthy"), "healthy level");
    const Index steps = opts.count("T") ? to_index(opts.at("T"), "T") : 1;
    const double p = opts.count("p") ? to_double(opts.at("p"), "p") : 0.5;
    const auto seed = static_cast<std::uint64_t>(opts.count("seed") ? to_index(opts.at("seed"), "seed") : 0);
    return simulate_epidemic(g, steps, p, seed, levels);
  }
  if (kind == "file") {
    Vector out = read_signal_file(arg);
    if (out.size() != n) throw DimensionError("signal file has " + std::to_string(out.size()) + " values for " + std::to_string(n) + " vertices");
    return out;
  }
  throw ParseError("unknown signal kind '" + kind + "'");
}

Index worker_threads(Index requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("L0GRAPH_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<Index>(v);
  }
  return std::max<Index>(1, static_cast<Index>(std::thread::hardware_concurrency()));
}

const ExperimentRow* ExperimentResult::find(const std::string& method, double sigma,
                                            const std::string& mode) const {
  for (const auto& r : rows) {
    if (r.method == method && r.sigma == sigma && r.lambda_mode == mode) return &r;
  }
  return nullptr;
}

std::string ExperimentResult::to_csv() const {
  std::ostringstream out;
  out << "# l0graph experiment\n";
  out << "# seed=" << scenario.seed << '\n';
  out << "# scenario=" << scenario_to_json(scenario) << '\n';
  for (const auto& r : rows) {
    out << "# setting method=" << r.method << " sigma=" << format_real(r.sigma)
        << " mode=" << r.lambda_mode << " lambda=" << format_real(r.setting.lambda)
        << " mix=" << format_real(r.setting.mix) << '\n';
  }
  out << "method,sigma,lambda_mode,mean_stmse,stderr,replicates,seed\n";
  for (const auto& r : rows) {
    out << r.method << ',' << format_real(r.sigma) << ',' << r.lambda_mode << ','
        << format_real(r.mean_stmse) << ',' << format_real(r.std_error) << ',' << r.replicates
        << ',' << r.seed << '\n';
  }
  return out.str();
}

namespace {

struct MeanAndError {
  double mean = 0.0;
  double std_error = 0.0;
};

MeanAndError summarize(const std::vector<double>& xs) {
  MeanAndError out;
  const auto n = static_cast<double>(xs.size());
  out.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.std_error = std::sqrt(ss / (n - 1.0) / n);
  }
  return out;
}

}  // namespace

ExperimentResult run_experiment(const Scenario& sc) {
  if (sc.methods.empty()) throw DimensionError("scenario lists no methods");
  if (sc.replicates < 1) throw DimensionError("replicate count must be at least 1");
  if (sc.sigmas.empty()) throw DimensionError("scenario lists no noise levels");
  for (double s : sc.sigmas) {
    if (!(s > 0.0)) throw DimensionError("noise levels must be positive");
  }
  if (!sc.report_tuned && !sc.report_best) throw DimensionError("scenario reports nothing");

  auto g = std::make_shared<const Graph>(graph_from_spec(sc.graph));
  const Vector mu0 = signal_from_spec(sc.signal, *g);
  const Index n = g->num_vertices();
  const Index threads = worker_threads(sc.threads);
  const Index tuning_reps = sc.tuning_replicates > 0 ? sc.tuning_replicates : default_tuning_replicates(*g);

  MethodOptions options;
  options.delta = sc.delta;
  options.tau = sc.tau;
  options.truth = mu0;
  if (std::find(sc.methods.begin(), sc.methods.end(), "w") != sc.methods.end()) {
    options.weights = effective_resistances(*g);
  }
  std::vector<Method> methods;
  for (const auto& name : sc.methods) methods.push_back(make_method(name, g, options));

  ExperimentResult result;
  result.scenario = sc;
  for (std::size_t si = 0; si < sc.sigmas.size(); ++si) {
    const double sigma = sc.sigmas[si];
    std::vector<Vector> data(static_cast<std::size_t>(sc.replicates));
    for (Index r = 0; r < sc.replicates; ++r) {
      Rng rng = make_rng(sc.seed, {kNoise, si, static_cast<std::uint64_t>(r)});
      data[static_cast<std::size_t>(r)] = mu0 + gaussian_noise(n, sigma, rng);
    }

    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      const Method& method = methods[mi];
      const auto settings = default_settings(method.name, *g, data.front(), sigma, sc.grid_points);
      const std::size_t k = settings.size();
      const bool tune = sc.report_tuned && method.tunable && k > 1;
      // errors[r][s]; NaN marks settings that were not evaluated.
      std::vector<std::vector<double>> errors(static_cast<std::size_t>(sc.replicates),
                                              std::vector<double>(k, std::nan("")));
      std::vector<Index> chosen(static_cast<std::size_t>(sc.replicates), 0);

      parallel_for(sc.replicates, threads, [&](Index r) {
        const auto ru = static_cast<std::size_t>(r);
        const Vector& y = data[ru];
        if (tune) {
          const double sigma_hat = estimate_sigma(y, *g);
          chosen[ru] = tune_settings(y, method.fit, settings, tuning_reps, sc.alpha, sigma_hat,
                                     sc.seed ^ (0x9E3779B97F4A7C15ULL * (si * 131 + mi * 7 + 1) + static_cast<std::uint64_t>(r)))
                           .chosen;
        }
        for (std::size_t s = 0; s < k; ++s) {
          if (!sc.report_best && static_cast<Index>(s) != chosen[ru]) continue;
          errors[ru][s] = st_mse(method.fit(y, settings[s]), mu0, sigma);
        }
      });

      if (sc.report_tuned) {
        std::vector<double> tuned;
        std::map<Index, Index> votes;
        for (Index r = 0; r < sc.replicates; ++r) {
          tuned.push_back(errors[static_cast<std::size_t>(r)][static_cast<std::size_t>(chosen[static_cast<std::size_t>(r)])]);
          ++votes[chosen[static_cast<std::size_t>(r)]];
        }
        const auto summary = summarize(tuned);
        const auto mode = std::max_element(votes.begin(), votes.end(), [](const auto& a, const auto& b) {
                            return a.second < b.second;
                          })->first;
        result.rows.push_back({method.name, sigma, "tuned", summary.mean, summary.std_error,
                               sc.replicates, sc.seed, settings[static_cast<std::size_t>(mode)]});
      }
      if (sc.report_best) {
        std::size_t best = 0;
        MeanAndError best_summary;
        for (std::size_t s = 0; s < k; ++s) {
          std::vector<double> column;
          for (const auto& row : errors) column.push_back(row[s]);
          const auto summary = summarize(column);
          if (s == 0 || summary.mean < best_summary.mean) {
            best = s;
            best_summary = summary;
          }
        }
        result.rows.push_back({method.name, sigma, "best", best_summary.mean, best_summary.std_error,
                               sc.replicates, sc.seed, settings[best]});
      }
    }
  }
  return result;
}

Scenario scenario_from_json(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("scenario must be a JSON object");
  Scenario sc;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "graph") sc.graph = value.get<std::string>();
      else if (key == "signal") sc.signal = value.get<std::string>();
      else if (key == "sigmas" || key == "sigma") {
        sc.sigmas = value.is_array() ? value.get<std::vector<double>>() : std::vector<double>{value.get<double>()};
      } else if (key == "replicates") sc.replicates = value.get<Index>();
      else if (key == "seed") sc.seed = value.get<std::uint64_t>();
      else if (key == "methods") sc.methods = value.get<std::vector<std::string>>();
      else if (key == "delta") sc.delta = value.get<double>();
      else if (key == "tau") sc.tau = value.get<double>();
      else if (key == "tuning_replicates") sc.tuning_replicates = value.get<Index>();
      else if (key == "alpha") sc.alpha = value.get<double>();
      else if (key == "grid_points") sc.grid_points = value.get<Index>();
      else if (key == "report_tuned") sc.report_tuned = value.get<bool>();
      else if (key == "report_best") sc.report_best = value.get<bool>();
      else if (key == "threads") sc.threads = value.get<Index>();
      else throw ParseError("unknown scenario key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad scenario value: ") + e.what());
  }
  return sc;
}

std::string scenario_to_json(const Scenario& sc) {
  nlohmann::json doc{{"graph", sc.graph},
                     {"signal", sc.signal},
                     {"sigmas", sc.sigmas},
                     {"replicates", sc.replicates},
                     {"seed", sc.seed},
                     {"methods", sc.methods},
                     {"delta", sc.delta},
                     {"tau", sc.tau},
                     {"tuning_replicates", sc.tuning_replicates},
                     {"alpha", sc.alpha},
                     {"grid_points", sc.grid_points},
                     {"report_tuned", sc.report_tuned},
                     {"report_best", sc.report_best}};
  return doc.dump();
}

}  // namespace l0graph
