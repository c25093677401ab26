// Copyright 2026 The lindbrand Authors.
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

#include "lindbrand/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lindbrand/concentration.hpp"
#include "lindbrand/decoherence.hpp"
#include "lindbrand/ensembles.hpp"
#include "lindbrand/lindblad.hpp"
#include "lindbrand/parallel.hpp"
#include "lindbrand/states.hpp"
#include "lindbrand/stats.hpp"
#include "lindbrand/version.hpp"

namespace lindbrand {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// Formatting helpers (fixed formats keep output bytes reproducible).

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string fmt_double_full(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Config keys: one table drives parsing, rendering, and unknown-key errors.

struct KeyAccess {
  std::function<void(ExperimentConfig&, const std::string&, std::vector<std::string>&)> set;
  std::function<std::string(const ExperimentConfig&)> get;
};

bool parse_double_value(const std::string& v, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(v, &pos);
    return pos == v.size();
  } catch (const std::exception&) {
    return false;
  }
}

bool parse_int_value(const std::string& v, int& out) {
  try {
    std::size_t pos = 0;
    out = std::stoi(v, &pos);
    return pos == v.size();
  } catch (const std::exception&) {
    return false;
  }
}

bool parse_u64_value(const std::string& v, std::uint64_t& out) {
  try {
    std::size_t pos = 0;
    out = std::stoull(v, &pos);
    return pos == v.size();
  } catch (const std::exception&) {
    return false;
  }
}

KeyAccess string_key(std::string ExperimentConfig::* field) {
  return {[field](ExperimentConfig& c, const std::string& v, std::vector<std::string>&) {
            c.*field = v;
          },
          [field](const ExperimentConfig& c) { return c.*field; }};
}

KeyAccess double_key(double ExperimentConfig::* field, const char* name) {
  return {[field, name](ExperimentConfig& c, const std::string& v,
                        std::vector<std::string>& errors) {
            double parsed = 0.0;
            if (parse_double_value(v, parsed)) {
              c.*field = parsed;
            } else {
              errors.push_back(std::string(name) + ": not a number: '" + v + "'");
            }
          },
          [field](const ExperimentConfig& c) { return fmt_double_full(c.*field); }};
}

KeyAccess int_key(int ExperimentConfig::* field, const char* name) {
  return {[field, name](ExperimentConfig& c, const std::string& v,
                        std::vector<std::string>& errors) {
            int parsed = 0;
            if (parse_int_value(v, parsed)) {
              c.*field = parsed;
            } else {
              errors.push_back(std::string(name) + ": not an integer: '" + v + "'");
            }
          },
          [field](const ExperimentConfig& c) { return std::to_string(c.*field); }};
}

const std::map<std::string, KeyAccess>& key_table() {
  static const std::map<std::string, KeyAccess> table = [] {
    std::map<std::string, KeyAccess> t;
    t["experiment"] = string_key(&ExperimentConfig::experiment);
    t["ensemble"] = string_key(&ExperimentConfig::ensemble);
    t["mixed_first"] = string_key(&ExperimentConfig::mixed_first);
    t["mixed_second"] = string_key(&ExperimentConfig::mixed_second);
    t["mixed_weight_first"] =
        double_key(&ExperimentConfig::mixed_weight_first, "mixed_weight_first");
    t["mixed_weight_second"] =
        double_key(&ExperimentConfig::mixed_weight_second, "mixed_weight_second");
    t["diagnostic_ensembles"] = {
        [](ExperimentConfig& c, const std::string& v, std::vector<std::string>&) {
          c.diagnostic_ensembles = split_list(v);
        },
        [](const ExperimentConfig& c) { return join(c.diagnostic_ensembles, ","); }};
    t["dims"] = {[](ExperimentConfig& c, const std::string& v,
                    std::vector<std::string>& errors) {
                   std::vector<int> dims;
                   for (const auto& item : split_list(v)) {
                     int parsed = 0;
                     if (parse_int_value(item, parsed)) {
                       dims.push_back(parsed);
                     } else {
                       errors.push_back("dims: not an integer: '" + item + "'");
                       return;
                     }
                   }
                   c.dims = dims;
                 },
                 [](const ExperimentConfig& c) {
                   std::vector<std::string> parts;
                   for (int d : c.dims) parts.push_back(std::to_string(d));
                   return join(parts, ",");
                 }};
    t["sigma"] = double_key(&ExperimentConfig::sigma, "sigma");
    t["gamma_total"] = double_key(&ExperimentConfig::gamma_total, "gamma_total");
    t["n_realizations"] = int_key(&ExperimentConfig::n_realizations, "n_realizations");
    t["n_states"] = int_key(&ExperimentConfig::n_states, "n_states");
    t["n_realizations_per_state"] =
        int_key(&ExperimentConfig::n_realizations_per_state, "n_realizations_per_state");
    t["n_spectral_samples"] =
        int_key(&ExperimentConfig::n_spectral_samples, "n_spectral_samples");
    t["purity_policy"] = string_key(&ExperimentConfig::purity_policy);
    t["purity_value"] = double_key(&ExperimentConfig::purity_value, "purity_value");
    t["purity_values"] = {
        [](ExperimentConfig& c, const std::string& v, std::vector<std::string>& errors) {
          std::vector<double> values;
          for (const auto& item : split_list(v)) {
            double parsed = 0.0;
            if (parse_double_value(item, parsed)) {
              values.push_back(parsed);
            } else {
              errors.push_back("purity_values: not a number: '" + item + "'");
              return;
            }
          }
          c.purity_values = values;
        },
        [](const ExperimentConfig& c) {
          std::vector<std::string> parts;
          for (double p : c.purity_values) parts.push_back(fmt_double_full(p));
          return join(parts, ",");
        }};
    t["n_jumps"] = int_key(&ExperimentConfig::n_jumps, "n_jumps");
    t["t_max"] = double_key(&ExperimentConfig::t_max, "t_max");
    t["n_time_points"] = int_key(&ExperimentConfig::n_time_points, "n_time_points");
    t["time_spacing"] = string_key(&ExperimentConfig::time_spacing);
    t["n_bins"] = int_key(&ExperimentConfig::n_bins, "n_bins");
    t["seed"] = {[](ExperimentConfig& c, const std::string& v,
                    std::vector<std::string>& errors) {
                   std::uint64_t parsed = 0;
                   if (parse_u64_value(v, parsed)) {
                     c.seed = parsed;
                   } else {
                     errors.push_back("seed: not a 64-bit unsigned integer: '" + v + "'");
                   }
                 },
                 [](const ExperimentConfig& c) { return std::to_string(c.seed); }};
    t["n_workers"] = int_key(&ExperimentConfig::n_workers, "n_workers");
    t["output_dir"] = string_key(&ExperimentConfig::output_dir);
    return t;
  }();
  return table;
}

// Key order for config_to_text / the manifest (insertion order of the table
// is alphabetical; a curated order reads better).
const std::vector<std::string>& key_order() {
  static const std::vector<std::string> order = {
      "experiment",     "ensemble",       "mixed_first",
      "mixed_second",   "mixed_weight_first", "mixed_weight_second",
      "diagnostic_ensembles", "dims",     "sigma",
      "gamma_total",    "n_realizations", "n_states",
      "n_realizations_per_state", "n_spectral_samples", "purity_policy",
      "purity_value",   "purity_values",  "n_jumps",
      "t_max",          "n_time_points",  "time_spacing",
      "n_bins",         "seed",           "n_workers",
      "output_dir"};
  return order;
}

const std::set<std::string>& known_experiments() {
  static const std::set<std::string> names = {"rate-scaling", "purity-decay",
                                              "rate-distribution", "cumulant-table",
                                              "ensemble-diagnostics"};
  return names;
}

bool is_plain_ensemble(const std::string& name) {
  return parse_ensemble_kind(name).has_value();
}

// Resolves the config's ensemble selection; call only after validation.
AnyEnsembleSpec resolve_ensemble(const ExperimentConfig& config, int dim) {
  if (config.ensemble == "mixed") {
    MixedEnsembleSpec mixed;
    mixed.first = EnsembleSpec{*parse_ensemble_kind(config.mixed_first), dim, config.sigma};
    mixed.second = EnsembleSpec{*parse_ensemble_kind(config.mixed_second), dim, config.sigma};
    mixed.weight_first = config.mixed_weight_first;
    mixed.weight_second = config.mixed_weight_second;
    return mixed;
  }
  return EnsembleSpec{*parse_ensemble_kind(config.ensemble), dim, config.sigma};
}

// Closed-form family of an ensemble selection: the Hermitian Wigner-Dyson
// classes (and mixtures led by one) use the Wigner-Dyson forms, everything
// else the Ginibre forms.
RateFamily family_of(const ExperimentConfig& config) {
  const std::string& leader =
      (config.ensemble == "mixed") ? config.mixed_first : config.ensemble;
  const auto kind = parse_ensemble_kind(leader);
  if (kind.has_value() && is_hermitian_kind(*kind)) return RateFamily::wigner_dyson;
  return RateFamily::ginibre;
}

std::vector<double> make_time_grid(const ExperimentConfig& config) {
  std::vector<double> grid(static_cast<std::size_t>(config.n_time_points));
  const int n = config.n_time_points;
  if (config.time_spacing == "log") {
    // Two decades below t_max, with an exact t = 0 head entry.
    grid[0] = 0.0;
    const double t_min = config.t_max / 100.0;
    for (int i = 1; i < n; ++i) {
      const double frac = static_cast<double>(i - 1) / static_cast<double>(n - 2);
      grid[static_cast<std::size_t>(i)] = t_min * std::pow(config.t_max / t_min, frac);
    }
  } else {
    for (int i = 0; i < n; ++i) {
      grid[static_cast<std::size_t>(i)] =
          config.t_max * static_cast<double>(i) / static_cast<double>(n - 1);
    }
  }
  return grid;
}

// ---------------------------------------------------------------------------
// Atomic output writing.

void atomic_write(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

struct CsvBuilder {
  std::string text;
  std::size_t rows = 0;

  explicit CsvBuilder(const std::vector<std::string>& header) {
    text = join(header, ",") + "\n";
  }
  void row(const std::vector<std::string>& cells) {
    text += join(cells, ",") + "\n";
    ++rows;
  }
};

struct OutputCollector {
  fs::path dir;
  std::vector<std::string> files;
  ordered_json file_entries = ordered_json::array();

  void add_csv(const std::string& name, const CsvBuilder& csv) {
    const fs::path path = dir / name;
    atomic_write(path, csv.text);
    files.push_back(path.string());
    file_entries.push_back({{"path", name}, {"rows", csv.rows}});
  }
  void add_text(const std::string& name, const std::string& content) {
    const fs::path path = dir / name;
    atomic_write(path, content);
    files.push_back(path.string());
    file_entries.push_back({{"path", name}, {"bytes", content.size()}});
  }
};

// ---------------------------------------------------------------------------
// Experiment recipes.  Each fills `summary` and writes its CSVs.

void run_rate_scaling(const ExperimentConfig& config, OutputCollector& out,
                      ordered_json& summary) {
  const RateFamily family = family_of(config);
  const SeedSpec root{config.seed, 0};
  const int workers = resolve_worker_count(config.n_workers);

  struct Row {
    int dim = 0;
    int state_index = 0;
    double p0 = 1.0;
    double mc_mean = 0.0;
    double mc_std_error = 0.0;
    double analytic_mean = 0.0;
    double analytic_limit = 0.0;
  };
  const std::size_t n_rows = config.dims.size() * static_cast<std::size_t>(config.n_states);
  std::vector<Row> rows(n_rows);

  // Row (dim i, state s) owns substream i * n_states + s of the root.
  parallel_for(n_rows, workers, [&](std::size_t r) {
    const std::size_t i = r / static_cast<std::size_t>(config.n_states);
    const int s = static_cast<int>(r % static_cast<std::size_t>(config.n_states));
    const int dim = config.dims[i];
    RandomStream row_stream{substream(root, r)};

    const ComplexVector psi = sample_haar_pure_state(dim, row_stream);
    double p0 = 1.0;
    if (config.purity_policy == "uniform") {
      p0 = draw_uniform_purity(dim, row_stream);
    } else if (config.purity_policy == "fixed") {
      p0 = config.purity_value;
    }
    const DensityMatrix rho0 = purity_family(psi, p0);

    const AnyEnsembleSpec ensemble = resolve_ensemble(config, dim);
    const RateEstimate est = mc_average_rate(
        ensemble, rho0, static_cast<std::size_t>(config.n_realizations_per_state),
        config.gamma_total, substream(row_stream.spec(), 1), /*n_workers=*/1);

    Row row;
    row.dim = dim;
    row.state_index = s;
    row.p0 = p0;
    row.mc_mean = est.mean;
    row.mc_std_error = est.std_error;
    const double unit = config.gamma_total * config.sigma * config.sigma;
    row.analytic_mean = analytic_average_rate(family, dim, unit, p0);
    row.analytic_limit = (dim >= 3) ? analytic_rate_limit(family, dim, unit) : 0.0;
    rows[r] = row;
  });

  CsvBuilder csv({"ensemble", "dim", "state_index", "initial_purity[-]",
                  "mc_mean_rate[Gamma*sigma^2]", "mc_std_error[Gamma*sigma^2]",
                  "n_realizations", "analytic_mean_rate[Gamma*sigma^2]",
                  "pure_state_limit[Gamma*sigma^2]"});
  for (const Row& row : rows) {
    csv.row({config.ensemble, std::to_string(row.dim), std::to_string(row.state_index),
             fmt_double(row.p0), fmt_double(row.mc_mean), fmt_double(row.mc_std_error),
             std::to_string(config.n_realizations_per_state), fmt_double(row.analytic_mean),
             fmt_double(row.analytic_limit)});
  }
  out.add_csv("rate_scaling.csv", csv);

  out.add_text("plot.gp",
               "set datafile separator ','\n"
               "set key left top\n"
               "set xlabel 'dim'\n"
               "set ylabel 'rate [Gamma*sigma^2]'\n"
               "plot 'rate_scaling.csv' every ::1 using 2:5 with points title 'MC states', \\\n"
               "     'rate_scaling.csv' every ::1 using 2:9 with lines title 'pure-state limit'\n");

  summary["n_rows"] = rows.size();
  summary["family"] = family == RateFamily::wigner_dyson ? "wigner_dyson" : "ginibre";
}

void run_purity_decay(const ExperimentConfig& config, OutputCollector& out,
                      ordered_json& summary) {
  const RateFamily family = family_of(config);
  const int dim = config.dims.front();
  const double unit = config.gamma_total * config.sigma * config.sigma;
  const std::vector<double> grid_units = make_time_grid(config);
  const int workers = resolve_worker_count(config.n_workers);
  const SeedSpec root{config.seed, 0};

  CsvBuilder csv({"ensemble", "dim", "initial_purity[-]", "t[1/(Gamma*sigma^2)]",
                  "mean_purity[-]", "purity_std_error[-]",
                  "model_purity[-]", "n_realizations"});

  ordered_json curves = ordered_json::array();
  for (std::size_t c = 0; c < config.purity_values.size(); ++c) {
    const double p0 = config.purity_values[c];
    const double mean_rate = analytic_average_rate(family, dim, unit, p0);
    // Grid in physical time; t_max is stated in units of 1/(Gamma sigma^2).
    std::vector<double> times;
    for (double t : grid_units) times.push_back(t / unit);
    std::vector<double> strict_times(times.begin() + (times.front() == 0.0 ? 1 : 0),
                                     times.end());

    const std::size_t n_real = static_cast<std::size_t>(config.n_realizations);
    std::vector<std::vector<double>> trajectories(n_real);
    const SeedSpec curve_root = substream(root, c);
    parallel_for(n_real, workers, [&](std::size_t r) {
      RandomStream stream{substream(curve_root, r)};
      const AnyEnsembleSpec ensemble = resolve_ensemble(config, dim);
      LindbladModel model;
      model.dim = dim;
      for (int j = 0; j < config.n_jumps; ++j) {
        model.jump_operators.push_back(sample(ensemble, stream));
        model.damping_rates.push_back(config.gamma_total /
                                      static_cast<double>(config.n_jumps));
      }
      const ComplexVector psi = sample_haar_pure_state(dim, stream);
      const DensityMatrix rho0 = purity_family(psi, p0);
      std::vector<double> purities = purity_trajectory(model, rho0, strict_times);
      if (times.front() == 0.0) purities.insert(purities.begin(), rho0.purity());
      trajectories[r] = std::move(purities);
    });

    double max_rel_dev = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
      RunningStat stat;
      for (std::size_t r = 0; r < n_real; ++r) stat.add(trajectories[r][i]);
      const double model_purity =
          (p0 - 1.0 / dim) * std::exp(-mean_rate * times[i]) + 1.0 / dim;
      max_rel_dev = std::max(max_rel_dev,
                             std::abs(model_purity - stat.mean()) / stat.mean());
      csv.row({config.ensemble, std::to_string(dim), fmt_double(p0),
               fmt_double(grid_units[i]), fmt_double(stat.mean()),
               fmt_double(n_real >= 2 ? stat.std_error() : 0.0),
               fmt_double(model_purity), std::to_string(n_real)});
    }
    curves.push_back({{"initial_purity", p0},
                      {"model_rate", mean_rate},
                      {"max_rel_deviation_vs_model", max_rel_dev}});
  }
  out.add_csv("purity_decay.csv", csv);
  out.add_text("plot.gp",
               "set datafile separator ','\n"
               "set key right top\n"
               "set xlabel 't [1/(Gamma*sigma^2)]'\n"
               "set ylabel 'mean purity'\n"
               "plot 'purity_decay.csv' every ::1 using 4:5 with points title 'MC', \\\n"
               "     'purity_decay.csv' every ::1 using 4:7 with lines title 'model'\n");
  summary["curves"] = curves;
}

void run_rate_distribution(const ExperimentConfig& config, OutputCollector& out,
                           ordered_json& summary) {
  const int dim = config.dims.front();
  const double unit = config.gamma_total * config.sigma * config.sigma;
  const RateFamily family = family_of(config);
  const RateDistributionModel model = make_rate_distribution(family, dim, unit);
  const SeedSpec root{config.seed, 0};
  const int workers = resolve_worker_count(config.n_workers);

  const EnsembleSpec ensemble{*parse_ensemble_kind(config.ensemble), dim, config.sigma};
  const std::vector<double> mc_sample = sample_rate_distribution(
      ensemble, static_cast<std::size_t>(config.n_states),
      static_cast<std::size_t>(config.n_realizations_per_state), config.gamma_total,
      substream(root, 0), workers);
  const std::vector<double> shortcut_sample = analytic_rate_samples(
      model, static_cast<std::size_t>(config.n_states), substream(root, 1));

  const double top = model.upper_bound();
  const double lo = std::min(0.0, mc_sample.front());
  const double hi = std::max(top, mc_sample.back());
  const auto n_bins = static_cast<std::size_t>(config.n_bins);
  const Histogram mc_hist = Histogram::build(mc_sample, lo, hi, n_bins);
  const Histogram shortcut_hist = Histogram::build(shortcut_sample, lo, hi, n_bins);

  CsvBuilder csv({"bin_left[Gamma*sigma^2]", "bin_right[Gamma*sigma^2]", "mc_count",
                  "mc_density", "closed_form_sample_density", "model_pdf"});
  for (std::size_t b = 0; b < n_bins; ++b) {
    const double left = lo + (hi - lo) * static_cast<double>(b) / static_cast<double>(n_bins);
    const double right =
        lo + (hi - lo) * static_cast<double>(b + 1) / static_cast<double>(n_bins);
    const double mid = 0.5 * (left + right);
    csv.row({fmt_double(left), fmt_double(right), std::to_string(mc_hist.counts[b]),
             fmt_double(mc_hist.density(b)), fmt_double(shortcut_hist.density(b)),
             fmt_double(pdf(model, mid))});
  }
  out.add_csv("rate_distribution.csv", csv);
  out.add_text(
      "plot.gp",
      "set datafile separator ','\n"
      "set key left top\n"
      "set xlabel 'rate [Gamma*sigma^2]'\n"
      "set ylabel 'density'\n"
      "plot 'rate_distribution.csv' every ::1 using 1:4 with boxes title 'MC', \\\n"
      "     'rate_distribution.csv' every ::1 using 1:6 with lines title 'model pdf'\n");

  const auto model_cdf = [&](double x) { return cdf(model, x); };
  RunningStat mc_stat;
  for (double x : mc_sample) mc_stat.add(x);
  const Cumulants kappa = cumulants(model);
  summary["model"] = {{"a_tilde", model.a_tilde},
                      {"upper_bound", top},
                      {"mean", kappa.k1},
                      {"variance", kappa.k2}};
  summary["mc"] = {{"n_states", mc_sample.size()},
                   {"mean", mc_stat.mean()},
                   {"variance", mc_stat.variance()},
                   {"ks_distance", ks_statistic(mc_sample, model_cdf)},
                   {"fraction_above_bound", fraction_above(mc_sample, top)}};
  summary["closed_form_sampling"] = {
      {"n_states", shortcut_sample.size()},
      {"ks_distance", ks_statistic(shortcut_sample, model_cdf)}};
}

void run_cumulant_table(const ExperimentConfig& config, OutputCollector& out,
                        ordered_json& summary) {
  const RateFamily family = family_of(config);
  const double unit = config.gamma_total * config.sigma * config.sigma;
  CsvBuilder csv({"dim", "a_tilde[Gamma*sigma^2]", "upper_bound[Gamma*sigma^2]", "k1", "k2",
                  "k3", "k4", "skewness", "excess_kurtosis"});
  for (int dim : config.dims) {
    const RateDistributionModel model = make_rate_distribution(family, dim, unit);
    const Cumulants kappa = cumulants(model);
    csv.row({std::to_string(dim), fmt_double(model.a_tilde), fmt_double(model.upper_bound()),
             fmt_double(kappa.k1), fmt_double(kappa.k2), fmt_double(kappa.k3),
             fmt_double(kappa.k4), fmt_double(kappa.skewness()),
             fmt_double(kappa.excess_kurtosis())});
  }
  out.add_csv("cumulant_table.csv", csv);
  summary["n_rows"] = config.dims.size();
  summary["family"] = family == RateFamily::wigner_dyson ? "wigner_dyson" : "ginibre";
}

void run_ensemble_diagnostics(const ExperimentConfig& config, OutputCollector& out,
                              ordered_json& summary) {
  const int dim = config.dims.front();
  const SeedSpec root{config.seed, 0};
  const int workers = resolve_worker_count(config.n_workers);

  struct Row {
    std::string name;
    SpectralReport report;
    double second_moment_ratio = 0.0;
  };
  std::vector<Row> rows(config.diagnostic_ensembles.size());
  parallel_for(rows.size(), workers, [&](std::size_t r) {
    const std::string& name = config.diagnostic_ensembles[r];
    const EnsembleSpec spec{*parse_ensemble_kind(name), dim, config.sigma};
    RandomStream stream{substream(root, r)};
    Row row;
    row.name = name;
    row.report = spectral_density_check(spec, config.n_spectral_samples, stream);
    // Independent draws for the trace calibration check.
    RandomStream calib = stream.substream(1);
    RunningStat stat;
    for (int s = 0; s < config.n_spectral_samples; ++s) {
      const ComplexMatrix l = sample(spec, calib);
      stat.add(l.squaredNorm());
    }
    const double expected = config.sigma * config.sigma * static_cast<double>(dim) *
                            static_cast<double>(dim);
    row.second_moment_ratio = stat.mean() / expected;
    rows[r] = row;
  });

  CsvBuilder csv({"ensemble", "dim", "n_samples", "n_eigenvalues", "spectral_ks_distance",
                  "outlier_fraction", "second_moment_ratio"});
  for (const Row& row : rows) {
    csv.row({row.name, std::to_string(dim), std::to_string(config.n_spectral_samples),
             std::to_string(row.report.n_eigenvalues), fmt_double(row.report.ks_distance),
             fmt_double(row.report.outlier_fraction),
             fmt_double(row.second_moment_ratio)});
  }
  out.add_csv("ensemble_diagnostics.csv", csv);
  summary["n_rows"] = rows.size();
}

}  // namespace

// ---------------------------------------------------------------------------
// Public API.

ExperimentConfig default_config() { return ExperimentConfig{}; }

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig1", "fig2", "fig3", "fig4", "fig-gin"};
  return names;
}

ExperimentConfig preset(const std::string& name) {
  ExperimentConfig c;
  if (name == "fig1") {
    // Mean rate vs dimension, five random states per dimension, against the
    // closed-form mean and the pure-state limit.
    c.experiment = "rate-scaling";
    c.ensemble = "goe";
    c.dims = {4, 8, 12, 16, 20, 24, 28, 32, 40, 48};
    c.n_states = 5;
    c.n_realizations_per_state = 1000;
    c.purity_policy = "uniform";
  } else if (name == "fig2") {
    // Ensemble-mean purity decay at several initial purities vs the
    // single-exponential model curve.
    c.experiment = "purity-decay";
    c.ensemble = "goe";
    c.dims = {8};
    c.purity_values = {1.0, 0.5, 0.125};
    c.n_realizations = 500;
    c.t_max = 0.25;
    c.n_time_points = 61;
  } else if (name == "fig3") {
    // Distribution of per-state mean rates: full MC vs closed-form pdf.
    c.experiment = "rate-distribution";
    c.ensemble = "goe";
    c.dims = {30};
    c.n_states = 5000;
    c.n_realizations_per_state = 1000;
    c.n_bins = 60;
  } else if (name == "fig4") {
    // Closed-form cumulant table across dimensions.
    c.experiment = "cumulant-table";
    c.ensemble = "goe";
    c.dims = {3, 10, 30, 100, 300, 1000};
  } else if (name == "fig-gin") {
    // Rate scaling for the non-Hermitian (Ginibre) family.
    c.experiment = "rate-scaling";
    c.ensemble = "ginue";
    c.dims = {4, 8, 12, 16, 20, 24, 28, 32};
    c.n_states = 5;
    c.n_realizations_per_state = 1000;
    c.purity_policy = "uniform";
  } else {
    throw config_error("unknown preset '" + name + "' (available: " +
                       join(preset_names(), ", ") + ")");
  }
  return c;
}

ExperimentConfig parse_config_text(const std::string& text, const ExperimentConfig& base) {
  ExperimentConfig config = base;
  std::vector<std::string> errors;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      errors.push_back("line " + std::to_string(line_no) + ": expected key = value");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = key_table().find(key);
    if (it == key_table().end()) {
      errors.push_back("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
      continue;
    }
    const std::size_t before = errors.size();
    it->second.set(config, value, errors);
    for (std::size_t k = before; k < errors.size(); ++k) {
      errors[k] = "line " + std::to_string(line_no) + ": " + errors[k];
    }
  }
  if (!errors.empty()) {
    throw config_error("config parse failed:\n  " + join(errors, "\n  "));
  }
  return config;
}

ExperimentConfig load_config_file(const std::string& path, const ExperimentConfig& base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot read config file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), base);
}

std::string config_to_text(const ExperimentConfig& config) {
  std::string out;
  for (const std::string& key : key_order()) {
    out += key + " = " + key_table().at(key).get(config) + "\n";
  }
  return out;
}

std::vector<std::string> validate_config(const ExperimentConfig& config) {
  std::vector<std::string> errors;
  const auto check_ensemble_name = [&](const std::string& name, const std::string& where) {
    if (!is_plain_ensemble(name)) {
      errors.push_back(where + ": unknown ensemble '" + name +
                       "' (expected goe|gue|gse|ginoe|ginue|ginse)");
      return false;
    }
    return true;
  };
  const auto check_dim_for = [&](const std::string& name, int dim,
                                 const std::string& where) {
    const auto kind = parse_ensemble_kind(name);
    if (!kind.has_value()) return;
    EnsembleSpec spec{*kind, dim, config.sigma > 0 ? config.sigma : 1.0};
    try {
      spec.validate();
    } catch (const std::invalid_argument& err) {
      errors.push_back(where + ": " + err.what());
    }
  };

  if (!known_experiments().count(config.experiment)) {
    errors.push_back("experiment: unknown recipe '" + config.experiment + "'");
  }
  if (config.dims.empty()) errors.push_back("dims: must not be empty");
  for (int dim : config.dims) {
    if (dim < 2) errors.push_back("dims: dimensions must be >= 2");
  }
  if (!(config.sigma > 0.0)) errors.push_back("sigma: must be > 0");
  if (!(config.gamma_total > 0.0)) errors.push_back("gamma_total: must be > 0");

  if (config.ensemble == "mixed") {
    if (config.experiment == "rate-distribution") {
      errors.push_back("rate-distribution: needs a plain (non-mixed) ensemble");
    }
    if (check_ensemble_name(config.mixed_first, "mixed_first") &&
        check_ensemble_name(config.mixed_second, "mixed_second")) {
      for (int dim : config.dims) {
        check_dim_for(config.mixed_first, dim, "mixed_first");
        check_dim_for(config.mixed_second, dim, "mixed_second");
      }
    }
    const double norm = config.mixed_weight_first * config.mixed_weight_first +
                        config.mixed_weight_second * config.mixed_weight_second;
    if (std::abs(norm - 1.0) > 1e-12) {
      errors.push_back("mixed weights: w1^2 + w2^2 must equal 1 (got " + fmt_double(norm) +
                       ")");
    }
  } else if (check_ensemble_name(config.ensemble, "ensemble")) {
    for (int dim : config.dims) check_dim_for(config.ensemble, dim, "ensemble");
  }

  if (config.experiment == "ensemble-diagnostics") {
    if (config.diagnostic_ensembles.empty()) {
      errors.push_back("diagnostic_ensembles: must not be empty");
    }
    for (const std::string& name : config.diagnostic_ensembles) {
      if (check_ensemble_name(name, "diagnostic_ensembles") && !config.dims.empty()) {
        check_dim_for(name, config.dims.front(), "diagnostic_ensembles");
      }
    }
  }

  if (config.n_realizations < 1) errors.push_back("n_realizations: must be >= 1");
  if (config.n_states < 1) errors.push_back("n_states: must be >= 1");
  if (config.n_realizations_per_state < 1) {
    errors.push_back("n_realizations_per_state: must be >= 1");
  }
  if (config.n_spectral_samples < 1) errors.push_back("n_spectral_samples: must be >= 1");

  if (config.purity_policy != "pure" && config.purity_policy != "uniform" &&
      config.purity_policy != "fixed") {
    errors.push_back("purity_policy: must be pure | uniform | fixed");
  }
  const auto check_purity = [&](double p, const std::string& where) {
    for (int dim : config.dims) {
      if (p < 1.0 / static_cast<double>(dim) - 1e-12 || p > 1.0 + 1e-12) {
        errors.push_back(where + ": purity " + fmt_double(p) + " outside [1/N, 1] for N = " +
                         std::to_string(dim));
      }
    }
  };
  if (config.purity_policy == "fixed") check_purity(config.purity_value, "purity_value");
  if (config.experiment == "purity-decay") {
    if (config.purity_values.empty()) {
      errors.push_back("purity_values: must not be empty");
    }
    for (double p : config.purity_values) check_purity(p, "purity_values");
    if (config.dims.size() != 1) {
      errors.push_back("purity-decay: expects exactly one entry in dims");
    }
  }
  if ((config.experiment == "rate-distribution" ||
       config.experiment == "ensemble-diagnostics") &&
      config.dims.size() != 1) {
    errors.push_back(config.experiment + ": expects exactly one entry in dims");
  }

  if (config.n_jumps < 1) errors.push_back("n_jumps: must be >= 1");
  if (!(config.t_max > 0.0)) errors.push_back("t_max: must be > 0");
  if (config.n_time_points < 2) errors.push_back("n_time_points: must be >= 2");
  if (config.time_spacing != "linear" && config.time_spacing != "log") {
    errors.push_back("time_spacing: must be linear | log");
  }
  if (config.n_bins < 1) errors.push_back("n_bins: must be >= 1");
  if (config.output_dir.empty()) errors.push_back("output_dir: must not be empty");
  return errors;
}

RunResult run_experiment(const ExperimentConfig& config) {
  const std::vector<std::string> errors = validate_config(config);
  if (!errors.empty()) {
    throw config_error("invalid config:\n  " + join(errors, "\n  "));
  }
  const auto start = std::chrono::steady_clock::now();

  OutputCollector out;
  out.dir = config.output_dir;
  fs::create_directories(out.dir);

  ordered_json summary;
  if (config.experiment == "rate-scaling") {
    run_rate_scaling(config, out, summary);
  } else if (config.experiment == "purity-decay") {
    run_purity_decay(config, out, summary);
  } else if (config.experiment == "rate-distribution") {
    run_rate_distribution(config, out, summary);
  } else if (config.experiment == "cumulant-table") {
    run_cumulant_table(config, out, summary);
  } else {
    run_ensemble_diagnostics(config, out, summary);
  }

  const auto end = std::chrono::steady_clock::now();
  const double wall =
      std::chrono::duration_cast<std::chrono::duration<double>>(end - start).count();

  // The manifest is byte-stable except wall_time_seconds.  It deliberately
  // excludes the worker count (which must not influence outputs) and the
  // output directory (which locates the run rather than describing it --
  // the manifest already lives inside that directory).
  ordered_json manifest;
  manifest["tool"] = {{"name", "lindbrand"}, {"version", std::string(kVersion)}};
  manifest["experiment"] = config.experiment;
  ordered_json config_json;
  for (const std::string& key : key_order()) {
    if (key == "n_workers" || key == "output_dir") continue;
    config_json[key] = key_table().at(key).get(config);
  }
  manifest["config"] = config_json;
  manifest["seed"] = config.seed;
  manifest["data_files"] = out.file_entries;
  manifest["summary"] = summary;
  manifest["scale_note"] =
      "desk-scale recipe; headline-quality statistics need 10-100x more samples";
  manifest["wall_time_seconds"] = wall;

  RunResult result;
  result.manifest_json = manifest.dump(2) + "\n";
  const fs::path manifest_path = out.dir / "run_manifest.json";
  atomic_write(manifest_path, result.manifest_json);
  result.manifest_file = manifest_path.string();
  result.data_files = out.files;
  return result;
}

}  // namespace lindbrand
