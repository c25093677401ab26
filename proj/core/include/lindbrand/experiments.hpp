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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lindbrand/errors.hpp"

// Experiment driver: named experiment recipes taking a flat key=value
// config, producing CSV data files plus a JSON run manifest.
//
// Determinism: for a fixed (config, seed) every output file is
// byte-identical across runs and worker counts; the manifest is
// byte-identical except its wall_time_seconds member.  Writes are atomic
// (temp file + rename), and runs are resumed only by rerunning.

namespace lindbrand {

struct ExperimentConfig {
  // Which recipe to run:
  //   rate-scaling        mean rate vs dimension, several random states each
  //   purity-decay        ensemble-mean purity vs time per initial purity
  //   rate-distribution   histogram + KS of per-state mean rates (MC and
  //                       closed-form sampling)
  //   cumulant-table      closed-form distribution summaries vs dimension
  //   ensemble-diagnostics  spectral-law and calibration checks per ensemble
  std::string experiment = "rate-scaling";

  // Jump-operator ensemble: goe | gue | gse | ginoe | ginue | ginse | mixed.
  std::string ensemble = "goe";
  // Mixture parts (used when ensemble = mixed); weights must satisfy
  // w1^2 + w2^2 = 1.
  std::string mixed_first = "goe";
  std::string mixed_second = "ginue";
  double mixed_weight_first = 0.7071067811865476;
  double mixed_weight_second = 0.7071067811865476;
  // Ensembles scanned by ensemble-diagnostics.
  std::vector<std::string> diagnostic_ensembles = {"goe",   "gue",   "gse",
                                                   "ginoe", "ginue", "ginse"};

  // Matrix dimensions scanned (single-entry for fixed-N experiments).
  std::vector<int> dims = {4, 8, 12, 16, 24, 32};
  double sigma = 1.0;
  double gamma_total = 1.0;

  // Monte-Carlo sizes.
  int n_realizations = 500;            // purity-decay ensemble size
  int n_states = 5;                    // random initial states per dimension
  int n_realizations_per_state = 1000; // ensemble draws behind each state
  int n_spectral_samples = 50;         // draws per ensemble-diagnostics row

  // Initial-state purity: pure | uniform | fixed (with purity_value).
  std::string purity_policy = "uniform";
  double purity_value = 1.0;
  // Purity of each curve in purity-decay.
  std::vector<double> purity_values = {1.0, 0.5, 0.125};

  // Jump operators per realization (all with rate gamma_total / n_jumps).
  int n_jumps = 1;

  // Time grid for purity-decay, in units of 1/(gamma_total * sigma^2).
  double t_max = 0.25;
  int n_time_points = 61;
  std::string time_spacing = "linear";  // linear | log

  // Histogram bins for rate-distribution.
  int n_bins = 60;

  std::uint64_t seed = 20260814;
  // 0 => LINDBRAND_WORKERS env var, then hardware concurrency.
  int n_workers = 0;
  std::string output_dir = "out";
};

// Baseline config (the documented defaults above).
ExperimentConfig default_config();

// Bundled figure-ready recipes: fig1, fig2, fig3, fig4, fig-gin.
const std::vector<std::string>& preset_names();
// Throws config_error for an unknown name.
ExperimentConfig preset(const std::string& name);

// Flat key=value parsing ('#' comments, blank lines ignored, later keys
// win).  Unknown keys and malformed values are collected and reported in a
// single config_error.  Starts from `base` so a file can partially override
// a preset.
ExperimentConfig parse_config_text(const std::string& text, const ExperimentConfig& base);
ExperimentConfig load_config_file(const std::string& path, const ExperimentConfig& base);

// Canonical key=value rendering (inverse of parse_config_text; used by
// `presets show` and embedded in the manifest).
std::string config_to_text(const ExperimentConfig& config);

// All semantic diagnostics (empty vector = valid): unknown experiment or
// ensemble names, dimension/parity violations, empty grids, bad purities,
// non-positive sizes, ...
std::vector<std::string> validate_config(const ExperimentConfig& config);

struct RunResult {
  std::vector<std::string> data_files;  // paths of the CSVs written
  std::string manifest_file;            // path of run_manifest.json
  std::string manifest_json;            // its content
};

// Validates, runs the recipe, writes outputs under config.output_dir.
// Throws config_error on invalid config, numerical_error on solver
// failures, std::runtime_error on I/O failures.
RunResult run_experiment(const ExperimentConfig& config);

}  // namespace lindbrand
