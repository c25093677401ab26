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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lindbrand/errors.hpp"
#include "lindbrand/experiments.hpp"
#include "lindbrand/version.hpp"

namespace {

// Exit codes: 0 success, 2 configuration/usage error, 3 numerical failure.
constexpr int kExitOk = 0;
constexpr int kExitGeneric = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CommonOptions {
  std::optional<std::string> config_path;
  std::optional<std::string> preset_name;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::optional<std::string> output_dir;
};

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path,
                  "key=value config file (applied over the preset, if any)");
  cmd->add_option("--preset", opts.preset_name, "bundled recipe to start from");
  cmd->add_option("--seed", opts.seed, "master seed (overrides config)");
  cmd->add_option("--workers", opts.workers,
                  "worker threads (overrides config and LINDBRAND_WORKERS)");
  cmd->add_option("--out", opts.output_dir, "output directory (overrides config)");
}

// Precedence: built-in defaults < preset < config file < explicit flags.
lindbrand::ExperimentConfig build_config(const CommonOptions& opts) {
  lindbrand::ExperimentConfig config = lindbrand::default_config();
  if (opts.preset_name) config = lindbrand::preset(*opts.preset_name);
  if (opts.config_path) config = lindbrand::load_config_file(*opts.config_path, config);
  if (opts.seed) config.seed = *opts.seed;
  if (opts.workers) config.n_workers = *opts.workers;
  if (opts.output_dir) config.output_dir = *opts.output_dir;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lindbrand: decoherence-rate experiments for random Lindblad dynamics"};
  app.set_version_flag("--version", std::string(lindbrand::kVersion));
  app.require_subcommand(1);

  CommonOptions run_opts;
  CLI::App* run_cmd =
      app.add_subcommand("run", "run an experiment; writes CSV data and a JSON manifest");
  add_common_options(run_cmd, run_opts);

  CommonOptions validate_opts;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check a config and report every problem found");
  add_common_options(validate_cmd, validate_opts);

  CLI::App* presets_cmd = app.add_subcommand("presets", "inspect the bundled recipes");
  presets_cmd->require_subcommand(1);
  CLI::App* list_cmd = presets_cmd->add_subcommand("list", "list preset names");
  std::string show_name;
  CLI::App* show_cmd =
      presets_cmd->add_subcommand("show", "print a preset as a reusable config file");
  show_cmd->add_option("name", show_name, "preset name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (run_cmd->parsed()) {
      const lindbrand::ExperimentConfig config = build_config(run_opts);
      const lindbrand::RunResult result = lindbrand::run_experiment(config);
      for (const std::string& file : result.data_files) {
        std::cout << "wrote " << file << "\n";
      }
      std::cout << "wrote " << result.manifest_file << "\n";
      return kExitOk;
    }
    if (validate_cmd->parsed()) {
      const lindbrand::ExperimentConfig config = build_config(validate_opts);
      const auto errors = lindbrand::validate_config(config);
      if (errors.empty()) {
        std::cout << "configuration valid:\n" << lindbrand::config_to_text(config);
        return kExitOk;
      }
      std::cerr << "configuration invalid:\n";
      for (const std::string& e : errors) std::cerr << "  " << e << "\n";
      return kExitConfig;
    }
    if (list_cmd->parsed()) {
      for (const std::string& name : lindbrand::preset_names()) {
        const lindbrand::ExperimentConfig config = lindbrand::preset(name);
        std::cout << name << ": " << config.experiment << " (" << config.ensemble << ")\n";
      }
      return kExitOk;
    }
    if (show_cmd->parsed()) {
      std::cout << lindbrand::config_to_text(lindbrand::preset(show_name));
      return kExitOk;
    }
    return kExitGeneric;  // unreachable with require_subcommand(1)
  } catch (const lindbrand::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const lindbrand::numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGeneric;
  }
}
