// Copyright 2026 The noonecp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NOONECP_CLI_HPP
#define NOONECP_CLI_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "noonecp/analytics.hpp"
#include "noonecp/ecp.hpp"

namespace noonecp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double start = 0.01;
  double stop = 0.999;
  int steps = 199;
};

/// Parses "start:stop:steps". Throws UsageError.
GridSpec parse_grid(std::string_view text);

struct Options {
  Protocol protocol = Protocol::kEcp2;
  std::optional<double> alpha_sq;
  int n_photons = 2;
  int rounds = 10;
  double theta = kDefaultTheta;
  double eta = 1.0;
  std::optional<GridSpec> grid;
  std::optional<std::string> out;
};

/// Reads a flat `key = value` file (keys as the long flags without "--";
/// '#' starts a comment). Throws IoError / UsageError.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Applies one key/value pair to `options`. Throws UsageError.
void apply_setting(Options& options, const std::string& key, const std::string& value);

/// Formats with 12 significant digits in the C locale.
std::string format_number(double value);

struct RunRecord {
  ProtocolConfig config;
  Schedule schedule;           // lossless
  Schedule lossy_schedule;     // after the loss model
  std::vector<double> oracle;  // closed-form P_k per round
  double p_total_oracle = 0.0;
  double max_delta = 0.0;
  double wall_time_ms = 0.0;
};

RunRecord make_run_record(const Options& options);
void print_run_summary(const RunRecord& record, std::ostream& os);
/// Per-round CSV; deterministic (no wall time).
std::string run_csv(const RunRecord& record);

std::string sweep_csv(const Options& options);
std::string compare_loss_csv(const Options& options);

/// Writes `content` to options.out, or to `stdout_stream` when unset.
void emit(const Options& options, const std::string& content, std::ostream& stdout_stream);

int cmd_run(const Options& options, std::ostream& out);
int cmd_sweep(const Options& options, std::ostream& out);
int cmd_compare_loss(const Options& options, std::ostream& out);

/// Full command-line entry point: `noonecp <run|sweep|compare-loss> [flags]`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace noonecp::cli

#endif  // NOONECP_CLI_HPP
