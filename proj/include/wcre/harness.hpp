// Copyright 2026 The wcre Authors
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

#ifndef WCRE_HARNESS_HPP_
#define WCRE_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wcre/goftest.hpp"
#include "wcre/sample.hpp"

namespace wcre {

enum class Command { kGof, kEgf, kReconstruct, kPower, kSize, kTables, kSample };
enum class OutputFormat { kDefault, kJson, kCsv, kText };
enum class MethodSelection { kMonteCarlo, kBootstrap, kAsymptotic, kAll };

std::string_view to_string(Command c) noexcept;
std::string_view to_string(OutputFormat f) noexcept;
std::string_view to_string(MethodSelection m) noexcept;

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitDivergence = 4;

struct RunConfig {
  Command command = Command::kGof;
  std::optional<std::string> input;
  std::optional<std::string> dist;
  double s = 1.0;
  std::optional<double> t;
  double alpha = 0.05;
  std::size_t reps = 2000;       // outer replicates for studies
  std::size_t boot_reps = 2000;  // bootstrap replicates for gof
  std::size_t crit_reps = 2000;  // null replicates behind Monte Carlo critical values
  std::optional<std::uint64_t> seed;
  MethodSelection method = MethodSelection::kAll;
  OutputFormat output = OutputFormat::kDefault;
  std::optional<std::string> out_dir;
  std::vector<std::size_t> n;  // sample sizes (studies) or sample length (sample)
  GofStatistic test = GofStatistic::kDelta;
  Tail tail = Tail::kUpper;
  unsigned workers = 0;
  bool table = false;  // egf: closed forms against quadrature
};

// One value per line or comma/whitespace separated; '#' starts a comment
// line. Throws DataError naming the line on a malformed or negative token
// and on input without any value; missing files are DataError too.
Sample parse_dataset(const std::string& path);
Sample parse_dataset_text(std::string_view text, std::string_view origin = "<input>");

// Runs one command, writing the report to out. Errors propagate as
// exceptions; see exit_status_for.
void execute(RunConfig config, std::ostream& out);

// Exit status for the exception currently being handled.
int exit_status_for_current_exception(std::ostream& err);

// Full command-line entry point: parses argv, executes, maps failures to
// exit statuses and messages on err.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wcre

#endif  // WCRE_HARNESS_HPP_
