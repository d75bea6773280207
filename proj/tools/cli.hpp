// Copyright 2026 The lealc Authors
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

#ifndef LEALC_TOOLS_CLI_HPP_
#define LEALC_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace lealc::cli {

// Exit codes.
inline constexpr int kConsistent = 0;
inline constexpr int kInconsistent = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kTboxRejected = 3;
inline constexpr int kInternalError = 4;

struct CheckResult {
  int exit_code = kUsageError;
  std::string verdict_line;  // or the diagnostic
  std::size_t steps = 0;
  std::size_t terms = 0;
  double wall_ms = 0;
};

struct CheckFlags {
  std::string model_out;
  std::string trace_out;
  bool stats = false;
  bool unravel_only = false;
  std::size_t oracle_max = 0;
  std::size_t max_steps = 0;
};

CheckResult check_file(const std::string& path, const CheckFlags& flags, std::ostream& out, std::ostream& err);

struct BatchRow {
  std::string file;
  std::string verdict;  // consistent | inconsistent | error
  std::size_t steps = 0;
  std::size_t terms = 0;
  double wall_ms = 0;
};

std::vector<BatchRow> batch(const std::vector<std::string>& paths, unsigned jobs);
void print_batch(const std::vector<BatchRow>& rows, std::ostream& out);

// lealc check FILE [...] | lealc batch FILE... [-j N]
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lealc::cli

#endif  // LEALC_TOOLS_CLI_HPP_
