// Copyright 2026 The t-rot-opt Authors
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

#ifndef TROT_CLI_H
#define TROT_CLI_H

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "trot/optimizer.h"

namespace trot::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Qubit cap for the dense check: T_ROT_OPT_VERIFY_CAP when set, else `fallback`.
std::size_t verify_cap_from_env(std::size_t fallback = 6);

struct BenchRow {
  std::string name;
  /// Empty on success, otherwise the reason the file was skipped.
  std::string error;
  std::size_t cnot_before = 0;
  std::size_t t_before = 0;
  std::size_t cnot_after = 0;
  std::size_t t_after = 0;
  double reduction_percent = 0.0;
  double wall_time_ms = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;  // sorted by name
  double average_reduction = 0.0;
  double max_reduction = 0.0;

  /// Header, one row per file, then "average" and "maximum" rows.
  std::string to_csv() const;
};

/// Optimizes every *.qc file under `dir` (non-recursive), `threads` files at a time.
BenchReport run_bench(const std::filesystem::path &dir, OutputMode mode = OutputMode::kInPlace,
                      std::size_t threads = 0);

/// Entry point for the t_rot_opt tool. Returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace trot::cli

#endif
