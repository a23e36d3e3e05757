// Copyright 2026 The growthlab Authors
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
#include <iosfwd>
#include <string>
#include <vector>

namespace growthlab::cli {

inline constexpr const char* kVersion = "growth-lab/1";

enum class Command { kGrowth, kAlexander, kSpectra, kWitness, kPcc, kRewrite };

enum class Format { kTsv, kJson, kText };

struct RunConfig {
  Command command = Command::kGrowth;
  /// Path to a group JSON file, or the JSON text itself when it starts with '{'.
  std::string group;
  std::string gens;
  std::string relators;
  std::string relator;
  std::string matrix;
  std::string poly;
  std::uint64_t radius = 0;
  std::uint64_t budget = 50'000'000;
  std::int64_t max_period = 10;
  std::uint64_t max_length = 6;
  double u = 3.0;
  unsigned d = 1;
  unsigned threads = 1;
  std::string out;
  Format format = Format::kText;
};

enum ExitCode : int { kOk = 0, kValidation = 2, kBudget = 3 };

/// Executes one command. Results go to `out` (or to config.out when set);
/// failures print a single `ERR <code> <message>` line to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace growthlab::cli
