/*
   Copyright 2026 The charcong Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>

#include "charcong/sweep.hpp"

namespace charcong::cli {

enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kVerificationFailed = 2,
  kBudgetRefused = 3,
};

/// Runs the command line; `out` and `err` replace stdout and stderr.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "lo..hi" or a single integer.
std::optional<IntRange> parse_range(std::string_view text);

}  // namespace charcong::cli
