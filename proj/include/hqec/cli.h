// Copyright 2026 The hybridqec Authors
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

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hqec {

/// Exit codes: the check passed, the check failed, or the command could not
/// run (usage, parse, capacity).
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// `RESULT ok=<bool> key=value ...`, the last line every command prints.
struct ResultLine {
  bool ok = false;
  std::vector<std::pair<std::string, std::string>> fields;

  std::optional<std::string> get(std::string_view key) const;
  std::string str() const;
};

/// Throws ParseError on anything that is not a RESULT line.
ResultLine parse_result_line(std::string_view line);

/// 12 significant digits; integral values keep a trailing ".0".
std::string format_result_double(double v);

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hqec
