// Copyright 2026 The bks Authors
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

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace bks::cli {

inline constexpr std::string_view kVersion = "0.1.0";

/// Runs one command. args excludes the program name. Returns 0 on success
/// (proof verified, result found), 1 when the answer is negative (colorable,
/// nothing found) and 2 on bad input.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace bks::cli
