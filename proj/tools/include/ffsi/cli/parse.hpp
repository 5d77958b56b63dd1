// Copyright 2026 The ffsi Authors
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

#ifndef FFSI_CLI_PARSE_HPP
#define FFSI_CLI_PARSE_HPP

#include <string_view>
#include <vector>

#include "ffsi/lfunc.hpp"
#include "ffsi/variety.hpp"

namespace ffsi::cli {

/// Field elements from flag text. Elements are separated by ';' and their
/// power-basis coordinates by ','. Over a prime field with no ';' present,
/// commas separate elements instead, so "1,0,2" is three elements.
std::vector<FieldElement> parse_elements(std::string_view text, const FieldSpec& field);

/// "re,im;re,im;..." with the imaginary part optional.
std::vector<Complex> parse_alphas(std::string_view text);

struct TargetSpec {
  VarietyTarget kind = VarietyTarget::kX;
  /// Quotient blocks; {n} for quotient:full.
  std::vector<int> blocks;
};

/// "X", "rcone", "quotient:full" or "quotient:n1,n2,...".
TargetSpec parse_target(std::string_view text, int n);

}  // namespace ffsi::cli

#endif  // FFSI_CLI_PARSE_HPP
