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

#ifndef FFSI_REPORT_HPP
#define FFSI_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ffsi/numeric.hpp"

namespace ffsi {

/// {"num": "...", "den": "..."} with decimal strings.
nlohmann::json rational_json(const Rational& x);

/// Quotes a CSV field per RFC 4180 when it contains a comma, quote or newline.
std::string csv_field(std::string_view text);

/// Joins fields into one CSV record terminated by CRLF.
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace ffsi

#endif  // FFSI_REPORT_HPP
