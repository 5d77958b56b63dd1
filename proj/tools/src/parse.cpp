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

#include "ffsi/cli/parse.hpp"

#include <charconv>
#include <string>

namespace ffsi::cli {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  text = trim(text);
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw DomainError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

FieldElement parse_element(std::string_view text, const FieldSpec& field) {
  std::vector<std::uint32_t> coords;
  for (auto part : split(text, ',')) coords.push_back(parse_number<std::uint32_t>(part, "field coordinate"));
  if (coords.size() > field.e()) throw DomainError("field element has more than e coordinates");
  for (auto c : coords)
    if (c >= field.p()) throw DomainError("field coordinate must be below p");
  coords.resize(field.e(), 0);
  return field.from_coeffs(coords);
}

}  // namespace

std::vector<FieldElement> parse_elements(std::string_view text, const FieldSpec& field) {
  text = trim(text);
  std::vector<FieldElement> out;
  if (text.empty()) return out;
  const char sep = field.e() == 1 && text.find(';') == std::string_view::npos ? ',' : ';';
  for (auto part : split(text, sep)) out.push_back(parse_element(part, field));
  return out;
}

std::vector<Complex> parse_alphas(std::string_view text) {
  text = trim(text);
  std::vector<Complex> out;
  if (text.empty()) return out;
  for (auto part : split(text, ';')) {
    const auto xy = split(part, ',');
    if (xy.size() > 2) throw DomainError("shift must be re or re,im");
    const double re = parse_number<double>(xy[0], "shift real part");
    const double im = xy.size() == 2 ? parse_number<double>(xy[1], "shift imaginary part") : 0.0;
    out.emplace_back(re, im);
  }
  return out;
}

TargetSpec parse_target(std::string_view text, int n) {
  text = trim(text);
  if (text == "X") return {VarietyTarget::kX, {}};
  if (text == "rcone") return {VarietyTarget::kRCone, {}};
  if (text.starts_with("quotient:")) {
    text.remove_prefix(9);
    if (text == "full") return {VarietyTarget::kQuotient, {n}};
    TargetSpec t{VarietyTarget::kQuotient, {}};
    for (auto part : split(text, ',')) t.blocks.push_back(parse_number<int>(part, "quotient block"));
    return t;
  }
  throw DomainError("unknown target '" + std::string(text) + "'; expected X, rcone or quotient:<blocks|full>");
}

}  // namespace ffsi::cli
