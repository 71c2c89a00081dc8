// Copyright 2026 The flatlim Authors
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

#ifndef FLATLIM_REPORT_HPP
#define FLATLIM_REPORT_HPP

#include <string>
#include <string_view>

#include "flatlim/certify.hpp"

namespace flatlim {

inline constexpr const char* kReportSchema = "1";

/// "QQ" or "ZZ/<p>" back to a Field.
Field field_from_name(std::string_view name);

/// Deterministic JSON (fixed key order, two-space indent, trailing newline).
std::string report_to_json(const CertificationReport& report);
/// Inverse of report_to_json; throws ParseError on malformed input.
CertificationReport report_from_json(std::string_view text);

/// Human-readable summary.
std::string report_to_text(const CertificationReport& report);

}  // namespace flatlim

#endif  // FLATLIM_REPORT_HPP
