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

#ifndef FLATLIM_LOG_HPP
#define FLATLIM_LOG_HPP

#include <string>

namespace flatlim::log {

/// Reads FLATLIM_LOG (off, warn, info, debug, trace; or 0-4). Logging goes
/// to stderr and is off by default.
void configure_from_env();

void warn(const std::string& message);
void info(const std::string& message);
void debug(const std::string& message);

}  // namespace flatlim::log

#endif  // FLATLIM_LOG_HPP
