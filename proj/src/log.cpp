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

#include "flatlim/log.hpp"

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <memory>

namespace flatlim::log {

namespace {

std::shared_ptr<spdlog::logger>& logger() {
  static std::shared_ptr<spdlog::logger> instance = [] {
    auto l = spdlog::stderr_logger_mt("flatlim");
    l->set_pattern("[%l] %v");
    l->set_level(spdlog::level::off);
    return l;
  }();
  return instance;
}

}  // namespace

void configure_from_env() {
  const char* raw = std::getenv("FLATLIM_LOG");
  if (raw == nullptr) return;
  std::string v(raw);
  spdlog::level::level_enum level = spdlog::level::off;
  if (v == "warn" || v == "1") level = spdlog::level::warn;
  if (v == "info" || v == "2") level = spdlog::level::info;
  if (v == "debug" || v == "3") level = spdlog::level::debug;
  if (v == "trace" || v == "4") level = spdlog::level::trace;
  logger()->set_level(level);
}

void warn(const std::string& message) { logger()->warn(message); }
void info(const std::string& message) { logger()->info(message); }
void debug(const std::string& message) { logger()->debug(message); }

}  // namespace flatlim::log
