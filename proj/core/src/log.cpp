// Copyright 2026 The fockmix Authors
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


#include "fockmix/log.hpp"

#include <cstdlib>
#include <string>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

namespace fockmix {

namespace {

std::shared_ptr<spdlog::logger> make_logger() {
  auto log = spdlog::stderr_color_mt("fockmix");
  auto level = spdlog::level::warn;
  if (const char* env = std::getenv("FOCKMIX_LOG"); env != nullptr && *env != '\0') {
    level = spdlog::level::from_str(env);
  }
  log->set_level(level);
  log->set_pattern("[%l] %v");
  return log;
}

}  // namespace

spdlog::logger& logger() {
  static const std::shared_ptr<spdlog::logger> instance = make_logger();
  return *instance;
}

}  // namespace fockmix
