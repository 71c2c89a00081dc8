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

#ifndef FLATLIM_ERROR_HPP
#define FLATLIM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flatlim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by zero, mixed fields, violated preconditions.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), detail_(what), position_(position) {}

  std::size_t position() const { return position_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

/// A configured resource cap was exceeded; `stage` names the computation.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& stage, const std::string& what)
      : Error(stage + ": " + what), stage_(stage) {}

  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace flatlim

#endif  // FLATLIM_ERROR_HPP
