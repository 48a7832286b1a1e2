// Copyright 2026 The wmfatigue Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace wmf {

// Base class for all errors raised by the library. Messages are meant to be
// shown to the user as-is.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

// Malformed or unreadable input files.
class LoadError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration keys or values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace wmf
