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


#pragma once

#include <stdexcept>
#include <string>

namespace fockmix {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A photon number (or a number-conserving sector) does not fit the mode cutoffs.
class CutoffExceeded : public Error {
 public:
  using Error::Error;
};

/// Two states with different cutoffs were combined.
class CutoffMismatch : public Error {
 public:
  using Error::Error;
};

/// The matrix-exponential cross-check was asked for a sector above its limit.
class OracleLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// The state lost too much probability to truncation to be sampled.
class TruncationTooLossy : public Error {
 public:
  using Error::Error;
};

/// Out-of-domain parameter (negative angle, non-finite amplitude, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace fockmix
