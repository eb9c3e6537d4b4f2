/*
 * Copyright 2026 The npstrata Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace npstrata {

// Base class for every error raised by the library. The CLI maps these to
// exit code 3; anything else escaping is a usage problem or a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DatumError : public Error {
 public:
  enum class Reason { kShape, kZeroEntry, kGcd, kSum };

  DatumError(Reason reason, const std::string& what)
      : Error(what), reason_(reason) {}

  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

// Input is well formed but outside the domain of an operation (non-unit
// residue, odd n for the inert local factor, non-special datum, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An internal cross-check failed. Seeing one of these means a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace npstrata
