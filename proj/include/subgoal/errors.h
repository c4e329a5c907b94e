// Copyright 2026 The Subgoal Authors.
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

#ifndef SUBGOAL_ERRORS_H_
#define SUBGOAL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace subgoal {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownDomain : public Error {
 public:
  explicit UnknownDomain(const std::string &domain)
      : Error("unknown domain: " + domain) {}
};

class UnknownSlot : public Error {
 public:
  UnknownSlot(const std::string &domain, const std::string &slot)
      : Error("unknown slot for domain " + domain + ": " + slot) {}
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class NotInGoal : public Error {
 public:
  explicit NotInGoal(const std::string &domain)
      : Error("domain not in user goal: " + domain) {}
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class MissingGoal : public Error {
 public:
  explicit MissingGoal(const std::string &goal_id)
      : Error("unresolved goal id: " + goal_id) {}
};

class IncompleteSamples : public Error {
 public:
  using Error::Error;
};

// File system failures on outputs.
class IoError : public Error {
 public:
  using Error::Error;
};

// Input that violates a documented schema or invariant (corpus files,
// predictions, flags).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace subgoal

#endif  // SUBGOAL_ERRORS_H_
