// Copyright 2026 The rrfair Authors.
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

#ifndef RRFAIR_ERRORS_H_
#define RRFAIR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace rrfair {

// Bad caller input: out-of-range goods, malformed rankings, fixture
// parameters that violate their constraints, non-partitions.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive computation was asked to run beyond its hard size limit.
// Never silently truncated.
class SizeGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance documents, rationals, or profile files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A generator could not produce a valuation passing its class certificate.
class CertificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rrfair

#endif  // RRFAIR_ERRORS_H_
