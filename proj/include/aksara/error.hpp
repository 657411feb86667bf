// Copyright 2026 The Aksarakit Authors
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

#ifndef AKSARA_ERROR_HPP_
#define AKSARA_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace aksara {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration, rule files, arguments, or unusable resources.
/// The CLI maps this category to exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Unreadable or unwritable files. Counts as a validation failure.
class IoError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Malformed or out-of-range data encountered while processing a corpus.
/// The CLI maps this category to exit code 2.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace aksara

#endif  // AKSARA_ERROR_HPP_
