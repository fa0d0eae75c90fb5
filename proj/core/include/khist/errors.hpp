/*
 * Copyright 2026 The khist Authors
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

namespace khist {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller passed a parameter outside its documented range (CLI exit code 1).
class UsageError : public Error {
public:
    using Error::Error;
};

/// The input data cannot support the request (CLI exit code 2).
class DataError : public Error {
public:
    using Error::Error;
};

/// Malformed input text; the message names the offending line.
class ParseError : public DataError {
public:
    using DataError::DataError;
};

/// Metrics were requested on a dataset without class labels.
class MissingLabelsError : public DataError {
public:
    using DataError::DataError;
};

/// Internal bookkeeping violated an invariant. Not recoverable.
class IntegrityError : public Error {
public:
    using Error::Error;
};

/// An exact rational result does not fit in 64-bit integers.
class OverflowError : public Error {
public:
    using Error::Error;
};

}  // namespace khist
