// Copyright 2026 The Duplex Authors
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

namespace duplex {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Division by zero, zero denominator.
class ArithmeticError : public Error {
public:
    explicit ArithmeticError(const std::string& msg) : Error(msg) {}
};

/// An API precondition was violated (length mismatch, bad pivot entry, ...).
class ContractError : public Error {
public:
    explicit ContractError(const std::string& msg) : Error(msg) {}
};

/// Invalid problem data: ragged matrix, dimension mismatch, unknown name.
class ModelError : public Error {
public:
    explicit ModelError(const std::string& msg) : Error(msg) {}
};

/// Malformed text or JSON input. Message carries line/key context.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// The brute-force oracle refuses instances above its budget.
class OracleError : public Error {
public:
    explicit OracleError(const std::string& msg) : Error(msg) {}
};

} // namespace duplex
