// Copyright 2026 The qsd authors
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

namespace qsd {

/// Base class of all qsd errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mismatched dimensions in a matrix or distribution operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value outside its domain (probability out of [0,1], negative weight, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A matrix whose entries do not form column-stochastic data.
class InvalidMatrixError : public Error {
 public:
  using Error::Error;
};

/// Lexical or syntactic error in a term, with source position.
class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// Ill-typed term (composition mismatch, generator not in the signature, ...).
class TypeCheckError : public Error {
 public:
  using Error::Error;
};

/// A numerically impossible value surfaced (e.g. a clearly negative divergence).
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Base class of derivation-checking failures; carries the node path.
class CheckError : public Error {
 public:
  CheckError(const std::string& path, const std::string& msg)
      : Error(path + ": " + msg), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// A rule used under a theory that does not admit it.
class RuleTheoryError : public CheckError {
 public:
  using CheckError::CheckError;
};

/// Premises or conclusion do not have the shape the rule demands.
class ShapeError : public CheckError {
 public:
  using CheckError::CheckError;
};

/// Stated bound disagrees with the recomputed bound.
class BoundMismatchError : public CheckError {
 public:
  using CheckError::CheckError;
};

/// A SemEq node whose two sides denote different matrices.
class SemEqError : public CheckError {
 public:
  using CheckError::CheckError;
};

/// Malformed derivation file.
class DerivationFormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsd
