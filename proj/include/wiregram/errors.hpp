// Copyright 2026 The Wiregram Authors
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

namespace wiregram {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sequential composition of diagrams whose boundaries do not agree.
class BoundaryMismatch : public Error {
 public:
  using Error::Error;
};

/// Tensor contraction over incompatible dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A diagram whose layers do not chain.
class TypeError : public Error {
 public:
  using Error::Error;
};

/// A functor was asked for the image of a box it has no rule for.
class MissingRule : public Error {
 public:
  using Error::Error;
};

/// An expression was evaluated without a value for one of its variables.
class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// A classical-quantum box reached the pure evaluation path, or a box the
/// channel semantics does not support reached the channel path.
class SemanticsError : public Error {
 public:
  using Error::Error;
};

/// A box that the gradient or ZX translation rules do not cover.
class UnsupportedBox : public Error {
 public:
  using Error::Error;
};

/// A ZX graph violating one of its structural invariants.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// A serialized document that does not match the schema. `path` is a JSON
/// pointer to the offending value.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message)
      : Error((path.empty() ? std::string("/") : path) + ": " + message),
        path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace wiregram
