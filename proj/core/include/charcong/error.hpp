/*
   Copyright 2026 The charcong Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace charcong {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An argument outside the operation's domain (bad modulus, length mismatch).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Unit testing or inversion requested on Z[zeta] without a quotient.
class UnsupportedRing : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// Galois action requested with an exponent not coprime to the root order.
class InvalidAutomorphism : public Error {
 public:
  using Error::Error;
};

/// A triplet operation that would break its contract (bad indices, non-unit dilation).
class InvalidOperation : public Error {
 public:
  InvalidOperation(std::string reason, const std::string& what)
      : Error(what), reason_(std::move(reason)) {}

  /// Machine-readable reason code, e.g. "non_unit", "bad_index".
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

class NothingToUndo : public Error {
 public:
  NothingToUndo() : Error("operation log is empty") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace charcong
