// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <stdexcept>
#include <string>

namespace weilcid {

/// Raised when an internal consistency check fails (a logic bug, never a
/// property of the input). The CLI maps it to exit status 2.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

/// Raised when a modulus shares a factor with the characteristic, so the
/// Frobenius matrix is not invertible modulo it.
class NotCoprimeError : public std::domain_error {
 public:
  explicit NotCoprimeError(const std::string& what) : std::domain_error(what) {}
};

inline void ensure(bool cond, const char* what) {
  if (!cond) throw InvariantError(what);
}

}  // namespace weilcid
