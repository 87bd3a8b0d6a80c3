#pragma once

#include <stdexcept>
#include <string>

namespace gwmirror {

// Caller violated an API contract (shape mismatch, parameter out of range).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Mathematically undefined request (inverting a non-unit, exp of a non-nilpotent).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Two routes that must agree did not. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gwmirror
