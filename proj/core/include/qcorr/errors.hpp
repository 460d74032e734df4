#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

/// A state or channel failed one of its defining invariants
/// (hermiticity, trace, positivity, CPTP completeness, ...).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Shapes or dimensions do not fit together.
class StructuralError : public std::runtime_error {
public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

/// Two routes that must agree numerically disagreed beyond tolerance.
class NumericalConsistencyError : public std::runtime_error {
public:
  explicit NumericalConsistencyError(const std::string& what)
      : std::runtime_error(what) {}
};

/// An instance the operation cannot handle (infinite relative entropy,
/// singular reference state, ...).
class UnsupportedInstanceError : public std::runtime_error {
public:
  explicit UnsupportedInstanceError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Unreadable or unparseable input file.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qcorr
