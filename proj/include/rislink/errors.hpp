// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace rislink {

/// Input is outside the domain of a propagation, rate or sizing model.
class ModelDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DistanceBelowModelFloor : public ModelDomainError {
 public:
  using ModelDomainError::ModelDomainError;
};

class NonPositiveLinearValue : public ModelDomainError {
 public:
  using ModelDomainError::ModelDomainError;
};

class LengthMismatch : public ModelDomainError {
 public:
  using ModelDomainError::ModelDomainError;
};

class NonPositiveTotalPower : public ModelDomainError {
 public:
  using ModelDomainError::ModelDomainError;
};

/// The brute-force search minimum landed on its upper bound.
class SearchBoundaryHit : public ModelDomainError {
 public:
  using ModelDomainError::ModelDomainError;
};

/// A configuration value is missing, malformed or violates an invariant.
/// The message always names the offending field.
class ConfigInvalid : public std::runtime_error {
 public:
  ConfigInvalid(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rislink
