#pragma once

#include <stdexcept>
#include <string>

namespace enriques {

struct NotDynkin : std::invalid_argument {
  explicit NotDynkin(const std::string& w) : std::invalid_argument("not a Dynkin diagram: " + w) {}
};

struct NotAffine : std::invalid_argument {
  explicit NotAffine(const std::string& w) : std::invalid_argument("not an extended Dynkin diagram: " + w) {}
};

struct NonDefinite : std::invalid_argument {
  explicit NonDefinite(const std::string& w) : std::invalid_argument("form is not negative definite: " + w) {}
};

struct InvariantViolation : std::runtime_error {
  explicit InvariantViolation(const std::string& w) : std::runtime_error("invariant violated: " + w) {}
};

struct IncompleteCatalog : std::runtime_error {
  explicit IncompleteCatalog(const std::string& w)
      : std::runtime_error("fibration list is not flagged complete for " + w) {}
};

struct NotDivisible : std::domain_error {
  explicit NotDivisible(const std::string& w) : std::domain_error("not divisible: " + w) {}
};

}  // namespace enriques
