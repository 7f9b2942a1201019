#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

/// Base class for all library errors.
class error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A point lies outside the domain it was claimed to belong to.
class domain_error : public error {
  using error::error;
};

/// Invalid structural parameters (negative sizes, m1 > m2, ...).
class parameter_error : public error {
  using error::error;
};

/// Operation requested for a domain type it does not support.
class unsupported_error : public error {
  using error::error;
};

/// A paper-level constraint is violated; the message names the constraint.
class constraint_error : public error {
  using error::error;
};

/// A sampled function produced NaN/Inf or could not be evaluated.
class evaluation_error : public error {
  using error::error;
};

/// A quadrature rule is too coarse or internally inconsistent.
class quadrature_error : public error {
  using error::error;
};

}  // namespace bergman
