#pragma once

#include <stdexcept>
#include <string>

namespace adsosc {

/// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain where a function is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gamma function evaluated at a non-positive integer.
class GammaPoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series or iteration ran out of its term/iteration budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The 1-z transformation of 2F1 is singular (c-a-b within 1e-8 of an integer).
class DegenerateTransformError : public Error {
 public:
  using Error::Error;
};

/// Physical parameters rejected by validation (non-positive scales, xi out of range, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Energy too close to a bound-state pole of a Green's function.
class PoleProximityError : public Error {
 public:
  PoleProximityError(const std::string& what, int nearest_index, double nearest_energy,
                     double distance)
      : Error(what),
        nearest_index_(nearest_index),
        nearest_energy_(nearest_energy),
        distance_(distance) {}

  int nearest_index() const noexcept { return nearest_index_; }
  /// Physical energy of the nearest pole.
  double nearest_energy() const noexcept { return nearest_energy_; }
  /// |E - E_n| in units of hbar*omega.
  double distance() const noexcept { return distance_; }

 private:
  int nearest_index_;
  double nearest_energy_;
  double distance_;
};

/// Radial Green's function called with r2 <= r1.
class OrderingError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Root bracketing found no sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// Least-squares fit whose residual exceeds the acceptance threshold.
class FitError : public Error {
 public:
  using Error::Error;
};

}  // namespace adsosc
