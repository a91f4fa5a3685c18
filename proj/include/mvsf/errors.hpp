#pragma once

#include <stdexcept>
#include <string>

namespace mvsf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the domain where the requested quantity is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class SingularTransform : public Error {
 public:
  using Error::Error;
};

class DegenerateJacobian : public Error {
 public:
  using Error::Error;
};

class NonconvergedQuadrature : public Error {
 public:
  using Error::Error;
};

/// Acceptance rate of a rejection sampler fell below 0.1%.
class RejectionTooLow : public Error {
 public:
  using Error::Error;
};

/// Spectral norm of a hypergeometric argument is not below 1 for a
/// series with r = s + 1.
class NormTooLarge : public Error {
 public:
  using Error::Error;
};

class NonconvergentTail : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

}  // namespace mvsf
