#ifndef DZETA_ERRORS_HPP
#define DZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dzeta {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an evaluation point lies on (or within the guard radius of) a
/// singular locus. `locus()` names it, e.g. "pole of order 2 at s=1".
class SingularityError : public Error {
 public:
  SingularityError(std::string locus, const std::string& what)
      : Error(what), locus_(std::move(locus)) {}
  explicit SingularityError(const std::string& locus)
      : SingularityError(locus, "singular point: " + locus) {}

  const std::string& locus() const noexcept { return locus_; }

 private:
  std::string locus_;
};

class PoleError : public SingularityError {
 public:
  using SingularityError::SingularityError;
};

/// The diagonal restriction is undefined at s = 0, -1, -2, ... as a value of
/// the two-variable function; callers should use central_value().
class IndeterminateError : public SingularityError {
 public:
  using SingularityError::SingularityError;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Cancellation consumed more digits than the working-precision budget holds.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// A winding contour passes too close to a zero or pole.
class BoundaryNearZero : public Error {
 public:
  using Error::Error;
};

class NonConvergent : public Error {
 public:
  using Error::Error;
};

class CoverageError : public Error {
 public:
  using Error::Error;
};

class TooFewEntries : public Error {
 public:
  using Error::Error;
};

class DuplicateError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace dzeta

#endif  // DZETA_ERRORS_HPP
