#ifndef ROOTLIE_ERRORS_HPP
#define ROOTLIE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace rootlie {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or non-canonical input (bad rays, proportional derivations,
/// schema violations). The CLI maps these to exit status 1.
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(what) {}
  ValidationError(const std::string& what, std::vector<std::string> details)
      : Error(what), details_(std::move(details)) {}

  const std::vector<std::string>& details() const noexcept { return details_; }

private:
  std::vector<std::string> details_;
};

/// Vectors of different length were combined.
class DimensionError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// An operation was called outside its domain, e.g. structure of an
/// infinite-dimensional algebra. Also exit status 1.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A state the theory rules out was reached: a cross-check disagreed, an
/// asserted lemma failed, or a termination cap was hit. Exit status 2.
class DefectError : public Error {
public:
  using Error::Error;
};

}  // namespace rootlie

#endif
