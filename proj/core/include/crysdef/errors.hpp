#ifndef CRYSDEF_ERRORS_HPP_
#define CRYSDEF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace crysdef {

// All library failures derive from Error so callers can catch one type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OverflowError : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

// A custom point-group generator that is not of finite order.
struct InvalidPointGroup : Error {
  using Error::Error;
};

struct UnsupportedOrder : Error {
  using Error::Error;
};

// Errors raised while composing a classification carry the name of the
// offending input field, so front ends can point at it.
struct SpecError : Error {
  SpecError(std::string field, const std::string& msg)
      : Error(msg), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

struct UnsupportedSpace : SpecError {
  using SpecError::SpecError;
};

struct InconsistentSpec : SpecError {
  using SpecError::SpecError;
};

struct UnsupportedPair : SpecError {
  using SpecError::SpecError;
};

struct SubgroupNotContained : SpecError {
  using SpecError::SpecError;
};

struct NonEmptyDefectSet : SpecError {
  using SpecError::SpecError;
};

} // namespace crysdef

#endif
