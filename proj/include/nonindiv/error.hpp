#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nonindiv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define NONINDIV_DEFINE_ERROR(Name) \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  }

// qset
NONINDIV_DEFINE_ERROR(IllFormed);  // x = y with an m-atom argument is not a formula
NONINDIV_DEFINE_ERROR(CapacityExceeded);
NONINDIV_DEFINE_ERROR(Overflow);
NONINDIV_DEFINE_ERROR(TooLarge);
NONINDIV_DEFINE_ERROR(NotPure);
NONINDIV_DEFINE_ERROR(InvalidArgument);

// mechanics
NONINDIV_DEFINE_ERROR(OutOfInterval);
NONINDIV_DEFINE_ERROR(UnknownParticle);
NONINDIV_DEFINE_ERROR(EmptySelection);
NONINDIV_DEFINE_ERROR(StepRejected);
NONINDIV_DEFINE_ERROR(IntervalMismatch);

// quantum
NONINDIV_DEFINE_ERROR(DimensionMismatch);
NONINDIV_DEFINE_ERROR(NonUnitDirection);

// cli
NONINDIV_DEFINE_ERROR(ConfigError);
NONINDIV_DEFINE_ERROR(IoError);

#undef NONINDIV_DEFINE_ERROR

/// d(t) of the uniform-field embedding reaches zero inside the interval.
class DegenerateWitness : public Error {
 public:
  DegenerateWitness(const std::string& what, double horizon)
      : Error(what), horizon_(horizon) {}
  /// First time at which the witness separation vanishes.
  double horizon() const noexcept { return horizon_; }

 private:
  double horizon_;
};

/// Two particles came closer than the singularity guard allows.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, std::size_t first, std::size_t second, double time)
      : Error(what), first_(first), second_(second), time_(time) {}
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }
  double time() const noexcept { return time_; }

 private:
  std::size_t first_;
  std::size_t second_;
  double time_;
};

}  // namespace nonindiv
