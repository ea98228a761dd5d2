#pragma once

#include <stdexcept>
#include <string>

namespace girth5 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPrimePower : Error {
  using Error::Error;
};
struct UnsupportedOrder : Error {
  using Error::Error;
};
struct MalformedGraph6 : Error {
  using Error::Error;
};
struct SameVertex : Error {
  using Error::Error;
};
struct EdgeExists : Error {
  using Error::Error;
};
struct NotBipartitioned : Error {
  using Error::Error;
};
struct LimitExceeded : Error {
  using Error::Error;
};
struct NoPivot : Error {
  using Error::Error;
};
struct IsolatedPivot : Error {
  using Error::Error;
};
struct DisjointnessViolation : Error {
  using Error::Error;
};
struct FreenessViolation : Error {
  using Error::Error;
};
struct NotApplicable : Error {
  using Error::Error;
};
struct InputHasShortCycle : Error {
  using Error::Error;
};
struct SubsetOutOfRange : Error {
  using Error::Error;
};
struct SubsetTooLarge : Error {
  using Error::Error;
};
struct MismatchAgainstTable : Error {
  using Error::Error;
};

}  // namespace girth5
