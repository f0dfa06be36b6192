#pragma once

#include <stdexcept>
#include <string>

namespace costless {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoTierFitsError : public Error {
 public:
  using Error::Error;
};

class TierTooSmallError : public Error {
 public:
  using Error::Error;
};

class MissingCloudProfileError : public Error {
 public:
  using Error::Error;
};

class MissingProfileError : public Error {
 public:
  using Error::Error;
};

class CyclicWorkflowError : public Error {
 public:
  using Error::Error;
};

class UnsupportedStateError : public Error {
 public:
  using Error::Error;
};

class UnreachableStateError : public Error {
 public:
  using Error::Error;
};

class InvalidWorkflowError : public Error {
 public:
  using Error::Error;
};

class InvalidPlanError : public Error {
 public:
  using Error::Error;
};

class EmptyGraphError : public Error {
 public:
  using Error::Error;
};

class NoPathError : public Error {
 public:
  using Error::Error;
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class InvalidInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace costless
