#pragma once

#include <stdexcept>
#include <string>

namespace eurkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class HermiticityError : public Error {
 public:
  using Error::Error;
};

class PsdError : public Error {
 public:
  using Error::Error;
};

class MubVerificationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Argument outside its documented domain. Carries the offending value when
// one number explains the rejection (e.g. the negative Bell eigenvalue).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what, double offending_value = 0.0)
      : Error(what), offending_value_(offending_value) {}

  double offending_value() const noexcept { return offending_value_; }

 private:
  double offending_value_;
};

}  // namespace eurkit
