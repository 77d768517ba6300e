#pragma once

#include <stdexcept>
#include <string>

namespace ccg {

// Each subclass maps onto one CLI exit code (see tools/ccg.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace ccg
