#pragma once

#include <stdexcept>
#include <string>

namespace permclt {

/// Raised when an argument violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a size exceeds a configured enumeration or computation cap.
class CapExceeded : public std::length_error {
 public:
  CapExceeded(const std::string& what, int n, int cap)
      : std::length_error(what + ": n=" + std::to_string(n) +
                          " exceeds cap " + std::to_string(cap)),
        n_(n),
        cap_(cap) {}

  int n() const noexcept { return n_; }
  int cap() const noexcept { return cap_; }

 private:
  int n_;
  int cap_;
};

}  // namespace permclt
