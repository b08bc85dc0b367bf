#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace paving {

/// An iterative numerical routine failed to reach its tolerance.
/// Carries the last iterate so callers can inspect how far it got.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, std::vector<double> last_iterate)
      : std::runtime_error(what), last_iterate_(std::move(last_iterate)) {}

  const std::vector<double>& last_iterate() const noexcept { return last_iterate_; }

 private:
  std::vector<double> last_iterate_;
};

/// Exhaustive search refused because the instance exceeds the size cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t n, std::size_t cap)
      : std::runtime_error("dimension n = " + std::to_string(n) +
                           " exceeds the brute-force cap (--max-n " + std::to_string(cap) + ")"),
        n_(n),
        cap_(cap) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

/// The input vector has (numerically) zero projection onto range(p).
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace paving
