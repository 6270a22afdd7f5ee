#pragma once

#include <stdexcept>
#include <string>

namespace nomcode {

// Raised when an exhaustive enumeration is asked for a size above its guard.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(const std::string& what, int n, int max_n)
      : std::runtime_error(what + ": n=" + std::to_string(n) +
                           " exceeds bound " + std::to_string(max_n)),
        n_(n),
        max_n_(max_n) {}

  int n() const noexcept { return n_; }
  int max_n() const noexcept { return max_n_; }

 private:
  int n_;
  int max_n_;
};

inline void check_bound(const char* what, int n, int max_n) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative size");
  if (n > max_n) throw BoundExceeded(what, n, max_n);
}

}  // namespace nomcode
