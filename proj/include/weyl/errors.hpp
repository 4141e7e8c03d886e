#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weyl {

class AmbientMismatch : public std::invalid_argument {
 public:
  AmbientMismatch(std::size_t a, std::size_t b)
      : std::invalid_argument("ambient mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class ExponentOverflow : public std::overflow_error {
 public:
  ExponentOverflow() : std::overflow_error("exponent overflow") {}
};

class ZeroElement : public std::domain_error {
 public:
  explicit ZeroElement(const std::string& op) : std::domain_error(op + ": zero element") {}
};

class ImproperIdeal : public std::domain_error {
 public:
  explicit ImproperIdeal(const std::string& op) : std::domain_error(op + ": improper ideal (contains 1)") {}
};

inline void require_same_ambient(std::size_t a, std::size_t b) {
  if (a != b) throw AmbientMismatch(a, b);
}

}  // namespace weyl
