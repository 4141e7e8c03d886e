#pragma once

#include <set>

#include "weyl/poly.hpp"

namespace weyl {

// Partial algebraic Fourier transform on an index subset S (1-based):
// z_i -> d_i, d_i -> -z_i for i in S, identity elsewhere.
class PartialFourierSpec {
 public:
  PartialFourierSpec(std::size_t m, std::set<std::size_t> indices);

  std::size_t ambient() const { return m_; }
  const std::set<std::size_t>& indices() const { return s_; }
  bool contains(std::size_t index) const { return s_.count(index) != 0; }

 private:
  std::size_t m_;
  std::set<std::size_t> s_;
};

WeylElement partial_fourier(const PartialFourierSpec& spec, const WeylElement& a);

/// z_i -> -z_i, d_i -> -d_i on S; equals partial_fourier applied twice.
WeylElement sign_flip(const PartialFourierSpec& spec, const WeylElement& a);

}  // namespace weyl
