#include "weyl/fourier.hpp"

#include <stdexcept>

namespace weyl {

PartialFourierSpec::PartialFourierSpec(std::size_t m, std::set<std::size_t> indices) : m_(m), s_(std::move(indices)) {
  for (std::size_t i : s_)
    if (i < 1 || i > m) throw std::out_of_range("fourier index " + std::to_string(i) + " out of range");
}

namespace {

template <class ZImage, class DImage>
WeylElement substitute(const PartialFourierSpec& spec, const WeylElement& a, ZImage z_image, DImage d_image) {
  require_same_ambient(spec.ambient(), a.ambient());
  const std::size_t m = a.ambient();
  WeylElement out(m);
  for (const auto& [mono, c] : a.terms()) {
    // z^a d^b: all z factors first, then all d factors, in index order.
    WeylElement prod(m, c);
    for (std::size_t i = 0; i < m; ++i)
      if (mono.z(i) > 0) prod = prod * pow(z_image(i + 1), static_cast<unsigned>(mono.z(i)));
    for (std::size_t i = 0; i < m; ++i)
      if (mono.d(i) > 0) prod = prod * pow(d_image(i + 1), static_cast<unsigned>(mono.d(i)));
    out += prod;
  }
  return out;
}

}  // namespace

WeylElement partial_fourier(const PartialFourierSpec& spec, const WeylElement& a) {
  const std::size_t m = spec.ambient();
  return substitute(
      spec, a,
      [&](std::size_t i) { return spec.contains(i) ? WeylElement::d(m, i) : WeylElement::z(m, i); },
      [&](std::size_t i) { return spec.contains(i) ? -WeylElement::z(m, i) : WeylElement::d(m, i); });
}

WeylElement sign_flip(const PartialFourierSpec& spec, const WeylElement& a) {
  const std::size_t m = spec.ambient();
  return substitute(
      spec, a, [&](std::size_t i) { return spec.contains(i) ? -WeylElement::z(m, i) : WeylElement::z(m, i); },
      [&](std::size_t i) { return spec.contains(i) ? -WeylElement::d(m, i) : WeylElement::d(m, i); });
}

}  // namespace weyl
