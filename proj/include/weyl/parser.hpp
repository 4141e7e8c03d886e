#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "weyl/poly.hpp"

namespace weyl {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the operator grammar
///   expr   := ['-'|'+'] term (('+'|'-') term)*
///   term   := factor (('*' factor) | ('/' uint))*
///   factor := atom ('^' uint)?
///   atom   := 'z' uint | 'd' uint | uint | '(' expr ')'
/// Products keep written order and are normal-ordered afterwards.
/// Without `ambient` the variable count is the largest index used (at least 1);
/// with it, larger indices are an error.
WeylElement parse_expression(std::string_view text, std::optional<std::size_t> ambient = std::nullopt);

/// Largest variable index mentioned in `text` (0 if none). Syntax is checked.
std::size_t max_index(std::string_view text);

/// Prints in the same grammar, highest degrevlex term first.
std::string to_string(const WeylElement& a);

/// Symbol-ring printer: z_i and zeta_i.
std::string to_string(const Polynomial& p);

std::string monomial_string(const Monomial& mono, const char* d_name = "d");

}  // namespace weyl
