#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "weyl/monomial.hpp"

namespace weyl {

enum class OrderKind { degrevlex, deglex, lex };

// Monomial order on the 2m exponent slots. `permutation[k]` names the slot
// treated as the k-th variable; the default is the identity z1..zm, d1..dm.
class TermOrder {
 public:
  TermOrder() = default;
  explicit TermOrder(OrderKind kind, std::vector<std::size_t> permutation = {})
      : kind_(kind), perm_(std::move(permutation)) {}

  OrderKind kind() const { return kind_; }
  bool degree_compatible() const { return kind_ != OrderKind::lex; }
  const std::vector<std::size_t>& permutation() const { return perm_; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (kind_ != OrderKind::lex) {
      auto da = a.total_degree(), db = b.total_degree();
      if (da != db) return da < db ? -1 : 1;
    }
    const std::size_t n = a.size();
    if (kind_ == OrderKind::degrevlex) {
      for (std::size_t k = n; k-- > 0;) {
        std::size_t v = slot(k);
        if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
      }
      return 0;
    }
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t v = slot(k);
      if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const {
    switch (kind_) {
      case OrderKind::degrevlex: return "degrevlex";
      case OrderKind::deglex: return "deglex";
      case OrderKind::lex: return "lex";
    }
    return "?";
  }

 private:
  std::size_t slot(std::size_t k) const { return perm_.empty() ? k : perm_[k]; }

  OrderKind kind_ = OrderKind::degrevlex;
  std::vector<std::size_t> perm_;
};

/// Strict-weak-ordering adaptor for ordered containers.
struct OrderLess {
  const TermOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->less(a, b); }
};

}  // namespace weyl
