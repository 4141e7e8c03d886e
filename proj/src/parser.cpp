#include "weyl/parser.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <memory>
#include <sstream>
#include <vector>

#include "weyl/weyl.hpp"

namespace weyl {

namespace {

struct Node {
  enum class Kind { z, d, number, sum, product, power, quotient, negate } kind;
  std::size_t index = 0;       // z / d
  mpz_class value;             // number, power exponent, quotient divisor
  std::vector<std::unique_ptr<Node>> children;
  std::vector<bool> negative;  // per child of a sum
};

using NodePtr = std::unique_ptr<Node>;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class uint_literal() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected unsigned integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  NodePtr expr() {
    auto node = std::make_unique<Node>();
    node->kind = Node::Kind::sum;
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    node->children.push_back(term());
    node->negative.push_back(neg);
    for (;;) {
      if (accept('+'))
        neg = false;
      else if (accept('-'))
        neg = true;
      else
        break;
      node->children.push_back(term());
      node->negative.push_back(neg);
    }
    return node;
  }

  NodePtr term() {
    auto node = std::make_unique<Node>();
    node->kind = Node::Kind::product;
    node->children.push_back(factor());
    for (;;) {
      if (accept('*')) {
        node->children.push_back(factor());
      } else if (accept('/')) {
        std::size_t at = pos_;
        auto q = std::make_unique<Node>();
        q->kind = Node::Kind::quotient;
        q->value = uint_literal();
        if (q->value == 0) throw ParseError("division by zero", at);
        node->children.push_back(std::move(q));
      } else {
        break;
      }
    }
    return node;
  }

  NodePtr factor() {
    NodePtr base = atom();
    if (accept('^')) {
      std::size_t at = pos_;
      auto p = std::make_unique<Node>();
      p->kind = Node::Kind::power;
      p->value = uint_literal();
      if (p->value > INT_MAX) throw ParseError("exponent overflow", at);
      p->children.push_back(std::move(base));
      return p;
    }
    return base;
  }

  NodePtr atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    auto node = std::make_unique<Node>();
    if (c == 'z' || c == 'd') {
      ++pos_;
      std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail(std::string("expected index after '") + c + "'");
      mpz_class idx = uint_literal();
      if (idx < 1 || idx > 1 << 20) throw ParseError("index out of range", at);
      node->kind = c == 'z' ? Node::Kind::z : Node::Kind::d;
      node->index = idx.get_ui();
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      node->kind = Node::Kind::number;
      node->value = uint_literal();
      return node;
    }
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unknown symbol '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t scan_max(const Node& n) {
  std::size_t best = (n.kind == Node::Kind::z || n.kind == Node::Kind::d) ? n.index : 0;
  for (const auto& ch : n.children) best = std::max(best, scan_max(*ch));
  return best;
}

WeylElement evaluate(const Node& n, std::size_t m) {
  switch (n.kind) {
    case Node::Kind::z: return WeylElement::z(m, n.index);
    case Node::Kind::d: return WeylElement::d(m, n.index);
    case Node::Kind::number: return WeylElement(m, Rational(n.value));
    case Node::Kind::sum: {
      WeylElement s(m);
      for (std::size_t k = 0; k < n.children.size(); ++k) {
        WeylElement t = evaluate(*n.children[k], m);
        if (n.negative[k])
          s -= t;
        else
          s += t;
      }
      return s;
    }
    case Node::Kind::product: {
      WeylElement p(m, 1);
      for (const auto& ch : n.children) {
        if (ch->kind == Node::Kind::quotient)
          p *= Rational(mpz_class(1), ch->value);
        else
          p = p * evaluate(*ch, m);
      }
      return p;
    }
    case Node::Kind::power: return pow(evaluate(*n.children[0], m), static_cast<unsigned>(n.value.get_ui()));
    case Node::Kind::quotient:
    case Node::Kind::negate: break;
  }
  throw std::logic_error("bad expression node");
}

}  // namespace

WeylElement parse_expression(std::string_view text, std::optional<std::size_t> ambient) {
  NodePtr root = Parser(text).parse();
  std::size_t used = scan_max(*root);
  std::size_t m = ambient.value_or(std::max<std::size_t>(used, 1));
  if (used > m) throw ParseError("unknown symbol: index " + std::to_string(used) + " exceeds ambient " + std::to_string(m), 0);
  return evaluate(*root, m);
}

std::size_t max_index(std::string_view text) { return scan_max(*Parser(text).parse()); }

std::string monomial_string(const Monomial& mono, const char* d_name) {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const char* name, std::size_t i, Exponent e) {
    if (e == 0) return;
    if (!first) out << '*';
    first = false;
    out << name << (i + 1);
    if (e > 1) out << '^' << e;
  };
  for (std::size_t i = 0; i < mono.ambient(); ++i) emit("z", i, mono.z(i));
  for (std::size_t i = 0; i < mono.ambient(); ++i) emit(d_name, i, mono.d(i));
  return out.str();
}

namespace {

template <class A>
std::string print(const Poly<A>& a, const char* d_name) {
  if (a.is_zero()) return "0";
  TermOrder order;
  std::vector<std::pair<Monomial, Rational>> terms(a.terms().begin(), a.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) { return order.less(y.first, x.first); });
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::string body = monomial_string(mono, d_name);
    if (body.empty()) {
      out << mag.get_str();
    } else {
      if (mag.get_num() != 1) out << mag.get_num().get_str() << '*';
      out << body;
      if (mag.get_den() != 1) out << '/' << mag.get_den().get_str();
    }
  }
  return out.str();
}

}  // namespace

std::string to_string(const WeylElement& a) { return print(a, "d"); }
std::string to_string(const Polynomial& p) { return print(p, "zeta"); }

}  // namespace weyl
