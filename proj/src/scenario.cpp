#include "weyl/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "weyl/charvar.hpp"
#include "weyl/parser.hpp"
#include "weyl/weyl.hpp"

namespace weyl {

const std::map<std::string, std::string>& builtin_scenario_sources();

namespace {

class IntegerParser {
 public:
  IntegerParser(std::string_view text, const Bindings& b) : text_(text), b_(b) {}

  long parse() {
    long v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("integer expression '" + std::string(text_) + "': " + what, pos_);
  }
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
  long expr() {
    long v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }
  long term() {
    long v = unary();
    while (accept('*')) v *= unary();
    return v;
  }
  long unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return atom();
  }
  long atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      long v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return std::stol(std::string(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "max" || name == "min") {
        if (!accept('(')) fail("expected '('");
        long a = expr();
        if (!accept(',')) fail("expected ','");
        long b = expr();
        if (!accept(')')) fail("expected ')'");
        return name == "max" ? std::max(a, b) : std::min(a, b);
      }
      auto it = b_.find(name);
      if (it == b_.end()) fail("unbound parameter '" + name + "'");
      return it->second;
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const Bindings& b_;
  std::size_t pos_ = 0;
};

std::string bindings_label(const Bindings& b) {
  std::string s;
  for (const auto& [k, v] : b) s += (s.empty() ? "" : ",") + k + "=" + std::to_string(v);
  return s;
}

ordered_json bindings_json(const Bindings& b) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : b) j[k] = v;
  return j;
}

std::string value_string(const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

const ordered_json& require(const ordered_json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw std::invalid_argument(where + ": missing field '" + key + "'");
  return obj.at(key);
}

std::set<std::size_t> index_set(const ordered_json& arr, std::size_t m) {
  std::set<std::size_t> s;
  for (const auto& v : arr) {
    long i = v.get<long>();
    if (i < 1 || static_cast<std::size_t>(i) > m) throw std::invalid_argument("index " + std::to_string(i) + " out of range");
    s.insert(static_cast<std::size_t>(i));
  }
  return s;
}

}  // namespace

long evaluate_integer(const std::string& expr, const Bindings& bindings) { return IntegerParser(expr, bindings).parse(); }

std::string substitute_template(const std::string& text, const Bindings& bindings) {
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t open = text.find('{', pos);
    if (open == std::string::npos) {
      out += text.substr(pos);
      break;
    }
    std::size_t close = text.find('}', open);
    if (close == std::string::npos) throw ParseError("unterminated '{' in template '" + text + "'", open);
    out += text.substr(pos, open - pos);
    long v = evaluate_integer(text.substr(open + 1, close - open - 1), bindings);
    out += v < 0 ? "(" + std::to_string(v) + ")" : std::to_string(v);
    pos = close + 1;
  }
  return out;
}

std::vector<std::string> builtin_scenario_names() {
  std::vector<std::string> names;
  for (const auto& kv : builtin_scenario_sources()) names.push_back(kv.first);
  return names;
}

// ---------------------------------------------------------------- context

ScenarioContext::ScenarioContext(const Scenario& scenario) : scenario_(&scenario) {}

WeylElement ScenarioContext::expression(const std::string& text, const Bindings& b) const {
  return parse_expression(substitute_template(text, b), ambient());
}

std::pair<std::string, Bindings> ScenarioContext::parse_ref(const std::string& ref, const Bindings& b) const {
  auto open = ref.find('(');
  if (open == std::string::npos) return {ref, b};
  if (ref.back() != ')') throw std::invalid_argument("bad reference '" + ref + "'");
  std::string name = ref.substr(0, open);
  std::string args = ref.substr(open + 1, ref.size() - open - 2);
  Bindings out = b;
  std::stringstream ss(args);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad reference argument '" + item + "'");
    std::string key = item.substr(0, eq);
    key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
    out[key] = evaluate_integer(item.substr(eq + 1), b);
  }
  return {name, out};
}

std::vector<WeylElement> ScenarioContext::ideal_generators(const std::string& ref, const Bindings& b) const {
  auto [name, bound] = parse_ref(ref, b);
  const auto& ideals = scenario_->doc.at("ideals");
  if (!ideals.contains(name)) throw std::invalid_argument("unresolved ideal '" + name + "'");
  std::vector<WeylElement> gens;
  for (const auto& g : require(ideals.at(name), "generators", "ideal " + name)) gens.push_back(expression(g.get<std::string>(), bound));
  return gens;
}

const WeylIdeal& ScenarioContext::ideal(const std::string& ref, const Bindings& b) {
  auto [name, bound] = parse_ref(ref, b);
  std::string key = name + "[" + bindings_label(bound) + "]";
  auto it = ideal_cache_.find(key);
  if (it == ideal_cache_.end())
    it = ideal_cache_.emplace(key, std::make_unique<WeylIdeal>(ideal_generators(name, bound), scenario_->order)).first;
  return *it->second;
}

DeltaSection ScenarioContext::section(const ordered_json& spec, const Bindings& b) const {
  ordered_json s = spec;
  if (spec.is_string()) {
    const auto& sections = scenario_->doc.at("sections");
    auto [name, bound] = parse_ref(spec.get<std::string>(), b);
    if (!sections.contains(name)) throw std::invalid_argument("unresolved section '" + name + "'");
    return section(sections.at(name), bound);
  }
  DeltaModule module(ambient(), index_set(require(s, "delta", "section"), ambient()));
  WeylElement op = expression(require(s, "expr", "section").get<std::string>(), b);
  return act(op, delta(module));
}

LieSubalgebra ScenarioContext::algebra(const std::string& name) const {
  const auto& algebras = scenario_->doc.at("algebras");
  if (!algebras.contains(name)) throw std::invalid_argument("unresolved algebra '" + name + "'");
  const auto& spec = algebras.at(name);
  if (spec.contains("conjugate")) {
    LieSubalgebra base = algebra(spec.at("conjugate").get<std::string>());
    const auto& rows = require(spec, "by", "algebra " + name);
    RationalMatrix c(ambient(), ambient());
    if (rows.size() != ambient()) throw std::invalid_argument("algebra " + name + ": conjugating matrix has wrong size");
    for (std::size_t i = 0; i < ambient(); ++i) {
      if (rows[i].size() != ambient()) throw std::invalid_argument("algebra " + name + ": conjugating matrix has wrong size");
      for (std::size_t j = 0; j < ambient(); ++j) c(i, j) = Rational(rows[i][j].get<long>());
    }
    return realize(base, c, name);
  }
  LieSubalgebra h{name, {}};
  for (const auto& e : require(spec, "basis", "algebra " + name))
    h.basis.push_back(parse_matrix_expression(e.get<std::string>(), ambient()));
  return h;
}

Character ScenarioContext::character(const std::string& ref, const Bindings& b) const {
  auto [name, bound] = parse_ref(ref, b);
  const auto& chars = scenario_->doc.at("characters");
  if (!chars.contains(name)) throw std::invalid_argument("unresolved character '" + name + "'");
  Character chi{name, {}};
  for (const auto& v : require(chars.at(name), "values", "character " + name))
    chi.values.push_back(Rational(evaluate_integer(value_string(v), bound)));
  return chi;
}

OrbitChart ScenarioContext::chart(const std::string& ref, const Bindings& b) const {
  auto [name, bound] = parse_ref(ref, b);
  const auto& charts = scenario_->doc.at("charts");
  if (!charts.contains(name)) throw std::invalid_argument("unresolved chart '" + name + "'");
  const auto& spec = charts.at(name);
  OrbitChart chart{name, {}, {}, spec.value("dimension", -1)};
  auto poly = [&](const ordered_json& e) {
    WeylElement w = expression(e.get<std::string>(), bound);
    for (const auto& [mono, c] : w.terms())
      for (std::size_t i = 0; i < ambient(); ++i)
        if (mono.d(i)) throw std::invalid_argument("chart " + name + ": equations must be polynomials in z");
    return as_commutative(w);
  };
  for (const auto& e : spec.value("equations", ordered_json::array())) chart.equations.push_back(poly(e));
  for (const auto& e : spec.value("inequations", ordered_json::array())) chart.inequations.push_back(poly(e));
  return chart;
}

// ---------------------------------------------------------------- checks

namespace {

struct InstanceResult {
  CheckVerdict verdict = CheckVerdict::pass;
  std::string witness;
  ordered_json details = ordered_json::object();
};

InstanceResult expect_bool(bool observed, bool expected, const std::string& witness_if_unexpected) {
  InstanceResult r;
  r.verdict = observed == expected ? CheckVerdict::pass : CheckVerdict::fail;
  if (r.verdict != CheckVerdict::pass) r.witness = witness_if_unexpected;
  r.details["observed"] = observed;
  return r;
}

std::vector<Bindings> instances(const ordered_json& check, const ordered_json& domains) {
  std::vector<Bindings> out{Bindings{}};
  if (!check.contains("params")) return out;
  for (const auto& [name, values] : check.at("params").items()) {
    if (!domains.contains(name)) throw std::invalid_argument("undeclared parameter '" + name + "'");
    const std::string domain = domains.at(name).get<std::string>();
    std::vector<Bindings> next;
    for (const auto& b : out)
      for (const auto& v : values) {
        long x = v.get<long>();
        if (domain == "nonnegative" && x < 0)
          throw std::invalid_argument("parameter " + name + " must be non-negative, got " + std::to_string(x));
        if (domain == "nonzero" && x == 0) throw std::invalid_argument("parameter " + name + " must be nonzero");
        Bindings nb = b;
        nb[name] = x;
        next.push_back(std::move(nb));
      }
    out = std::move(next);
  }
  return out;
}

std::string join_strings(const std::vector<WeylElement>& v) {
  std::string s;
  for (const auto& e : v) s += (s.empty() ? "" : ", ") + to_string(e);
  return s;
}

using CheckFn = std::function<InstanceResult(ScenarioContext&, const ordered_json&, const Bindings&)>;

const std::map<std::string, CheckFn>& check_table() {
  static const std::map<std::string, CheckFn> table = {
      {"annihilates",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
         auto gens = ctx.ideal_generators(c.at("ideal").get<std::string>(), b);
         auto s = ctx.section(c.at("section"), b);
         auto bad = first_non_annihilating(gens, s);
         InstanceResult r = expect_bool(!bad, c.value("expect", true),
                                        bad ? "generator " + to_string(*bad) + " does not annihilate the section"
                                            : "all generators annihilate");
         r.details["section"] = to_string(s);
         return r;
       }},
      {"certify",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
         const auto& ideal = ctx.ideal(c.at("ideal").get<std::string>(), b);
         auto s = ctx.section(c.at("section"), b);
         auto cert = certify_annihilator(ideal, s);
         std::string conclusion = cert.conclusion == CertificateConclusion::equality ? "equality" : "inconclusive";
         InstanceResult r;
         r.details["conclusion"] = conclusion;
         r.details["generators_annihilate"] = cert.generators_annihilate;
         r.details["section_nonzero"] = cert.section_nonzero;
         r.details["dimension"] = cert.simplicity.dimension;
         r.details["simple"] = to_string(cert.simplicity.simple);
         if (!cert.failed_check.empty()) r.details["failed_check"] = cert.failed_check;
         const std::string expected = c.value("expect", "equality");
         if (conclusion != expected) {
           r.verdict = conclusion == "inconclusive" ? CheckVerdict::inconclusive : CheckVerdict::fail;
           r.witness = "conclusion " + conclusion + (cert.failed_check.empty() ? "" : " (failed: " + cert.failed_check + ")");
           if (cert.failing_generator) r.witness += "; generator " + to_string(*cert.failing_generator);
         }
         return r;
       }},
      {"simplicity",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
         const auto& ideal = ctx.ideal(c.at("ideal").get<std::string>(), b);
         auto cert = simplicity_certificate(ideal);
         ordered_json got;
         got["dimension"] = cert.dimension;
         got["verdict"] = to_string(cert.verdict);
         got["multiplicity"] = cert.multiplicity ? ordered_json(cert.multiplicity->get_si()) : ordered_json("not computed");
         got["simple"] = to_string(cert.simple);
         if (cert.conormal_subspace) got["conormal"] = *cert.conormal_subspace;
         InstanceResult r;
         r.details = got;
         for (const auto& [key, want] : c.at("expect").items()) {
           if (!got.contains(key) || got[key] != want) {
             r.verdict = CheckVerdict::fail;
             r.witness = key + " = " + (got.contains(key) ? got[key].dump() : "absent") + ", expected " + want.dump();
             if (!cert.note.empty()) r.witness += " (" + cert.note + ")";
             break;
           }
         }
         return r;
       }},
      {"dimension",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
         const auto& ideal = ctx.ideal(c.at("ideal").get<std::string>(), b);
         GradedIdeal g = graded_ideal(ideal);
         int dim = krull_dimension(g);
         InstanceResult r;
         r.details["dimension"] = dim;
         ordered_json syms = ordered_json::array();
         for (const auto& p : g.generators) syms.push_back(to_string(p));
         r.details["graded_generators"] = syms;
         int want = c.at("expect").get<int>();
         if (dim != want) {
           r.verdict = CheckVerdict::fail;
           r.witness = "dimension " + std::to_string(dim) + ", expected " + std::to_string(want);
         }
         return r;
       }},
      {"proper",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
         const auto& ideal = ctx.ideal(c.at("ideal").get<std::string>(), b);
         bool proper = ideal.is_proper();
         return expect_bool(proper, c.value("expect", true), proper ? "ideal is proper" : "ideal contains 1");
       }},
      {"member",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
         const auto& ideal = ctx.ideal(c.at("ideal").get<std::string>(), b);
         WeylElement a = ctx.expression(c.at("expr").get<std::string>(), b);
         WeylElement rem = ideal.reduce(a);
         InstanceResult r = expect_bool(rem.is_zero(), c.value("expect", true), "remainder " + to_string(rem));
         r.details["remainder"] = to_string(rem);
         return r;
       }},
      {"contains",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
         const auto& outer = ctx.ideal(c.at("outer").get<std::string>(), b);
         std::vector<WeylElement> inner;
         if (c.contains("inner"))
           inner = ctx.ideal_generators(c.at("inner").get<std::string>(), b);
         else
           for (const auto& e : c.at("generators")) inner.push_back(ctx.expression(e.get<std::string>(), b));
         auto w = containment_witness(outer, inner);
         return expect_bool(!w, c.value("expect", true),
                            w ? "generator " + to_string(*w) + " not in " + c.at("outer").get<std::string>()
                              : "all generators contained");
       }},
      {"right_multiple",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
         WeylIdeal source(ctx.ideal_generators(c.at("ideal").get<std::string>(), b), ctx.scenario().order);
         WeylElement by = ctx.expression(c.at("by").get<std::string>(), b);
         const auto& target = ctx.ideal(c.at("target").get<std::string>(), b);
         auto products = module_multiply_ideal(source, by);
         auto w = containment_witness(target, products);
         return expect_bool(!w, c.value("expect", true),
                            w ? "product " + to_string(*w) + " not in target" : "all products contained");
       }},
      {"fourier",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
         PartialFourierSpec spec(ctx.ambient(), index_set(c.at("indices"), ctx.ambient()));
         auto gens = ctx.ideal_generators(c.at("ideal").get<std::string>(), b);
         WeylIdeal ideal(gens, ctx.scenario().order);
         auto s = ctx.section(c.at("section"), b);
         auto p = ctx.section(c.at("polynomial"), b);
         InstanceResult r;
         auto image = fourier_image(spec, s);
         r.details["image"] = to_string(image);
         if (!(image.poly == p.poly)) {
           r.verdict = CheckVerdict::fail;
           r.witness = "section maps to " + to_string(image) + ", expected " + to_string(p);
           return r;
         }
         for (const auto& g : gens) {
           auto out = act_on_polynomial(partial_fourier(spec, g), p);
           if (!out.is_zero()) {
             r.verdict = CheckVerdict::fail;
             r.witness = "transformed generator " + to_string(partial_fourier(spec, g)) + " does not annihilate";
             return r;
           }
         }
         if (!fourier_transport_check(spec, ideal, s, p)) r.verdict = CheckVerdict::fail;
         return r;
       }},
      {"identity",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
         WeylElement lhs = ctx.expression(c.at("lhs").get<std::string>(), b);
         WeylElement rhs = ctx.expression(c.at("rhs").get<std::string>(), b);
         InstanceResult r = expect_bool(lhs == rhs, c.value("expect", true), "lhs normalizes to " + to_string(lhs) + ", rhs to " + to_string(rhs));
         r.details["lhs"] = to_string(lhs);
         return r;
       }},
      {"section_equal",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
         auto x = ctx.section(c.at("a"), b);
         auto y = ctx.section(c.at("b"), b);
         InstanceResult r;
         r.details["section"] = to_string(x);
         if (!(x == y)) {
           r.verdict = CheckVerdict::fail;
           r.witness = to_string(x) + " != " + to_string(y);
         } else if (x.is_zero()) {
           r.verdict = CheckVerdict::fail;
           r.witness = "section is zero";
         }
         if (c.contains("expect_section")) {
           auto z = ctx.section(c.at("expect_section"), b);
           if (!(z == x)) {
             r.verdict = CheckVerdict::fail;
             r.witness = to_string(x) + " != " + to_string(z);
           }
         }
         return r;
       }},
      {"rho_word",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
         const std::size_t m = ctx.ambient();
         WeylElement total(m);
         for (const auto& t : c.at("terms")) {
           WeylElement prod(m, Rational(t.value("coeff", 1L)));
           for (const auto& e : t.at("word")) prod = prod * rho(parse_matrix_expression(e.get<std::string>(), m));
           total += prod;
         }
         WeylElement rhs = ctx.expression(c.at("rhs").get<std::string>(), b);
         InstanceResult r = expect_bool(total == rhs, c.value("expect", true), "image is " + to_string(total));
         r.details["image"] = to_string(total);
         return r;
       }},
      {"subalgebra",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings&) {
         auto h = ctx.algebra(c.at("algebra").get<std::string>());
         InstanceResult r;
         r.details["dimension"] = h.dimension();
         if (!linearly_independent(h.basis)) {
           r.verdict = CheckVerdict::fail;
           r.witness = "basis is linearly dependent";
         } else if (!is_subalgebra(h.basis)) {
           r.verdict = CheckVerdict::fail;
           r.witness = "not closed under bracket";
         } else if (c.contains("dimension") && h.dimension() != c.at("dimension").get<std::size_t>()) {
           r.verdict = CheckVerdict::fail;
           r.witness = "dimension " + std::to_string(h.dimension());
         }
         return r;
       }},
      {"character",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
         auto h = ctx.algebra(c.at("algebra").get<std::string>());
         auto chi = ctx.character(c.at("character").get<std::string>(), b);
         bool ok = vanishes_on_brackets(chi, h);
         return expect_bool(ok, c.value("expect", true), "character does not vanish on brackets");
       }},
      {"rho_homomorphism",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings&) {
         auto h = ctx.algebra(c.at("algebra").get<std::string>());
         InstanceResult r;
         for (std::size_t i = 0; i < h.basis.size(); ++i)
           for (std::size_t j = i + 1; j < h.basis.size(); ++j)
             if (rho(bracket(h.basis[i], h.basis[j])) != commutator(rho(h.basis[i]), rho(h.basis[j]))) {
               r.verdict = CheckVerdict::fail;
               r.witness = "basis pair " + std::to_string(i + 1) + "," + std::to_string(j + 1);
               return r;
             }
         r.details["convention"] = "homomorphism";
         return r;
       }},
      {"twisted_in_ideal",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
         auto h = ctx.algebra(c.at("algebra").get<std::string>());
         auto chi = ctx.character(c.at("character").get<std::string>(), b);
         const auto& ideal = ctx.ideal(c.at("ideal").get<std::string>(), b);
         auto gens = twisted_generators(h, chi);
         auto w = containment_witness(ideal, gens);
         InstanceResult r = expect_bool(!w, c.value("expect", true),
                                        w ? to_string(*w) + " not in " + c.at("ideal").get<std::string>() +
                                                " (remainder " + to_string(ideal.reduce(*w)) + ")"
                                          : "all twisted generators contained");
         return r;
       }},
      {"twisted_generate",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
         auto h = ctx.algebra(c.at("algebra").get<std::string>());
         auto chi = ctx.character(c.at("character").get<std::string>(), b);
         auto twisted = twisted_generators(h, chi);
         auto stated = ctx.ideal_generators(c.at("ideal").get<std::string>(), b);
         InstanceResult r;
         r.details["twisted"] = join_strings(twisted);
         // Elementwise: each twisted generator is a nonzero multiple of a stated one, and back.
         auto proportional = [](const WeylElement& x, const WeylElement& y) {
           if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
           TermOrder o;
           return x.monic(o) == y.monic(o);
         };
         auto covered = [&](const std::vector<WeylElement>& from, const std::vector<WeylElement>& to) -> std::optional<WeylElement> {
           for (const auto& x : from)
             if (std::none_of(to.begin(), to.end(), [&](const WeylElement& y) { return proportional(x, y); })) return x;
           return std::nullopt;
         };
         if (auto w = covered(twisted, stated)) {
           r.verdict = CheckVerdict::fail;
           r.witness = "twisted generator " + to_string(*w) + " not in the stated list";
         } else if (auto w2 = covered(stated, twisted)) {
           r.verdict = CheckVerdict::fail;
           r.witness = "stated generator " + to_string(*w2) + " not produced by the twisted map";
         } else {
           WeylIdeal a(twisted, ctx.scenario().order), s(stated, ctx.scenario().order);
           if (!ideal_equal(a, s)) {
             r.verdict = CheckVerdict::fail;
             r.witness = "ideals differ";
           }
         }
         return r;
       }},
      {"diagram",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
         auto hs = ctx.algebra(c.at("small_algebra").get<std::string>());
         auto hb = ctx.algebra(c.at("big_algebra").get<std::string>());
         auto cs = ctx.character(c.at("small_character").get<std::string>(), b);
         auto cb = ctx.character(c.at("big_character").get<std::string>(), b);
         const auto& is = ctx.ideal(c.at("small_ideal").get<std::string>(), b);
         const auto& ib = ctx.ideal(c.at("big_ideal").get<std::string>(), b);
         InstanceResult r;
         for (const auto& d : containment_diagram(hs, cs, hb, cb, is, ib)) {
           r.details[d.name] = d.holds;
           if (!d.holds && r.verdict == CheckVerdict::pass) {
             r.verdict = CheckVerdict::fail;
             r.witness = d.name + " fails: " + d.witness;
           }
         }
         return r;
       }},
      {"interpolation",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
         std::vector<std::pair<int, WeylElement>> targets;
         for (const auto& t : c.at("targets"))
           targets.emplace_back(t.at("l").get<int>(), ctx.expression(t.at("expr").get<std::string>(), b));
         int lmax = c.at("lmax").get<int>();
         WeylElement lift = interpolation_lift(targets, lmax);
         InstanceResult r;
         r.details["lift_terms"] = lift.size();
         for (const auto& [l, target] : targets) {
           Bindings bl = b;
           bl["l"] = l;
           const auto& ideal = ctx.ideal(c.at("ideal").get<std::string>(), bl);
           WeylElement rem = ideal.reduce(lift - target);
           if (!rem.is_zero()) {
             r.verdict = CheckVerdict::fail;
             r.witness = "P - P_" + std::to_string(l) + " has remainder " + to_string(rem);
             break;
           }
         }
         return r;
       }},
      {"stable",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
         auto h = ctx.algebra(c.at("algebra").get<std::string>());
         auto chart = ctx.chart(c.at("chart").get<std::string>(), b);
         bool ok = ideal_stable(h, chart);
         return expect_bool(ok, c.value("expect", true),
                            ok ? "chart is stable" : "some v_A(f) leaves the chart ideal");
       }},
      {"tangent_rank",
       [](ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
         auto h = ctx.algebra(c.at("algebra").get<std::string>());
         std::vector<Rational> point;
         for (const auto& v : c.at("point")) point.emplace_back(evaluate_integer(value_string(v), b));
         if (point.size() != ctx.ambient()) throw std::invalid_argument("point has wrong dimension");
         std::size_t rk = tangent_rank_at(h, point);
         InstanceResult r;
         r.details["rank"] = rk;
         std::size_t want = c.at("expect").get<std::size_t>();
         if (rk != want) {
           r.verdict = CheckVerdict::fail;
           r.witness = "rank " + std::to_string(rk) + ", expected " + std::to_string(want);
         }
         return r;
       }},
  };
  return table;
}

// Fields whose values name scenario objects; used for load-time validation.
void validate_check(const ScenarioContext& ctx, const ordered_json& c, const Bindings& b) {
  static const std::set<std::string> ideal_fields = {"ideal", "outer", "inner", "target", "small_ideal", "big_ideal"};
  static const std::set<std::string> section_fields = {"section", "polynomial", "a", "b", "expect_section"};
  static const std::set<std::string> expr_fields = {"expr", "lhs", "rhs", "by"};
  static const std::set<std::string> algebra_fields = {"algebra", "small_algebra", "big_algebra"};
  static const std::set<std::string> character_fields = {"character", "small_character", "big_character"};
  for (const auto& [key, v] : c.items()) {
    if (ideal_fields.count(key)) {
      if (key == "ideal" && c.value("kind", "") == "interpolation") {
        for (const auto& t : c.at("targets")) {
          Bindings bl = b;
          bl["l"] = t.at("l").get<long>();
          ctx.ideal_generators(v.get<std::string>(), bl);
        }
      } else {
        ctx.ideal_generators(v.get<std::string>(), b);
      }
    } else if (section_fields.count(key)) {
      ctx.section(v, b);
    } else if (expr_fields.count(key)) {
      ctx.expression(v.get<std::string>(), b);
    } else if (algebra_fields.count(key)) {
      ctx.algebra(v.get<std::string>());
    } else if (character_fields.count(key)) {
      ctx.character(v.get<std::string>(), b);
    } else if (key == "chart") {
      ctx.chart(v.get<std::string>(), b);
    } else if (key == "generators" || key == "targets") {
      for (const auto& e : v) ctx.expression(e.is_string() ? e.get<std::string>() : e.at("expr").get<std::string>(), b);
    }
  }
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& origin) {
  Scenario s;
  s.origin = origin;
  try {
    s.doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(origin + ": JSON parse error: " + e.what());
  }
  const auto& doc = s.doc;
  s.name = require(doc, "name", origin).get<std::string>();
  long m = require(doc, "ambient", origin).get<long>();
  if (m < 1) throw std::invalid_argument(origin + ": ambient must be positive");
  s.ambient = static_cast<std::size_t>(m);
  const std::string order = doc.value("order", "degrevlex");
  if (order == "degrevlex")
    s.order = TermOrder(OrderKind::degrevlex);
  else if (order == "deglex")
    s.order = TermOrder(OrderKind::deglex);
  else if (order == "lex")
    s.order = TermOrder(OrderKind::lex);
  else
    throw std::invalid_argument(origin + ": unknown order '" + order + "'");
  for (const char* key : {"ideals", "sections", "algebras", "characters", "charts", "parameters"})
    if (!s.doc.contains(key)) s.doc[key] = ordered_json::object();
  if (!s.doc.contains("checks")) s.doc["checks"] = ordered_json::array();

  for (const auto& [name, domain] : s.doc["parameters"].items()) {
    std::string d = domain.get<std::string>();
    if (d != "nonnegative" && d != "nonzero" && d != "integer")
      throw std::invalid_argument(origin + ": parameter " + name + " has unknown domain '" + d + "'");
  }

  ScenarioContext ctx(s);
  std::set<std::string> ids;
  for (const auto& check : s.doc["checks"]) {
    const std::string id = require(check, "id", origin + " check").get<std::string>();
    if (!ids.insert(id).second) throw std::invalid_argument(origin + ": duplicate check id '" + id + "'");
    const std::string kind = require(check, "kind", "check " + id).get<std::string>();
    if (!check_table().count(kind)) throw std::invalid_argument("check " + id + ": unknown kind '" + kind + "'");
    try {
      for (const auto& b : instances(check, s.doc["parameters"])) validate_check(ctx, check, b);
    } catch (const std::exception& e) {
      throw std::invalid_argument("check " + id + ": " + e.what());
    }
  }
  return s;
}

Scenario load_scenario(const std::string& name_or_path) {
  const auto& builtins = builtin_scenario_sources();
  if (auto it = builtins.find(name_or_path); it != builtins.end()) return parse_scenario(it->second, "builtin:" + it->first);
  std::ifstream in(name_or_path);
  if (!in) throw std::invalid_argument("no builtin scenario or readable file named '" + name_or_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), name_or_path);
}

Report run_scenario(const Scenario& scenario) {
  Report report;
  report.scenario = scenario.name;
  report.description = scenario.doc.value("description", "");
  ScenarioContext ctx(scenario);
  for (const auto& check : scenario.doc.at("checks")) {
    CheckRecord rec;
    rec.id = check.at("id").get<std::string>();
    rec.kind = check.at("kind").get<std::string>();
    rec.provenance = check.value("provenance", "");
    rec.anchor = check.value("anchor", "");
    rec.inputs = ordered_json::object();
    for (const auto& [key, v] : check.items())
      if (key != "id" && key != "kind" && key != "provenance" && key != "anchor") rec.inputs[key] = v;

    const auto start = std::chrono::steady_clock::now();
    rec.verdict = CheckVerdict::pass;
    try {
      const auto& fn = check_table().at(rec.kind);
      for (const auto& b : instances(check, scenario.doc.at("parameters"))) {
        InstanceResult r;
        try {
          r = fn(ctx, check, b);
        } catch (const std::exception& e) {
          r.verdict = CheckVerdict::error;
          r.witness = e.what();
        }
        ordered_json d;
        d["params"] = bindings_json(b);
        d["verdict"] = to_string(r.verdict);
        for (const auto& [k, v] : r.details.items()) d[k] = v;
        rec.details.push_back(std::move(d));
        if (r.verdict != CheckVerdict::pass && rec.verdict == CheckVerdict::pass) {
          rec.verdict = r.verdict;
          rec.witness = (b.empty() ? "" : "[" + bindings_label(b) + "] ") + r.witness;
        } else if (r.verdict == CheckVerdict::error && rec.verdict != CheckVerdict::error) {
          rec.verdict = CheckVerdict::error;
          rec.witness = (b.empty() ? "" : "[" + bindings_label(b) + "] ") + r.witness;
        }
      }
    } catch (const std::exception& e) {
      rec.verdict = CheckVerdict::error;
      rec.witness = e.what();
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.records.push_back(std::move(rec));
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return report;
}

}  // namespace weyl
