#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "weyl/charvar.hpp"
#include "weyl/delta_module.hpp"
#include "weyl/groebner.hpp"
#include "weyl/parser.hpp"
#include "weyl/report.hpp"
#include "weyl/scenario.hpp"
#include "weyl/weyl.hpp"

using namespace weyl;

namespace {

struct IdealSource {
  std::string scenario;
  long l = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
  return out;
}

// Inline ideals are written "gens:g1; g2; ...". Anything else names an ideal
// of the scenario given with --scenario.
struct Resolved {
  std::size_t ambient;
  std::vector<WeylElement> generators;
};

Resolved resolve_ideal(const std::string& spec, const IdealSource& src, std::size_t min_ambient = 1) {
  if (spec.rfind("gens:", 0) == 0) {
    auto parts = split(spec.substr(5), ';');
    if (parts.empty()) throw std::invalid_argument("inline ideal has no generators");
    std::size_t m = min_ambient;
    for (const auto& p : parts) m = std::max(m, max_index(p));
    Resolved r{m, {}};
    for (const auto& p : parts) r.generators.push_back(parse_expression(p, m));
    return r;
  }
  if (src.scenario.empty()) throw std::invalid_argument("ideal '" + spec + "' needs --scenario (or use gens:...)");
  static std::optional<Scenario> cache;
  if (!cache || cache->name != src.scenario) cache = load_scenario(src.scenario);
  ScenarioContext ctx(*cache);
  return {cache->ambient, ctx.ideal_generators(spec, {{"l", src.l}})};
}

void add_source_options(CLI::App* cmd, IdealSource& src) {
  cmd->add_option("--scenario", src.scenario, "Scenario providing named ideals (builtin name or JSON path)");
  cmd->add_option("--l", src.l, "Value bound to the parameter l");
}

int emit_report(const Report& report, const std::string& format, const std::string& out, bool timing) {
  std::string text = format == "markdown" ? to_markdown(report) : to_json(report, timing).dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
  }
  if (!report.all_passed()) {
    for (const auto& r : report.records)
      if (r.verdict != CheckVerdict::pass) std::cerr << r.id << ": " << to_string(r.verdict) << ": " << r.witness << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Weyl algebra computations and scenario verification"};
  app.require_subcommand(1);
  int status = 0;
  IdealSource src;

  std::string expr_a, expr_b, ideal_spec, section_spec, delta_spec, out, format = "json";
  bool no_timing = false;

  auto* normalize = app.add_subcommand("normalize", "Print the normal-ordered form of an expression");
  normalize->add_option("expr", expr_a)->required();
  normalize->callback([&] { std::cout << to_string(parse_expression(expr_a)) << "\n"; });

  auto* mul = app.add_subcommand("mul", "Multiply two expressions");
  mul->add_option("a", expr_a)->required();
  mul->add_option("b", expr_b)->required();
  mul->callback([&] {
    std::size_t m = std::max<std::size_t>({1, max_index(expr_a), max_index(expr_b)});
    std::cout << to_string(parse_expression(expr_a, m) * parse_expression(expr_b, m)) << "\n";
  });

  auto* gb = app.add_subcommand("gb", "Reduced left Groebner basis of a scenario ideal");
  gb->add_option("scenario", src.scenario)->required();
  gb->add_option("ideal", ideal_spec)->required();
  gb->add_option("--l", src.l, "Value bound to the parameter l");
  gb->callback([&] {
    auto r = resolve_ideal(ideal_spec, src);
    WeylIdeal ideal(r.generators);
    for (const auto& g : ideal.groebner().elements) std::cout << to_string(g) << "\n";
  });

  auto* reduce_cmd = app.add_subcommand("reduce", "Normal form of an expression modulo an ideal");
  reduce_cmd->add_option("expr", expr_a)->required();
  reduce_cmd->add_option("--mod", ideal_spec, "Ideal name or gens:g1;g2;...")->required();
  add_source_options(reduce_cmd, src);
  reduce_cmd->callback([&] {
    auto r = resolve_ideal(ideal_spec, src, max_index(expr_a));
    WeylIdeal ideal(r.generators);
    std::cout << to_string(ideal.reduce(parse_expression(expr_a, r.ambient))) << "\n";
  });

  auto* member = app.add_subcommand("member", "Decide ideal membership (exit 0 iff member)");
  member->add_option("expr", expr_a)->required();
  member->add_option("--in", ideal_spec, "Ideal name or gens:g1;g2;...")->required();
  add_source_options(member, src);
  member->callback([&] {
    auto r = resolve_ideal(ideal_spec, src, max_index(expr_a));
    WeylIdeal ideal(r.generators);
    WeylElement rem = ideal.reduce(parse_expression(expr_a, r.ambient));
    std::cout << (rem.is_zero() ? "member" : "not a member; remainder " + to_string(rem)) << "\n";
    status = rem.is_zero() ? 0 : 1;
  });

  auto* charvar = app.add_subcommand("charvar", "Graded ideal, dimension, multiplicity and simplicity verdict");
  charvar->add_option("ideal", ideal_spec)->required();
  add_source_options(charvar, src);
  charvar->callback([&] {
    auto r = resolve_ideal(ideal_spec, src);
    WeylIdeal ideal(r.generators);
    GradedIdeal g = graded_ideal(ideal);
    std::cout << "graded ideal:\n";
    for (const auto& p : g.generators) std::cout << "  " << to_string(p) << "\n";
    auto cert = simplicity_certificate(ideal);
    std::cout << "dimension: " << cert.dimension << "\n";
    std::cout << "verdict: " << to_string(cert.verdict) << "\n";
    if (cert.multiplicity) std::cout << "multiplicity: " << cert.multiplicity->get_str() << "\n";
    std::cout << "simple: " << to_string(cert.simple) << "\n";
    if (cert.conormal_subspace) {
      std::cout << "conormal to z_i = 0 for i in {";
      for (std::size_t k = 0; k < cert.conormal_subspace->size(); ++k)
        std::cout << (k ? "," : "") << (*cert.conormal_subspace)[k];
      std::cout << "}\n";
    }
    if (!cert.note.empty()) std::cout << "note: " << cert.note << "\n";
  });

  auto* certify = app.add_subcommand("certify", "Certify Ann(section) = ideal (exit 0 iff certified)");
  certify->add_option("ideal", ideal_spec)->required();
  certify->add_option("--section", section_spec, "Operator applied to delta")->required();
  certify->add_option("--delta", delta_spec, "Constrained indices, e.g. 2,4 (empty for O_X)");
  add_source_options(certify, src);
  certify->callback([&] {
    auto r = resolve_ideal(ideal_spec, src, max_index(section_spec));
    std::set<std::size_t> s;
    for (const auto& part : split(delta_spec, ',')) s.insert(std::stoul(part));
    DeltaSection sec = act(parse_expression(section_spec, r.ambient), delta(DeltaModule(r.ambient, s)));
    WeylIdeal ideal(r.generators);
    auto cert = certify_annihilator(ideal, sec);
    std::cout << "section: " << to_string(sec) << "\n";
    std::cout << "generators annihilate: " << (cert.generators_annihilate ? "yes" : "no") << "\n";
    if (cert.failing_generator) std::cout << "failing generator: " << to_string(*cert.failing_generator) << "\n";
    std::cout << "section nonzero: " << (cert.section_nonzero ? "yes" : "no") << "\n";
    std::cout << "simple: " << to_string(cert.simplicity.simple) << "\n";
    bool ok = cert.conclusion == CertificateConclusion::equality;
    std::cout << "conclusion: " << (ok ? "Ann(section) = ideal" : "inconclusive (" + cert.failed_check + ")") << "\n";
    status = ok ? 0 : 1;
  });

  std::string scenario_name;
  auto* verify = app.add_subcommand("verify", "Run every check of a scenario (exit 0 iff all pass)");
  verify->add_option("scenario", scenario_name, "Builtin name or JSON path")->required();
  verify->add_option("--out", out, "Write the report here instead of stdout");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "markdown"}));
  verify->add_flag("--no-timing", no_timing, "Omit the timing block");
  verify->callback([&] { status = emit_report(run_scenario(load_scenario(scenario_name)), format, out, !no_timing); });

  std::string report_file;
  auto* report = app.add_subcommand("report", "Re-render a saved JSON report");
  report->add_option("file", report_file)->required();
  report->add_option("--format", format)->check(CLI::IsMember({"json", "markdown"}));
  report->callback([&] {
    std::ifstream f(report_file);
    if (!f) throw std::runtime_error("cannot read " + report_file);
    ordered_json doc = ordered_json::parse(f);
    status = emit_report(report_from_json(doc), format, out, doc.contains("timing"));
  });

  auto* list = app.add_subcommand("scenarios", "List builtin scenarios");
  list->callback([&] {
    for (const auto& n : builtin_scenario_names()) std::cout << n << "\n";
  });

  // Expressions such as "-z4*d1" would otherwise be read as option flags; a
  // leading space keeps them positional and the expression parser skips it.
  std::vector<std::string> args(argv + 1, argv + argc);
  for (auto& a : args)
    if (a.size() > 1 && a[0] == '-' && std::string_view("zd0123456789(").find(a[1]) != std::string_view::npos)
      a.insert(0, " ");
  std::reverse(args.begin(), args.end());

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
