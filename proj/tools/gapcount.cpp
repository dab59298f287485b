#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gapcount/errors.hpp"
#include "gapcount/numeric_semigroup.hpp"
#include "gapcount/reduction.hpp"
#include "gapcount/sat.hpp"
#include "gapcount/serialization.hpp"
#include "gapcount/verify.hpp"

using namespace gapcount;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kResource = 3 };

// Verification tables stay under 2^28 entries unless --slow or an explicit
// --budget-entries lifts the ceiling.
constexpr std::uint64_t kFastBudget = std::uint64_t{1} << 28;

struct Options {
  std::vector<std::string> generators;
  std::string generator_file;
  std::string lo, hi, from;
  std::string variant = "gaps";
  std::string formula_path;
  std::string instance_path;
  std::string format = "text";
  std::uint64_t seed = 42;
  std::uint32_t trials = 50;
  std::string k1 = "2-3", k2 = "2-3", k3 = "2";
  std::vector<std::string> variants;
  std::uint64_t budget = 0;
  bool slow = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GeneratorSet generators(const Options& o) {
  std::vector<Natural> values;
  for (const auto& g : o.generators) values.push_back(parse_natural(g));
  if (!o.generator_file.empty()) {
    std::istringstream in(read_file(o.generator_file));
    for (std::string line; std::getline(in, line);) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream tokens(line);
      for (std::string t; tokens >> t;) values.push_back(parse_natural(t));
    }
  }
  return GeneratorSet(std::move(values));
}

std::uint64_t table_budget(const Options& o) {
  return o.budget != 0 ? o.budget : kDefaultTableBudget;
}

std::uint64_t verify_budget(const Options& o) {
  if (o.budget != 0) return o.budget;
  return o.slow ? kDefaultTableBudget : kFastBudget;
}

std::pair<std::uint32_t, std::uint32_t> range(const std::string& text) {
  auto parse = [&](const std::string& s) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw ParseError("bad range '" + text + "'");
    return static_cast<std::uint32_t>(v);
  };
  auto dash = text.find('-');
  if (dash == std::string::npos) {
    auto v = parse(text);
    return {v, v};
  }
  return {parse(text.substr(0, dash)), parse(text.substr(dash + 1))};
}

void print_gaps(const GapReport& report, const std::string& format,
                std::optional<Natural> frobenius = std::nullopt) {
  if (format == "structured") {
    nlohmann::json doc = {{"lo", to_decimal(report.lo)},
                          {"hi", report.hi ? to_decimal(*report.hi) : "inf"},
                          {"gaps", nlohmann::json::array()},
                          {"count", std::to_string(report.count)}};
    for (auto g : report.gaps) doc["gaps"].push_back(std::to_string(g));
    if (frobenius) doc["frobenius"] = to_decimal(*frobenius);
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::cout << "gaps:";
  for (auto g : report.gaps) std::cout << ' ' << g;
  std::cout << "\ncount: " << report.count << "\n";
  if (frobenius) std::cout << "frobenius: " << to_decimal(*frobenius) << "\n";
}

int run_gaps(const Options& o) {
  auto a = generators(o);
  auto report = count_all_gaps(a, table_budget(o));
  std::optional<Natural> g;
  if (!report.gaps.empty()) g = natural(report.gaps.back());
  print_gaps(report, o.format, g);
  return kOk;
}

int run_frobenius(const Options& o) {
  std::cout << to_decimal(frobenius_number(generators(o), table_budget(o))) << "\n";
  return kOk;
}

int run_nonrep(const Options& o) {
  print_gaps(gaps_in_interval(generators(o), parse_natural(o.lo), parse_natural(o.hi),
                              table_budget(o)),
             o.format);
  return kOk;
}

int run_bounded(const Options& o) {
  print_gaps(count_gaps_from(generators(o), parse_natural(o.from), table_budget(o)),
             o.format);
  return kOk;
}

int run_reduce(const Options& o) {
  auto phi = read_formula_file(o.formula_path);
  std::cout << instance_document(build_bundle(parse_variant(o.variant), phi));
  return kOk;
}

void emit(const VerificationReport& report, const std::string& format) {
  if (format == "structured") {
    std::cout << report_document(report);
  } else if (format == "tabular") {
    std::cout << tabular_header() << report_tabular(report);
  } else {
    std::cout << report_text(report);
  }
}

int run_verify(const Options& o) {
  if (o.instance_path.empty() == o.formula_path.empty()) {
    throw CLI::ValidationError("verify needs exactly one of a formula file or --instance");
  }
  ReductionBundle bundle =
      o.instance_path.empty()
          ? build_bundle(parse_variant(o.variant), read_formula_file(o.formula_path))
          : parse_instance_document(read_file(o.instance_path));
  auto start = std::chrono::steady_clock::now();
  auto report = verify(bundle, VerifyOptions{verify_budget(o)});
  emit(report, o.format);
  for (const auto& c : report.checks) {
    std::cerr << "time " << c.name << ": " << c.seconds << " s\n";
  }
  std::cerr << "elapsed: "
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
            << " s\n";
  return report.passed() ? kOk : kCheckFailed;
}

int run_sweep(const Options& o) {
  SweepConfig config;
  config.seed = o.seed;
  config.trials = o.trials;
  std::tie(config.k1_min, config.k1_max) = range(o.k1);
  std::tie(config.k2_min, config.k2_max) = range(o.k2);
  std::tie(config.k3_min, config.k3_max) = range(o.k3);
  if (!o.variants.empty()) {
    config.variants.clear();
    for (const auto& v : o.variants) config.variants.push_back(parse_variant(v));
  }
  config.budget_entries = verify_budget(o);
  auto start = std::chrono::steady_clock::now();
  auto result = sweep(config);
  if (o.format == "structured") {
    std::cout << sweep_document(result);
  } else if (o.format == "tabular") {
    std::cout << sweep_tabular(result);
  } else {
    std::cout << sweep_text(result);
  }
  std::cerr << "elapsed: "
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
            << " s\n";
  return result.passed() ? kOk : kCheckFailed;
}

int run_table(const Options& o) {
  auto phi = read_formula_file(o.formula_path);
  auto bundle = build_gaps_bundle(phi);
  const auto& layout = bundle.layout;

  std::cout << "witness matrix (clauses with exactly one true literal)\n";
  std::cout << WitnessMatrix(phi).render() << "\n";

  std::vector<std::pair<std::string, Natural>> rows;
  for (const auto& lit : all_literals(phi)) {
    std::string label = (lit.variable.block == Block::X ? "x" : "y") +
                        std::to_string(lit.variable.index) + (lit.positive ? " 1" : " 0");
    rows.emplace_back(label, h_literal(phi, layout, lit));
  }
  std::cout << "H\n" << render_zone_table(layout, rows) << "\n";
  std::cout << "interval\n"
            << render_zone_table(layout, {{"lambda", bundle.lambda}, {"mu", bundle.mu}})
            << "\n";

  rows.clear();
  std::vector<std::pair<std::string, Natural>> promoted;
  for (const auto& d : dummies_plus(phi, layout)) {
    std::string tag = d.tag.kind == TagKind::X ? "x" : d.tag.kind == TagKind::Y ? "y" : "c";
    std::uint32_t width = d.tag.kind == TagKind::X ? 3 : 2;
    std::string beta;
    for (std::uint32_t b = width; b-- > 0;) beta += ((d.beta >> b) & 1U) ? '1' : '0';
    (d.promoted ? promoted : rows).emplace_back(tag + std::to_string(d.tag.index) + " " + beta,
                                                d.value);
  }
  std::cout << "D+ (unpromoted)\n" << render_zone_table(layout, rows) << "\n";
  std::cout << "D+ (promoted)\n" << render_zone_table(layout, promoted) << "\n";
  std::string k1 = "x" + std::to_string(phi.k1());
  std::cout << "s1 extras\n"
            << render_zone_table(layout, {{k1 + " 110", bundle.extra_s1[0]},
                                          {k1 + " 111", bundle.extra_s1[1]}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical-semigroup gaps and counting reductions from 3-CNF"};
  app.require_subcommand(1);
  Options o;

  auto add_generators = [&](CLI::App* sub) {
    sub->add_option("generators", o.generators, "Generators as decimal integers");
    sub->add_option("--file", o.generator_file, "File with generators, whitespace separated");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget-entries", o.budget, "Largest table (bits) to allocate");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "tabular", "structured"}));
  };

  auto* gaps = app.add_subcommand("gaps", "List N(A), its size and the Frobenius number");
  add_generators(gaps);
  add_common(gaps);
  auto* frob = app.add_subcommand("frobenius", "Print the Frobenius number");
  add_generators(frob);
  add_common(frob);
  auto* nonrep = app.add_subcommand("nonrep", "Gaps inside [--lo, --hi]");
  add_generators(nonrep);
  add_common(nonrep);
  nonrep->add_option("--lo", o.lo)->required();
  nonrep->add_option("--hi", o.hi)->required();
  auto* bounded = app.add_subcommand("bounded", "Gaps at or above --from");
  add_generators(bounded);
  add_common(bounded);
  bounded->add_option("--from", o.from)->required();

  auto* reduce = app.add_subcommand("reduce", "Emit a gapcount-instance/1 document");
  reduce->add_option("--variant", o.variant)
      ->check(CLI::IsMember({"nonrep", "bounded", "gaps"}));
  reduce->add_option("formula", o.formula_path)->required()->check(CLI::ExistingFile);

  auto* ver = app.add_subcommand("verify", "Check the count identities of one reduction");
  ver->add_option("--variant", o.variant)->check(CLI::IsMember({"nonrep", "bounded", "gaps"}));
  ver->add_option("formula", o.formula_path)->check(CLI::ExistingFile);
  ver->add_option("--instance", o.instance_path, "gapcount-instance/1 document")
      ->check(CLI::ExistingFile);
  ver->add_flag("--slow", o.slow, "Allow tables up to 2^31 entries");
  add_common(ver);

  auto* sw = app.add_subcommand("sweep", "Verify random formulas");
  sw->add_option("--seed", o.seed);
  sw->add_option("--trials", o.trials);
  sw->add_option("--k1", o.k1, "Range such as 2-3");
  sw->add_option("--k2", o.k2);
  sw->add_option("--k3", o.k3);
  sw->add_option("--variant", o.variants, "Repeatable; default nonrep and bounded")
      ->check(CLI::IsMember({"nonrep", "bounded", "gaps"}));
  sw->add_flag("--slow", o.slow, "Allow tables up to 2^31 entries");
  add_common(sw);

  auto* table = app.add_subcommand("table", "Witness matrix and zone tables of a formula");
  table->add_option("formula", o.formula_path)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gaps) return run_gaps(o);
    if (*frob) return run_frobenius(o);
    if (*nonrep) return run_nonrep(o);
    if (*bounded) return run_bounded(o);
    if (*reduce) return run_reduce(o);
    if (*ver) return run_verify(o);
    if (*sw) return run_sweep(o);
    if (*table) return run_table(o);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
