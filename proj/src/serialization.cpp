#include "gapcount/serialization.hpp"

#include <algorithm>

#include <json.hpp>

#include "gapcount/errors.hpp"

namespace gapcount {

using nlohmann::json;

namespace {

json decimals(const std::vector<Natural>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

json formula_lines(const PartitionedFormula& phi) {
  json out = json::array();
  for (const auto& c : phi.clauses()) {
    const auto& l = c.literals();
    out.push_back(to_string(l[0]) + " " + to_string(l[1]) + " " + to_string(l[2]));
  }
  return out;
}

PartitionedFormula formula_from(const json& lines) {
  std::string text;
  for (const auto& line : lines) text += line.get<std::string>() + "\n";
  return parse_formula(text);
}

json check_json(const IdentityCheck& c) {
  return {{"name", c.name},         {"relation", c.relation},
          {"lhs", to_decimal(c.lhs)}, {"rhs", to_decimal(c.rhs)},
          {"pass", c.pass},         {"mandatory", c.mandatory},
          {"detail", decimals(c.detail)}};
}

json report_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back(check_json(c));
  return {{"schema", kReportSchema},
          {"variant", to_string(report.variant)},
          {"k1", report.formula.k1()},
          {"k2", report.formula.k2()},
          {"k3", report.formula.k3()},
          {"formula", formula_lines(report.formula)},
          {"checks", checks},
          {"passed", report.passed()}};
}

std::vector<Natural> sorted(std::vector<Natural> values) {
  std::sort(values.begin(), values.end());
  return values;
}

std::vector<Natural> naturals_from(const json& array) {
  std::vector<Natural> out;
  for (const auto& v : array) out.push_back(parse_natural(v.get<std::string>()));
  return out;
}

std::string pass_word(bool pass) { return pass ? "pass" : "FAIL"; }

}  // namespace

std::string instance_document(const ReductionBundle& b) {
  json doc = {{"schema", kInstanceSchema},
              {"variant", to_string(b.variant)},
              {"k1", b.layout.k1},
              {"k2", b.layout.k2},
              {"k3", b.layout.k3},
              {"formula", formula_lines(b.formula)},
              {"d0", to_decimal(b.d0)},
              {"generators", decimals(b.t0().elements())},
              {"lambda", to_decimal(b.lambda)},
              {"mu", to_decimal(b.mu)}};
  if (b.variant == Variant::Gaps) {
    doc["generators_t1"] = decimals(b.t1().elements());
    doc["f_closed_form"] = to_decimal(b.f_closed_form);
  }
  return doc.dump(2) + "\n";
}

ReductionBundle parse_instance_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance is not JSON: ") + e.what());
  }
  try {
    if (doc.at("schema").get<std::string>() != kInstanceSchema) {
      throw ParseError("unsupported schema " + doc.at("schema").get<std::string>());
    }
    ReductionBundle b = build_bundle(parse_variant(doc.at("variant").get<std::string>()),
                                     formula_from(doc.at("formula")));
    auto mismatch = [](const std::string& field) {
      return ParseError("instance field '" + field +
                        "' disagrees with the reduction of its formula");
    };
    if (sorted(naturals_from(doc.at("generators"))) != b.t0().elements()) {
      throw mismatch("generators");
    }
    if (parse_natural(doc.at("lambda").get<std::string>()) != b.lambda) throw mismatch("lambda");
    if (parse_natural(doc.at("mu").get<std::string>()) != b.mu) throw mismatch("mu");
    if (b.variant == Variant::Gaps &&
        sorted(naturals_from(doc.at("generators_t1"))) != b.t1().elements()) {
      throw mismatch("generators_t1");
    }
    return b;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
}

std::string report_document(const VerificationReport& report) {
  return report_json(report).dump(2) + "\n";
}

std::string sweep_document(const SweepResult& result) {
  const auto& c = result.config;
  json variants = json::array();
  for (auto v : c.variants) variants.push_back(to_string(v));
  json trials = json::array();
  for (const auto& t : result.trials) {
    json reports = json::array();
    for (const auto& r : t.reports) reports.push_back(report_json(r));
    json entry = {{"trial", t.trial},
                  {"formula_seed", std::to_string(t.formula_seed)},
                  {"k1", t.k1},
                  {"k2", t.k2},
                  {"k3", t.k3},
                  {"reports", reports},
                  {"passed", t.passed()}};
    if (t.formula) entry["formula"] = formula_lines(*t.formula);
    if (!t.error.empty()) entry["error"] = t.error;
    trials.push_back(entry);
  }
  json failures = json::object();
  for (const auto& [name, n] : result.summary.failures) failures[name] = n;
  json doc = {{"schema", kReportSchema},
              {"config",
               {{"seed", std::to_string(c.seed)},
                {"trials", c.trials},
                {"k1", {c.k1_min, c.k1_max}},
                {"k2", {c.k2_min, c.k2_max}},
                {"k3", {c.k3_min, c.k3_max}},
                {"variants", variants}}},
              {"trials", trials},
              {"summary",
               {{"trials", result.summary.trials},
                {"passed", result.summary.passed},
                {"failed", result.summary.failed},
                {"errored", result.summary.errored},
                {"failures", failures}}},
              {"passed", result.passed()}};
  return doc.dump(2) + "\n";
}

std::string tabular_header() { return "trial\tcheck\tlhs\trhs\tpass\n"; }

std::string report_tabular(const VerificationReport& report, std::uint32_t trial) {
  std::string out;
  for (const auto& c : report.checks) {
    out += std::to_string(trial) + "\t" + to_string(report.variant) + "/" + c.name +
           "\t" + to_decimal(c.lhs) + "\t" + to_decimal(c.rhs) + "\t" +
           (c.pass ? "1" : "0") + "\n";
  }
  return out;
}

std::string sweep_tabular(const SweepResult& result) {
  std::string out = tabular_header();
  for (const auto& t : result.trials) {
    for (const auto& r : t.reports) out += report_tabular(r, t.trial);
  }
  return out;
}

std::string report_text(const VerificationReport& report) {
  std::string out = "variant: " + to_string(report.variant) +
                    "  k1=" + std::to_string(report.formula.k1()) +
                    " k2=" + std::to_string(report.formula.k2()) +
                    " k3=" + std::to_string(report.formula.k3()) + "\n";
  for (const auto& c : report.checks) {
    out += "  [" + (c.pass || c.mandatory ? pass_word(c.pass) : std::string("diff")) + "] " + c.name + ": " + to_decimal(c.lhs) +
           " " + c.relation + " " + to_decimal(c.rhs);
    if (!c.mandatory) out += " (informational)";
    out += "\n";
    if (!c.detail.empty()) {
      out += "      e.g.";
      for (const auto& d : c.detail) out += " " + to_decimal(d);
      out += "\n";
    }
  }
  out += "result: " + std::string(report.passed() ? "pass" : "FAIL") + "\n";
  return out;
}

std::string sweep_text(const SweepResult& result) {
  std::string out;
  for (const auto& t : result.trials) {
    out += "trial " + std::to_string(t.trial) + " (k1=" + std::to_string(t.k1) +
           " k2=" + std::to_string(t.k2) + " k3=" + std::to_string(t.k3) + "): ";
    if (!t.error.empty()) {
      out += "error: " + t.error + "\n";
      continue;
    }
    out += pass_word(t.passed()) + "\n";
    if (!t.passed()) {
      out += "  formula:";
      for (const auto& line : formula_lines(*t.formula)) {
        out += " (" + line.get<std::string>() + ")";
      }
      out += "\n";
      for (const auto& r : t.reports) {
        for (const auto& c : r.checks) {
          if (c.pass || !c.mandatory) continue;
          out += "  " + to_string(r.variant) + "/" + c.name + ": " +
                 to_decimal(c.lhs) + " vs " + to_decimal(c.rhs) + "\n";
        }
      }
    }
  }
  const auto& s = result.summary;
  out += "summary: " + std::to_string(s.trials) + " trials, " +
         std::to_string(s.passed) + " passed, " + std::to_string(s.failed) +
         " failed, " + std::to_string(s.errored) + " errored\n";
  for (const auto& [name, n] : s.failures) {
    out += "  failing check " + name + ": " + std::to_string(n) + " trials\n";
  }
  return out;
}

}  // namespace gapcount
