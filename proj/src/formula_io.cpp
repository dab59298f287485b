#include <fstream>
#include <sstream>

#include "gapcount/errors.hpp"
#include "gapcount/sat.hpp"

namespace gapcount {

std::string to_text(const PartitionedFormula& phi) {
  std::string out;
  for (const auto& c : phi.clauses()) {
    const auto& l = c.literals();
    out += to_string(l[0]) + " " + to_string(l[1]) + " " + to_string(l[2]) + "\n";
  }
  return out;
}

namespace {

Literal parse_literal(const std::string& token, std::size_t line) {
  auto fail = [&]() -> ParseError {
    return ParseError("line " + std::to_string(line) + ": bad literal '" +
                      token + "'");
  };
  std::size_t pos = 0;
  bool positive = true;
  if (pos < token.size() && (token[pos] == '-' || token[pos] == '~')) {
    positive = false;
    ++pos;
  }
  if (pos >= token.size()) throw fail();
  Block block;
  switch (token[pos]) {
    case 'x': case 'X': block = Block::X; break;
    case 'y': case 'Y': block = Block::Y; break;
    default: throw fail();
  }
  ++pos;
  if (pos >= token.size() || token.size() - pos > 9) throw fail();
  std::uint32_t index = 0;
  for (; pos < token.size(); ++pos) {
    if (token[pos] < '0' || token[pos] > '9') throw fail();
    index = index * 10 + static_cast<std::uint32_t>(token[pos] - '0');
  }
  if (index == 0) throw fail();
  return {{block, index}, positive};
}

}  // namespace

PartitionedFormula parse_formula(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Clause> clauses;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::vector<Literal> literals;
    for (std::string token; tokens >> token;) {
      literals.push_back(parse_literal(token, number));
    }
    if (literals.empty()) continue;
    if (literals.size() != 3) {
      throw ParseError("line " + std::to_string(number) + ": expected 3 literals, got " +
                       std::to_string(literals.size()));
    }
    try {
      clauses.emplace_back(literals[0], literals[1], literals[2]);
    } catch (const PreconditionError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  try {
    return PartitionedFormula(std::move(clauses));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid formula: ") + e.what());
  }
}

PartitionedFormula read_formula_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open formula file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_formula(buffer.str());
}

}  // namespace gapcount
