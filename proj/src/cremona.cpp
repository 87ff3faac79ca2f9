#include "sympstairs/cremona.hpp"

#include <sstream>

namespace sympstairs {

BlowupVector<QuadNum> parse_vector(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  const auto semi = s.find(';');
  if (semi == std::string::npos) throw DomainError("vector needs 'head;tail': '" + std::string(text) + "'");

  BlowupVector<QuadNum> v;
  v.basis = Basis::ball;
  v.head = QuadNum::parse(s.substr(0, semi));
  std::string_view rest(s);
  rest.remove_prefix(semi + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    v.tail.push_back(QuadNum::parse(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return v;
}

ParsedTrace parse_trace(std::string_view text) {
  ParsedTrace out;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_final = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto space = line.find(' ');
    if (space == std::string::npos) throw DomainError("malformed trace line: '" + line + "'");
    const std::string prefix = line.substr(0, space);
    const std::string body = line.substr(space + 1);
    if (prefix == "=") {
      out.final = parse_vector(body);
      have_final = true;
    } else {
      out.steps.emplace_back(QuadNum::parse(prefix), parse_vector(body));
    }
  }
  if (!have_final) throw DomainError("trace has no final vector");
  return out;
}

}  // namespace sympstairs
