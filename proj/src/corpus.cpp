#include <fstream>
#include <sstream>
#include <stdexcept>

#include "meadow/errors.hpp"
#include "meadow/lint.hpp"
#include "meadow/parser.hpp"

namespace meadow {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<Statement> parse_corpus(std::string_view text) {
  std::vector<Statement> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    StatementKind kind;
    std::string_view body;
    if (line.starts_with("hyp:")) {
      kind = StatementKind::Hypothesis;
      body = line.substr(4);
    } else if (line.starts_with("claim:")) {
      kind = StatementKind::Claim;
      body = line.substr(6);
    } else {
      throw SyntaxError("line " + std::to_string(line_no) + ": expected 'hyp:' or 'claim:'", 0);
    }
    try {
      out.push_back({out.size(), kind, parse_formula(body)});
    } catch (const SyntaxError& e) {
      throw SyntaxError("line " + std::to_string(line_no) + ": " + e.what(), e.position());
    }
  }
  return out;
}

std::vector<Statement> load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read corpus '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

}  // namespace meadow
