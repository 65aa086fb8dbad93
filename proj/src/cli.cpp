#include "meadow/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "meadow/axioms.hpp"
#include "meadow/errors.hpp"
#include "meadow/lint.hpp"
#include "meadow/logic.hpp"
#include "meadow/parser.hpp"
#include "meadow/printer.hpp"

namespace meadow {

namespace {

using nlohmann::json;

struct CliConfig {
  std::string carrier = "rationals";
  std::string mode = "total";
  std::string logic = "lpmd";
  std::vector<std::string> bindings;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::vector<std::string> extra;
  bool classify = false;
  std::string convention = "division";
  std::string input;  // term, formula, family or corpus path
};

void add_structure_flags(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--carrier", cfg.carrier, "rationals, gf<p>, or probe:<q>,<q>,...");
  cmd->add_option("--mode", cfg.mode, "total, punch-inv0, punch-div-all, punch-div-nonzero");
  cmd->add_option("-b,--bind", cfg.bindings, "variable binding, e.g. x=2/3");
}

void add_format_flag(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

StructureSpec structure(const CliConfig& cfg) {
  return StructureSpec{Carrier::parse(cfg.carrier), parse_mode(cfg.mode)};
}

Env bindings(const CliConfig& cfg, const Carrier& carrier) {
  Env env;
  for (const auto& b : cfg.bindings) {
    auto eq = b.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("binding '" + b + "' is not name=value");
    std::string name = b.substr(0, eq);
    if (!is_valid_identifier(name)) throw std::invalid_argument("bad variable name in binding '" + b + "'");
    env.insert_or_assign(name, carrier.from_rational(Rational::parse(b.substr(eq + 1))));
  }
  return env;
}

json env_json(const Env& env) {
  json j = json::object();
  for (const auto& [k, v] : env) j[k] = v.str();
  return j;
}

int cmd_eval(const CliConfig& cfg, std::ostream& out) {
  StructureSpec s = structure(cfg);
  Env env = bindings(cfg, s.carrier);
  Term t = parse_term(cfg.input);
  PartialValue v = s.mode == Mode::Total ? PartialValue::defined(eval_total(t, env, s)) : eval_partial(t, env, s);
  if (cfg.format == "json") {
    json j{{"command", "eval"}, {"term", print_term(t)}, {"structure", s.name()}, {"defined", v.is_defined()},
           {"value", v.str()}};
    out << j.dump(2) << '\n';
  } else {
    out << v.str() << '\n';
  }
  return v.is_defined() ? kExitOk : kExitThirdValue;
}

int cmd_logic(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  StructureSpec s = structure(cfg);
  Env env = bindings(cfg, s.carrier);
  LogicConfig logic = LogicConfig::parse(cfg.logic);
  Formula f = parse_formula(cfg.input);
  bool probe_relative = s.carrier.kind() == Carrier::Kind::FiniteProbeSet && has_quantifier(f);

  std::string shown;
  Truth value;
  if (cfg.classify) {
    if (!is_closed(f)) {
      err << "error: --classify needs a sentence (no free variables)\n";
      return kExitEvaluation;
    }
    SentenceClass c = classify_sentence(f, logic, s);
    value = std::holds_alternative<Usable>(c) ? std::get<Usable>(c).value : Truth::U;
    shown = to_string(c);
  } else {
    value = eval_formula(f, logic, env, s);
    shown = std::string(1, truth_char(value));
  }

  if (cfg.format == "json") {
    json j{{"command", "logic"}, {"formula", print_formula(f)}, {"structure", s.name()},
           {"logic", logic.name()}, {"value", std::string(1, truth_char(value))}, {"probe_relative", probe_relative}};
    if (cfg.classify) j["classification"] = shown;
    out << j.dump(2) << '\n';
  } else {
    out << shown << (probe_relative ? " (probe-relative)" : "") << '\n';
  }
  return value == Truth::U ? kExitThirdValue : kExitOk;
}

int cmd_axioms(const CliConfig& cfg, std::ostream& out) {
  StructureSpec s{Carrier::parse(cfg.carrier), Mode::Total};
  Strategy strategy = s.carrier.enumerable() ? Strategy{Exhaustive{}} : Strategy{RandomSample{cfg.samples, cfg.seed}};
  std::vector<AxiomReport> reports = verify_catalog(s, strategy);
  for (const auto& text : cfg.extra) reports.push_back(verify_law(parse_formula(text), s, strategy, "extra"));

  bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) {
      json j{{"name", r.name}, {"axiom", print_formula(r.law)}, {"passed", r.passed}, {"samples", r.samples}};
      if (r.witness) j["witness"] = env_json(*r.witness);
      arr.push_back(std::move(j));
    }
    out << json{{"command", "axioms"}, {"carrier", s.carrier.name()}, {"all_passed", all}, {"reports", arr}}.dump(2)
        << '\n';
  } else {
    for (const auto& r : reports) out << r.line() << '\n';
  }
  return all ? kExitOk : kExitFailure;
}

int cmd_tables(const CliConfig& cfg, std::ostream& out) {
  ConnectiveTable table = connective_table(parse_connective_family(cfg.input));
  constexpr Truth order[] = {Truth::T, Truth::F, Truth::U};
  auto idx = [](Truth v) { return static_cast<int>(v); };

  if (cfg.format == "json") {
    json j{{"command", "tables"}, {"family", family_name(table.family)}};
    for (Truth a : order) j["not"][std::string(1, truth_char(a))] = std::string(1, truth_char(table.neg[idx(a)]));
    for (Truth a : order) {
      for (Truth b : order) {
        std::string key{truth_char(a), truth_char(b)};
        j["and"][key] = std::string(1, truth_char(table.conj[idx(a)][idx(b)]));
        j["or"][key] = std::string(1, truth_char(table.disj[idx(a)][idx(b)]));
        j["implies"][key] = std::string(1, truth_char(table.implies[idx(a)][idx(b)]));
      }
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  out << "connectives: " << family_name(table.family) << '\n';
  out << "not:\n";
  for (Truth a : order) out << "  !" << truth_char(a) << " -> " << truth_char(table.neg[idx(a)]) << '\n';
  auto binary = [&](const char* title, const char* op, const auto& tab) {
    out << title << ":\n";
    for (Truth a : order) {
      for (Truth b : order) {
        out << "  " << truth_char(a) << ' ' << op << ' ' << truth_char(b) << " -> " << truth_char(tab[idx(a)][idx(b)])
            << '\n';
      }
    }
  };
  binary("and", "&", table.conj);
  binary("or", "|", table.disj);
  binary("implies", "=>", table.implies);
  return kExitOk;
}

int cmd_lint(const CliConfig& cfg, std::ostream& out) {
  Convention convention = parse_convention(cfg.convention);
  std::vector<Statement> corpus = load_corpus(cfg.input);
  std::vector<Verdict> verdicts = lint(corpus, convention);

  bool any_violation = false;
  bool any_unknown = false;
  for (const auto& v : verdicts) {
    any_violation = any_violation || v.kind == VerdictKind::Violation;
    any_unknown = any_unknown || v.kind == VerdictKind::Unknown;
  }

  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& v : verdicts) {
      json j{{"statement", v.statement},
             {"pos", v.occurrence.pos},
             {"operator", v.occurrence.op == OperatorKind::Div ? "div" : "inv"},
             {"guarded", print_term(v.occurrence.guarded)},
             {"verdict", v.verdict_name()},
             {"detail", v.detail()}};
      if (v.certificate) j["certificate"] = v.certificate->str();
      if (v.witness) j["witness"] = env_json(*v.witness);
      if (v.kind == VerdictKind::Unknown) j["reason"] = v.reason;
      arr.push_back(std::move(j));
    }
    out << json{{"command", "lint"}, {"convention", convention_name(convention)}, {"verdicts", arr}}.dump(2) << '\n';
  } else {
    for (const auto& v : verdicts) out << v.line() << '\n';
  }
  if (any_violation) return kExitFailure;
  if (any_unknown) return kExitThirdValue;
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for Komori fields, punched partial variants, three-valued logics and division linting",
               "meadow"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* eval = app.add_subcommand("eval", "Evaluate a term");
  eval->add_option("term", cfg.input, "term to evaluate")->required();
  add_structure_flags(eval, cfg);
  add_format_flag(eval, cfg);

  auto* logic = app.add_subcommand("logic", "Evaluate a formula in a three-valued logic");
  logic->add_option("formula", cfg.input, "formula to evaluate")->required();
  add_structure_flags(logic, cfg);
  logic->add_option("--logic", cfg.logic, "lpmd or <equality>,<connectives>,<quantifiers>");
  logic->add_flag("--classify", cfg.classify, "apply the two-valued logic convention");
  add_format_flag(logic, cfg);

  auto* axioms = app.add_subcommand("axioms", "Check the meadow axiom catalog");
  axioms->add_option("--carrier", cfg.carrier, "rationals or gf<p>");
  axioms->add_option("--samples", cfg.samples, "random samples over the rationals");
  axioms->add_option("--seed", cfg.seed, "sampling seed");
  axioms->add_option("--extra", cfg.extra, "additional law to check");
  add_format_flag(axioms, cfg);

  auto* tables = app.add_subcommand("tables", "Print connective truth tables");
  tables->add_option("family", cfg.input, "bochvar, kleene, mccarthy-left or mccarthy-right")->required();
  add_format_flag(tables, cfg);

  auto* lint_cmd = app.add_subcommand("lint", "Lint a statement corpus against a division convention");
  lint_cmd->add_option("corpus", cfg.input, "corpus file")->required();
  lint_cmd->add_option("--convention", cfg.convention, "inversive, division or liberal-division");
  add_format_flag(lint_cmd, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(cfg, out);
    if (logic->parsed()) return cmd_logic(cfg, out, err);
    if (axioms->parsed()) return cmd_axioms(cfg, out);
    if (tables->parsed()) return cmd_tables(cfg, out);
    if (lint_cmd->parsed()) return cmd_lint(cfg, out);
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnboundVariable& e) {
    err << "error: " << e.what() << '\n';
    return kExitEvaluation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitEvaluation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace meadow
