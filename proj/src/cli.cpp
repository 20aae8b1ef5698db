/* Copyright 2026 The hopf-forge Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "hopf/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "hopf/axiomlab.hpp"
#include "hopf/expr.hpp"
#include "hopf/instances.hpp"
#include "hopf/render.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace hopf::cli {

namespace {

struct Settings {
  std::string instance = "free";
  std::string alphabet;  // instance default when empty
  std::uint64_t bound = 0;
  bool bound_set = false;
  std::string conditions = "all";
  std::string format = "text";
  std::uint64_t budget = 1'000'000;
  bool serial = false;
};

std::uint64_t default_bound(const std::string& instance) {
  if (instance == "polynomial") return 6;
  if (instance == "graph") return 4;
  if (instance == "forest") return 5;
  return 4;
}

// key=value per line, '#' comments. Unknown keys are rejected so typos in
// sweep configs do not pass silently.
void load_config(const std::string& path, Settings* s) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file '" + path + "'");
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected key=value in config", lineno, 1);
    auto trim = [](std::string v) {
      const auto b = v.find_first_not_of(" \t\r");
      const auto e = v.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "instance")
      s->instance = value;
    else if (key == "alphabet")
      s->alphabet = value;
    else if (key == "bound") {
      s->bound = std::stoull(value);
      s->bound_set = true;
    } else if (key == "conditions")
      s->conditions = value;
    else if (key == "format")
      s->format = value;
    else if (key == "budget")
      s->budget = std::stoull(value);
    else
      throw ParseError("unknown config key '" + key + "'", lineno, 1);
  }
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_report_text(std::ostream& out, const axiomlab::Report& r, int indent = 0) {
  const std::string pad(indent, ' ');
  std::ostringstream ms;
  ms.precision(1);
  ms << std::fixed << r.wall_ms;
  out << pad << r.rule << " " << r.condition << ": " << axiomlab::verdict_name(r.verdict)
      << " (" << r.cases << " cases, " << ms.str() << " ms)\n";
  if (r.counterexample && r.parts.empty()) {
    const axiomlab::Counterexample& cx = *r.counterexample;
    out << pad << "  objects:";
    for (const ObjectKey& k : cx.objects) out << " " << (k.empty() ? "void" : k);
    out << "\n";
    if (!cx.lhs.empty()) out << pad << "  lhs: " << cx.lhs << "\n";
    if (!cx.rhs.empty()) out << pad << "  rhs: " << cx.rhs << "\n";
    if (!cx.note.empty()) out << pad << "  note: " << cx.note << "\n";
  }
  for (const axiomlab::Report& p : r.parts) print_report_text(out, p, indent + 2);
}

nlohmann::json value_to_json(const Rule& rule, const expr::Value& v) {
  using nlohmann::json;
  json j;
  switch (v.kind) {
    case expr::Value::Kind::kScalar:
      j["kind"] = "scalar";
      j["value"] = to_string(v.scalar);
      break;
    case expr::Value::Kind::kElement: {
      j["kind"] = "element";
      json terms = json::array();
      for (const auto& [key, coeff] : v.element)
        terms.push_back({{"coeff", to_string(coeff)},
                         {"key", instances::print_object(rule, key)}});
      j["terms"] = terms;
      break;
    }
    case expr::Value::Kind::kTensor: {
      j["kind"] = "tensor";
      json terms = json::array();
      for (const auto& [pair, coeff] : v.tensor)
        terms.push_back({{"coeff", to_string(coeff)},
                         {"key", instances::print_object(rule, pair.first) + " (x) " +
                                     instances::print_object(rule, pair.second)}});
      j["terms"] = terms;
      break;
    }
  }
  return j;
}

int run_eval(const Settings& s, const std::string& expression, std::ostream& out) {
  const Rule rule = instances::make_rule(s.instance, s.alphabet);
  const expr::Expression ast = expr::parse_expression(expression, rule);
  AntipodeMemo memo(rule.name);
  const expr::Value v = expr::evaluate(rule, ast, &memo);
  if (s.format == "json")
    out << value_to_json(rule, v).dump() << "\n";
  else
    out << expr::value_to_string(rule, v) << "\n";
  return 0;
}

int run_check(const Settings& s, std::ostream& out) {
  const Rule rule = instances::make_rule(s.instance, s.alphabet);
  const std::uint64_t bound = s.bound_set ? s.bound : default_bound(s.instance);
  const axiomlab::Domain dom = axiomlab::Domain::enumerate(rule, bound);
  axiomlab::CheckOptions opts;
  opts.parallel = !s.serial;
  opts.budget = s.budget;

  std::vector<Cond> conds;
  bool hopf = false;
  for (const std::string& item : split_csv(s.conditions)) {
    if (item == "all") {
      conds.assign(std::begin(kAllConds), std::end(kAllConds));
    } else if (item == "hopf") {
      hopf = true;
    } else if (auto c = cond_from_name(item)) {
      conds.push_back(*c);
    } else {
      throw Error("unknown condition '" + item + "' (use C1..C4, D1..D5, CD1, CD2, all, hopf)");
    }
  }

  std::vector<axiomlab::Report> reports;
  for (Cond c : conds) reports.push_back(axiomlab::check_condition(rule, c, dom, opts));
  if (hopf) reports.push_back(axiomlab::check_hopf(rule, dom, opts));

  if (s.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const axiomlab::Report& r : reports)
      arr.push_back(nlohmann::json::parse(r.to_json()));
    out << arr.dump() << "\n";
  } else {
    for (const axiomlab::Report& r : reports) print_report_text(out, r);
  }

  // A claimed condition that does not hold is a verification failure;
  // failures of undeclared conditions are expected findings.
  for (const axiomlab::Report& r : reports) {
    if (r.verdict == axiomlab::Verdict::kHolds) continue;
    if (r.condition == "hopf") return 1;
    if (auto c = cond_from_name(r.condition); c && rule.declared.has(*c)) return 1;
  }
  return 0;
}

int run_basis(const Settings& s, std::ostream& out) {
  const Rule rule = instances::make_rule(s.instance, s.alphabet);
  const std::uint64_t bound = s.bound_set ? s.bound : default_bound(s.instance);
  const std::vector<ObjectKey> basis = instances::enumerate_basis(rule, bound);
  if (s.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const ObjectKey& k : basis)
      arr.push_back({{"key", instances::print_object(rule, k)},
                     {"size", rule.size_fn(k)}});
    out << arr.dump() << "\n";
  } else {
    for (const ObjectKey& k : basis) out << instances::print_object(rule, k) << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings settings;
  try {
    if (const char* config = std::getenv("HOPF_FORGE_CONFIG"); config && *config)
      load_config(config, &settings);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"combinatorial composition/decomposition Hopf algebra engine"};
  app.require_subcommand(1);

  std::string expression;
  auto add_common = [&](CLI::App* sub, bool with_bound) {
    sub->add_option("--instance", settings.instance,
                    "one of: free, symmetric, shuffle, polynomial, graph, forest");
    sub->add_option("--alphabet", settings.alphabet, "letters in increasing order");
    sub->add_option("--format", settings.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--budget", settings.budget, "enumeration budget");
    if (with_bound)
      sub->add_option("--bound", settings.bound, "maximum object size")
          ->each([&](const std::string&) { settings.bound_set = true; });
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate an expression");
  add_common(eval, false);
  eval->add_option("expression", expression, "expression to evaluate")->required();

  CLI::App* check = app.add_subcommand("check", "verify conditions on a bounded domain");
  add_common(check, true);
  check->add_option("--conditions", settings.conditions,
                    "comma list of C1..CD2, or all, or hopf");
  check->add_flag("--serial", settings.serial, "disable the parallel sweep");

  CLI::App* basis = app.add_subcommand("basis", "enumerate basis objects");
  add_common(basis, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(eval)) return run_eval(settings, expression, out);
    if (app.got_subcommand(check)) return run_check(settings, out);
    if (app.got_subcommand(basis)) return run_basis(settings, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownInstance& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const EmptyAlphabet& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const MalformedObject& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConditionNotDeclared& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hopf::cli
