// Command line front end. Every subcommand parses flags, calls the library,
// and prints either a single JSON line {"ok": ..., "result": ...} (default)
// or a short text form. Exit codes: 0 success (including negative answers
// like "does not verify"), 1 domain errors, 2 parse errors. Big integers are
// serialized as decimal strings. CONTINUANT_MAX_STEPS (default 64) caps every
// walk length requested via flags.

#include <condio/condio.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using condio::Int;
using condio::IntTuple;
using json = nlohmann::ordered_json;

struct CommandConfig {
  std::string format = "json";
  std::string poly_text;
  int t = 1;
  int n = 2;
  std::vector<std::string> words;  // trailing tuple arguments
};

int max_steps_cap() {
  const char* v = std::getenv("CONTINUANT_MAX_STEPS");
  if (v == nullptr || *v == '\0') return 64;
  Int parsed = condio::parse_int(v);
  if (parsed < 0) parsed = 0;
  if (parsed > 1000000) parsed = 1000000;
  return static_cast<int>(parsed.get_si());
}

int capped(int requested) { return std::min(requested, max_steps_cap()); }

json tuple_json(const IntTuple& xs) {
  json arr = json::array();
  for (const Int& x : xs) arr.push_back(x.get_str());
  return arr;
}

void emit_ok(const CommandConfig& cfg, const json& result, const std::string& text) {
  if (cfg.format == "json") {
    json line;
    line["ok"] = true;
    line["result"] = result;
    std::cout << line.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

IntTuple parse_words(const std::vector<std::string>& words) {
  return condio::parse_tuple(words);
}

json parity_class_json(const condio::ConditionReport& rep) {
  json arr = json::array();
  if (rep.even_admissible) arr.push_back(0);
  if (rep.odd_admissible) arr.push_back(1);
  return arr;
}

std::string parity_class_text(const condio::ConditionReport& rep) {
  std::string s = "{";
  if (rep.even_admissible) s += "0";
  if (rep.odd_admissible) s += s.size() > 1 ? ",1" : "1";
  return s + "}";
}

// eval --t T -- x0 x1 ...
int cmd_eval(const CommandConfig& cfg) {
  IntTuple xs = parse_words(cfg.words);
  Int k = condio::continuant(cfg.t, xs);
  emit_ok(cfg, k.get_str(), k.get_str());
  return 0;
}

// check --poly P --t T --n N [-- x0 ... xN]
int cmd_check(const CommandConfig& cfg) {
  condio::IntPolynomial poly = condio::IntPolynomial::parse(cfg.poly_text);
  condio::ConditionReport rep = condio::check_condition(poly, cfg.t, cfg.n);
  json result;
  result["holds"] = rep.holds;
  if (rep.constant) result["constant"] = rep.constant->get_str();
  result["parity_class"] = parity_class_json(rep);
  std::string text = std::string("holds=") + (rep.holds ? "true" : "false");
  if (rep.constant) text += " constant=" + rep.constant->get_str();
  text += " parity=" + parity_class_text(rep);

  if (!cfg.words.empty()) {
    condio::EquationInstance inst(poly, cfg.t, cfg.n);  // throws if not admissible
    bool verified = condio::verify_solution(inst, parse_words(cfg.words));
    result["verified"] = verified;
    text += std::string(" verified=") + (verified ? "true" : "false");
  }
  emit_ok(cfg, result, text);
  return 0;
}

// lift --poly P --t T --n N -- x0 ... x{N-1}
int cmd_lift(const CommandConfig& cfg) {
  condio::EquationInstance inst(condio::IntPolynomial::parse(cfg.poly_text), cfg.t, cfg.n);
  IntTuple prefix = parse_words(cfg.words);
  condio::LiftResult lifted = condio::lift(inst, prefix);
  if (lifted.kind == condio::LiftKind::not_liftable)
    throw std::invalid_argument("not liftable: " + condio::format_tuple(prefix));
  json result;
  if (lifted.kind == condio::LiftKind::free_choice) {
    result["kind"] = "free";
    emit_ok(cfg, result, "free");
    return 0;
  }
  IntTuple full = prefix;
  full.push_back(*lifted.value);
  result["kind"] = "unique";
  result["value"] = lifted.value->get_str();
  result["solution"] = tuple_json(full);
  emit_ok(cfg, result, "unique " + lifted.value->get_str() + " -> " + condio::format_tuple(full));
  return 0;
}

condio::Chain build_chain(const CommandConfig& cfg, int left, int right) {
  condio::EquationInstance inst(condio::IntPolynomial::parse(cfg.poly_text), cfg.t, cfg.n);
  condio::Solution seed(inst, parse_words(cfg.words));
  return condio::chain_window(seed, capped(left), capped(right));
}

// extend --poly P --t T --n N [--left L] [--right R] -- x0 ... xN
int cmd_extend(const CommandConfig& cfg, int left, int right) {
  condio::Chain chain = build_chain(cfg, left, right);
  json result;
  result["elements"] = tuple_json(chain.elements());
  result["base_offset"] = chain.base_offset();
  result["left_end"] = condio::to_string(chain.left_state());
  result["right_end"] = condio::to_string(chain.right_state());
  std::string text;
  for (const Int& x : chain.elements()) {
    if (!text.empty()) text += " ";
    text += x.get_str();
  }
  text += " [left=" + condio::to_string(chain.left_state()) +
          " right=" + condio::to_string(chain.right_state()) + "]";
  emit_ok(cfg, result, text);
  return 0;
}

// chain --poly P --t T --n N [--left L] [--right R] -- x0 ... xN
int cmd_chain(const CommandConfig& cfg, int left, int right) {
  condio::Chain chain = build_chain(cfg, left, right);
  // The chain's serialization is itself the result; print it verbatim in both
  // formats so consumers can feed it back to the library.
  std::cout << chain.to_json() << "\n";
  return 0;
}

// units --t T --n N --bound B [--target {1,-1}]
int cmd_units(const CommandConfig& cfg, long bound, long target) {
  auto tuples = condio::enumerate_unit_tuples(cfg.t, cfg.n, bound, target);
  json result;
  result["count"] = tuples.size();
  json arr = json::array();
  for (const auto& xs : tuples) arr.push_back(tuple_json(xs));
  result["tuples"] = std::move(arr);
  std::string text;
  for (const auto& xs : tuples) {
    if (!text.empty()) text += "\n";
    text += condio::format_tuple(xs);
  }
  if (text.empty()) text = "(none)";
  emit_ok(cfg, result, text);
  return 0;
}

// families --t T --n N --bound B
int cmd_families(const CommandConfig& cfg, long bound) {
  auto tuples = condio::family_tuples(cfg.t, cfg.n, bound);
  json result;
  result["count"] = tuples.size();
  json arr = json::array();
  for (const auto& xs : tuples) arr.push_back(tuple_json(xs));
  result["tuples"] = std::move(arr);
  std::string text;
  for (const auto& xs : tuples) {
    if (!text.empty()) text += "\n";
    text += condio::format_tuple(xs);
  }
  if (text.empty()) text = "(none)";
  emit_ok(cfg, result, text);
  return 0;
}

// classify -- x0 x1 x2
int cmd_classify(const CommandConfig& cfg) {
  IntTuple xs = parse_words(cfg.words);
  condio::N2Classification c =
      condio::classify_n2_solution(xs[0], xs[1], xs[2], max_steps_cap());
  json result;
  result["category"] = condio::to_string(c.category);
  if (c.parameter) result["parameter"] = c.parameter->get_str();
  std::string text = condio::to_string(c.category);
  if (c.parameter) text += " a=" + c.parameter->get_str();
  emit_ok(cfg, result, text);
  return 0;
}

// map --poly P --t T --expr E [--complete] -- x0 ... ; or map --t T --list
int cmd_map(const CommandConfig& cfg, const std::string& expr, bool complete_after, bool list) {
  if (list) {
    json arr = json::array();
    std::string text;
    for (const auto& rule : condio::valid_compositions(cfg.t)) {
      json r;
      r["expr"] = rule.expr;
      r["requires"] = rule.requirement;
      arr.push_back(std::move(r));
      if (!text.empty()) text += "\n";
      text += rule.expr;
      if (!rule.requirement.empty()) text += "  (requires " + rule.requirement + ")";
    }
    json result;
    result["compositions"] = std::move(arr);
    emit_ok(cfg, result, text);
    return 0;
  }

  if (expr.empty()) throw condio::parse_error("map: --expr is required unless --list is given");
  if (cfg.poly_text.empty()) throw condio::parse_error("map: --poly is required unless --list is given");
  condio::DivisorPrefix start(condio::IntPolynomial::parse(cfg.poly_text), cfg.t,
                              parse_words(cfg.words));
  condio::MapOutcome outcome = condio::apply_map_expr(condio::parse_map_expr(expr), start);
  json result;
  std::string text;
  if (outcome.solution) {
    result["solution"] = tuple_json(outcome.solution->xs());
    text = condio::format_tuple(outcome.solution->xs());
  } else {
    const condio::DivisorPrefix& p = *outcome.prefix;
    result["prefix"] = tuple_json(p.xs());
    result["outer"] = p.outer().get_str();
    result["inner"] = p.inner().get_str();
    text = condio::format_tuple(p.xs()) + " outer=" + p.outer().get_str() +
           " inner=" + p.inner().get_str();
    if (complete_after) {
      condio::Completion c = condio::complete(p);
      if (c.free_choice) {
        result["completion"] = "free";
        text += " completion=free";
      } else {
        result["completion"] = tuple_json(c.solution->xs());
        text += " completes to " + condio::format_tuple(c.solution->xs());
      }
    }
  }
  emit_ok(cfg, result, text);
  return 0;
}

condio::Parity parse_parity(const std::string& s) {
  if (s == "even") return condio::Parity::even;
  if (s == "odd") return condio::Parity::odd;
  throw condio::parse_error("parity must be even or odd");
}

// bridge to-solution --poly P --m M --d1 D [--parity even|odd]
int cmd_bridge_to_solution(const CommandConfig& cfg, const std::string& m_text,
                           const std::string& d1_text, const std::string& parity_text) {
  condio::IntPolynomial poly = condio::IntPolynomial::parse(cfg.poly_text);
  Int m = condio::parse_int(m_text);
  Int d1 = condio::parse_int(d1_text);
  if (m < 1) throw std::invalid_argument("bridge: m must be at least 1");
  if (d1 == 0 || !condio::divides(d1, poly(m)))
    throw std::invalid_argument("bridge: d1 must divide P(m)");
  condio::FactorizationTriple f{m, d1, poly(m) / d1};
  condio::Solution sol =
      condio::factorization_to_solution(poly, parse_parity(parity_text), f);
  json result;
  result["solution"] = tuple_json(sol.xs());
  result["n"] = sol.instance().n();
  result["d2"] = f.d2.get_str();
  emit_ok(cfg, result, condio::format_tuple(sol.xs()));
  return 0;
}

// bridge from-solution --poly P -- x0 ... xN
int cmd_bridge_from_solution(const CommandConfig& cfg) {
  IntTuple xs = parse_words(cfg.words);
  if (xs.size() < 3) throw std::invalid_argument("bridge: need at least 3 entries");
  condio::EquationInstance inst(condio::IntPolynomial::parse(cfg.poly_text), 1,
                                static_cast<int>(xs.size()) - 1);
  condio::FactorizationTriple f =
      condio::solution_to_factorization(condio::Solution(inst, xs));
  json result;
  result["m"] = f.m.get_str();
  result["d1"] = f.d1.get_str();
  result["d2"] = f.d2.get_str();
  emit_ok(cfg, result,
          "m=" + f.m.get_str() + " d1=" + f.d1.get_str() + " d2=" + f.d2.get_str());
  return 0;
}

// bridge factorize --poly P --m M
int cmd_bridge_factorize(const CommandConfig& cfg, const std::string& m_text) {
  condio::IntPolynomial poly = condio::IntPolynomial::parse(cfg.poly_text);
  Int m = condio::parse_int(m_text);
  auto pairs = condio::enumerate_factorizations(poly, m);
  json result;
  result["m"] = m.get_str();
  result["value"] = poly(m).get_str();
  json arr = json::array();
  std::string text;
  for (const auto& [d1, d2] : pairs) {
    arr.push_back(json::array({d1.get_str(), d2.get_str()}));
    if (!text.empty()) text += "\n";
    text += d1.get_str() + " " + d2.get_str();
  }
  result["pairs"] = std::move(arr);
  emit_ok(cfg, result, text);
  return 0;
}

// bridge table --poly P --mmax M [--radius R]; one JSON line (or text row) per
// factorization.
int cmd_bridge_table(const CommandConfig& cfg, long m_max, int radius) {
  auto rows = condio::factorization_table(condio::IntPolynomial::parse(cfg.poly_text), m_max,
                                          capped(radius));
  for (const auto& row : rows) {
    if (cfg.format == "json") {
      json r;
      r["m"] = row.m.get_str();
      r["d1"] = row.d1.get_str();
      r["d2"] = row.d2.get_str();
      r["solution"] = tuple_json(row.solution);
      r["snippet"] = tuple_json(row.snippet);
      r["snippet_offset"] = row.snippet_offset;
      r["left_end"] = condio::to_string(row.left_state);
      r["right_end"] = condio::to_string(row.right_state);
      r["provenance"] = row.provenance;
      std::cout << r.dump() << "\n";
    } else {
      std::cout << row.m.get_str() << "  " << row.d1.get_str() << "*" << row.d2.get_str()
                << "  " << condio::format_tuple(row.solution) << "  snippet "
                << condio::format_tuple(row.snippet) << "  [" << condio::to_string(row.left_state)
                << "/" << condio::to_string(row.right_state) << "]  " << row.provenance << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized continuant equation toolkit"};
  app.require_subcommand(1);

  CommandConfig cfg;
  int left = 0, right = 0, radius = 1;
  long bound = 0, target = 1, m_max = 1;
  std::string expr, m_text, d1_text, parity_text = "even";
  bool complete_after = false, list_compositions = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto add_tuple = [&](CLI::App* sub, int expected = -1) {
    sub->add_option("tuple", cfg.words, "tuple entries (put them after --)")
        ->expected(expected);
  };
  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--poly", cfg.poly_text, "polynomial c_0,c_1,...,c_d")->required();
    sub->add_option("--t", cfg.t, "recurrence parameter")->required();
    sub->add_option("--n", cfg.n, "solution length minus one")->required();
  };

  CLI::App* eval = app.add_subcommand("eval", "continuant of a tuple");
  eval->add_option("--t", cfg.t, "recurrence parameter")->required();
  add_format(eval);
  add_tuple(eval);

  CLI::App* check = app.add_subcommand("check", "coefficient condition, optionally verify a tuple");
  add_instance(check);
  add_format(check);
  add_tuple(check);

  CLI::App* lift = app.add_subcommand("lift", "complete an n-entry prefix");
  add_instance(lift);
  add_format(lift);
  add_tuple(lift);

  CLI::App* extend = app.add_subcommand("extend", "extend a solution window");
  add_instance(extend);
  extend->add_option("--left", left, "steps to the left");
  extend->add_option("--right", right, "steps to the right");
  add_format(extend);
  add_tuple(extend);

  CLI::App* chain = app.add_subcommand("chain", "materialize a chain and print its JSON");
  add_instance(chain);
  chain->add_option("--left", left, "steps to the left");
  chain->add_option("--right", right, "steps to the right");
  add_format(chain);
  add_tuple(chain);

  CLI::App* units = app.add_subcommand("units", "enumerate unit-continuant tuples");
  units->add_option("--t", cfg.t, "recurrence parameter")->required();
  units->add_option("--n", cfg.n, "tuple length")->required();
  units->add_option("--bound", bound, "coordinate bound")->required();
  units->add_option("--target", target, "continuant target, +1 or -1");
  add_format(units);

  CLI::App* families = app.add_subcommand("families", "closed-form unit tuple families");
  families->add_option("--t", cfg.t, "recurrence parameter")->required();
  families->add_option("--n", cfg.n, "tuple length")->required();
  families->add_option("--bound", bound, "coordinate bound")->required();
  add_format(families);

  CLI::App* classify = app.add_subcommand("classify", "classify an n=2 solution of x^4+1");
  add_format(classify);
  add_tuple(classify, 3);

  CLI::App* map = app.add_subcommand("map", "apply a map expression to a divisor prefix");
  map->add_option("--poly", cfg.poly_text, "polynomial c_0,c_1,...,c_d");
  map->add_option("--t", cfg.t, "recurrence parameter")->required();
  map->add_option("--expr", expr, "e.g. g.h, f:3, fstar:2,0 (rightmost applied first)");
  map->add_flag("--complete", complete_after, "also complete the resulting prefix");
  map->add_flag("--list", list_compositions, "list parity-preserving compositions for t");
  add_format(map);
  add_tuple(map);

  CLI::App* bridge = app.add_subcommand("bridge", "factorizations <-> solutions (t = 1)");
  bridge->require_subcommand(1);

  CLI::App* to_sol = bridge->add_subcommand("to-solution", "solution from a factorization");
  to_sol->add_option("--poly", cfg.poly_text, "polynomial")->required();
  to_sol->add_option("--m", m_text, "argument m >= 1")->required();
  to_sol->add_option("--d1", d1_text, "divisor of P(m) coprime to m")->required();
  to_sol->add_option("--parity", parity_text, "length parity of the expansion")
      ->check(CLI::IsMember({"even", "odd"}));
  add_format(to_sol);

  CLI::App* from_sol = bridge->add_subcommand("from-solution", "factorization from a solution");
  from_sol->add_option("--poly", cfg.poly_text, "polynomial")->required();
  add_format(from_sol);
  add_tuple(from_sol);

  CLI::App* factorize = bridge->add_subcommand("factorize", "divisor pairs of P(m)");
  factorize->add_option("--poly", cfg.poly_text, "polynomial")->required();
  factorize->add_option("--m", m_text, "argument m")->required();
  add_format(factorize);

  CLI::App* table = bridge->add_subcommand("table", "factorization table for m = 1..m_max");
  table->add_option("--poly", cfg.poly_text, "polynomial")->required();
  table->add_option("--mmax", m_max, "largest m")->required();
  table->add_option("--radius", radius, "chain snippet radius");
  add_format(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(cfg);
    if (check->parsed()) return cmd_check(cfg);
    if (lift->parsed()) return cmd_lift(cfg);
    if (extend->parsed()) return cmd_extend(cfg, left, right);
    if (chain->parsed()) return cmd_chain(cfg, left, right);
    if (units->parsed()) return cmd_units(cfg, bound, target);
    if (families->parsed()) return cmd_families(cfg, bound);
    if (classify->parsed()) return cmd_classify(cfg);
    if (map->parsed()) return cmd_map(cfg, expr, complete_after, list_compositions);
    if (bridge->parsed()) {
      if (to_sol->parsed()) return cmd_bridge_to_solution(cfg, m_text, d1_text, parity_text);
      if (from_sol->parsed()) return cmd_bridge_from_solution(cfg);
      if (factorize->parsed()) return cmd_bridge_factorize(cfg, m_text);
      if (table->parsed()) return cmd_bridge_table(cfg, m_max, radius);
    }
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const condio::parse_error& e) {
    json line;
    line["ok"] = false;
    line["error"] = e.what();
    std::cout << line.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json line;
    line["ok"] = false;
    line["error"] = e.what();
    std::cout << line.dump() << "\n";
    return 1;
  }
}
