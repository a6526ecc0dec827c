#include <condio/maps.hpp>

#include <stdexcept>
#include <utility>

namespace condio {

DivisorPrefix::DivisorPrefix(IntPolynomial poly, int t, IntTuple xs)
    : poly_(std::move(poly)), t_(t), t_int_(t), xs_(std::move(xs)) {
  if (t != 1 && t != -1)
    throw std::invalid_argument("DivisorPrefix: t must be +1 or -1");
  if (xs_.size() < 2)
    throw std::invalid_argument("DivisorPrefix: need at least 2 entries");
  const auto len = static_cast<std::ptrdiff_t>(xs_.size());
  outer_ = continuant(t_, window(xs_, 0, len - 1));
  inner_ = continuant(t_, window(xs_, 1, len - 1));
  if (!divides(outer_, poly_(inner_)))
    throw std::invalid_argument("DivisorPrefix: " + outer_.get_str() + " does not divide P(" +
                                inner_.get_str() + ") for " + format_tuple(xs_));
}

DivisorPrefix prefix_of(const Solution& sol) {
  IntTuple xs = sol.xs();
  xs.pop_back();
  return DivisorPrefix(sol.instance().poly(), sol.instance().t_int(), std::move(xs));
}

Completion complete(const DivisorPrefix& prefix) {
  // The prefix length is the n of the completed solution; the instance
  // constructor rejects lengths whose parity the polynomial does not admit.
  EquationInstance inst(prefix.poly(), prefix.t_int(), prefix.length());
  LiftResult lifted = lift(inst, prefix.xs());
  switch (lifted.kind) {
    case LiftKind::free_choice:
      return {true, std::nullopt};
    case LiftKind::unique: {
      IntTuple full = prefix.xs();
      full.push_back(*lifted.value);
      return {false, Solution(std::move(inst), std::move(full))};
    }
    case LiftKind::not_liftable:
      break;
  }
  throw std::logic_error("complete: divisor prefix failed to lift");
}

DivisorPrefix map_f(const Int& a, const DivisorPrefix& prefix) {
  if (prefix.inner() == 0)
    throw std::invalid_argument("map_f: inner continuant is zero, use map_f_star");
  IntTuple xs;
  xs.reserve(prefix.xs().size() + 2);
  xs.push_back(0);
  xs.push_back(a);
  xs.insert(xs.end(), prefix.xs().begin(), prefix.xs().end());
  return DivisorPrefix(prefix.poly(), prefix.t_int(), std::move(xs));
}

Solution map_f_star(const Int& a, const Int& b, const DivisorPrefix& prefix) {
  if (prefix.inner() != 0)
    throw std::invalid_argument("map_f_star: inner continuant is nonzero, use map_f");
  IntTuple xs;
  xs.reserve(prefix.xs().size() + 3);
  xs.push_back(0);
  xs.push_back(a);
  xs.insert(xs.end(), prefix.xs().begin(), prefix.xs().end());
  xs.push_back(b);
  EquationInstance inst(prefix.poly(), prefix.t_int(),
                        static_cast<int>(xs.size()) - 1);
  return Solution(std::move(inst), std::move(xs));  // throws unless it verifies
}

DivisorPrefix map_g(const DivisorPrefix& prefix) {
  IntTuple xs;
  xs.reserve(prefix.xs().size() + 1);
  xs.push_back(1);
  xs.push_back(prefix.xs()[0] - prefix.t());
  xs.insert(xs.end(), prefix.xs().begin() + 1, prefix.xs().end());
  return DivisorPrefix(prefix.poly(), prefix.t_int(), std::move(xs));
}

DivisorPrefix map_h(const DivisorPrefix& prefix) {
  IntTuple xs(prefix.xs().begin(), prefix.xs().end() - 1);
  xs.push_back(prefix.xs().back() - prefix.t());
  xs.push_back(1);
  return DivisorPrefix(prefix.poly(), prefix.t_int(), std::move(xs));
}

DivisorPrefix map_g_inv(const DivisorPrefix& prefix) {
  if (prefix.xs()[0] != 1)
    throw std::invalid_argument("map_g_inv: first coordinate must be 1");
  if (prefix.length() < 3)
    throw std::invalid_argument("map_g_inv: prefix too short");
  IntTuple xs;
  xs.reserve(prefix.xs().size() - 1);
  xs.push_back(prefix.xs()[1] + prefix.t());
  xs.insert(xs.end(), prefix.xs().begin() + 2, prefix.xs().end());
  return DivisorPrefix(prefix.poly(), prefix.t_int(), std::move(xs));
}

DivisorPrefix map_h_inv(const DivisorPrefix& prefix) {
  if (prefix.xs().back() != 1)
    throw std::invalid_argument("map_h_inv: last coordinate must be 1");
  if (prefix.length() < 3)
    throw std::invalid_argument("map_h_inv: prefix too short");
  IntTuple xs(prefix.xs().begin(), prefix.xs().end() - 2);
  xs.push_back(prefix.xs()[prefix.xs().size() - 2] + prefix.t());
  return DivisorPrefix(prefix.poly(), prefix.t_int(), std::move(xs));
}

std::vector<CompositionRule> valid_compositions(int t) {
  if (t == 1) {
    return {
        {"f:a", "inner continuant nonzero"},
        {"fstar:a,b", "inner continuant zero"},
        {"g.h", ""},
        {"g.hinv", "x_n = 1"},
        {"ginv.h", "x_0 = 1"},
        {"ginv.hinv", "x_0 = 1 and x_n = 1"},
    };
  }
  if (t == -1) {
    return {
        {"f:a", "inner continuant nonzero"},
        {"fstar:a,b", "inner continuant zero"},
        {"g", ""},
        {"h", ""},
        {"ginv", "x_0 = 1"},
        {"hinv", "x_n = 1"},
    };
  }
  throw std::invalid_argument("valid_compositions: t must be +1 or -1");
}

std::vector<MapStep> parse_map_expr(const std::string& expr) {
  if (expr.empty()) throw parse_error("empty map expression");
  std::vector<MapStep> steps;
  std::size_t pos = 0;
  while (pos <= expr.size()) {
    std::size_t dot = expr.find('.', pos);
    std::string token =
        expr.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    if (token.empty()) throw parse_error("empty component in map expression '" + expr + "'");

    std::string name = token;
    std::string args;
    if (std::size_t colon = token.find(':'); colon != std::string::npos) {
      name = token.substr(0, colon);
      args = token.substr(colon + 1);
    }
    MapStep step;
    if (name == "f") {
      step.op = MapStep::Op::f;
      if (args.empty()) throw parse_error("f needs one argument, e.g. f:3");
      step.a = parse_int(args);
    } else if (name == "fstar") {
      step.op = MapStep::Op::fstar;
      std::size_t comma = args.find(',');
      if (args.empty() || comma == std::string::npos)
        throw parse_error("fstar needs two arguments, e.g. fstar:2,0");
      step.a = parse_int(args.substr(0, comma));
      step.b = parse_int(args.substr(comma + 1));
    } else if (name == "g" || name == "h" || name == "ginv" || name == "hinv") {
      if (!args.empty()) throw parse_error(name + " takes no arguments");
      step.op = name == "g"      ? MapStep::Op::g
                : name == "h"    ? MapStep::Op::h
                : name == "ginv" ? MapStep::Op::ginv
                                 : MapStep::Op::hinv;
    } else {
      throw parse_error("unknown map '" + name + "'");
    }
    steps.push_back(std::move(step));
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return steps;
}

MapOutcome apply_map_expr(const std::vector<MapStep>& steps, const DivisorPrefix& start) {
  if (steps.empty()) throw std::invalid_argument("apply_map_expr: no steps");
  DivisorPrefix cur = start;
  // Rightmost step first; fstar produces a solution, so it may only be the
  // leftmost (= last applied) step.
  for (std::size_t i = steps.size(); i-- > 0;) {
    const MapStep& step = steps[i];
    switch (step.op) {
      case MapStep::Op::f:
        cur = map_f(*step.a, cur);
        break;
      case MapStep::Op::fstar: {
        if (i != 0)
          throw std::invalid_argument("apply_map_expr: fstar must be leftmost");
        return {std::nullopt, map_f_star(*step.a, *step.b, cur)};
      }
      case MapStep::Op::g:
        cur = map_g(cur);
        break;
      case MapStep::Op::h:
        cur = map_h(cur);
        break;
      case MapStep::Op::ginv:
        cur = map_g_inv(cur);
        break;
      case MapStep::Op::hinv:
        cur = map_h_inv(cur);
        break;
    }
  }
  return {std::move(cur), std::nullopt};
}

}  // namespace condio
