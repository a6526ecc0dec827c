#include <condio/seeds.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace condio {

std::vector<IntTuple> enumerate_unit_tuples(const Int& t, int n, long bound, const Int& target) {
  if (t == 0) throw std::invalid_argument("enumerate_unit_tuples: t must be nonzero");
  if (n < 2) throw std::invalid_argument("enumerate_unit_tuples: n must be at least 2");
  if (bound < 0) throw std::invalid_argument("enumerate_unit_tuples: bound must be nonnegative");
  if (target != 1 && target != -1)
    throw std::invalid_argument("enumerate_unit_tuples: target must be +1 or -1");

  std::vector<IntTuple> out;
  IntTuple cur(static_cast<std::size_t>(n));
  // Depth-first with the two running continuant values; ascending coordinate
  // order makes the output lexicographically sorted.
  auto rec = [&](auto&& self, int depth, const Int& two_back, const Int& one_back) -> void {
    if (depth == n) {
      if (one_back == target) out.push_back(cur);
      return;
    }
    for (long a = -bound; a <= bound; ++a) {
      cur[static_cast<std::size_t>(depth)] = a;
      self(self, depth + 1, one_back, a * one_back + t * two_back);
    }
  };
  rec(rec, 0, Int(0), Int(1));
  return out;
}

namespace {

using Coord = UnitFamily::Coord;

UnitFamily make_family(std::vector<Coord> coords, const std::string& label) {
  UnitFamily fam;
  fam.coords = std::move(coords);
  fam.label = label;
  bool has_a = false, has_b = false;
  for (const auto& c : fam.coords) {
    if (c.coeff_a != 0) has_a = true;
    if (c.coeff_b != 0) has_b = true;
  }
  fam.nparams = (has_a ? 1 : 0) + (has_b ? 1 : 0);
  return fam;
}

UnitFamily reversed_family(const UnitFamily& fam) {
  UnitFamily rev = fam;
  std::reverse(rev.coords.begin(), rev.coords.end());
  rev.label = fam.label + " reversed";
  return rev;
}

// Shorthand coordinate builders: constant k, a + k, -a + k, b, ...
Coord cst(long k) { return {0, 0, k}; }
Coord pa(long k = 0) { return {1, 0, k}; }
Coord ma(long k = 0) { return {-1, 0, k}; }
Coord pb(long k = 0) { return {0, 1, k}; }

std::vector<UnitFamily> base_families(int t, int n) {
  std::vector<UnitFamily> fams;
  auto add = [&](std::vector<Coord> coords, const std::string& label) {
    fams.push_back(make_family(std::move(coords), label));
  };
  auto add_isolated = [&](std::vector<long> xs, const std::string& label) {
    std::vector<Coord> coords;
    for (long x : xs) coords.push_back(cst(x));
    add(std::move(coords), label);
  };

  if (t == 1 && n == 2) {
    add({cst(0), pa()}, "(0, a)");
  } else if (t == 1 && n == 3) {
    add({cst(0), pa(), cst(1)}, "(0, a, 1)");
    add({pa(), cst(0), ma(1)}, "(a, 0, 1-a)");
    add({cst(1), cst(-1), pa()}, "(1, -1, a)");
    add_isolated({-3, 1, -2}, "(-3, 1, -2)");
    add_isolated({-1, 3, -1}, "(-1, 3, -1)");
    add_isolated({-2, 2, -1}, "(-2, 2, -1)");
  } else if (t == 1 && n == 4) {
    add({cst(0), pa(), pb(), cst(0)}, "(0, a, b, 0)");
    add({cst(0), pa(), cst(0), pb()}, "(0, a, 0, b)");
    add({pa(), cst(0), ma(), pb()}, "(a, 0, -a, b)");
    add({cst(1), pa(), cst(-1), cst(1)}, "(1, a, -1, 1)");
    add({cst(-1), pa(), cst(1), cst(-1)}, "(-1, a, 1, -1)");
    add({pa(), cst(-1), cst(1), pa()}, "(a, -1, 1, a)");
    add_isolated({-4, 1, -2, 2}, "(-4, 1, -2, 2)");
    add_isolated({-3, 1, -3, 1}, "(-3, 1, -3, 1)");
    add_isolated({-3, 1, -2, 3}, "(-3, 1, -2, 3)");
    add_isolated({-3, 2, -1, 3}, "(-3, 2, -1, 3)");
    add_isolated({-2, 1, -4, 1}, "(-2, 1, -4, 1)");
    add_isolated({-2, 1, -3, 2}, "(-2, 1, -3, 2)");
    add_isolated({-2, 2, -2, 1}, "(-2, 2, -2, 1)");
    add_isolated({-2, 2, -1, 4}, "(-2, 2, -1, 4)");
    add_isolated({-2, 3, -1, 2}, "(-2, 3, -1, 2)");
    add_isolated({-1, 2, -3, 1}, "(-1, 2, -3, 1)");
    add_isolated({-1, 2, -2, 2}, "(-1, 2, -2, 2)");
    add_isolated({-1, 3, -2, 1}, "(-1, 3, -2, 1)");
    add_isolated({-1, 3, -1, 3}, "(-1, 3, -1, 3)");
    add_isolated({-1, 4, -1, 2}, "(-1, 4, -1, 2)");
  } else if (t == -1 && n == 2) {
    add_isolated({1, 2}, "(1, 2)");
    add_isolated({-2, -1}, "(-2, -1)");
  } else if (t == -1 && n == 3) {
    add({cst(0), pa(), cst(-1)}, "(0, a, -1)");
    add({pa(), cst(0), ma(-1)}, "(a, 0, -1-a)");
    add({cst(-1), cst(-1), pa()}, "(-1, -1, a)");
    add_isolated({1, 2, 2}, "(1, 2, 2)");
    add_isolated({1, 3, 1}, "(1, 3, 1)");
    add_isolated({2, 1, 3}, "(2, 1, 3)");
  } else {
    throw std::invalid_argument("unit_families: unsupported (t, n) pair (" + std::to_string(t) +
                                ", " + std::to_string(n) + ")");
  }
  return fams;
}

}  // namespace

std::vector<UnitFamily> unit_families(int t, int n) {
  std::vector<UnitFamily> fams = base_families(t, n);
  std::size_t base_count = fams.size();
  for (std::size_t i = 0; i < base_count; ++i) fams.push_back(reversed_family(fams[i]));
  return fams;
}

bool family_matches(const UnitFamily& family, const IntTuple& xs) {
  if (xs.size() != family.coords.size()) return false;
  // Families use each parameter in pure coordinates (never a and b mixed), so
  // the parameters are read off directly and then all coordinates checked.
  std::optional<Int> a, b;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Coord& c = family.coords[i];
    if (c.coeff_a != 0 && !a) a = Int((xs[i] - c.offset) * c.coeff_a);  // coeff is +-1
    if (c.coeff_b != 0 && !b) b = Int((xs[i] - c.offset) * c.coeff_b);
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Coord& c = family.coords[i];
    Int expect = Int(c.offset);
    if (c.coeff_a != 0) {
      if (!a) return false;
      expect += c.coeff_a * *a;
    }
    if (c.coeff_b != 0) {
      if (!b) return false;
      expect += c.coeff_b * *b;
    }
    if (xs[i] != expect) return false;
  }
  return true;
}

std::vector<IntTuple> family_tuples(int t, int n, long bound) {
  if (bound < 0) throw std::invalid_argument("family_tuples: bound must be nonnegative");
  std::vector<UnitFamily> fams = unit_families(t, n);
  std::set<IntTuple> seen;
  const long margin = bound + 4;  // covers every +-1 coefficient with offset up to 4

  for (const UnitFamily& fam : fams) {
    auto instantiate = [&](long a, long b) {
      IntTuple xs;
      xs.reserve(fam.coords.size());
      for (const Coord& c : fam.coords) {
        long v = c.coeff_a * a + c.coeff_b * b + c.offset;
        if (v < -bound || v > bound) return;
        xs.push_back(v);
      }
      seen.insert(std::move(xs));
    };
    if (fam.nparams == 0) {
      instantiate(0, 0);
    } else if (fam.nparams == 1) {
      for (long a = -margin; a <= margin; ++a) instantiate(a, 0);
    } else {
      for (long a = -margin; a <= margin; ++a)
        for (long b = -margin; b <= margin; ++b) instantiate(a, b);
    }
  }
  return std::vector<IntTuple>(seen.begin(), seen.end());
}

IntTuple pad_unit_tuple(const Int& t, const IntTuple& xs, const Int& a) {
  if (t == 0) throw std::invalid_argument("pad_unit_tuple: t must be nonzero");
  IntTuple out = xs;
  out.push_back(a);
  out.push_back(0);
  return out;
}

SeedResult seed_solution(const EquationInstance& inst, const IntTuple& xs) {
  const int n = inst.n();
  if (static_cast<int>(xs.size()) != n)
    throw std::invalid_argument("seed_solution: expected " + std::to_string(n) +
                                " entries, got " + std::to_string(xs.size()));
  Int k = continuant(inst.t(), xs);
  if (k != 1 && k != -1)
    throw std::invalid_argument("seed_solution: tuple " + format_tuple(xs) +
                                " has continuant " + k.get_str() + ", need +-1");
  LiftResult lifted = lift(inst, xs);
  if (lifted.kind == LiftKind::free_choice) return {true, std::nullopt};
  if (lifted.kind != LiftKind::unique)
    throw std::logic_error("seed_solution: unit prefix failed to lift");
  IntTuple full = xs;
  full.push_back(*lifted.value);
  return {false, Solution(inst, std::move(full))};
}

Solution seed_solution(const EquationInstance& inst, const IntTuple& xs, const Int& chosen) {
  SeedResult r = seed_solution(inst, xs);
  if (!r.free_choice)
    throw std::invalid_argument("seed_solution: completion is unique, not free");
  IntTuple full = xs;
  full.push_back(chosen);
  return Solution(inst, std::move(full));
}

std::string to_string(N2Category c) {
  switch (c) {
    case N2Category::chain_of_zero_led: return "chain-of-zero-led";
    case N2Category::reversed_chain_of_zero_led: return "reversed-chain-of-zero-led";
    case N2Category::middle_zero: return "middle-zero";
    case N2Category::alternating_special: return "alternating-special";
    case N2Category::not_a_solution: return "not-a-solution";
  }
  throw std::logic_error("to_string: bad N2Category");
}

namespace {

const std::vector<IntTuple>& alternating_windows() {
  static const std::vector<IntTuple> windows = {
      {2, -1, 3}, {3, -1, 2}, {-2, 1, -3}, {-3, 1, -2}};
  return windows;
}

std::optional<N2Classification> n2_marker(const IntTuple& w) {
  for (const IntTuple& s : alternating_windows())
    if (w == s) return N2Classification{N2Category::alternating_special, std::nullopt};
  if (w[0] == 0) return N2Classification{N2Category::chain_of_zero_led, w[1]};
  if (w[2] == 0) return N2Classification{N2Category::reversed_chain_of_zero_led, w[1]};
  return std::nullopt;
}

Int tuple_measure(const IntTuple& w) {
  Int m = 0;
  for (const Int& x : w) {
    Int a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

}  // namespace

N2Classification classify_n2_solution(const Int& x0, const Int& x1, const Int& x2,
                                      int max_steps) {
  static const EquationInstance inst(IntPolynomial({1, 0, 0, 0, 1}), 1, 2);
  IntTuple xs = {x0, x1, x2};
  if (!verify_solution(inst, xs)) return {N2Category::not_a_solution, std::nullopt};
  if (x1 == 0) return {N2Category::middle_zero, std::nullopt};
  if (auto m = n2_marker(xs)) return *m;

  // Walk each direction while the measure does not increase; every solution
  // off the middle-zero class reaches a marker window this way.
  for (int dir = 0; dir < 2; ++dir) {
    Solution cur(inst, xs);
    for (int step = 0; step < max_steps; ++step) {
      ExtendResult r = (dir == 0) ? extend_left(cur) : extend_right(cur);
      if (!r.next) break;
      if (auto m = n2_marker(r.next->xs())) return *m;
      if (tuple_measure(r.next->xs()) > tuple_measure(cur.xs())) break;
      cur = *r.next;
    }
  }
  throw std::logic_error("classify_n2_solution: walk exhausted without a marker on " +
                         format_tuple(xs));
}

}  // namespace condio
