#include <condio/bridge.hpp>

#include <condio/maps.hpp>

#include <stdexcept>
#include <utility>

namespace condio {

CFExpansion cf_expand(const Int& p, const Int& q, Parity parity) {
  if (q < 1) throw std::invalid_argument("cf_expand: q must be at least 1");
  if (gcd(p, q) != 1)
    throw std::invalid_argument("cf_expand: p and q must be coprime, got gcd(" + p.get_str() +
                                ", " + q.get_str() + ") != 1");

  // Floor-division Euclid: a_0 may be any integer, later quotients are >= 1
  // and the last is >= 2 whenever there is more than one.
  std::vector<Int> qs;
  Int x = p, y = q;
  while (true) {
    Int a = floor_div(x, y);
    qs.push_back(a);
    Int r = x - a * y;
    if (r == 0) break;
    x = y;
    y = r;
  }

  const bool want_even = (parity == Parity::even);
  if ((qs.size() % 2 == 0) != want_even) {
    if (qs.size() == 1) {
      // [p] = [p-1; 1]
      qs[0] -= 1;
      qs.push_back(1);
    } else if (qs.back() >= 2) {
      // [..., a] = [..., a-1, 1]
      qs.back() -= 1;
      qs.push_back(1);
    } else {
      // [..., b, 1] = [..., b+1]; the floor algorithm never produces this
      // tail itself, kept for completeness.
      qs.pop_back();
      qs.back() += 1;
    }
  }

  // Both continuant identities must hold by construction.
  CFExpansion cf{std::move(qs)};
  const auto len = static_cast<std::ptrdiff_t>(cf.quotients.size());
  if (continuant(1, window(cf.quotients, 0, len - 1)) != p ||
      continuant(1, window(cf.quotients, 1, len - 1)) != q)
    throw std::logic_error("cf_expand: continuant identities failed for " + p.get_str() + "/" +
                           q.get_str());
  return cf;
}

Solution factorization_to_solution(const IntPolynomial& P, Parity parity,
                                   const FactorizationTriple& f) {
  if (f.m < 1) throw std::invalid_argument("factorization_to_solution: m must be at least 1");
  if (f.d1 < 1)
    throw std::invalid_argument("factorization_to_solution: d1 must be positive, got " +
                                f.d1.get_str());
  if (f.d1 * f.d2 != P(f.m))
    throw std::invalid_argument("factorization_to_solution: " + f.d1.get_str() + " * " +
                                f.d2.get_str() + " != P(" + f.m.get_str() + ")");
  if (gcd(f.m, f.d1) != 1)
    throw std::invalid_argument("factorization_to_solution: m and d1 must be coprime");

  CFExpansion cf = cf_expand(f.d1, f.m, parity);
  const int n = static_cast<int>(cf.quotients.size());
  EquationInstance inst(P, 1, n);
  LiftResult lifted = lift(inst, cf.quotients);
  if (lifted.kind != LiftKind::unique)
    throw std::logic_error("factorization_to_solution: expected a unique lift");
  IntTuple xs = cf.quotients;
  xs.push_back(*lifted.value);
  Solution sol(std::move(inst), std::move(xs));

  Int d2_check = continuant(1, window(sol.xs(), 1, n));
  if (d2_check != f.d2)
    throw std::logic_error("factorization_to_solution: tail continuant " + d2_check.get_str() +
                           " != d2 = " + f.d2.get_str());
  return sol;
}

FactorizationTriple solution_to_factorization(const Solution& sol) {
  if (sol.instance().t_int() != 1)
    throw std::invalid_argument("solution_to_factorization: defined for t = 1 only");
  const IntTuple& xs = sol.xs();
  const int n = sol.instance().n();
  for (int i = 1; i <= n - 1; ++i)
    if (xs[static_cast<std::size_t>(i)] < 1)
      throw std::invalid_argument(
          "solution_to_factorization: interior coordinates must be positive in " +
          format_tuple(xs));

  FactorizationTriple f{continuant(1, window(xs, 1, n - 1)), continuant(1, window(xs, 0, n - 1)),
                        continuant(1, window(xs, 1, n))};
  if (f.d1 * f.d2 != sol.instance().poly()(f.m))
    throw std::logic_error("solution_to_factorization: product check failed");
  return f;
}

std::vector<std::pair<Int, Int>> enumerate_factorizations(const IntPolynomial& P, const Int& m) {
  Int N = P(m);
  if (N < 1)
    throw std::invalid_argument("enumerate_factorizations: P(m) = " + N.get_str() +
                                " is not positive");
  std::vector<std::pair<Int, Int>> out;
  Int root = isqrt(N);
  for (Int d = 1; d <= root; ++d)
    if (divides(d, N)) out.emplace_back(d, N / d);
  return out;
}

namespace {

// A length-n window with continuant +-1 in the materialized chain, if any.
std::optional<IntTuple> unit_window_in(const Chain& chain) {
  IntTuple all = chain.elements();
  const int n = chain.instance().n();
  const Int& t = chain.instance().t();
  for (std::size_t i = 0; i + n <= all.size(); ++i) {
    IntTuple w = subtuple(all, static_cast<std::ptrdiff_t>(i),
                          static_cast<std::ptrdiff_t>(i) + n - 1);
    Int k = continuant(t, w);
    if (k == 1 || k == -1) return w;
  }
  return std::nullopt;
}

// Bounded provenance search: a unit window in the snippet directly, else peel
// g/h inverses off the divisor prefix and look again after completing.
std::string provenance_of(const Solution& sol, const Chain& snippet, int radius) {
  if (auto w = unit_window_in(snippet)) return "unit window " + format_tuple(*w);

  std::vector<std::string> ops;
  try {
    DivisorPrefix p = prefix_of(sol);
    while (p.length() > 2) {
      if (p.xs().front() == 1) {
        p = map_g_inv(p);
        ops.push_back("ginv");
      } else if (p.xs().back() == 1) {
        p = map_h_inv(p);
        ops.push_back("hinv");
      } else {
        break;
      }
      if (!check_condition(p.poly(), p.t_int(), p.length()).holds) continue;
      Completion c = complete(p);
      if (c.free_choice) continue;
      Chain reduced = chain_window(*c.solution, radius, radius);
      if (auto w = unit_window_in(reduced)) {
        std::string joined;
        for (const auto& op : ops) {
          if (!joined.empty()) joined += ",";
          joined += op;
        }
        return joined + " -> unit window " + format_tuple(*w);
      }
    }
  } catch (const std::exception&) {
    // A failed peel just ends the bounded search.
  }
  return "unknown (radius " + std::to_string(radius) + ")";
}

}  // namespace

std::vector<TableRow> factorization_table(const IntPolynomial& P, long m_max, int radius) {
  if (m_max < 1) throw std::invalid_argument("factorization_table: m_max must be at least 1");
  if (radius < 0) throw std::invalid_argument("factorization_table: radius must be nonnegative");
  ConditionReport rep = check_condition(P, 1, 2);
  Parity parity;
  if (rep.even_admissible) {
    parity = Parity::even;
  } else if (rep.odd_admissible) {
    parity = Parity::odd;
  } else {
    throw std::invalid_argument("factorization_table: " + P.pretty() +
                                " admits no solutions for t = 1");
  }

  std::vector<TableRow> rows;
  for (long m = 1; m <= m_max; ++m) {
    for (const auto& [d1, d2] : enumerate_factorizations(P, m)) {
      FactorizationTriple f{m, d1, d2};
      Solution sol = factorization_to_solution(P, parity, f);
      Chain chain = chain_window(sol, radius, radius);
      TableRow row{f.m,
                   f.d1,
                   f.d2,
                   sol.xs(),
                   chain.elements(),
                   chain.base_offset(),
                   chain.left_state(),
                   chain.right_state(),
                   provenance_of(sol, chain, radius)};
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace condio
