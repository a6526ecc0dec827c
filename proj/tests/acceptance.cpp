// Acceptance harness: ten end-to-end behaviors, one PASS/FAIL line each.
// Exits with the number of failed behaviors.

#include <condio/condio.hpp>

#include <cstdio>
#include <exception>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace {

using condio::Int;
using condio::IntTuple;

int failures = 0;

void report(int num, const std::string& what, bool ok, const std::string& detail = "") {
  std::printf("%s %d: %s%s%s\n", ok ? "PASS" : "FAIL", num, what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

template <typename Fn>
void criterion(int num, const std::string& what, Fn&& body) {
  try {
    std::string detail;
    bool ok = body(detail);
    report(num, what, ok, detail);
  } catch (const std::exception& e) {
    report(num, what, false, std::string("exception: ") + e.what());
  }
}

IntTuple ints(std::initializer_list<long> vals) {
  IntTuple xs;
  for (long v : vals) xs.emplace_back(v);
  return xs;
}

condio::IntPolynomial quartic() { return condio::IntPolynomial::parse("1,0,0,0,1"); }

condio::Solution quartic_solution(const IntTuple& xs) {
  condio::EquationInstance inst(quartic(), 1, static_cast<long>(xs.size()) - 1);
  return condio::Solution(inst, xs);
}

bool right_extensions_match(const IntTuple& seed, const IntTuple& tail, std::string& detail) {
  condio::Solution sol = quartic_solution(seed);
  for (const Int& expected : tail) {
    auto r = condio::extend_right(sol);
    if (r.kind != condio::ExtendKind::unique) {
      detail = "extension of " + condio::format_tuple(sol.xs()) + " is not unique";
      return false;
    }
    sol = *r.next;
    if (sol.xs().back() != expected) {
      detail = "expected " + expected.get_str() + ", got " + sol.xs().back().get_str();
      return false;
    }
  }
  return true;
}

bool left_extension_prepends(const IntTuple& seed, const Int& expected, std::string& detail) {
  auto r = condio::extend_left(quartic_solution(seed));
  if (r.kind != condio::ExtendKind::unique) {
    detail = "left extension is not unique";
    return false;
  }
  if (r.next->xs().front() != expected) {
    detail = "expected " + expected.get_str() + ", got " + r.next->xs().front().get_str();
    return false;
  }
  return true;
}

struct CatalogRow {
  long m, d1, d2;
  IntTuple solution;
};

std::vector<CatalogRow> catalog() {
  return {
      {1, 1, 2, ints({0, 1, 1})},
      {2, 1, 17, ints({0, 2, 8})},
      {3, 1, 82, ints({0, 3, 27})},
      {3, 2, 41, ints({0, 1, 1, 1, 13})},
      {4, 1, 257, ints({0, 4, 64})},
      {5, 1, 626, ints({0, 5, 125})},
      {5, 2, 313, ints({0, 2, 1, 1, 62})},
      {6, 1, 1297, ints({0, 6, 216})},
      {7, 1, 2402, ints({0, 7, 343})},
      {7, 2, 1201, ints({0, 3, 1, 1, 171})},
      {8, 1, 4097, ints({0, 8, 512})},
      {8, 17, 241, ints({2, 8, 30})},
      {9, 1, 6562, ints({0, 9, 729})},
      {9, 2, 3281, ints({0, 4, 1, 1, 364})},
      {9, 17, 386, ints({1, 1, 7, 1, 42})},
      {9, 34, 193, ints({3, 1, 3, 2, 21})},
      {10, 1, 10001, ints({0, 10, 1000})},
      {10, 73, 137, ints({7, 3, 2, 1, 13})},
  };
}

}  // namespace

int main() {
  criterion(1, "two right extensions of (0,2,8) and (0,3,27) append the pinned elements",
            [](std::string& detail) {
              return right_extensions_match(ints({0, 2, 8}), ints({30, 112}), detail) &&
                     right_extensions_match(ints({0, 3, 27}), ints({240, 2133}), detail);
            });

  criterion(2, "the chain of (0,1,1,1,13) reaches 23422307 with middle continuant 146178618000",
            [](std::string& detail) {
              if (!right_extensions_match(ints({0, 1, 1, 1, 13}), ints({480, 23422307}), detail))
                return false;
              Int mid = condio::continuant(1, ints({13, 480, 23422307}));
              if (mid != Int("146178618000")) {
                detail = "middle continuant is " + mid.get_str();
                return false;
              }
              return true;
            });

  criterion(3, "left extensions prepend -1 to (0,1,1,1,13) and -2 to (0,2,1,1,62)",
            [](std::string& detail) {
              return left_extension_prepends(ints({0, 1, 1, 1, 13}), Int(-1), detail) &&
                     left_extension_prepends(ints({0, 2, 1, 1, 62}), Int(-2), detail);
            });

  criterion(4, "closed-form families reproduce exhaustive unit-tuple search at bounds 3, 5, 8",
            [](std::string& detail) {
              const std::pair<int, int> pairs[] = {{1, 2}, {1, 3}, {1, 4}, {-1, 2}, {-1, 3}};
              for (long bound : {3L, 5L, 8L}) {
                for (auto [t, n] : pairs) {
                  auto families = condio::family_tuples(t, n, bound);
                  auto search = condio::enumerate_unit_tuples(t, n, bound, 1);
                  if (families != search) {
                    detail = "mismatch at t=" + std::to_string(t) + " n=" + std::to_string(n) +
                             " bound=" + std::to_string(bound) + " (" +
                             std::to_string(families.size()) + " vs " +
                             std::to_string(search.size()) + " tuples)";
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(5, "factorizations of m^4+1 map to the catalog solutions and round trip up to m=50",
            [](std::string& detail) {
              auto P = quartic();
              auto rows = catalog();
              std::map<std::pair<long, long>, CatalogRow> expected;
              for (const auto& row : rows) expected[{row.m, row.d1}] = row;

              long seen = 0;
              for (long m = 1; m <= 10; ++m) {
                for (const auto& [d1, d2] : condio::enumerate_factorizations(P, m)) {
                  ++seen;
                  auto it = expected.find({m, d1.get_si()});
                  if (it == expected.end() || it->second.d2 != d2.get_si()) {
                    detail = "unexpected factorization " + d1.get_str() + "*" + d2.get_str() +
                             " of m=" + std::to_string(m);
                    return false;
                  }
                  auto sol = condio::factorization_to_solution(P, condio::Parity::even,
                                                               {Int(m), d1, d2});
                  if (sol.xs() != it->second.solution) {
                    detail = "solution mismatch at m=" + std::to_string(m) +
                             " d1=" + d1.get_str() + ": got " + condio::format_tuple(sol.xs());
                    return false;
                  }
                  auto back = condio::solution_to_factorization(sol);
                  if (back.m != m || back.d1 != d1 || back.d2 != d2) {
                    detail = "inversion mismatch at m=" + std::to_string(m);
                    return false;
                  }
                }
              }
              if (seen != static_cast<long>(rows.size())) {
                detail = "expected " + std::to_string(rows.size()) + " factorizations, saw " +
                         std::to_string(seen);
                return false;
              }
              for (long m = 11; m <= 50; ++m) {
                for (const auto& [d1, d2] : condio::enumerate_factorizations(P, m)) {
                  auto sol = condio::factorization_to_solution(P, condio::Parity::even,
                                                               {Int(m), d1, d2});
                  auto back = condio::solution_to_factorization(sol);
                  if (back.m != m || back.d1 != d1 || back.d2 != d2) {
                    detail = "round trip failed at m=" + std::to_string(m) +
                             " d1=" + d1.get_str();
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(6, "g after h sends (2,8) to (1,1,7,1) and f_1 sends (1,1) toward (0,1,1,1,13)",
            [](std::string& detail) {
              condio::DivisorPrefix start(quartic(), 1, ints({2, 8}));
              auto moved = condio::map_g(condio::map_h(start));
              if (moved.xs() != ints({1, 1, 7, 1})) {
                detail = "g(h((2,8))) = " + condio::format_tuple(moved.xs());
                return false;
              }
              auto done = condio::complete(moved);
              if (done.free_choice || done.solution->xs() != ints({1, 1, 7, 1, 42})) {
                detail = "completion of (1,1,7,1) is wrong";
                return false;
              }
              condio::DivisorPrefix ones(quartic(), 1, ints({1, 1}));
              auto fed = condio::map_f(Int(1), ones);
              if (fed.xs() != ints({0, 1, 1, 1})) {
                detail = "f_1((1,1)) = " + condio::format_tuple(fed.xs());
                return false;
              }
              auto lifted = condio::complete(fed);
              if (lifted.free_choice || lifted.solution->xs() != ints({0, 1, 1, 1, 13})) {
                detail = "completion of (0,1,1,1) is wrong";
                return false;
              }
              return true;
            });

  criterion(7, "continuant identities and the matrix correspondence hold on 1000 random tuples",
            [](std::string& detail) {
              std::mt19937_64 rng(0xACCE97);
              std::uniform_int_distribution<long> coord(-100, 100);
              std::uniform_int_distribution<int> len_dist(2, 8);
              for (int iter = 0; iter < 1000; ++iter) {
                int len = len_dist(rng);
                Int t = (rng() % 2 == 0) ? 1 : -1;
                IntTuple xs;
                for (int i = 0; i < len; ++i) xs.emplace_back(coord(rng));
                long n = len;
                auto win = [&](long a, long b) { return condio::window(xs, a, b); };
                Int full = condio::continuant(t, xs);

                Int minor = full * condio::continuant(t, win(1, n - 2)) -
                            condio::continuant(t, win(0, n - 2)) *
                                condio::continuant(t, win(1, n - 1));
                Int sign = 1;
                for (long i = 0; i < n - 1; ++i) sign *= t;
                if (n % 2 != 0) sign = -sign;
                if (minor != sign) {
                  detail = "minor identity failed on " + condio::format_tuple(xs);
                  return false;
                }

                Int front = xs.front() * condio::continuant(t, win(1, n - 1)) +
                            t * condio::continuant(t, win(2, n - 1));
                if (front != full) {
                  detail = "front expansion failed on " + condio::format_tuple(xs);
                  return false;
                }

                if (condio::continuant(t, condio::reversed(xs)) != full) {
                  detail = "reversal failed on " + condio::format_tuple(xs);
                  return false;
                }

                IntTuple lead;
                lead.emplace_back(1);
                lead.push_back(xs.front() - t);
                lead.insert(lead.end(), xs.begin() + 1, xs.end());
                IntTuple trail(xs.begin(), xs.end() - 1);
                trail.push_back(xs.back() - t);
                trail.emplace_back(1);
                if (condio::continuant(t, lead) != full || condio::continuant(t, trail) != full) {
                  detail = "unit padding failed on " + condio::format_tuple(xs);
                  return false;
                }

                condio::Matrix2 mat = condio::continuant_matrix(t, xs);
                if (mat.d != full || mat.c != condio::continuant(t, win(0, n - 2)) ||
                    mat.b != t * condio::continuant(t, win(1, n - 1)) ||
                    mat.a != t * condio::continuant(t, win(1, n - 2))) {
                  detail = "matrix correspondence failed on " + condio::format_tuple(xs);
                  return false;
                }
              }
              return true;
            });

  criterion(8, "every solution triple with coordinates in [-30, 30] receives a class",
            [](std::string& detail) {
              auto P = quartic();
              long solutions = 0, unclassified = 0;
              std::map<condio::N2Category, long> by_class;
              for (long x0 = -30; x0 <= 30; ++x0) {
                for (long x1 = -30; x1 <= 30; ++x1) {
                  Int lhs = P(Int(x1));
                  Int left = Int(x0) * x1 + 1;
                  for (long x2 = -30; x2 <= 30; ++x2) {
                    Int right = Int(x1) * x2 + 1;
                    if (left * right != lhs) continue;
                    ++solutions;
                    auto c = condio::classify_n2_solution(x0, x1, x2);
                    ++by_class[c.category];
                    if (c.category == condio::N2Category::not_a_solution) ++unclassified;
                  }
                }
              }
              detail = std::to_string(solutions) + " solutions";
              for (const auto& [cat, count] : by_class)
                detail += ", " + condio::to_string(cat) + "=" + std::to_string(count);
              return solutions > 0 && unclassified == 0;
            });

  criterion(9, "no window of the chain of (3,1,3,2,21), radius 10, has a unit continuant",
            [](std::string& detail) {
              auto seed = quartic_solution(ints({3, 1, 3, 2, 21}));
              auto chain = condio::chain_window(seed, 10, 10);
              IntTuple xs = chain.elements();
              for (size_t i = 0; i + 4 <= xs.size(); ++i) {
                Int k = condio::continuant(1, condio::subtuple(xs, static_cast<long>(i),
                                                               static_cast<long>(i) + 3));
                if (k == 1 || k == -1) {
                  detail = "unit window at index " + std::to_string(i);
                  return false;
                }
              }
              if (!condio::is_nonstandard_window(seed, 10)) {
                detail = "probe disagrees with the direct scan";
                return false;
              }
              return true;
            });

  criterion(10, "chain growth beats half the square product on positive non-decreasing windows",
            [](std::string& detail) {
              auto chain = condio::chain_window(quartic_solution(ints({0, 1, 1, 1, 13})), 2, 8);
              IntTuple xs = chain.elements();
              long checked = 0;
              for (size_t i = 0; i + 5 < xs.size(); ++i) {
                bool positive_monotone = true;
                for (size_t j = i; j < i + 5; ++j) {
                  if (xs[j] <= 0 || (j > i && xs[j] < xs[j - 1])) {
                    positive_monotone = false;
                    break;
                  }
                }
                if (!positive_monotone) continue;
                ++checked;
                Int bound = xs[i + 4] * xs[i + 4] * xs[i + 3] * xs[i + 3] * xs[i + 2];
                if (2 * xs[i + 5] <= bound) {
                  detail = "window at index " + std::to_string(i) + " grows too slowly";
                  return false;
                }
              }
              if (checked == 0) {
                detail = "no positive non-decreasing windows materialized";
                return false;
              }
              return true;
            });

  return failures;
}
