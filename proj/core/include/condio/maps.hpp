#pragma once

// Divisor prefixes and the self-maps on them. A divisor prefix is a tuple
// (x_0..x_n), n >= 1, whose outer continuant K(t, (x_0..x_n)) divides
// P(K(t, (x_1..x_n))); completing it with one more coordinate yields a
// solution of the instance with that length. The maps f, f*, g, h (and the
// inverses of g and h) transform prefixes while preserving that divisibility,
// with preconditions listed per map.

#include <condio/equation.hpp>

#include <optional>
#include <string>
#include <vector>

namespace condio {

class DivisorPrefix {
 public:
  // Requires t in {+1, -1}, at least 2 entries, and
  // outer() | P(inner()) (for outer() == 0 this means P(inner()) == 0);
  // throws std::invalid_argument otherwise.
  DivisorPrefix(IntPolynomial poly, int t, IntTuple xs);

  const IntPolynomial& poly() const { return poly_; }
  Int t() const { return t_; }
  int t_int() const { return t_int_; }
  const IntTuple& xs() const { return xs_; }
  int length() const { return static_cast<int>(xs_.size()); }

  const Int& outer() const { return outer_; }  // K(t, (x_0..x_n))
  const Int& inner() const { return inner_; }  // K(t, (x_1..x_n))

  friend bool operator==(const DivisorPrefix&, const DivisorPrefix&) = default;

 private:
  IntPolynomial poly_;
  Int t_;
  int t_int_;
  IntTuple xs_;
  Int outer_;
  Int inner_;
};

// The solution minus its last coordinate (always a valid divisor prefix).
DivisorPrefix prefix_of(const Solution& sol);

// Completing a prefix of length m produces a solution of the instance with
// n = m. Throws std::invalid_argument when (P, t, m) fails the coefficient
// condition (the prefix length has the wrong parity for this P).
struct Completion {
  bool free_choice = false;
  std::optional<Solution> solution;  // set exactly when not free_choice
};
Completion complete(const DivisorPrefix& prefix);

// f_a: xs -> (0, a) ++ xs. Requires inner() != 0 (use map_f_star otherwise).
DivisorPrefix map_f(const Int& a, const DivisorPrefix& prefix);

// f*_{a,b}: for prefixes with inner() == 0, builds the full tuple
// (0, a) ++ xs ++ (b) and verifies it as a solution; throws
// std::invalid_argument when it does not verify.
Solution map_f_star(const Int& a, const Int& b, const DivisorPrefix& prefix);

// g: (x_0, rest) -> (1, x_0 - t, rest); lengthens by one.
DivisorPrefix map_g(const DivisorPrefix& prefix);
// h: (rest, x_n) -> (rest, x_n - t, 1); lengthens by one.
DivisorPrefix map_h(const DivisorPrefix& prefix);
// g^{-1}: requires x_0 == 1 and length >= 3; (1, y, rest) -> (y + t, rest).
DivisorPrefix map_g_inv(const DivisorPrefix& prefix);
// h^{-1}: requires x_n == 1 and length >= 3; (rest, y, 1) -> (rest, y + t).
DivisorPrefix map_h_inv(const DivisorPrefix& prefix);

// The compositions that keep the prefix length parity admissible for a given
// t, with their preconditions; data for documentation and the CLI.
struct CompositionRule {
  std::string expr;         // e.g. "g.h" or "f:a"
  std::string requirement;  // e.g. "x_0 = 1", empty when unconditional
};
std::vector<CompositionRule> valid_compositions(int t);

// Map expressions: dot-composed ops applied rightmost first, e.g. "g.h",
// "f:3", "fstar:2,7", "ginv", "hinv". fstar may only appear leftmost (it is
// applied last and produces a solution, not a prefix).
struct MapStep {
  enum class Op { f, fstar, g, h, ginv, hinv };
  Op op;
  std::optional<Int> a;  // f, fstar
  std::optional<Int> b;  // fstar
};

std::vector<MapStep> parse_map_expr(const std::string& expr);

struct MapOutcome {
  std::optional<DivisorPrefix> prefix;  // set unless the expression ends in fstar
  std::optional<Solution> solution;     // set when the expression ends in fstar
};
MapOutcome apply_map_expr(const std::vector<MapStep>& steps, const DivisorPrefix& start);

}  // namespace condio
