#pragma once

// The central equation: a tuple (x_0, ..., x_n) solves (P, t, n) when
//   P(K(t, (x_1..x_{n-1}))) = K(t, (x_0..x_{n-1})) * K(t, (x_1..x_n)).
// This header carries instances, verified solutions, the one-step lift of an
// n-prefix, and left/right extension of a solution by one coordinate.

#include <condio/continuants.hpp>
#include <condio/polynomials.hpp>
#include <condio/tuples.hpp>

#include <optional>

namespace condio {

class EquationInstance {
 public:
  // Requires t in {+1, -1}, n >= 2, and check_condition(P, t, n) to hold;
  // throws std::invalid_argument otherwise.
  EquationInstance(IntPolynomial poly, int t, int n);

  const IntPolynomial& poly() const { return poly_; }
  Int t() const { return t_; }
  int t_int() const { return t_int_; }
  int n() const { return n_; }

  friend bool operator==(const EquationInstance&, const EquationInstance&) = default;

 private:
  IntPolynomial poly_;
  Int t_;
  int t_int_;
  int n_;
};

// True when xs satisfies the instance's equation. xs must have exactly n+1
// entries; throws std::invalid_argument otherwise.
bool verify_solution(const EquationInstance& inst, const IntTuple& xs);

// A tuple checked against its instance on construction
// (std::invalid_argument when verification fails).
class Solution {
 public:
  Solution(EquationInstance inst, IntTuple xs);

  const EquationInstance& instance() const { return inst_; }
  const IntTuple& xs() const { return xs_; }

  friend bool operator==(const Solution&, const Solution&) = default;

 private:
  EquationInstance inst_;
  IntTuple xs_;
};

// Completing an n-entry prefix (x_0..x_{n-1}) to a solution by choosing x_n.
enum class LiftKind {
  unique,        // exactly one x_n works; value is set
  free_choice,   // every integer x_n works
  not_liftable,  // no integer x_n works
};

struct LiftResult {
  LiftKind kind;
  std::optional<Int> value;  // set exactly for LiftKind::unique
};

// prefix must have exactly n entries; throws std::invalid_argument otherwise.
LiftResult lift(const EquationInstance& inst, const IntTuple& prefix);

// One-step extension of a solution by a new last (or first) coordinate.
enum class ExtendKind {
  unique,  // one continuation, next is set
  forced,  // continuation value is forced by a vanishing boundary; next is set
  branch,  // infinitely many continuations (an inner continuant vanished)
  dead,    // the forced value is not an integer; no continuation exists
};

struct ExtendResult {
  ExtendKind kind;
  std::optional<Solution> next;  // set for unique and forced
};

ExtendResult extend_right(const Solution& sol);
ExtendResult extend_left(const Solution& sol);

}  // namespace condio
