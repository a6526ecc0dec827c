#pragma once

// Seed machinery: exhaustive enumeration of unit-continuant tuples, the
// closed-form families that describe them for small (t, n), padding a unit
// tuple into a solution prefix, seeding solutions, and the classifier for
// n = 2 solutions of x^4 + 1.

#include <condio/equation.hpp>

#include <optional>
#include <string>
#include <vector>

namespace condio {

// All xs in [-bound, bound]^n with continuant(t, xs) == target, sorted
// lexicographically. target must be +1 or -1, t nonzero, n >= 1.
std::vector<IntTuple> enumerate_unit_tuples(const Int& t, int n, long bound, const Int& target);

// A parametric family of unit tuples: coordinate i is
// coeff_a[i]*a + coeff_b[i]*b + offset[i] over integer parameters (a, b).
// nparams in {0, 1, 2} says how many of (a, b) are live.
struct UnitFamily {
  struct Coord {
    int coeff_a = 0;
    int coeff_b = 0;
    long offset = 0;
  };
  int nparams = 0;
  std::vector<Coord> coords;
  std::string label;  // e.g. "(0, a, 1)"
};

// The family tables for (t, n) in {(1,2), (1,3), (1,4), (-1,2), (-1,3)},
// reversals included; throws std::invalid_argument for other pairs.
std::vector<UnitFamily> unit_families(int t, int n);

// Every member of every family for (t, n) with all coordinates in
// [-bound, bound], deduplicated and sorted lexicographically. Supported (t, n)
// pairs as in unit_families.
std::vector<IntTuple> family_tuples(int t, int n, long bound);

// True when xs is an instance of the family for some integer parameters.
bool family_matches(const UnitFamily& family, const IntTuple& xs);

// xs ++ (a, 0): appending a and 0 multiplies the continuant by t, so unit
// tuples stay unit up to sign. t nonzero.
IntTuple pad_unit_tuple(const Int& t, const IntTuple& xs, const Int& a);

// Seeding: an n-entry tuple with |continuant| = 1 always lifts; the lift is
// either unique or free.
struct SeedResult {
  bool free_choice = false;
  std::optional<Solution> solution;  // set exactly when not free_choice
};

// Throws std::invalid_argument unless xs has n entries and |K(t, xs)| == 1.
SeedResult seed_solution(const EquationInstance& inst, const IntTuple& xs);

// Completes a free seed with the chosen last coordinate; throws
// std::invalid_argument if the completion is not free.
Solution seed_solution(const EquationInstance& inst, const IntTuple& xs, const Int& chosen);

// Classification of solutions (x_0, x_1, x_2) of P = x^4 + 1, t = 1, n = 2.
// Tuples with x_1 = 0 solve the equation for every x_0, x_2 and form their own
// class. Every other solution walks, by measure-decreasing one-step
// extensions, into a zero-led window (0, a), its reversal, or one of the four
// alternating windows +-(2,-1,3) / +-(3,-1,2).
enum class N2Category {
  chain_of_zero_led,           // in the chain of (0, a, a^3) for some a
  reversed_chain_of_zero_led,  // in the chain of (a^3, a, 0) for some a
  middle_zero,                 // x_1 = 0 (any x_0, x_2)
  alternating_special,         // in the chain of an alternating window
  not_a_solution,
};

std::string to_string(N2Category c);

struct N2Classification {
  N2Category category = N2Category::not_a_solution;
  std::optional<Int> parameter;  // the a of the zero-led chain, when applicable
};

N2Classification classify_n2_solution(const Int& x0, const Int& x1, const Int& x2,
                                      int max_steps = 64);

}  // namespace condio
