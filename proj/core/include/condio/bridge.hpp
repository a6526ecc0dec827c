#pragma once

// The bridge between solutions and coprime factorizations, for t = 1:
// a factorization P(m) = d1 * d2 with m >= 1, d1 > 0, gcd(m, d1) = 1
// corresponds to the solution built from the continued fraction expansion of
// d1/m, and back. enumerate_factorizations and factorization_table drive the
// correspondence over a range of m.

#include <condio/chains.hpp>
#include <condio/equation.hpp>

#include <string>
#include <utility>
#include <vector>

namespace condio {

enum class Parity { even, odd };

struct FactorizationTriple {
  Int m;
  Int d1;
  Int d2;
  friend bool operator==(const FactorizationTriple&, const FactorizationTriple&) = default;
};

// Continued fraction quotients (a_0; a_1, ..., a_{k}) of p/q with q >= 1,
// gcd(p, q) = 1: a_0 = floor(p/q) and a_i >= 1 for i >= 1, adjusted to the
// requested length parity via the standard tail rewrite
// (..., a) <-> (..., a-1, 1). The quotients satisfy
// continuant(1, (a_1..a_k)) = q and continuant(1, (a_0..a_k)) = p.
struct CFExpansion {
  std::vector<Int> quotients;
};
CFExpansion cf_expand(const Int& p, const Int& q, Parity parity);

// Requires m >= 1, d1 > 0, d1 * d2 = P(m), gcd(m, d1) = 1, and the parity to
// be admissible for (P, t=1); throws std::invalid_argument otherwise.
Solution factorization_to_solution(const IntPolynomial& P, Parity parity,
                                   const FactorizationTriple& f);

// Requires t = 1 and all interior coordinates x_1..x_{n-1} >= 1; returns
// (m, d1, d2) = (K(x_1..x_{n-1}), K(x_0..x_{n-1}), K(x_1..x_n)).
FactorizationTriple solution_to_factorization(const Solution& sol);

// All pairs d1 <= d2 of positive divisors with d1 * d2 = P(m); requires
// P(m) >= 1.
std::vector<std::pair<Int, Int>> enumerate_factorizations(const IntPolynomial& P, const Int& m);

// One row per factorization of P(m), m = 1..m_max: the solution, a chain
// snippet (radius steps each way), its end states, and a bounded provenance
// search: either a unit-continuant window found in the snippet, a peel of
// g/h inverses leading to one, or "unknown".
struct TableRow {
  Int m;
  Int d1;
  Int d2;
  IntTuple solution;
  IntTuple snippet;      // materialized chain elements
  long snippet_offset;   // index of solution[0] inside snippet
  EndState left_state;
  EndState right_state;
  std::string provenance;
};

std::vector<TableRow> factorization_table(const IntPolynomial& P, long m_max, int radius = 1);

}  // namespace condio
