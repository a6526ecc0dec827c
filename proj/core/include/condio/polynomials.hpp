#pragma once

// Integer polynomials P(x) = c_0 + c_1 x + ... + c_d x^d with d >= 1 and
// c_d != 0, plus the coefficient condition that decides whether the pair
// (P, t) admits solution tuples of a given length parity.

#include <condio/integers.hpp>

#include <optional>
#include <string>
#include <vector>

namespace condio {

class IntPolynomial {
 public:
  // coeffs = (c_0, ..., c_d); throws std::invalid_argument unless d >= 1 and
  // c_d != 0.
  explicit IntPolynomial(std::vector<Int> coeffs);

  // Parses the comma text form "c_0,c_1,...,c_d", e.g. "1,0,0,0,1" for x^4+1.
  static IntPolynomial parse(const std::string& text);

  const std::vector<Int>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  Int operator()(const Int& x) const;

  std::string to_string() const;   // comma text form
  std::string pretty() const;      // human form, e.g. "x^4 + 1"

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<Int> c_;
};

// Whether (P, t) is compatible with tuples of n+1 entries: the constant term
// must be (-t)^n and the coefficient list must be proportional to its own
// reversal under s = (-t)^(n-1), i.e. c_i * s^i = C * c_{d-i} for a single
// nonzero integer C. Only the parity of n matters.
struct ConditionReport {
  bool holds = false;
  std::optional<Int> constant;  // C, present exactly when holds
  bool even_admissible = false; // condition holds for even n
  bool odd_admissible = false;  // condition holds for odd n
};

// t must be +1 or -1.
ConditionReport check_condition(const IntPolynomial& P, int t, long n);

}  // namespace condio
