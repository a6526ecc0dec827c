#pragma once

// Arbitrary precision integer alias and small arithmetic helpers used across
// the library. All public arithmetic goes through mpz_class; helpers here wrap
// the handful of raw mpz_* calls so the rest of the code stays expression-level.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace condio {

using Int = mpz_class;

// Raised when text input cannot be parsed at all (distinct from domain errors).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// d | x, with the convention that 0 divides only 0.
inline bool divides(const Int& d, const Int& x) {
  if (d == 0) return x == 0;
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Quotient of an exactly divisible pair. Throws std::logic_error otherwise:
// callers use this only where exactness is guaranteed by construction.
inline Int exact_div(const Int& num, const Int& den) {
  if (den == 0 || !divides(den, num))
    throw std::logic_error("exact_div: " + num.get_str() + " is not a multiple of " + den.get_str());
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Floor division (rounds toward minus infinity), den > 0 expected.
inline Int floor_div(const Int& num, const Int& den) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline Int isqrt(const Int& x) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Strict integer parse: optional sign, decimal digits, nothing else.
inline Int parse_int(const std::string& text) {
  if (text.empty()) throw parse_error("empty integer literal");
  std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (i == text.size()) throw parse_error("sign without digits: '" + text + "'");
  for (; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw parse_error("invalid integer literal: '" + text + "'");
  return Int(text[0] == '+' ? text.substr(1) : text, 10);
}

}  // namespace condio
