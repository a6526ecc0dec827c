#pragma once

// Generalized continuants. K(t, ()) = 1, K(t, (x1)) = x1, and
//   K(t, (x1..xk)) = xk * K(t, (x1..x{k-1})) + t * K(t, (x1..x{k-2})).
// The parameter t may be any nonzero integer. continuant_matrix exposes the
// equivalent 2x2 matrix product, which tests use as an independent route.

#include <condio/integers.hpp>
#include <condio/tuples.hpp>

#include <span>
#include <string>

namespace condio {

Int continuant(const Int& t, std::span<const Int> xs);
inline Int continuant(const Int& t, const IntTuple& xs) {
  return continuant(t, std::span<const Int>(xs));
}

struct Matrix2 {
  Int a, b;  // row 0
  Int c, d;  // row 1
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

Matrix2 operator*(const Matrix2& lhs, const Matrix2& rhs);
std::string format_matrix(const Matrix2& m);

// Product over the tuple of [[0, t], [1, x_i]]; the empty tuple gives the
// identity. The bottom-right entry equals continuant(t, xs).
Matrix2 continuant_matrix(const Int& t, std::span<const Int> xs);
inline Matrix2 continuant_matrix(const Int& t, const IntTuple& xs) {
  return continuant_matrix(t, std::span<const Int>(xs));
}

}  // namespace condio
