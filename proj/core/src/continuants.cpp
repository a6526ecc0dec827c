#include <condio/continuants.hpp>

#include <stdexcept>
#include <utility>

namespace condio {

Int continuant(const Int& t, std::span<const Int> xs) {
  if (t == 0) throw std::invalid_argument("continuant: t must be nonzero");
  Int two_back = 0;  // value for the tuple two shorter
  Int one_back = 1;  // value for the tuple one shorter
  for (const Int& x : xs) {
    Int cur = x * one_back + t * two_back;
    two_back = std::move(one_back);
    one_back = std::move(cur);
  }
  return one_back;
}

Matrix2 operator*(const Matrix2& lhs, const Matrix2& rhs) {
  return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
          lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

std::string format_matrix(const Matrix2& m) {
  return "[[" + m.a.get_str() + ", " + m.b.get_str() + "], [" + m.c.get_str() + ", " +
         m.d.get_str() + "]]";
}

Matrix2 continuant_matrix(const Int& t, std::span<const Int> xs) {
  if (t == 0) throw std::invalid_argument("continuant_matrix: t must be nonzero");
  Matrix2 acc{1, 0, 0, 1};
  for (const Int& x : xs) acc = acc * Matrix2{0, t, 1, x};
  return acc;
}

}  // namespace condio
