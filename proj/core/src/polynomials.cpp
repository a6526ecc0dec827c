#include <condio/polynomials.hpp>

#include <sstream>
#include <stdexcept>
#include <utility>

namespace condio {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  if (c_.size() < 2)
    throw std::invalid_argument("IntPolynomial: degree must be at least 1");
  if (c_.back() == 0)
    throw std::invalid_argument("IntPolynomial: leading coefficient must be nonzero");
}

IntPolynomial IntPolynomial::parse(const std::string& text) {
  std::vector<Int> coeffs;
  std::string field;
  std::istringstream in(text);
  if (text.empty()) throw parse_error("empty polynomial");
  while (std::getline(in, field, ',')) coeffs.push_back(parse_int(field));
  if (text.back() == ',') throw parse_error("trailing comma in polynomial: '" + text + "'");
  try {
    return IntPolynomial(std::move(coeffs));
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string(e.what()) + " in '" + text + "'");
  }
}

Int IntPolynomial::operator()(const Int& x) const {
  Int acc = c_.back();
  for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i != 0) out += ',';
    out += c_[i].get_str();
  }
  return out;
}

std::string IntPolynomial::pretty() const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Int mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) {
      out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

namespace {

// The condition for one parity class of n. s = (-t)^(n-1), required constant
// term (-t)^n; both depend on n only through its parity since |t| = 1.
std::optional<Int> condition_constant(const IntPolynomial& P, int t, int n_parity) {
  int minus_t = -t;
  int c0_required = (n_parity % 2 == 0) ? 1 : minus_t;
  int s = (n_parity % 2 == 0) ? minus_t : 1;

  const auto& c = P.coeffs();
  int d = P.degree();
  if (c[0] != c0_required) return std::nullopt;

  // c_i * s^i = C * c_{d-i} for all i; with c_0 = +-1 the i = d case pins
  // C = c_d * s^d / c_0, an integer. Verify every pair against it.
  auto s_pow = [&](int i) { return (s == -1 && i % 2 != 0) ? -1 : 1; };
  Int C = c[static_cast<std::size_t>(d)] * s_pow(d) * c[0];
  if (C == 0) return std::nullopt;
  for (int i = 0; i <= d; ++i) {
    Int lhs = c[static_cast<std::size_t>(i)] * s_pow(i);
    Int rhs = C * c[static_cast<std::size_t>(d - i)];
    if (lhs != rhs) return std::nullopt;
  }
  return C;
}

}  // namespace

ConditionReport check_condition(const IntPolynomial& P, int t, long n) {
  if (t != 1 && t != -1)
    throw std::invalid_argument("check_condition: t must be +1 or -1");
  ConditionReport report;
  auto even = condition_constant(P, t, 0);
  auto odd = condition_constant(P, t, 1);
  report.even_admissible = even.has_value();
  report.odd_admissible = odd.has_value();
  auto& mine = (n % 2 == 0) ? even : odd;
  report.holds = mine.has_value();
  if (mine) report.constant = *mine;
  return report;
}

}  // namespace condio
