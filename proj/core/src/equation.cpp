#include <condio/equation.hpp>

#include <stdexcept>
#include <utility>

namespace condio {

EquationInstance::EquationInstance(IntPolynomial poly, int t, int n)
    : poly_(std::move(poly)), t_(t), t_int_(t), n_(n) {
  if (t != 1 && t != -1)
    throw std::invalid_argument("EquationInstance: t must be +1 or -1");
  if (n < 2) throw std::invalid_argument("EquationInstance: n must be at least 2");
  auto report = check_condition(poly_, t, n);
  if (!report.holds)
    throw std::invalid_argument("EquationInstance: coefficient condition fails for " +
                                poly_.pretty() + ", t = " + std::to_string(t) +
                                ", n = " + std::to_string(n));
}

bool verify_solution(const EquationInstance& inst, const IntTuple& xs) {
  const int n = inst.n();
  if (static_cast<int>(xs.size()) != n + 1)
    throw std::invalid_argument("verify_solution: expected " + std::to_string(n + 1) +
                                " entries, got " + std::to_string(xs.size()));
  const Int& t = inst.t();
  Int mid = continuant(t, window(xs, 1, n - 1));
  Int left = continuant(t, window(xs, 0, n - 1));
  Int right = continuant(t, window(xs, 1, n));
  return inst.poly()(mid) == left * right;
}

Solution::Solution(EquationInstance inst, IntTuple xs)
    : inst_(std::move(inst)), xs_(std::move(xs)) {
  if (!verify_solution(inst_, xs_))
    throw std::invalid_argument("Solution: tuple " + format_tuple(xs_) +
                                " does not satisfy the equation");
}

LiftResult lift(const EquationInstance& inst, const IntTuple& prefix) {
  const int n = inst.n();
  if (static_cast<int>(prefix.size()) != n)
    throw std::invalid_argument("lift: expected " + std::to_string(n) + " entries, got " +
                                std::to_string(prefix.size()));
  const Int& t = inst.t();
  // For the candidate solution (prefix, x): the equation reads
  //   P(inner) = D * (x * inner + t * inner_short)
  // with D = K(x_0..x_{n-1}), inner = K(x_1..x_{n-1}),
  // inner_short = K(x_1..x_{n-2}).
  Int D = continuant(t, window(prefix, 0, n - 1));
  Int inner = continuant(t, window(prefix, 1, n - 1));
  Int inner_short = continuant(t, window(prefix, 1, n - 2));
  Int value = inst.poly()(inner);

  if (D == 0) {
    // The right factor is multiplied by zero for every x.
    if (value == 0) return {LiftKind::free_choice, std::nullopt};
    return {LiftKind::not_liftable, std::nullopt};
  }
  if (!divides(D, value)) return {LiftKind::not_liftable, std::nullopt};
  if (inner == 0) {
    // x is unconstrained, and P(0) = D * t * inner_short holds automatically
    // (inner = 0 makes D and inner_short units tied to the constant term).
    if (value != D * t * inner_short)
      throw std::logic_error("lift: free case equality failed on an admissible instance");
    return {LiftKind::free_choice, std::nullopt};
  }
  // With D | P(inner), the full quotient is exact: D and inner are coprime
  // and the numerator vanishes mod inner by the coefficient condition.
  Int num = value - t * inner_short * D;
  Int den = inner * D;
  return {LiftKind::unique, exact_div(num, den)};
}

namespace {

ExtendResult extend_right_impl(const Solution& sol) {
  const EquationInstance& inst = sol.instance();
  const IntTuple& xs = sol.xs();
  const int n = inst.n();
  const Int& t = inst.t();
  // The window shifted one step right is (x_1..x_n, y). Its equation reads
  //   P(r_inner) = r_outer_new * (y * r_inner + t * r_mid)
  // with r_inner = K(x_2..x_n), r_outer = K(x_1..x_n) (the new left factor),
  // r_mid = K(x_2..x_{n-1}).
  Int r_inner = continuant(t, window(xs, 2, n));
  Int r_outer = continuant(t, window(xs, 1, n));
  Int r_mid = continuant(t, window(xs, 2, n - 1));

  if (r_inner == 0) return {ExtendKind::branch, std::nullopt};

  auto with_value = [&](const Int& y, ExtendKind kind) -> ExtendResult {
    IntTuple next(xs.begin() + 1, xs.end());
    next.push_back(y);
    return {kind, Solution(inst, std::move(next))};
  };

  if (r_outer == 0) {
    // P(r_inner) = 0 is automatic here (both mid continuants are then units
    // with P vanishing on them), so every y verifies; the chain continues
    // with the single y that zeroes the new right factor as well,
    // y * r_inner + t * r_mid = 0, integrality permitting.
    Int num = -t * r_mid;
    if (!divides(r_inner, num)) return {ExtendKind::dead, std::nullopt};
    return with_value(exact_div(num, r_inner), ExtendKind::forced);
  }

  Int num = inst.poly()(r_inner) - t * r_mid * r_outer;
  Int den = r_inner * r_outer;
  return with_value(exact_div(num, den), ExtendKind::unique);
}

}  // namespace

ExtendResult extend_right(const Solution& sol) { return extend_right_impl(sol); }

ExtendResult extend_left(const Solution& sol) {
  Solution rev(sol.instance(), reversed(sol.xs()));
  ExtendResult r = extend_right_impl(rev);
  if (r.next) r.next = Solution(sol.instance(), reversed(r.next->xs()));
  return r;
}

}  // namespace condio
