#pragma once

// Chains: the two-sided sequence generated from a seed solution by repeated
// one-coordinate extension. Positions are absolute: the seed occupies
// [0, n], grow_left materializes negative positions. Each side is open until
// an extension reports branch (infinitely many continuations) or dead (no
// integer continuation); continue_branch picks a value and reopens the side.

#include <condio/equation.hpp>

#include <deque>
#include <string>

namespace condio {

enum class EndState { open, branch, dead };
enum class Side { left, right };

std::string to_string(EndState s);
EndState end_state_from_string(const std::string& s);

class Chain {
 public:
  explicit Chain(Solution seed);

  const EquationInstance& instance() const { return inst_; }

  // Inclusive position range currently materialized.
  long leftmost() const { return left_origin_; }
  long rightmost() const { return left_origin_ + static_cast<long>(elems_.size()) - 1; }
  // Number of elements materialized before position 0.
  long base_offset() const { return -left_origin_; }

  EndState left_state() const { return left_state_; }
  EndState right_state() const { return right_state_; }

  const Int& at(long pos) const;

  // The n+1 elements starting at pos, and the same window as a (re-verified)
  // solution. pos must satisfy leftmost() <= pos, pos + n <= rightmost().
  IntTuple window_tuple(long pos) const;
  Solution window(long pos) const;

  // Left-to-right copy of everything materialized.
  IntTuple elements() const;

  // Extend by up to `steps` coordinates; returns how many were materialized
  // before the side closed (branch/dead) or steps ran out.
  int grow_left(int steps);
  int grow_right(int steps);

  // Resolve a branch end by choosing the next coordinate; the chosen window is
  // verified and the side reopens. Throws std::invalid_argument if the side is
  // not in the branch state or the value does not verify.
  void continue_branch(Side side, const Int& value);

  // JSON object with the instance, elements (decimal strings), base_offset,
  // and both end states.
  std::string to_json() const;
  static Chain from_json(const std::string& text);

 private:
  Chain(EquationInstance inst, std::deque<Int> elems, long left_origin,
        EndState left_state, EndState right_state);

  EquationInstance inst_;
  std::deque<Int> elems_;
  long left_origin_ = 0;
  EndState left_state_ = EndState::open;
  EndState right_state_ = EndState::open;
};

// Chain of seed grown left_steps and right_steps (each clamped by end states).
Chain chain_window(const Solution& seed, int left_steps, int right_steps);

void continue_branch(Chain& chain, Side side, const Int& value);

// Whether a and b generate the same chain up to translation: b's tuple must
// appear as a window of a's chain within max_shift growth steps per side, or
// vice versa. Throws std::invalid_argument when the instances differ.
bool chains_equivalent(const Solution& a, const Solution& b, int max_shift);

// True when no (n-entry) consecutive window of the chain, materialized radius
// steps out on both sides, has continuant +-1. Such a chain cannot be reached
// from the unit-continuant seed constructions within that radius.
bool is_nonstandard_window(const Solution& seed, int radius);

}  // namespace condio
