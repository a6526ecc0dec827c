#include <condio/chains.hpp>

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <utility>

namespace condio {

std::string to_string(EndState s) {
  switch (s) {
    case EndState::open: return "open";
    case EndState::branch: return "branch";
    case EndState::dead: return "dead";
  }
  throw std::logic_error("to_string: bad EndState");
}

EndState end_state_from_string(const std::string& s) {
  if (s == "open") return EndState::open;
  if (s == "branch") return EndState::branch;
  if (s == "dead") return EndState::dead;
  throw parse_error("unknown end state: '" + s + "'");
}

Chain::Chain(Solution seed)
    : inst_(seed.instance()), elems_(seed.xs().begin(), seed.xs().end()) {}

Chain::Chain(EquationInstance inst, std::deque<Int> elems, long left_origin,
             EndState left_state, EndState right_state)
    : inst_(std::move(inst)),
      elems_(std::move(elems)),
      left_origin_(left_origin),
      left_state_(left_state),
      right_state_(right_state) {}

const Int& Chain::at(long pos) const {
  if (pos < leftmost() || pos > rightmost())
    throw std::out_of_range("chain position " + std::to_string(pos) + " not materialized");
  return elems_[static_cast<std::size_t>(pos - left_origin_)];
}

IntTuple Chain::window_tuple(long pos) const {
  const int n = inst_.n();
  if (pos < leftmost() || pos + n > rightmost())
    throw std::out_of_range("chain window at " + std::to_string(pos) + " not materialized");
  auto first = elems_.begin() + static_cast<std::ptrdiff_t>(pos - left_origin_);
  return IntTuple(first, first + n + 1);
}

Solution Chain::window(long pos) const { return Solution(inst_, window_tuple(pos)); }

IntTuple Chain::elements() const { return IntTuple(elems_.begin(), elems_.end()); }

int Chain::grow_right(int steps) {
  int taken = 0;
  while (taken < steps && right_state_ == EndState::open) {
    ExtendResult r = extend_right(window(rightmost() - inst_.n()));
    if (r.kind == ExtendKind::branch) {
      right_state_ = EndState::branch;
      break;
    }
    if (r.kind == ExtendKind::dead) {
      right_state_ = EndState::dead;
      break;
    }
    elems_.push_back(r.next->xs().back());
    ++taken;
  }
  return taken;
}

int Chain::grow_left(int steps) {
  int taken = 0;
  while (taken < steps && left_state_ == EndState::open) {
    ExtendResult r = extend_left(window(leftmost()));
    if (r.kind == ExtendKind::branch) {
      left_state_ = EndState::branch;
      break;
    }
    if (r.kind == ExtendKind::dead) {
      left_state_ = EndState::dead;
      break;
    }
    elems_.push_front(r.next->xs().front());
    --left_origin_;
    ++taken;
  }
  return taken;
}

void Chain::continue_branch(Side side, const Int& value) {
  const int n = inst_.n();
  EndState& state = (side == Side::left) ? left_state_ : right_state_;
  if (state != EndState::branch)
    throw std::invalid_argument("continue_branch: that side is not at a branch");
  IntTuple candidate;
  if (side == Side::right) {
    candidate = window_tuple(rightmost() - n);
    candidate.erase(candidate.begin());
    candidate.push_back(value);
  } else {
    candidate = window_tuple(leftmost());
    candidate.pop_back();
    candidate.insert(candidate.begin(), value);
  }
  Solution checked(inst_, std::move(candidate));  // throws if the choice is invalid
  if (side == Side::right) {
    elems_.push_back(checked.xs().back());
  } else {
    elems_.push_front(checked.xs().front());
    --left_origin_;
  }
  state = EndState::open;
}

void continue_branch(Chain& chain, Side side, const Int& value) {
  chain.continue_branch(side, value);
}

std::string Chain::to_json() const {
  nlohmann::ordered_json j;
  j["t"] = inst_.t_int();
  j["poly"] = inst_.poly().to_string();
  j["n"] = inst_.n();
  nlohmann::ordered_json elems = nlohmann::ordered_json::array();
  for (const Int& x : elems_) elems.push_back(x.get_str());
  j["elements"] = std::move(elems);
  j["base_offset"] = base_offset();
  j["left_end"] = to_string(left_state_);
  j["right_end"] = to_string(right_state_);
  return j.dump();
}

Chain Chain::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("chain JSON: ") + e.what());
  }
  try {
    EquationInstance inst(IntPolynomial::parse(j.at("poly").get<std::string>()),
                          j.at("t").get<int>(), j.at("n").get<int>());
    std::deque<Int> elems;
    for (const auto& e : j.at("elements")) elems.push_back(parse_int(e.get<std::string>()));
    long base_offset = j.at("base_offset").get<long>();
    EndState left = end_state_from_string(j.at("left_end").get<std::string>());
    EndState right = end_state_from_string(j.at("right_end").get<std::string>());

    const int n = inst.n();
    if (static_cast<int>(elems.size()) < n + 1)
      throw std::invalid_argument("chain JSON: fewer elements than one window");
    if (base_offset < 0 || base_offset + n >= static_cast<long>(elems.size()))
      throw std::invalid_argument("chain JSON: base_offset out of range");
    IntTuple all(elems.begin(), elems.end());
    for (std::size_t i = 0; i + n < all.size(); ++i) {
      if (!verify_solution(inst, subtuple(all, static_cast<std::ptrdiff_t>(i),
                                          static_cast<std::ptrdiff_t>(i) + n)))
        throw std::invalid_argument("chain JSON: window at index " + std::to_string(i) +
                                    " does not verify");
    }
    return Chain(std::move(inst), std::move(elems), -base_offset, left, right);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("chain JSON: ") + e.what());
  }
}

Chain chain_window(const Solution& seed, int left_steps, int right_steps) {
  if (left_steps < 0 || right_steps < 0)
    throw std::invalid_argument("chain_window: step counts must be nonnegative");
  Chain chain(seed);
  chain.grow_left(left_steps);
  chain.grow_right(right_steps);
  return chain;
}

namespace {

bool chain_covers(const Solution& host, const IntTuple& needle, int max_shift) {
  Chain chain(host);
  chain.grow_left(max_shift);
  chain.grow_right(max_shift);
  const int n = host.instance().n();
  for (long pos = chain.leftmost(); pos + n <= chain.rightmost(); ++pos)
    if (chain.window_tuple(pos) == needle) return true;
  return false;
}

}  // namespace

bool chains_equivalent(const Solution& a, const Solution& b, int max_shift) {
  if (!(a.instance() == b.instance()))
    throw std::invalid_argument("chains_equivalent: different instances");
  if (max_shift < 0) throw std::invalid_argument("chains_equivalent: negative shift bound");
  return chain_covers(a, b.xs(), max_shift) || chain_covers(b, a.xs(), max_shift);
}

bool is_nonstandard_window(const Solution& seed, int radius) {
  if (radius < 0) throw std::invalid_argument("is_nonstandard_window: negative radius");
  Chain chain(seed);
  chain.grow_left(radius);
  chain.grow_right(radius);
  IntTuple all = chain.elements();
  const int n = seed.instance().n();
  const Int& t = seed.instance().t();
  for (std::size_t i = 0; i + n <= all.size(); ++i) {
    Int k = continuant(t, window(all, static_cast<std::ptrdiff_t>(i),
                                 static_cast<std::ptrdiff_t>(i) + n - 1));
    if (k == 1 || k == -1) return false;
  }
  return true;
}

}  // namespace condio
