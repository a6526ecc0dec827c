// Unit tests for chain growth, branch continuation, serialization, chain
// equivalence, and the nonstandard-window probe.

#include <doctest.h>

#include <nlohmann/json.hpp>
#include <stdexcept>

#include "test_support.hpp"

using condio::Chain;
using condio::chain_window;
using condio::chains_equivalent;
using condio::EndState;
using condio::Int;
using condio::IntTuple;
using condio::is_nonstandard_window;
using condio::Side;
using condio::Solution;
using testsupport::ints;

namespace {

Solution quartic_solution(std::initializer_list<long> vals) {
  auto xs = testsupport::ints(vals);
  auto inst = testsupport::quartic_instance(static_cast<long>(xs.size()) - 1);
  return Solution(inst, xs);
}

}  // namespace

TEST_CASE("fresh chain holds exactly the seed") {
  Chain c(quartic_solution({0, 2, 8}));
  CHECK(c.leftmost() == 0);
  CHECK(c.rightmost() == 2);
  CHECK(c.base_offset() == 0);
  CHECK(c.left_state() == EndState::open);
  CHECK(c.right_state() == EndState::open);
  CHECK(c.elements() == ints({0, 2, 8}));
  CHECK(c.at(1) == 2);
  CHECK_THROWS_AS(c.at(3), std::out_of_range);
  CHECK(c.window_tuple(0) == ints({0, 2, 8}));
  CHECK_THROWS_AS(c.window_tuple(1), std::out_of_range);
}

TEST_CASE("grow right materializes unique extensions") {
  Chain c = chain_window(quartic_solution({0, 2, 8}), 0, 2);
  CHECK(c.elements() == ints({0, 2, 8, 30, 112}));
  CHECK(c.rightmost() == 4);
  CHECK(c.right_state() == EndState::open);
  CHECK(c.window_tuple(2) == ints({8, 30, 112}));
  CHECK(c.window(2).xs() == ints({8, 30, 112}));
}

TEST_CASE("grow left crosses zero and updates base_offset") {
  Chain c = chain_window(quartic_solution({0, 1, 1, 1, 13}), 1, 2);
  CHECK(c.elements() == ints({-1, 0, 1, 1, 1, 13, 480, 23422307}));
  CHECK(c.leftmost() == -1);
  CHECK(c.base_offset() == 1);
  CHECK(c.at(-1) == -1);
  CHECK(c.at(5) == 480);
  CHECK(c.window_tuple(-1) == ints({-1, 0, 1, 1, 1}));
}

TEST_CASE("branch ends growth and reports the taken count") {
  Chain c(quartic_solution({0, 1, 1}));
  int taken = c.grow_right(5);
  CHECK(taken == 1);
  CHECK(c.elements() == ints({0, 1, 1, 0}));
  CHECK(c.right_state() == EndState::branch);
  // once closed, further growth is a no-op
  CHECK(c.grow_right(3) == 0);
  CHECK(c.elements() == ints({0, 1, 1, 0}));
  // the left side of this seed branches immediately
  CHECK(c.grow_left(2) == 0);
  CHECK(c.left_state() == EndState::branch);
}

TEST_CASE("continue_branch reopens a side with a verified choice") {
  Chain c(quartic_solution({8, 2, 0}));
  REQUIRE(c.grow_right(1) == 0);
  REQUIRE(c.right_state() == EndState::branch);
  CHECK_THROWS_AS(c.continue_branch(Side::left, Int(7)), std::invalid_argument);
  c.continue_branch(Side::right, Int(7));
  CHECK(c.right_state() == EndState::open);
  CHECK(c.elements() == ints({8, 2, 0, 7}));
  CHECK(c.grow_right(1) == 1);
  CHECK(c.elements() == ints({8, 2, 0, 7, 343}));
  CHECK(c.grow_left(1) == 1);
  CHECK(c.elements() == ints({30, 8, 2, 0, 7, 343}));
}

TEST_CASE("continue_branch rejects open sides") {
  Chain c(quartic_solution({0, 2, 8}));
  CHECK_THROWS_AS(c.continue_branch(Side::right, Int(30)), std::invalid_argument);
}

TEST_CASE("serialization round trip") {
  Chain c = chain_window(quartic_solution({0, 1, 1}), 0, 2);
  std::string text = c.to_json();
  auto parsed = nlohmann::json::parse(text);
  CHECK(parsed["t"] == 1);
  CHECK(parsed["poly"] == "1,0,0,0,1");
  CHECK(parsed["n"] == 2);
  CHECK(parsed["base_offset"] == 0);
  CHECK(parsed["left_end"] == "open");
  CHECK(parsed["right_end"] == "branch");
  std::vector<std::string> elems = parsed["elements"];
  CHECK(elems == std::vector<std::string>{"0", "1", "1", "0"});

  Chain back = Chain::from_json(text);
  CHECK(back.elements() == c.elements());
  CHECK(back.left_state() == c.left_state());
  CHECK(back.right_state() == c.right_state());
  CHECK(back.base_offset() == c.base_offset());
  CHECK(back.to_json() == text);
}

TEST_CASE("serialization keeps offsets") {
  Chain c = chain_window(quartic_solution({0, 1, 1, 1, 13}), 1, 1);
  Chain back = Chain::from_json(c.to_json());
  CHECK(back.base_offset() == 1);
  CHECK(back.at(-1) == -1);
  CHECK(back.at(5) == 480);
}

TEST_CASE("from_json rejects tampered and malformed input") {
  Chain c = chain_window(quartic_solution({0, 2, 8}), 0, 1);
  std::string good = c.to_json();
  auto j = nlohmann::json::parse(good);
  j["elements"][3] = "31";
  CHECK_THROWS_AS(Chain::from_json(j.dump()), std::invalid_argument);
  j = nlohmann::json::parse(good);
  j["elements"] = nlohmann::json::array({"0", "2"});
  CHECK_THROWS_AS(Chain::from_json(j.dump()), std::invalid_argument);
  CHECK_THROWS_AS(Chain::from_json("not json"), condio::parse_error);
  CHECK_THROWS_AS(Chain::from_json("{}"), condio::parse_error);
  j = nlohmann::json::parse(good);
  j["t"] = 0;
  CHECK_THROWS_AS(Chain::from_json(j.dump()), std::invalid_argument);
  // "dead" is accepted in end-state fields
  j = nlohmann::json::parse(good);
  j["right_end"] = "dead";
  CHECK(Chain::from_json(j.dump()).right_state() == EndState::dead);
}

TEST_CASE("window access re-verifies") {
  Chain c = chain_window(quartic_solution({0, 3, 27}), 0, 1);
  CHECK(c.window_tuple(1) == ints({3, 27, 240}));
  Solution w = c.window(1);
  CHECK(w.instance() == c.instance());
}

TEST_CASE("chain equivalence within a bounded shift") {
  CHECK(chains_equivalent(quartic_solution({0, 2, 8}), quartic_solution({2, 8, 30}), 2));
  CHECK(chains_equivalent(quartic_solution({2, 8, 30}), quartic_solution({0, 2, 8}), 2));
  CHECK(chains_equivalent(quartic_solution({0, 2, 8}), quartic_solution({0, 2, 8}), 0));
  CHECK_FALSE(chains_equivalent(quartic_solution({0, 2, 8}), quartic_solution({0, 3, 27}), 5));
  CHECK_FALSE(
      chains_equivalent(quartic_solution({0, 1, 1, 1, 13}), quartic_solution({13, 1, 1, 1, 0}), 3));
  auto n2 = quartic_solution({0, 2, 8});
  auto n4 = quartic_solution({0, 1, 1, 1, 13});
  CHECK_THROWS_AS(chains_equivalent(n2, n4, 1), std::invalid_argument);
}

TEST_CASE("nonstandard window probe") {
  CHECK_FALSE(is_nonstandard_window(quartic_solution({0, 2, 8}), 1));
  CHECK_FALSE(is_nonstandard_window(quartic_solution({2, -1, 3}), 3));
  CHECK(is_nonstandard_window(quartic_solution({3, 1, 3, 2, 21}), 5));
  CHECK(is_nonstandard_window(quartic_solution({1, 1, 7, 1, 42}), 3));
}

TEST_CASE("deep growth reaches the pinned large elements") {
  Chain c = chain_window(quartic_solution({0, 1, 1, 1, 13}), 0, 3);
  CHECK(c.at(5) == 480);
  CHECK(c.at(6) == 23422307);
  CHECK(c.at(7) == Int("19842116285849334912239"));
  CHECK(condio::continuant(1, ints({13, 480, 23422307})) == Int("146178618000"));
}

TEST_CASE("growth is memoized and repeatable") {
  Chain c(quartic_solution({0, 2, 8}));
  CHECK(c.grow_right(2) == 2);
  CHECK(c.grow_right(2) == 2);
  CHECK(c.elements().size() == 7);
  Chain d = chain_window(quartic_solution({0, 2, 8}), 0, 4);
  CHECK(c.elements() == d.elements());
}
