#pragma once

// Integer tuples and inclusive-window views. Windows follow the convention
// used throughout the library: window(xs, i, j) is (x_i, ..., x_j), and an
// empty range (j < i) is a valid empty window.

#include <condio/integers.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace condio {

using IntTuple = std::vector<Int>;

IntTuple reversed(const IntTuple& xs);

// Inclusive window (x_first, ..., x_last) as a non-owning view.
// last < first yields the empty window; out-of-range indices throw
// std::out_of_range.
std::span<const Int> window(const IntTuple& xs, std::ptrdiff_t first, std::ptrdiff_t last);

// Owning copy of a window, for building new tuples.
IntTuple subtuple(const IntTuple& xs, std::ptrdiff_t first, std::ptrdiff_t last);

IntTuple parse_tuple(const std::vector<std::string>& words);

// "(a, b, c)"; "()" for the empty tuple.
std::string format_tuple(std::span<const Int> xs);
std::string format_tuple(const IntTuple& xs);

}  // namespace condio
