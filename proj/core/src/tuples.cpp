#include <condio/tuples.hpp>

#include <algorithm>
#include <stdexcept>

namespace condio {

IntTuple reversed(const IntTuple& xs) {
  return IntTuple(xs.rbegin(), xs.rend());
}

std::span<const Int> window(const IntTuple& xs, std::ptrdiff_t first, std::ptrdiff_t last) {
  if (last < first) return {};
  if (first < 0 || last >= static_cast<std::ptrdiff_t>(xs.size()))
    throw std::out_of_range("window [" + std::to_string(first) + ", " + std::to_string(last) +
                            "] out of range for tuple of size " + std::to_string(xs.size()));
  return {xs.data() + first, static_cast<std::size_t>(last - first + 1)};
}

IntTuple subtuple(const IntTuple& xs, std::ptrdiff_t first, std::ptrdiff_t last) {
  auto w = window(xs, first, last);
  return IntTuple(w.begin(), w.end());
}

IntTuple parse_tuple(const std::vector<std::string>& words) {
  IntTuple xs;
  xs.reserve(words.size());
  for (const auto& w : words) xs.push_back(parse_int(w));
  return xs;
}

std::string format_tuple(std::span<const Int> xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ", ";
    out += xs[i].get_str();
  }
  out += ")";
  return out;
}

std::string format_tuple(const IntTuple& xs) {
  return format_tuple(std::span<const Int>(xs));
}

}  // namespace condio
