#include "trisat/triple.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace trisat {

Triple::Triple(int a, int b, int c) : orders_{a, b, c} {
  std::sort(orders_.begin(), orders_.end());
  if (orders_[0] < 2) throw std::invalid_argument("triple entries must be >= 2: " + str());
  if (!is_hyperbolic(orders_[0], orders_[1], orders_[2])) {
    throw std::invalid_argument("triple is not hyperbolic: " + str());
  }
}

Triple Triple::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw std::invalid_argument("bad triple '" + std::string(text) + "'");
    }
    values.push_back(value);
    pos = comma + 1;
  }
  if (values.size() != 3) throw std::invalid_argument("triple needs three entries: '" + std::string(text) + "'");
  return Triple(values[0], values[1], values[2]);
}

std::string Triple::str() const {
  return "(" + std::to_string(orders_[0]) + "," + std::to_string(orders_[1]) + "," +
         std::to_string(orders_[2]) + ")";
}

}  // namespace trisat
