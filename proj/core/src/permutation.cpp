#include "trisat/permutation.hpp"

#include <numeric>
#include <stdexcept>

#include "trisat/cycle_type.hpp"

namespace trisat {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("image tuple is not a permutation");
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<Point> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point x = cycle[i];
      if (x < 0 || x >= degree || used[static_cast<std::size_t>(x)]) {
        throw std::invalid_argument("cycles are not disjoint points of the domain");
      }
      used[static_cast<std::size_t>(x)] = 1;
      images[static_cast<std::size_t>(x)] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> converted;
  for (const auto& c : cycles) converted.emplace_back(c);
  return from_cycles(degree, converted);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<Point>(i)) return false;
  }
  return true;
}

bool Permutation::is_even() const { return cycle_type().is_even(); }

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::uint64_t Permutation::order() const { return cycle_type().order(); }

std::vector<std::vector<Permutation::Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> cycle;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
      seen[x] = 1;
      cycle.push_back(static_cast<Point>(x));
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

CycleType Permutation::cycle_type() const {
  std::vector<int> parts;
  for (const auto& c : cycles()) parts.push_back(static_cast<int>(c.size()));
  return CycleType(std::move(parts));
}

std::string Permutation::str() const {
  std::string out;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.degree() != rhs.degree()) throw std::invalid_argument("degree mismatch in product");
  std::vector<Permutation::Point> images(lhs.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = rhs.images_[static_cast<std::size_t>(lhs.images_[i])];
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

std::uint64_t product_order(const Permutation& lhs, const Permutation& rhs, std::vector<char>& scratch) {
  const auto a = lhs.images();
  const auto b = rhs.images();
  const std::size_t m = a.size();
  std::fill_n(scratch.begin(), m, 0);
  std::uint64_t order = 1;
  for (std::size_t start = 0; start < m; ++start) {
    if (scratch[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = start; !scratch[x]; x = static_cast<std::size_t>(b[static_cast<std::size_t>(a[x])])) {
      scratch[x] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

}  // namespace trisat
