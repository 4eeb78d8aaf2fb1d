#include "trisat/cycle_type.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "trisat/permutation.hpp"

namespace trisat {

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad cycle type '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("cycle lengths must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

CycleType CycleType::parse(std::string_view text, int degree) {
  // Tokens are "b" or "b^n", optionally parenthesised, separated by
  // blanks or dots. "(2)^4(1)^3" is split at each '('.
  std::string normalized;
  for (char ch : text) {
    if (ch == '(') normalized += ' ';
    else if (ch == ')' || ch == '.' || ch == '*') normalized += ch == ')' ? "" : " ";
    else normalized += ch;
  }
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < normalized.size()) {
    while (pos < normalized.size() && std::isspace(static_cast<unsigned char>(normalized[pos]))) ++pos;
    if (pos >= normalized.size()) break;
    std::size_t end = pos;
    while (end < normalized.size() && !std::isspace(static_cast<unsigned char>(normalized[end]))) ++end;
    std::string_view token(normalized.data() + pos, end - pos);
    const std::size_t caret = token.find('^');
    const int length = parse_int(token.substr(0, caret), text);
    const int count = caret == std::string_view::npos ? 1 : parse_int(token.substr(caret + 1), text);
    if (length < 1 || count < 0) throw std::invalid_argument("bad cycle type '" + std::string(text) + "'");
    parts.insert(parts.end(), static_cast<std::size_t>(count), length);
    pos = end;
  }
  if (parts.empty()) throw std::invalid_argument("empty cycle type");
  CycleType ct(std::move(parts));
  if (degree > 0) {
    const int have = ct.degree();
    if (have > degree) {
      throw std::invalid_argument("cycle type '" + std::string(text) + "' exceeds degree " +
                                  std::to_string(degree));
    }
    ct.parts_.insert(ct.parts_.end(), static_cast<std::size_t>(degree - have), 1);
  }
  return ct;
}

int CycleType::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::uint64_t CycleType::order() const {
  std::uint64_t o = 1;
  for (int p : parts_) o = std::lcm(o, static_cast<std::uint64_t>(p));
  return o;
}

bool CycleType::is_even() const {
  return std::count_if(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; }) % 2 == 0;
}

std::uint64_t CycleType::class_size() const {
  const int m = degree();
  if (m > 20) throw std::overflow_error("class size only supported for degree <= 20");
  std::uint64_t size = 1;
  for (int i = 2; i <= m; ++i) size *= static_cast<std::uint64_t>(i);
  std::map<int, int> counts;
  for (int p : parts_) ++counts[p];
  for (const auto& [length, count] : counts) {
    for (int i = 0; i < count; ++i) size /= static_cast<std::uint64_t>(length);
    for (int i = 2; i <= count; ++i) size /= static_cast<std::uint64_t>(i);
  }
  return size;
}

Permutation CycleType::min_representative() const {
  std::vector<std::vector<int>> cycles;
  int next = 0;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    std::vector<int> cycle(static_cast<std::size_t>(*it));
    std::iota(cycle.begin(), cycle.end(), next);
    next += *it;
    cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(degree(), cycles);
}

std::string CycleType::str() const {
  std::string out;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    out += "(" + std::to_string(parts_[i]) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::vector<CycleType> all_cycle_types(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  std::vector<CycleType> out;
  std::vector<int> current;
  std::function<void(int, int)> recurse = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      recurse(remaining - p, p);
      current.pop_back();
    }
  };
  recurse(degree, degree);
  return out;
}

std::vector<CycleType> even_cycle_types_of_order(int degree, std::uint64_t n, bool dividing) {
  std::vector<CycleType> out;
  for (auto& ct : all_cycle_types(degree)) {
    if (!ct.is_even()) continue;
    const std::uint64_t o = ct.order();
    if (dividing ? n % o == 0 : o == n) out.push_back(std::move(ct));
  }
  return out;
}

}  // namespace trisat
