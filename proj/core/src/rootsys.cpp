#include "trisat/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace trisat {

namespace {

bool valid_rank(Family family, int rank) {
  if (rank < 1 || rank > kMaxRank) return false;
  switch (family) {
    case Family::A: return true;
    case Family::B:
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

}  // namespace

DynkinType::DynkinType(Family family, int rank) : family_(family), rank_(rank) {
  if (!valid_rank(family, rank)) {
    throw std::invalid_argument("invalid Dynkin type " +
                                std::string(1, static_cast<char>(family)) +
                                std::to_string(rank));
  }
}

DynkinType DynkinType::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("bad Dynkin type '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  if (letter < 'A' || letter > 'G') {
    throw std::invalid_argument("bad Dynkin family in '" + std::string(text) + "'");
  }
  std::string_view digits = text.substr(1);
  if (!digits.empty() && digits.front() == '_') digits.remove_prefix(1);
  int rank = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw std::invalid_argument("bad Dynkin rank in '" + std::string(text) + "'");
  }
  return DynkinType(static_cast<Family>(letter), rank);
}

bool DynkinType::is_classical() const {
  return family_ == Family::A || family_ == Family::B || family_ == Family::C ||
         family_ == Family::D;
}

std::string DynkinType::name() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

std::vector<int> exponents(const DynkinType& type) {
  const int r = type.rank();
  std::vector<int> result;
  result.reserve(static_cast<std::size_t>(r));
  switch (type.family()) {
    case Family::A:
      for (int j = 1; j <= r; ++j) result.push_back(j);
      break;
    case Family::B:
    case Family::C:
      for (int j = 1; j <= 2 * r - 1; j += 2) result.push_back(j);
      break;
    case Family::D:
      for (int j = 1; j <= 2 * r - 3; j += 2) result.push_back(j);
      result.push_back(r - 1);
      std::sort(result.begin(), result.end());
      break;
    case Family::E:
      if (r == 6) result = {1, 4, 5, 7, 8, 11};
      else if (r == 7) result = {1, 5, 7, 9, 11, 13, 17};
      else result = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case Family::F:
      result = {1, 5, 7, 11};
      break;
    case Family::G:
      result = {1, 5};
      break;
  }
  return result;
}

int adjoint_dim(const DynkinType& type) {
  const auto e = exponents(type);
  return std::accumulate(e.begin(), e.end(), 0, [](int acc, int x) { return acc + 2 * x + 1; });
}

int coxeter_number(const DynkinType& type) { return exponents(type).back() + 1; }

int root_count(const DynkinType& type) {
  const auto e = exponents(type);
  return 2 * std::accumulate(e.begin(), e.end(), 0);
}

RootSystemData root_system_data(const DynkinType& type) {
  RootSystemData data;
  data.exponents = exponents(type);
  data.dim = adjoint_dim(type);
  data.coxeter = data.exponents.back() + 1;
  return data;
}

}  // namespace trisat
