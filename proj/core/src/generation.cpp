#include "trisat/generation.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "trisat/schreier_sims.hpp"

namespace trisat {

namespace {

std::uint64_t half_factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 3; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Canonical construction: the smallest unused point opens a cycle of one
// of the remaining lengths, followed by an ordered choice of its other
// points. Every permutation of the type arises exactly once.
void build_class(int m, std::vector<int>& remaining_lengths, std::vector<int>& images,
                 std::vector<char>& used, std::vector<Permutation>& out) {
  int start = 0;
  while (start < m && used[static_cast<std::size_t>(start)]) ++start;
  if (start == m) {
    out.emplace_back(images);
    return;
  }
  for (std::size_t li = 0; li < remaining_lengths.size(); ++li) {
    if (li > 0 && remaining_lengths[li] == remaining_lengths[li - 1]) continue;
    const int length = remaining_lengths[li];
    std::vector<int> rest = remaining_lengths;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(li));

    std::vector<int> cycle{start};
    used[static_cast<std::size_t>(start)] = 1;
    std::function<void()> choose = [&]() {
      if (static_cast<int>(cycle.size()) == length) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
        }
        build_class(m, rest, images, used, out);
        return;
      }
      for (int x = start + 1; x < m; ++x) {
        if (used[static_cast<std::size_t>(x)]) continue;
        used[static_cast<std::size_t>(x)] = 1;
        cycle.push_back(x);
        choose();
        cycle.pop_back();
        used[static_cast<std::size_t>(x)] = 0;
      }
    };
    choose();
    used[static_cast<std::size_t>(start)] = 0;
  }
}

std::vector<CycleType> classes_for(int m, std::uint64_t order, const CycleType* hint, bool dividing) {
  if (hint) {
    if (hint->degree() != m) throw std::invalid_argument("shape hint " + hint->str() + " has wrong degree");
    if (!hint->is_even()) return {};
    const std::uint64_t o = hint->order();
    if (dividing ? order % o != 0 : o != order) return {};
    return {*hint};
  }
  return even_cycle_types_of_order(m, order, dividing);
}

}  // namespace

std::vector<Permutation> enumerate_class(int m, const CycleType& type) {
  if (type.degree() != m) throw std::invalid_argument("cycle type " + type.str() + " is not of degree " + std::to_string(m));
  std::vector<int> lengths = type.parts();
  std::vector<int> images(static_cast<std::size_t>(m));
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  std::vector<Permutation> out;
  if (m <= 20) out.reserve(static_cast<std::size_t>(type.class_size()));
  build_class(m, lengths, images, used, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool validate_witness(const GenerationWitness& w, int m) {
  if (w.a.degree() != m || w.b.degree() != m) return false;
  const Permutation ab = w.a * w.b;
  if (w.a.order() != static_cast<std::uint64_t>(w.orders[0]) ||
      w.b.order() != static_cast<std::uint64_t>(w.orders[1]) ||
      ab.order() != static_cast<std::uint64_t>(w.orders[2])) {
    return false;
  }
  if (w.a.cycle_type() != w.shapes[0] || w.b.cycle_type() != w.shapes[1] || ab.cycle_type() != w.shapes[2]) {
    return false;
  }
  const std::array<Permutation, 2> gens{w.a, w.b};
  return w.a.is_even() && w.b.is_even() && group_order(gens) == half_factorial(m);
}

GenerationSearchResult find_generating_triple(int m, const Triple& triple,
                                              const GenerationSearchOptions& options) {
  if (m < 5 || m > 20) throw std::invalid_argument("generation search supports 5 <= m <= 20");
  const auto& hint = options.shape_hint;
  GenerationSearchResult result;

  const auto a_types = classes_for(m, static_cast<std::uint64_t>(triple.a()), hint ? &(*hint)[0] : nullptr, options.dividing);
  const auto b_types = classes_for(m, static_cast<std::uint64_t>(triple.b()), hint ? &(*hint)[1] : nullptr, options.dividing);
  const auto c_types = classes_for(m, static_cast<std::uint64_t>(triple.c()), hint ? &(*hint)[2] : nullptr, options.dividing);
  if (a_types.empty() || b_types.empty() || c_types.empty()) {
    result.reason = "no elements of required order";
    return result;
  }

  std::vector<Permutation> a_reps;
  for (const auto& ct : a_types) a_reps.push_back(ct.min_representative());
  std::sort(a_reps.begin(), a_reps.end());

  std::vector<Permutation> b_candidates;
  for (const auto& ct : b_types) {
    auto cls = enumerate_class(m, ct);
    b_candidates.insert(b_candidates.end(), std::make_move_iterator(cls.begin()), std::make_move_iterator(cls.end()));
  }
  std::sort(b_candidates.begin(), b_candidates.end());

  const std::uint64_t target = half_factorial(m);
  const std::uint64_t c = static_cast<std::uint64_t>(triple.c());
  std::vector<char> scratch(static_cast<std::size_t>(m));
  for (const auto& a : a_reps) {
    for (const auto& b : b_candidates) {
      ++result.pairs_tested;
      const std::uint64_t o = product_order(a, b, scratch);
      if (options.dividing ? c % o != 0 : o != c) continue;
      const Permutation ab = a * b;
      const CycleType ab_type = ab.cycle_type();
      if (hint && ab_type != (*hint)[2]) continue;
      const std::array<Permutation, 2> gens{a, b};
      if (!is_transitive(gens)) continue;
      if (group_order(gens) != target) continue;
      GenerationWitness w;
      w.a = a;
      w.b = b;
      w.orders = {static_cast<int>(a.order()), static_cast<int>(b.order()), static_cast<int>(o)};
      w.shapes = {a.cycle_type(), b.cycle_type(), ab_type};
      result.witness = std::move(w);
      return result;
    }
  }
  result.reason = "exhausted all class pairs";
  return result;
}

std::optional<int> scott_min_sum(int m, const Triple& triple) {
  if (m < 3) throw std::invalid_argument("scott_min_sum needs m >= 3");
  int total = 0;
  for (int n : triple.orders()) {
    int best = std::numeric_limits<int>::max();
    for (const auto& ct : even_cycle_types_of_order(m, static_cast<std::uint64_t>(n))) {
      best = std::min(best, ct.cycle_count());
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    total += best;
  }
  return total;
}

std::string to_string(NonGenerationResult::Kind kind) {
  switch (kind) {
    case NonGenerationResult::Kind::NoElement: return "no_element";
    case NonGenerationResult::Kind::Scott: return "scott";
    case NonGenerationResult::Kind::Exhaustive: return "exhaustive";
    case NonGenerationResult::Kind::Refuted: return "refuted";
  }
  return "exhaustive";
}

NonGenerationResult prove_non_generation(int m, const Triple& triple) {
  if (m < 5) throw std::invalid_argument("prove_non_generation needs m >= 5");
  NonGenerationResult result;
  result.scott_bound = m + 2;
  result.scott_sum = scott_min_sum(m, triple);
  if (!result.scott_sum) {
    result.kind = NonGenerationResult::Kind::NoElement;
    return result;
  }
  if (*result.scott_sum > m + 2) {
    result.kind = NonGenerationResult::Kind::Scott;
    return result;
  }
  // Parity: some class triple must have total cycle count <= m + 2 and
  // congruent to m mod 2.
  bool parity_possible = false;
  const auto ta = even_cycle_types_of_order(m, static_cast<std::uint64_t>(triple.a()));
  const auto tb = even_cycle_types_of_order(m, static_cast<std::uint64_t>(triple.b()));
  const auto tc = even_cycle_types_of_order(m, static_cast<std::uint64_t>(triple.c()));
  for (const auto& x : ta) {
    for (const auto& y : tb) {
      for (const auto& z : tc) {
        const int sum = x.cycle_count() + y.cycle_count() + z.cycle_count();
        if (sum <= m + 2 && (sum - m) % 2 == 0) parity_possible = true;
      }
    }
  }
  if (!parity_possible) {
    result.kind = NonGenerationResult::Kind::Scott;
    return result;
  }
  auto search = find_generating_triple(m, triple);
  if (search.witness) {
    result.kind = NonGenerationResult::Kind::Refuted;
    result.witness = std::move(search.witness);
  } else {
    result.kind = NonGenerationResult::Kind::Exhaustive;
  }
  return result;
}

}  // namespace trisat
